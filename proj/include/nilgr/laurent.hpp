#pragma once

#include <map>
#include <string>

#include "nilgr/matrix.hpp"

namespace nilgr {

using LaurentPoly = std::map<int, Rational>;  // exponent -> nonzero coefficient

class LaurentMatrix {
 public:
  explicit LaurentMatrix(int m = 0) : m_(m) {}
  static LaurentMatrix identity(int m);
  static LaurentMatrix monomial(const RationalMatrix& a, int e);
  // Convenience for I + x t^-1 + y t^-2.
  static LaurentMatrix unipotent(const RationalMatrix& x, const RationalMatrix& y);

  int m() const { return m_; }
  const std::map<int, RationalMatrix>& coeffs() const { return coeffs_; }
  RationalMatrix coeff(int e) const;
  void add(int e, const RationalMatrix& a);
  bool is_zero() const { return coeffs_.empty(); }
  int lowest() const;
  int highest() const;

  LaurentMatrix& operator+=(const LaurentMatrix& o);
  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const RationalMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator*(const LaurentMatrix& a, const RationalMatrix& b);
  LaurentMatrix operator*(const Rational& c) const;
  bool operator==(const LaurentMatrix& o) const { return m_ == o.m_ && coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentMatrix& o) const { return !(*this == o); }

  LaurentMatrix negate_t() const;  // g(-t)
  LaurentMatrix transpose() const;
  std::string str() const;

 private:
  int m_;
  std::map<int, RationalMatrix> coeffs_;
};

// exp(n t^k) for nilpotent n.
LaurentMatrix exp_laurent(const RationalMatrix& n, int k);

}  // namespace nilgr
