#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nilgr {

using Rational = mpq_class;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);
  static RationalMatrix zero(int rows, int cols);
  static RationalMatrix zero(int n) { return zero(n, n); }
  // E_{ij}, 0-indexed.
  static RationalMatrix unit(int n, int i, int j);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix from_ints(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& c);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& c) { return a *= c; }
  friend RationalMatrix operator*(const Rational& c, RationalMatrix a) { return a *= c; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  RationalMatrix operator-() const;
  bool operator==(const RationalMatrix& o) const;
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

  RationalMatrix transpose() const;
  RationalMatrix power(int k) const;
  Rational trace() const;
  bool is_zero() const;
  void set_block(int r0, int c0, const RationalMatrix& b);

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

int rank(const RationalMatrix& a);
Rational determinant(const RationalMatrix& a);
RationalMatrix inverse(const RationalMatrix& a);
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
// Basis of {v : a v = 0} as columns.
RationalMatrix nullspace(const RationalMatrix& a);
// Throws NotNilpotent unless a^n = 0.
RationalMatrix exp_nilpotent(const RationalMatrix& a);
bool is_nilpotent(const RationalMatrix& a);

}  // namespace nilgr
