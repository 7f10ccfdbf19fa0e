#include "nilgr/laurent.hpp"

#include <sstream>

#include "nilgr/errors.hpp"

namespace nilgr {

LaurentMatrix LaurentMatrix::identity(int m) {
  return monomial(RationalMatrix::identity(m), 0);
}

LaurentMatrix LaurentMatrix::monomial(const RationalMatrix& a, int e) {
  if (!a.square()) throw DimensionMismatch("Laurent coefficients must be square");
  LaurentMatrix g(a.rows());
  g.add(e, a);
  return g;
}

LaurentMatrix LaurentMatrix::unipotent(const RationalMatrix& x, const RationalMatrix& y) {
  LaurentMatrix g = identity(x.rows());
  g.add(-1, x);
  g.add(-2, y);
  return g;
}

RationalMatrix LaurentMatrix::coeff(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? RationalMatrix::zero(m_) : it->second;
}

void LaurentMatrix::add(int e, const RationalMatrix& a) {
  if (a.rows() != m_ || a.cols() != m_) throw DimensionMismatch("Laurent coefficient size mismatch");
  auto it = coeffs_.find(e);
  if (it == coeffs_.end()) {
    if (!a.is_zero()) coeffs_.emplace(e, a);
    return;
  }
  it->second += a;
  if (it->second.is_zero()) coeffs_.erase(it);
}

int LaurentMatrix::lowest() const {
  if (coeffs_.empty()) throw InvalidInput("zero Laurent matrix has no lowest exponent");
  return coeffs_.begin()->first;
}

int LaurentMatrix::highest() const {
  if (coeffs_.empty()) throw InvalidInput("zero Laurent matrix has no highest exponent");
  return coeffs_.rbegin()->first;
}

LaurentMatrix& LaurentMatrix::operator+=(const LaurentMatrix& o) {
  if (m_ != o.m_) throw DimensionMismatch("Laurent sum size mismatch");
  for (const auto& [e, a] : o.coeffs_) add(e, a);
  return *this;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  return a + b * Rational(-1);
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.m_ != b.m_) throw DimensionMismatch("Laurent product size mismatch");
  LaurentMatrix r(a.m_);
  for (const auto& [ea, ma] : a.coeffs_)
    for (const auto& [eb, mb] : b.coeffs_) r.add(ea + eb, ma * mb);
  return r;
}

LaurentMatrix operator*(const RationalMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix r(b.m_);
  for (const auto& [e, mb] : b.coeffs_) r.add(e, a * mb);
  return r;
}

LaurentMatrix operator*(const LaurentMatrix& a, const RationalMatrix& b) {
  LaurentMatrix r(a.m_);
  for (const auto& [e, ma] : a.coeffs_) r.add(e, ma * b);
  return r;
}

LaurentMatrix LaurentMatrix::operator*(const Rational& c) const {
  LaurentMatrix r(m_);
  if (sgn(c) == 0) return r;
  for (const auto& [e, a] : coeffs_) r.coeffs_.emplace(e, a * c);
  return r;
}

LaurentMatrix LaurentMatrix::negate_t() const {
  LaurentMatrix r(m_);
  for (const auto& [e, a] : coeffs_) r.coeffs_.emplace(e, (e % 2) ? -a : a);
  return r;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix r(m_);
  for (const auto& [e, a] : coeffs_) r.coeffs_.emplace(e, a.transpose());
  return r;
}

std::string LaurentMatrix::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, a] : coeffs_) {
    os << (first ? "" : " + ") << a.str() << " t^" << e;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

LaurentMatrix exp_laurent(const RationalMatrix& n, int k) {
  RationalMatrix e = exp_nilpotent(n);  // validates nilpotency
  (void)e;
  const int m = n.rows();
  LaurentMatrix g = LaurentMatrix::identity(m);
  RationalMatrix term = RationalMatrix::identity(m);
  for (int i = 1; i < m; ++i) {
    term = term * n * Rational(1, i);
    if (term.is_zero()) break;
    g.add(k * i, term);
  }
  return g;
}

}  // namespace nilgr
