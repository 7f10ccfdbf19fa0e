#include "nilgr/matrix.hpp"

#include <sstream>

#include "nilgr/errors.hpp"

namespace nilgr {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::zero(int rows, int cols) { return RationalMatrix(rows, cols); }

RationalMatrix RationalMatrix::unit(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw DimensionMismatch("unit matrix index out of range");
  RationalMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw DimensionMismatch("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) {
    q.emplace_back();
    for (long v : r) q.back().emplace_back(v);
  }
  return from_rows(q);
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& c) {
  for (auto& v : data_) v *= c;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  RationalMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) r(i, j) += aik * b(k, j);
    }
  return r;
}

RationalMatrix RationalMatrix::operator-() const {
  RationalMatrix r(*this);
  for (auto& v : r.data_) v = -v;
  return r;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

RationalMatrix RationalMatrix::power(int k) const {
  if (!square()) throw DimensionMismatch("power of a non-square matrix");
  RationalMatrix r = identity(rows_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

void RationalMatrix::set_block(int r0, int c0, const RationalMatrix& b) {
  if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
    throw DimensionMismatch("block out of range");
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

int rank(const RationalMatrix& a) {
  const int R = a.rows(), C = a.cols();
  std::vector<std::vector<mpz_class>> m(R, std::vector<mpz_class>(C));
  for (int i = 0; i < R; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (int j = 0; j < C; ++j) m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  mpz_class prev = 1;
  int r = 0;
  for (int col = 0; col < C && r < R; ++col) {
    int p = r;
    while (p < R && m[p][col] == 0) ++p;
    if (p == R) continue;
    std::swap(m[p], m[r]);
    const mpz_class piv = m[r][col];
    for (int i = r + 1; i < R; ++i) {
      const mpz_class f = m[i][col];
      for (int j = col + 1; j < C; ++j) {
        mpz_class v = piv * m[i][j];
        if (f != 0) v -= f * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

Rational determinant(const RationalMatrix& a) {
  if (!a.square()) throw DimensionMismatch("determinant of a non-square matrix");
  RationalMatrix m(a);
  const int n = m.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (!a.square()) throw DimensionMismatch("inverse of a non-square matrix");
  const int n = a.rows();
  RationalMatrix m(a), inv = RationalMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) throw InvalidInput("matrix is singular");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    Rational d = m(c, c);
    for (int j = 0; j < n; ++j) {
      m(c, j) /= d;
      inv(c, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (int j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  RationalMatrix r(a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

RationalMatrix nullspace(const RationalMatrix& a) {
  const int R = a.rows(), C = a.cols();
  RationalMatrix m(a);
  std::vector<int> pivcol;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = r;
    while (p < R && sgn(m(p, c)) == 0) ++p;
    if (p == R) continue;
    for (int j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
    Rational d = m(r, c);
    for (int j = 0; j < C; ++j) m(r, j) /= d;
    for (int i = 0; i < R; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (int j = 0; j < C; ++j) m(i, j) -= f * m(r, j);
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<char> is_piv(C, 0);
  for (int c : pivcol) is_piv[c] = 1;
  RationalMatrix basis(C, C - r);
  int k = 0;
  for (int f = 0; f < C; ++f) {
    if (is_piv[f]) continue;
    basis(f, k) = 1;
    for (int i = 0; i < r; ++i) basis(pivcol[i], k) = -m(i, f);
    ++k;
  }
  return basis;
}

bool is_nilpotent(const RationalMatrix& a) {
  if (!a.square()) throw DimensionMismatch("nilpotency test on a non-square matrix");
  return a.power(a.rows()).is_zero();
}

RationalMatrix exp_nilpotent(const RationalMatrix& a) {
  if (!is_nilpotent(a)) throw NotNilpotent("exp of a non-nilpotent matrix");
  const int n = a.rows();
  RationalMatrix sum = RationalMatrix::identity(n), term = sum;
  for (int k = 1; k < n; ++k) {
    term = term * a * Rational(1, k);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

}  // namespace nilgr
