#include "nilgr/symmetric_pair.hpp"

#include "nilgr/errors.hpp"

namespace nilgr {

TwistedCase::TwistedCase(TwistKind kind, int ell) : kind_(kind), ell_(ell) {
  if (ell < 1) throw InvalidInput("rank must be >= 1");
  const int n = m();
  j_ = RationalMatrix(n, n);
  if (kind_ == TwistKind::D) {
    for (int i = 0; i < n; ++i) j_(i, n - 1 - i) = 1;
    w_ = RationalMatrix::identity(n);
    w_(ell_, ell_) = 0;
    w_(ell_ + 1, ell_ + 1) = 0;
    w_(ell_, ell_ + 1) = 1;
    w_(ell_ + 1, ell_) = 1;
  } else {
    for (int i = 0; i < n; ++i) j_(i, n - 1 - i) = (i % 2) ? -1 : 1;
  }
  jinv_ = inverse(j_);
}

TwistedCase TwistedCase::parse(const std::string& name, int ell) {
  if (name == "A2l") return {TwistKind::A2l, ell};
  if (name == "A2lMinus1") return {TwistKind::A2lMinus1, ell};
  if (name == "D") return {TwistKind::D, ell};
  throw InvalidInput("unknown twisted case '" + name + "'");
}

int TwistedCase::m() const {
  switch (kind_) {
    case TwistKind::A2l: return 2 * ell_ + 1;
    case TwistKind::A2lMinus1: return 2 * ell_;
    case TwistKind::D: return 2 * ell_ + 2;
  }
  return 0;
}

HType TwistedCase::htype() const {
  return kind_ == TwistKind::A2lMinus1 ? HType::C(ell_) : HType::B(ell_);
}

std::string TwistedCase::name() const {
  switch (kind_) {
    case TwistKind::A2l: return "A2l";
    case TwistKind::A2lMinus1: return "A2lMinus1";
    case TwistKind::D: return "D";
  }
  return "";
}

std::string TwistedCase::label() const { return name() + "(" + std::to_string(ell_) + ")"; }

PairCase TwistedCase::pair_case() const {
  switch (kind_) {
    case TwistKind::A2l: return {PairKind::OrthOddOnA, ell_};
    case TwistKind::A2lMinus1: return {PairKind::SympOnA, ell_};
    case TwistKind::D: return {PairKind::OrthDiagramD, ell_};
  }
  return {PairKind::SympOnA, ell_};
}

const RationalMatrix& TwistedCase::invol_w() const {
  if (kind_ != TwistKind::D) throw InvalidInput("invol_w is defined only for the D case");
  return w_;
}

namespace {

void require_shape(const TwistedCase& c, const RationalMatrix& a) {
  if (a.rows() != c.m() || a.cols() != c.m())
    throw DimensionMismatch("expected a " + std::to_string(c.m()) + "x" + std::to_string(c.m()) +
                            " matrix for " + c.label());
}

}  // namespace

RationalMatrix form_adjoint(const TwistedCase& c, const RationalMatrix& a) {
  require_shape(c, a);
  return c.form_inverse() * a.transpose() * c.form();
}

RationalMatrix adjoint(const TwistedCase& c, const RationalMatrix& a) {
  require_shape(c, a);
  if (c.kind() == TwistKind::D) return c.invol_w() * a * c.invol_w();
  return form_adjoint(c, a);
}

bool in_g(const TwistedCase& c, const RationalMatrix& a) {
  require_shape(c, a);
  if (c.kind() == TwistKind::D) return (form_adjoint(c, a) + a).is_zero();
  return sgn(a.trace()) == 0;
}

bool in_p(const TwistedCase& c, const RationalMatrix& a) {
  if (!in_g(c, a)) return false;
  if (c.kind() == TwistKind::D) return (adjoint(c, a) + a).is_zero();
  return adjoint(c, a) == a;
}

bool in_k(const TwistedCase& c, const RationalMatrix& a) {
  if (!in_g(c, a)) return false;
  if (c.kind() == TwistKind::D) return adjoint(c, a) == a;
  return (adjoint(c, a) + a).is_zero();
}

std::string to_string(Eigenspace e) {
  switch (e) {
    case Eigenspace::P: return "p";
    case Eigenspace::K: return "k";
    default: return "neither";
  }
}

Eigenspace eigenspace_membership(const TwistedCase& c, const RationalMatrix& a) {
  if (a.rows() != c.m() || a.cols() != c.m()) return Eigenspace::Neither;
  if (in_p(c, a)) return Eigenspace::P;
  if (in_k(c, a)) return Eigenspace::K;
  return Eigenspace::Neither;
}

Partition jordan_type(const RationalMatrix& a) {
  if (!a.square()) throw DimensionMismatch("jordan_type of a non-square matrix");
  const int n = a.rows();
  std::vector<int> ranks{n};
  RationalMatrix p = RationalMatrix::identity(n);
  while (ranks.back() > 0) {
    if (static_cast<int>(ranks.size()) > n) throw NotNilpotent("matrix is not nilpotent");
    p = p * a;
    int r = rank(p);
    if (r == ranks.back()) throw NotNilpotent("matrix is not nilpotent");
    ranks.push_back(r);
  }
  std::vector<int> s;
  for (std::size_t i = 1; i < ranks.size(); ++i) s.push_back(ranks[i - 1] - ranks[i]);
  if (s.empty()) return Partition();
  return dual(Partition(s));
}

int block_toeplitz_rank(const std::vector<RationalMatrix>& coeffs, int s) {
  if (s < 1) throw InvalidInput("block_toeplitz_rank: s must be >= 1");
  if (static_cast<int>(coeffs.size()) < s)
    throw InvalidInput("block_toeplitz_rank: not enough coefficients");
  const int r = coeffs[0].rows(), c = coeffs[0].cols();
  RationalMatrix big(s * r, s * c);
  for (int bi = 0; bi < s; ++bi)
    for (int bj = bi; bj < s; ++bj) big.set_block(bi * r, bj * c, coeffs[bj - bi]);
  return rank(big);
}

namespace {

RationalMatrix random_triangular(int n, std::mt19937_64& rng, bool upper) {
  std::uniform_int_distribution<int> coin(0, 2), val(-2, 2);
  RationalMatrix u(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (upper ? j <= i : j >= i) continue;
      if (coin(rng) == 0) u(i, j) = val(rng);
    }
  return u;
}

}  // namespace

RationalMatrix project_k(const TwistedCase& c, const RationalMatrix& u) {
  RationalMatrix n = u - form_adjoint(c, u);
  if (c.kind() == TwistKind::D) n = (n + adjoint(c, n)) * Rational(1, 2);
  return n;
}

RationalMatrix project_p(const TwistedCase& c, const RationalMatrix& u) {
  if (c.kind() == TwistKind::D) {
    RationalMatrix n = u - form_adjoint(c, u);
    return (n - adjoint(c, n)) * Rational(1, 2);
  }
  return u + form_adjoint(c, u);
}

RationalMatrix random_nilpotent_k(const TwistedCase& c, std::mt19937_64& rng, bool upper) {
  return project_k(c, random_triangular(c.m(), rng, upper));
}

RationalMatrix random_nilpotent_p(const TwistedCase& c, std::mt19937_64& rng, bool upper) {
  return project_p(c, random_triangular(c.m(), rng, upper));
}

RationalMatrix random_k_element(const TwistedCase& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(1, 4);
  int word = len(rng);
  RationalMatrix k = RationalMatrix::identity(c.m());
  bool upper = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  for (int i = 0; i < word; ++i) {
    k = k * exp_nilpotent(random_nilpotent_k(c, rng, upper));
    upper = !upper;
  }
  return k;
}

RationalMatrix random_k_element(const TwistedCase& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_k_element(c, rng);
}

RationalMatrix random_p_nilpotent(const TwistedCase& c, std::mt19937_64& rng) {
  RationalMatrix x;
  do {
    x = random_nilpotent_p(c, rng, true);
  } while (x.is_zero());
  RationalMatrix k = random_k_element(c, rng);
  return k * x * form_adjoint(c, k);
}

}  // namespace nilgr
