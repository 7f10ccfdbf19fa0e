#include "nilgr/grassmannian.hpp"

#include <algorithm>

#include "nilgr/errors.hpp"

namespace nilgr {

namespace {

using Poly = std::vector<mpz_class>;  // ascending coefficients, trimmed

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly divexact(Poly a, const Poly& d) {
  if (d.empty()) throw Error("polynomial division by zero");
  if (a.empty()) return {};
  if (a.size() < d.size()) throw Error("inexact polynomial division");
  Poly q(a.size() - d.size() + 1);
  const mpz_class& lead = d.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class c = a[k + d.size() - 1];
    if (c == 0) continue;
    if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) throw Error("inexact polynomial division");
    mpz_divexact(q[k].get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t i = 0; i < d.size(); ++i) a[k + i] -= q[k] * d[i];
  }
  trim(a);
  if (!a.empty()) throw Error("inexact polynomial division");
  trim(q);
  return q;
}

struct ClearedMatrix {
  int lo = 0;            // g = t^lo * P / c
  mpz_class c = 1;
  std::vector<std::vector<Poly>> p;
};

ClearedMatrix clear(const LaurentMatrix& g) {
  ClearedMatrix cm;
  const int m = g.m();
  cm.lo = g.lowest();
  for (const auto& [e, a] : g.coeffs())
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        mpz_lcm(cm.c.get_mpz_t(), cm.c.get_mpz_t(), a(i, j).get_den_mpz_t());
  const std::size_t deg = static_cast<std::size_t>(g.highest() - cm.lo);
  cm.p.assign(m, std::vector<Poly>(m, Poly(deg + 1)));
  for (const auto& [e, a] : g.coeffs())
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const Rational& v = a(i, j);
        if (sgn(v) != 0) cm.p[i][j][e - cm.lo] = v.get_num() * (cm.c / v.get_den());
      }
  for (auto& row : cm.p)
    for (auto& e : row) trim(e);
  return cm;
}

// Returns det(P) and, when want_adj, adj(P).
Poly bareiss(std::vector<std::vector<Poly>> a, bool want_adj, std::vector<std::vector<Poly>>* adj) {
  const int m = static_cast<int>(a.size());
  const int width = want_adj ? 2 * m : m;
  for (int i = 0; i < m; ++i) {
    a[i].resize(width);
    if (want_adj) a[i][m + i] = Poly{1};
  }
  Poly prev{1};
  int sign = 1;
  for (int k = 0; k < m; ++k) {
    int p = k;
    while (p < m && a[p][k].empty()) ++p;
    if (p == m) {
      if (want_adj) throw MembershipError(MembershipFailure::NotSL, "Laurent matrix is singular");
      return {};
    }
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    const Poly piv = a[k][k];
    const int row_begin = want_adj ? 0 : k + 1;
    for (int i = row_begin; i < m; ++i) {
      if (i == k) continue;
      const Poly f = a[i][k];
      for (int j = want_adj ? 0 : k + 1; j < width; ++j) {
        if (j == k) continue;
        Poly v = mul(piv, a[i][j]);
        if (!f.empty() && !a[k][j].empty()) v = sub(v, mul(f, a[k][j]));
        a[i][j] = divexact(std::move(v), prev);
      }
      a[i][k].clear();
    }
    prev = piv;
  }
  Poly det = prev;
  if (sign < 0)
    for (auto& c : det) c = -c;
  if (want_adj) {
    adj->assign(m, std::vector<Poly>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Poly v = a[i][m + j];
        if (sign < 0)
          for (auto& c : v) c = -c;
        (*adj)[i][j] = std::move(v);
      }
  }
  return det;
}

bool constant_invertible(const LaurentMatrix& g) {
  return determinant(g.coeff(0)) != 0;
}

// Series inverse when all exponents share a sign and the constant term is invertible.
// Returns false when the shape does not apply.
bool series_inverse(const LaurentMatrix& g, LaurentMatrix& out) {
  if (g.is_zero()) return false;
  const int lo = g.lowest(), hi = g.highest();
  if (lo < 0 && hi > 0) return false;
  if (!constant_invertible(g)) return false;
  const int dir = lo < 0 ? -1 : 1;
  const int d = std::max(-lo, hi);
  const int m = g.m();
  const int terms = (m - 1) * d;
  RationalMatrix x0inv = inverse(g.coeff(0));
  std::vector<RationalMatrix> h{x0inv};
  for (int k = 1; k <= terms; ++k) {
    RationalMatrix acc = RationalMatrix::zero(m);
    for (int i = 1; i <= std::min(k, d); ++i) {
      auto it = g.coeffs().find(dir * i);
      if (it == g.coeffs().end()) continue;
      acc += it->second * h[k - i];
    }
    h.push_back(-(x0inv * acc));
  }
  LaurentMatrix inv(m);
  for (int k = 0; k <= terms; ++k) inv.add(dir * k, h[k]);
  if (g * inv != LaurentMatrix::identity(m))
    throw MembershipError(MembershipFailure::NotSL, "Laurent matrix is not invertible over the Laurent ring");
  out = std::move(inv);
  return true;
}

Rational to_rational(const mpz_class& num, const mpz_class& den) { return Rational(num, den); }

}  // namespace

LaurentPoly laurent_det(const LaurentMatrix& g) {
  LaurentPoly out;
  if (g.is_zero()) return out;
  ClearedMatrix cm = clear(g);
  Poly det = bareiss(cm.p, false, nullptr);
  mpz_class cm_pow;
  mpz_pow_ui(cm_pow.get_mpz_t(), cm.c.get_mpz_t(), g.m());
  for (std::size_t k = 0; k < det.size(); ++k) {
    if (det[k] == 0) continue;
    Rational v = to_rational(det[k], cm_pow);
    v.canonicalize();
    out[static_cast<int>(k) + g.m() * cm.lo] = v;
  }
  return out;
}

LaurentMatrix laurent_adjugate(const LaurentMatrix& g) {
  const int m = g.m();
  if (g.is_zero()) throw MembershipError(MembershipFailure::NotSL, "zero Laurent matrix");
  if (m == 1) return LaurentMatrix::identity(1);
  ClearedMatrix cm = clear(g);
  std::vector<std::vector<Poly>> adj;
  bareiss(cm.p, true, &adj);
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), cm.c.get_mpz_t(), m - 1);
  const int shift = (m - 1) * cm.lo;
  LaurentMatrix out(m);
  std::map<int, RationalMatrix> coeffs;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (std::size_t k = 0; k < adj[i][j].size(); ++k) {
        if (adj[i][j][k] == 0) continue;
        int e = static_cast<int>(k) + shift;
        auto it = coeffs.try_emplace(e, RationalMatrix::zero(m)).first;
        Rational v(adj[i][j][k], scale);
        v.canonicalize();
        it->second(i, j) = v;
      }
  for (const auto& [e, a] : coeffs) out.add(e, a);
  return out;
}

bool det1_check(const LaurentMatrix& g) {
  if (g.is_zero()) return false;
  LaurentMatrix inv;
  try {
    if (series_inverse(g, inv)) return determinant(g.coeff(0)) == 1;
  } catch (const MembershipError&) {
    return false;
  }
  LaurentPoly d = laurent_det(g);
  return d.size() == 1 && d.begin()->first == 0 && d.begin()->second == 1;
}

LaurentMatrix inverse_det1(const LaurentMatrix& g) {
  LaurentMatrix inv;
  if (series_inverse(g, inv)) {
    if (determinant(g.coeff(0)) != 1)
      throw MembershipError(MembershipFailure::NotSL, "determinant is not 1");
    return inv;
  }
  if (!det1_check(g)) throw MembershipError(MembershipFailure::NotSL, "determinant is not 1");
  return laurent_adjugate(g);
}

bool sigma_fixed(const TwistedCase& c, const LaurentMatrix& g) {
  if (g.m() != c.m())
    throw MembershipError(MembershipFailure::WrongSize,
                          "expected size " + std::to_string(c.m()) + " for " + c.label());
  if (!det1_check(g)) throw MembershipError(MembershipFailure::NotSL, "determinant is not 1");
  const RationalMatrix& J = c.form();
  if (c.kind() == TwistKind::D) {
    if (g * J * g.transpose() != LaurentMatrix::monomial(J, 0))
      throw MembershipError(MembershipFailure::NotSO, "g J g^T != J");
    const RationalMatrix& w = c.invol_w();
    return w * g.negate_t() * w == g;
  }
  return g.negate_t().transpose() * J * g == LaurentMatrix::monomial(J, 0);
}

LaurentMatrix iota(const LaurentMatrix& g) { return inverse_det1(g.negate_t()); }

RationalMatrix pi(const LaurentMatrix& g) {
  if (g.is_zero() || g.highest() > 0 || g.coeff(0) != RationalMatrix::identity(g.m()))
    throw PreconditionError("pi expects I + x t^-1 + ... with no positive exponents");
  return g.coeff(-1);
}

LaurentMatrix norm_element(const TwistedCase& c, const WeightTuple& lambda) {
  if (!(lambda.htype() == c.htype())) throw InvalidInput("weight type does not match " + c.label());
  if (!lambda.dominant()) throw NotDominant("weight " + lambda.str() + " is not dominant");
  const int m = c.m(), l = c.ell();
  std::vector<int> expo(m, 0);
  std::vector<int> sign(m, 1);
  long total = 0;
  for (int i = 0; i < l; ++i) {
    int a = static_cast<int>(lambda[i]);
    total += a;
    int e = c.kind() == TwistKind::D ? 2 * a : a;
    expo[i] = e;
    expo[m - 1 - i] = -e;
    if (c.is_a()) sign[i] = (a % 2) ? -1 : 1;
  }
  if (c.kind() == TwistKind::A2l) sign[l] = (total % 2) ? -1 : 1;
  LaurentMatrix g(m);
  for (int i = 0; i < m; ++i) {
    RationalMatrix d = RationalMatrix::zero(m);
    d(i, i) = sign[i];
    g.add(expo[i], d);
  }
  return g;
}

std::vector<int> toeplitz_profile(const LaurentMatrix& g) {
  if (g.is_zero()) throw InvalidInput("zero Laurent matrix");
  const int m = g.m();
  const int N = g.lowest();
  // For det g = 1 the largest coweight entry is at most -(m-1)N.
  const int s_max = 1 - m * std::min(N, 0) + std::max(g.highest(), 0);
  std::vector<RationalMatrix> coeffs;
  std::vector<int> rho;
  for (int s = 1; s <= s_max; ++s) {
    coeffs.push_back(g.coeff(N + s - 1));
    int r = block_toeplitz_rank(coeffs, s);
    int prev = rho.empty() ? 0 : rho.back();
    rho.push_back(r);
    if (r - prev == m) return rho;
  }
  throw InvalidInput("block-Toeplitz ranks did not saturate; input is not invertible");
}

std::vector<long> sl_coweight(const LaurentMatrix& g) {
  const int N = g.lowest();
  std::vector<int> rho = toeplitz_profile(g);
  std::vector<long> mu;
  int f_prev = 0, rho_prev = 0;
  for (std::size_t s = 1; s <= rho.size(); ++s) {
    int f = rho[s - 1] - rho_prev;
    for (int k = 0; k < f - f_prev; ++k) mu.push_back(N + static_cast<long>(s) - 1);
    f_prev = f;
    rho_prev = rho[s - 1];
  }
  std::sort(mu.rbegin(), mu.rend());
  return mu;
}

WeightTuple cell_of(const TwistedCase& c, const LaurentMatrix& g) {
  if (g.m() != c.m()) throw DimensionMismatch("expected size " + std::to_string(c.m()));
  std::vector<long> mu = sl_coweight(g);
  const int m = c.m(), l = c.ell();
  if (static_cast<int>(mu.size()) != m) throw InvalidInput("coweight has the wrong length");
  for (int i = 0; i < m; ++i)
    if (mu[i] != -mu[m - 1 - i])
      throw InvalidInput("coweight is not symmetric; input is not sigma-fixed");
  std::vector<long> a(l);
  for (int i = 0; i < l; ++i) a[i] = mu[i];
  if (c.kind() == TwistKind::D) {
    if (mu[l] != 0) throw InvalidInput("coweight does not match the D pattern");
    for (auto& v : a) {
      if (v % 2) throw InvalidInput("coweight does not match the D pattern");
      v /= 2;
    }
  }
  if (c.kind() == TwistKind::A2lMinus1) {
    long s = 0;
    for (long v : a) s += v;
    if (s % 2) throw InvalidInput("odd coordinate sum for type C");
  }
  return WeightTuple(c.htype(), a);
}

LaurentMatrix random_stabilizer(const TwistedCase& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> idx(0, c.m() - 1);
  std::uniform_int_distribution<int> val(-2, 2);
  const int k = bit(rng);
  int i = idx(rng), j = idx(rng);
  while (i == j) j = idx(rng);
  RationalMatrix u = RationalMatrix::zero(c.m());
  u(i, j) = val(rng);
  // One off-diagonal entry, projected.
  RationalMatrix n = k % 2 ? project_p(c, u) : project_k(c, u);
  return exp_laurent(n, k);
}

}  // namespace nilgr
