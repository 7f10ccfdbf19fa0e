#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "nilgr/errors.hpp"
#include "nilgr/laurent.hpp"
#include "nilgr/matrix.hpp"
#include "nilgr/symmetric_pair.hpp"
#include "oracles.hpp"

using namespace nilgr;

namespace {

RationalMatrix random_matrix(int r, int c, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi), den(1, 3);
  RationalMatrix a(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      a(i, j) = Rational(d(rng), den(rng));
      a(i, j).canonicalize();
    }
  return a;
}

std::vector<TwistedCase> cases(int max_ell) {
  std::vector<TwistedCase> out;
  for (int l = 1; l <= max_ell; ++l)
    for (auto k : {TwistKind::A2l, TwistKind::A2lMinus1, TwistKind::D}) out.emplace_back(k, l);
  return out;
}

Rational pairing(const TwistedCase& c, const RationalMatrix& u, const RationalMatrix& v) {
  return (u.transpose() * c.form() * v)(0, 0);
}

}  // namespace

TEST_CASE("rank agrees with plain elimination") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> sz(1, 7);
    int r = sz(rng), c = sz(rng), k = sz(rng);
    // Low-rank products exercise dependent rows.
    RationalMatrix a = random_matrix(r, k, rng) * random_matrix(k, c, rng);
    CHECK(rank(a) == oracle::rank(a));
  }
  CHECK(rank(RationalMatrix::zero(3, 4)) == 0);
}

TEST_CASE("determinant, inverse, nullspace") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    RationalMatrix a = random_matrix(4, 4, rng);
    if (determinant(a) == 0) {
      CHECK_THROWS_AS(inverse(a), Error);
      continue;
    }
    CHECK(a * inverse(a) == RationalMatrix::identity(4));
    CHECK(determinant(a * a) == determinant(a) * determinant(a));
  }
  RationalMatrix b = RationalMatrix::from_ints({{1, 2, 3}, {2, 4, 6}});
  RationalMatrix n = nullspace(b);
  CHECK(n.cols() == 2);
  CHECK((b * n).is_zero());
  CHECK(determinant(RationalMatrix::from_ints({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("exp of nilpotents") {
  RationalMatrix n = RationalMatrix::from_ints({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  RationalMatrix e = exp_nilpotent(n);
  CHECK(e(0, 2) == Rational(1, 2));
  CHECK(exp_nilpotent(-n) * e == RationalMatrix::identity(3));
  CHECK_THROWS_AS(exp_nilpotent(RationalMatrix::identity(2)), NotNilpotent);
  CHECK(exp_nilpotent(RationalMatrix::zero(3)) == RationalMatrix::identity(3));
}

TEST_CASE("forms and adjoints") {
  TwistedCase a1(TwistKind::A2l, 1);
  RationalMatrix e12 = RationalMatrix::unit(3, 0, 1);
  CHECK(adjoint(a1, e12) == a1.form_inverse() * e12.transpose() * a1.form());
  for (auto& c : cases(3)) {
    CHECK(adjoint(c, RationalMatrix::identity(c.m())) == RationalMatrix::identity(c.m()));
    CHECK(c.form() * c.form_inverse() == RationalMatrix::identity(c.m()));
  }
  TwistedCase d2(TwistKind::D, 2);
  CHECK(d2.invol_w() * d2.invol_w() == RationalMatrix::identity(6));
  CHECK(d2.form().transpose() == d2.form());
  TwistedCase s2(TwistKind::A2lMinus1, 2);
  CHECK(s2.form().transpose() == -s2.form());
}

TEST_CASE("adjoint is an involution compatible with the form") {
  std::mt19937_64 rng(3);
  for (auto& c : cases(4)) {
    if (!c.is_a()) continue;
    for (int t = 0; t < 20; ++t) {
      RationalMatrix a = random_matrix(c.m(), c.m(), rng);
      RationalMatrix u = random_matrix(c.m(), 1, rng), v = random_matrix(c.m(), 1, rng);
      CHECK(adjoint(c, adjoint(c, a)) == a);
      CHECK(pairing(c, a * u, v) == pairing(c, u, adjoint(c, a) * v));
    }
  }
  for (auto& c : cases(4)) {
    if (c.is_a()) continue;
    for (int t = 0; t < 20; ++t) {
      RationalMatrix a = random_matrix(c.m(), c.m(), rng);
      CHECK(adjoint(c, adjoint(c, a)) == a);
      CHECK(form_adjoint(c, form_adjoint(c, a)) == a);
    }
  }
}

TEST_CASE("eigenspace membership") {
  for (int l = 1; l <= 4; ++l) {
    TwistedCase c(TwistKind::A2lMinus1, l);
    CHECK(eigenspace_membership(c, RationalMatrix::zero(c.m())) == Eigenspace::P);
    std::mt19937_64 rng(l);
    RationalMatrix u = random_matrix(c.m(), c.m(), rng);
    u -= RationalMatrix::identity(c.m()) * (u.trace() / c.m());
    CHECK(eigenspace_membership(c, project_p(c, u)) == Eigenspace::P);
    CHECK(eigenspace_membership(c, project_k(c, u)) == Eigenspace::K);
    if (!project_p(c, u).is_zero() && !project_k(c, u).is_zero())
      CHECK(eigenspace_membership(c, u) == Eigenspace::Neither);
  }
  // x of shape [[0, -u^T], [u, 0]] across the swapped middle pair.
  for (int l = 1; l <= 4; ++l) {
    TwistedCase d(TwistKind::D, l);
    std::mt19937_64 rng(10 + l);
    RationalMatrix x = project_p(d, random_matrix(d.m(), d.m(), rng));
    CHECK(in_p(d, x));
    CHECK(x + d.form_inverse() * x.transpose() * d.form() == RationalMatrix::zero(d.m()));
    CHECK(d.invol_w() * x * d.invol_w() == -x);
  }
}

TEST_CASE("rank-one adjoint dichotomy") {
  std::mt19937_64 rng(4);
  int tested = 0;
  for (auto& c : cases(4)) {
    if (!c.is_a()) continue;
    for (int t = 0; t < 50; ++t) {
      RationalMatrix v = random_matrix(c.m(), 1, rng);
      if (v.is_zero()) continue;
      // Rank-one T = v phi^T with phi proportional to J^T v, so im T* = im T.
      Rational s = Rational(std::uniform_int_distribution<int>(1, 4)(rng));
      RationalMatrix t_mat = v * (c.form().transpose() * v).transpose() * s;
      RationalMatrix ts = adjoint(c, t_mat);
      if (t_mat.is_zero()) continue;
      REQUIRE(rank(hstack(t_mat, ts)) == 1);
      CHECK((ts == t_mat || ts == -t_mat));
      ++tested;
    }
  }
  CHECK(tested >= 50);
}

TEST_CASE("jordan types") {
  RationalMatrix j = RationalMatrix::zero(5);
  j(0, 1) = 1;
  j(2, 3) = 1;
  CHECK(jordan_type(j).str() == "2^2 1");
  CHECK_THROWS_AS(jordan_type(RationalMatrix::identity(2)), NotNilpotent);
  std::mt19937_64 rng(5);
  for (int l = 2; l <= 4; ++l) {
    TwistedCase d(TwistKind::D, l);
    for (int t = 0; t < 10; ++t) {
      RationalMatrix x = random_p_nilpotent(d, rng);
      CHECK(jordan_type(x).parts() == oracle::jordan(x));
      CHECK(jordan_type(x).parts().front() == 3);
    }
  }
  for (auto& c : cases(3)) {
    for (int t = 0; t < 10; ++t) {
      RationalMatrix x = random_nilpotent_p(c, rng, true);
      RationalMatrix k = random_k_element(c, rng);
      RationalMatrix y = k * x * inverse(k);
      CHECK(in_p(c, y));
      CHECK(jordan_type(y) == jordan_type(x));
      CHECK(jordan_type(y).parts() == oracle::jordan(y));
    }
  }
}

TEST_CASE("random K elements preserve the form") {
  CHECK(random_k_element(TwistedCase(TwistKind::A2l, 2), std::uint64_t{9}) ==
        random_k_element(TwistedCase(TwistKind::A2l, 2), std::uint64_t{9}));
  TwistedCase a1(TwistKind::A2l, 1);
  RationalMatrix n = project_k(a1, RationalMatrix::unit(3, 0, 1));
  RationalMatrix e = exp_nilpotent(n);
  CHECK(e.transpose() * a1.form() * e == a1.form());
  std::mt19937_64 rng(6);
  for (auto& c : cases(4))
    for (int t = 0; t < 5; ++t) {
      RationalMatrix k = random_k_element(c, rng);
      CHECK(k.transpose() * c.form() * k == c.form());
      CHECK(determinant(k) == 1);
      CHECK(adjoint(c, k) == (c.is_a() ? inverse(k) : k));
    }
}

TEST_CASE("block-Toeplitz rank") {
  auto g = LaurentMatrix::monomial(RationalMatrix::from_ints({{0, 1}, {0, 1}}), -2) +
           LaurentMatrix::monomial(RationalMatrix::from_ints({{1, 0}, {1, -1}}), -1) +
           LaurentMatrix::monomial(RationalMatrix::identity(2), 0);
  std::vector<RationalMatrix> coeffs;
  for (int e = -2; e < 2; ++e) coeffs.push_back(g.coeff(e));
  CHECK(block_toeplitz_rank(coeffs, 1) == 1);
  CHECK(block_toeplitz_rank(coeffs, 4) == 4);
  CHECK(block_toeplitz_rank({RationalMatrix::zero(3), RationalMatrix::zero(3)}, 2) == 0);
  CHECK_THROWS_AS(block_toeplitz_rank(coeffs, 5), InvalidInput);
}

TEST_CASE("block-Toeplitz closed form on diagonal monomials") {
  for (int m = 1; m <= 6; ++m) {
    std::vector<std::vector<int>> mus{{}};
    for (int i = 0; i < m; ++i) {
      std::vector<std::vector<int>> next;
      for (auto& mu : mus)
        for (int v = 0; v <= 4; ++v)
          if (mu.empty() || v <= mu.back()) {
            auto w = mu;
            w.push_back(v);
            next.push_back(w);
          }
      mus = next;
    }
    for (auto& mu : mus) {
      const int n = mu.back();
      std::vector<RationalMatrix> coeffs(6, RationalMatrix::zero(m));
      for (int j = 0; j < m; ++j) coeffs[mu[j] - n](j, j) = 1;
      for (int s = 1; s <= 6; ++s) {
        int expect = 0;
        for (int j = 0; j < m; ++j) expect += std::max(s - (mu[j] - n), 0);
        REQUIRE(block_toeplitz_rank(coeffs, s) == expect);
      }
    }
  }
}
