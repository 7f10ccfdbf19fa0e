#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "nilgr/correspondence.hpp"
#include "nilgr/errors.hpp"
#include "nilgr/grassmannian.hpp"
#include "oracles.hpp"

using namespace nilgr;

namespace {

using RM = RationalMatrix;
using LM = LaurentMatrix;

LM diag_monomials(const std::vector<int>& exps, const std::vector<int>& signs) {
  LM g(static_cast<int>(exps.size()));
  for (std::size_t i = 0; i < exps.size(); ++i) {
    RM e = RM::zero(static_cast<int>(exps.size()));
    e(i, i) = signs[i];
    g.add(exps[i], e);
  }
  return g;
}

// x_j = diag(0, J2, .., J2, 0, -J2, .., -J2, 0) in the symplectic realization.
RM x_j(int ell, int j) {
  RM x = RM::zero(2 * ell);
  for (int i = 0; i < j; ++i) {
    x(1 + 2 * i, 2 + 2 * i) = 1;
    x(2 * ell - 3 - 2 * i, 2 * ell - 2 - 2 * i) = -1;
  }
  return x;
}

// Coefficient-by-coefficient expansion of g(-t)^T J g(t) = J.
bool sigma_fixed_oracle(const TwistedCase& c, const LM& g) {
  std::map<int, RM> prod;
  for (auto& [a, ga] : g.coeffs())
    for (auto& [b, gb] : g.coeffs()) {
      RM term = ga.transpose() * c.form() * gb;
      if (a % 2) term = -term;
      auto it = prod.find(a + b);
      if (it == prod.end()) prod.emplace(a + b, term);
      else it->second += term;
    }
  for (auto& [e, v] : prod)
    if (v != (e == 0 ? c.form() : RM::zero(c.m()))) return false;
  return prod.count(0) > 0;
}

std::vector<TwistedCase> cases(int lo, int hi) {
  std::vector<TwistedCase> out;
  for (int l = lo; l <= hi; ++l)
    for (auto k : {TwistKind::A2l, TwistKind::A2lMinus1, TwistKind::D}) out.emplace_back(k, l);
  return out;
}

}  // namespace

TEST_CASE("determinant-one checks") {
  CHECK(det1_check(LM::identity(3)));
  RM x = RM::zero(3);
  x(0, 2) = 5;
  CHECK(det1_check(LM::unipotent(x, RM::zero(3))));
  CHECK(det1_check(diag_monomials({2, -2}, {1, 1})));
  CHECK_FALSE(det1_check(diag_monomials({1, 0}, {1, 1})));
  CHECK(laurent_det(diag_monomials({3, -1, -2}, {1, 2, -1})) == LaurentPoly{{0, Rational(-2)}});
}

TEST_CASE("adjugate inverse of random det-one products") {
  std::mt19937_64 rng(11);
  for (auto& c : cases(1, 3)) {
    for (int t = 0; t < 10; ++t) {
      LM g = random_stabilizer(c, rng) * LM::unipotent(random_nilpotent_p(c, rng, true), RM::zero(c.m())) *
             random_stabilizer(c, rng);
      LM h = inverse_det1(g);
      CHECK(g * h == LM::identity(c.m()));
      CHECK(h * g == LM::identity(c.m()));
      CHECK(laurent_adjugate(g) == h);
    }
  }
  CHECK_THROWS_AS(inverse_det1(diag_monomials({1, 0}, {1, 1})), MembershipError);
}

TEST_CASE("sigma_fixed examples") {
  CHECK(sigma_fixed(TwistedCase(TwistKind::A2l, 2), LM::identity(5)));
  for (int l = 3; l <= 5; ++l) {
    TwistedCase c(TwistKind::A2lMinus1, l);
    LM g = LM::unipotent(x_j(l, 1), RM::unit(2 * l, 0, 2 * l - 1));
    CHECK(in_p(c, x_j(l, 1)));
    CHECK(sigma_fixed(c, g));
    CHECK(sigma_fixed_oracle(c, g));
  }
  TwistedCase a2(TwistKind::A2l, 2);
  RM k = project_k(a2, RM::unit(5, 0, 1));
  CHECK_FALSE(sigma_fixed(a2, LM::unipotent(k, RM::zero(5))));
  CHECK_FALSE(sigma_fixed_oracle(a2, LM::unipotent(k, RM::zero(5))));
}

TEST_CASE("sigma_fixed reports membership failures distinctly") {
  TwistedCase a2(TwistKind::A2l, 2);
  auto failure = [&](const TwistedCase& c, const LM& g) {
    try {
      sigma_fixed(c, g);
    } catch (const MembershipError& e) {
      return e.failure();
    }
    FAIL("expected a membership error");
    return MembershipFailure::WrongSize;
  };
  CHECK(failure(a2, LM::identity(4)) == MembershipFailure::WrongSize);
  CHECK(failure(a2, diag_monomials({1, 0, 0, 0, 0}, {1, 1, 1, 1, 1})) == MembershipFailure::NotSL);
  TwistedCase d2(TwistKind::D, 2);
  RM u = RM::unit(6, 0, 1);
  CHECK(failure(d2, LM::unipotent(u, RM::zero(6))) == MembershipFailure::NotSO);
}

TEST_CASE("iota and pi examples") {
  CHECK(iota(LM::identity(4)) == LM::identity(4));
  TwistedCase a3(TwistKind::A2l, 3);
  RM x = standard_order2(a3, 2);
  // g(-t)^-1 = (I - x t^-1)^-1 = I + x t^-1 when x^2 = 0.
  CHECK(iota(LM::unipotent(x, RM::zero(7))) == LM::unipotent(x, RM::zero(7)));
  CHECK(pi(iota(LM::unipotent(x, RM::zero(7)))) == x);
  CHECK(pi(LM::identity(3)) == RM::zero(3));
  for (int l = 3; l <= 5; ++l) {
    RM y = RM::unit(2 * l, 0, 2 * l - 1);
    LM g = LM::unipotent(x_j(l, 1), y);
    CHECK(iota(g) == LM::unipotent(x_j(l, 1), -y));
    CHECK(pi(g) == x_j(l, 1));
  }
  CHECK_THROWS_AS(pi(LM::monomial(RM::identity(2), 1)), PreconditionError);
  CHECK_THROWS_AS(pi(LM::monomial(RM::identity(2) * Rational(2), 0)), PreconditionError);
}

TEST_CASE("iota is an involution on sigma-fixed elements") {
  std::mt19937_64 rng(12);
  int n = 0;
  for (auto& c : cases(1, 4))
    for (int t = 0; t < 9; ++t, ++n) {
      LM g = random_stabilizer(c, rng) * norm_element(c, enumerate_small(c.htype()).back()) *
             random_stabilizer(c, rng);
      REQUIRE(sigma_fixed(c, g));
      CHECK(iota(iota(g)) == g);
    }
  CHECK(n >= 100);
}

TEST_CASE("norm elements") {
  TwistedCase a2(TwistKind::A2l, 2);
  CHECK(norm_element(a2, WeightTuple(HType::B(2), {0, 0})) == LM::identity(5));
  LM n = norm_element(a2, WeightTuple(HType::B(2), {1, 0}));
  CHECK(n.lowest() == -1);
  CHECK(n.highest() == 1);
  CHECK(n.coeff(1)(0, 0) != 0);
  CHECK(n.coeff(-1)(4, 4) != 0);
  CHECK(sigma_fixed(a2, n));
  LM d = norm_element(TwistedCase(TwistKind::D, 2), WeightTuple(HType::B(2), {1, 0}));
  CHECK(d.coeff(2)(0, 0) != 0);
  CHECK(d.coeff(-2)(5, 5) != 0);
  CHECK(d.coeff(0)(2, 2) != 0);
}

TEST_CASE("cell recovery from norm elements") {
  for (auto& c : cases(1, 4))
    for (auto& w : dominant_weights(c.htype(), 3)) {
      LM n = norm_element(c, w);
      REQUIRE(sigma_fixed(c, n));
      CHECK(cell_of(c, n) == w);
    }
}

TEST_CASE("cell_of examples") {
  for (auto& c : cases(1, 3))
    CHECK(cell_of(c, LM::identity(c.m())) == WeightTuple(c.htype(), std::vector<long>(c.ell(), 0)));
  for (int l = 1; l <= 4; ++l) {
    TwistedCase c(TwistKind::A2l, l);
    for (int j = 0; j <= l; ++j) {
      std::vector<long> expect(l, 0);
      std::fill(expect.begin(), expect.begin() + j, 1);
      CHECK(cell_of(c, order2_embed(c, standard_order2(c, j))).coords() == expect);
    }
  }
  for (int l = 3; l <= 5; ++l) {
    TwistedCase c(TwistKind::A2lMinus1, l);
    LM g = LM::unipotent(x_j(l, 1), RM::unit(2 * l, 0, 2 * l - 1));
    std::vector<long> expect(l, 0);
    expect[0] = 2, expect[1] = 1, expect[2] = 1;
    CHECK(cell_of(c, g).coords() == expect);
  }
}

TEST_CASE("cells are stable under the stabilizer and iota") {
  std::mt19937_64 rng(13);
  for (auto& c : cases(2, 4))
    for (auto& w : enumerate_small(c.htype())) {
      LM g = norm_element(c, w);
      for (int t = 0; t < 4; ++t) {
        LM h = random_stabilizer(c, rng) * g * random_stabilizer(c, rng);
        REQUIRE(sigma_fixed(c, h));
        CHECK(cell_of(c, h) == w);
        CHECK(cell_of(c, iota(h)) == w);
      }
    }
}

TEST_CASE("pi is K-equivariant") {
  std::mt19937_64 rng(14);
  for (auto& c : cases(2, 3)) {
    RM x = random_p_nilpotent(c, rng);
    LM g = LM::unipotent(x, x * x * Rational(1, 2));
    RM k = random_k_element(c, rng);
    RM kinv = form_adjoint(c, k);
    CHECK(k * kinv == RM::identity(c.m()));
    CHECK(pi(k * g * kinv) == k * x * kinv);
  }
}

TEST_CASE("sl coweights of diagonal elements") {
  LM g = diag_monomials({3, -1, -2}, {1, 1, 1});
  CHECK(sl_coweight(g) == std::vector<long>{3, -1, -2});
  auto prof = toeplitz_profile(g);
  CHECK(prof.front() == 1);
}
