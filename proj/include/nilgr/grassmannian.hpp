#pragma once

#include <random>
#include <vector>

#include "nilgr/laurent.hpp"
#include "nilgr/symmetric_pair.hpp"
#include "nilgr/weights.hpp"

namespace nilgr {

LaurentPoly laurent_det(const LaurentMatrix& g);
// Fraction-free Gauss-Jordan over Z[t] after clearing t-powers and denominators.
LaurentMatrix laurent_adjugate(const LaurentMatrix& g);
bool det1_check(const LaurentMatrix& g);
// Inverse of a determinant-one Laurent matrix; throws MembershipError(NotSL) otherwise.
LaurentMatrix inverse_det1(const LaurentMatrix& g);

// Throws MembershipError for size, SL or SO failures; returns false only when not sigma-fixed.
bool sigma_fixed(const TwistedCase& c, const LaurentMatrix& g);
LaurentMatrix iota(const LaurentMatrix& g);
RationalMatrix pi(const LaurentMatrix& g);
LaurentMatrix norm_element(const TwistedCase& c, const WeightTuple& lambda);

// Ranks of the block-Toeplitz matrices for s = 1, 2, ... until saturation.
std::vector<int> toeplitz_profile(const LaurentMatrix& g);
// Coweight multiset of the G(O) double coset, descending.
std::vector<long> sl_coweight(const LaurentMatrix& g);
WeightTuple cell_of(const TwistedCase& c, const LaurentMatrix& g);

// exp(n t^k) with n in k (k even) or p (k odd); sigma-fixed element of G(O).
LaurentMatrix random_stabilizer(const TwistedCase& c, std::mt19937_64& rng);

}  // namespace nilgr
