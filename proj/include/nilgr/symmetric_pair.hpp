#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nilgr/matrix.hpp"
#include "nilgr/partitions.hpp"
#include "nilgr/weights.hpp"

namespace nilgr {

enum class TwistKind { A2l, A2lMinus1, D };

class TwistedCase {
 public:
  TwistedCase(TwistKind kind, int ell);
  static TwistedCase parse(const std::string& name, int ell);

  TwistKind kind() const { return kind_; }
  int ell() const { return ell_; }
  int m() const;
  HType htype() const;
  bool is_a() const { return kind_ != TwistKind::D; }
  std::string name() const;   // "A2l"
  std::string label() const;  // "A2l(3)"
  // Symmetric pair whose nilpotent K-orbits on p appear in the correspondence.
  PairCase pair_case() const;

  const RationalMatrix& form() const { return j_; }
  const RationalMatrix& form_inverse() const { return jinv_; }
  const RationalMatrix& invol_w() const;

  bool operator==(const TwistedCase& o) const { return kind_ == o.kind_ && ell_ == o.ell_; }

 private:
  TwistKind kind_;
  int ell_;
  RationalMatrix j_, jinv_, w_;
};

// A* = J^{-1} A^T J for the A cases, w A w for D.
RationalMatrix adjoint(const TwistedCase& c, const RationalMatrix& a);
// J^{-1} A^T J in every case.
RationalMatrix form_adjoint(const TwistedCase& c, const RationalMatrix& a);

bool in_g(const TwistedCase& c, const RationalMatrix& a);
bool in_p(const TwistedCase& c, const RationalMatrix& a);
bool in_k(const TwistedCase& c, const RationalMatrix& a);

enum class Eigenspace { P, K, Neither };
std::string to_string(Eigenspace e);
// The zero matrix reports P.
Eigenspace eigenspace_membership(const TwistedCase& c, const RationalMatrix& a);

Partition jordan_type(const RationalMatrix& a);
int block_toeplitz_rank(const std::vector<RationalMatrix>& coeffs, int s);

// Projections of an arbitrary matrix onto k and p (through so(J) for D).
RationalMatrix project_k(const TwistedCase& c, const RationalMatrix& u);
RationalMatrix project_p(const TwistedCase& c, const RationalMatrix& u);

// Strictly triangular nilpotents with small integer entries.
RationalMatrix random_nilpotent_k(const TwistedCase& c, std::mt19937_64& rng, bool upper);
RationalMatrix random_nilpotent_p(const TwistedCase& c, std::mt19937_64& rng, bool upper);
RationalMatrix random_k_element(const TwistedCase& c, std::mt19937_64& rng);
RationalMatrix random_k_element(const TwistedCase& c, std::uint64_t seed);
// Nonzero nilpotent of p, conjugated by a random element of K.
RationalMatrix random_p_nilpotent(const TwistedCase& c, std::mt19937_64& rng);

}  // namespace nilgr
