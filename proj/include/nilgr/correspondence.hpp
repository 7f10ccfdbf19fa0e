#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilgr/grassmannian.hpp"
#include "nilgr/partitions.hpp"

namespace nilgr {

enum class Branch { None, I, II };
std::string to_string(Branch b);
Branch parse_branch(const std::string& s);

struct CellImageRow {
  TwistedCase tcase;
  WeightTuple lambda;
  Branch branch;
  std::vector<OrbitDescriptor> orbits;
};

// Every (lambda, branch) row of the table for the case, in enumerate_small order.
std::vector<CellImageRow> table_rows(const TwistedCase& c);
CellImageRow expected_image(const TwistedCase& c, const WeightTuple& lambda, Branch branch = Branch::None);

// Branch II orbits [3^2 2^{2j-4} 1^{2l-4j+2}] that no element of the cell reaches:
// im y lies in im x^2, so the block rank is at most rk x + 1 < 2j + 2.
std::vector<OrbitDescriptor> refuted_entries(const TwistedCase& c, const WeightTuple& lambda, Branch branch);

// Square-zero element of p with the given rank, built from disjoint root vectors.
RationalMatrix standard_order2(const TwistedCase& c, int rank);
LaurentMatrix order2_embed(const TwistedCase& c, const RationalMatrix& x);
LaurentMatrix witness(const TwistedCase& c, const WeightTuple& lambda, Branch branch,
                      const OrbitDescriptor& orbit);
Branch branch_of(const TwistedCase& c, const LaurentMatrix& g);

bool fiber_contains(const TwistedCase& c, const RationalMatrix& x, const RationalMatrix& z);

struct FiberProfile {
  OrbitDescriptor orbit;
  long dim;
};
FiberProfile fiber_zero_profile(const TwistedCase& c);

std::vector<long> two_gamma0(HType h);
LaurentMatrix non_small_witness(const TwistedCase& c);
// sigma(g) = J^{-1} iota(g)^T J for the A cases.
LaurentMatrix sigma_image(const TwistedCase& c, const LaurentMatrix& g);

struct RowChecks {
  bool sigma_fixed = false;
  bool cell = false;
  bool jordan = false;
  bool branch = true;
  bool conjugation = false;
};

struct RowReport {
  WeightTuple lambda;
  Branch branch;
  std::optional<OrbitDescriptor> orbit;  // empty for rows with no orbits
  RowChecks checks;
  std::string detail;
  bool pass = false;
};

struct NonSmallReport {
  bool applicable = false;
  bool sigma_fixed = false;
  bool cell = false;
  bool non_nilpotent = false;
  bool pass = false;
};

struct TableReport {
  TwistedCase tcase;
  std::uint64_t seed;
  int conjugates;
  std::vector<RowReport> rows;
  NonSmallReport non_small;
  bool pass = false;
};

TableReport verify_table(const TwistedCase& c, std::uint64_t seed = 0, int conjugates = 20);

struct DualityRow {
  std::string pair;  // "orthOddA/lieSp" or "sympA/lieSOOdd"
  int n;
  int j;
  long dim_symmetric;
  long dim_classical;
  long closed_form;
  bool ok;
};
std::vector<DualityRow> duality_dims(int n);

}  // namespace nilgr
