#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nilgr {

enum class HKind { B, C };

struct HType {
  HKind kind;
  int rank;

  static HType B(int rank);
  static HType C(int rank);
  std::string name() const;  // "B3"
  bool operator==(const HType&) const = default;
};

class WeightTuple {
 public:
  WeightTuple(HType htype, std::vector<long> coords);

  const HType& htype() const { return htype_; }
  const std::vector<long>& coords() const { return coords_; }
  long operator[](std::size_t i) const { return coords_[i]; }
  int rank() const { return htype_.rank; }
  bool dominant() const;
  std::string str() const;  // "(1,1,0)"

  bool operator==(const WeightTuple&) const = default;

 private:
  HType htype_;
  std::vector<long> coords_;
};

struct RootDatum {
  HType htype;
  std::vector<std::vector<long>> simple;  // gamma_1..gamma_l
  std::vector<long> gamma0;               // highest short root
  std::vector<std::vector<mpq_class>> fundamental;  // omega_1..omega_l
};

RootDatum simple_roots(HType htype);
std::vector<std::vector<long>> positive_roots(HType htype);

// Coefficients of lambda - mu in the simple-root basis.
std::vector<mpq_class> simple_root_coefficients(const WeightTuple& mu, const WeightTuple& lambda);
bool dominance_le(const WeightTuple& mu, const WeightTuple& lambda);
bool is_small(const WeightTuple& lambda);
std::vector<WeightTuple> enumerate_small(HType htype);
long schubert_dim(const WeightTuple& lambda);
long height(const WeightTuple& lambda);

// All dominant tuples with a_1 <= max_first (lattice constraint respected).
std::vector<WeightTuple> dominant_weights(HType htype, long max_first);

}  // namespace nilgr
