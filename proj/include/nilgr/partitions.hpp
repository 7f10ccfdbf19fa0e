#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace nilgr {

class Partition {
 public:
  Partition() = default;
  // Parts must be positive; they are sorted into weakly decreasing order.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int multiplicity(int part) const;
  std::string str() const;  // exponent notation, e.g. "3^2 1^4"

  // Accepts "3^2 1^4", "[3^2,1^4]", "3 3 1 1 1 1" or "3,3,1,1,1,1".
  static Partition parse(const std::string& text);

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition dual(const Partition& p);
bool dominates(const Partition& d, const Partition& f);
// Reverse lexicographic order, largest first.
std::vector<Partition> partitions_of(int n);

enum class PairKind { SympOnA, OrthOddOnA, OrthEvenOnA, LieSp, LieSOOdd, OrthDiagramD };

struct PairCase {
  PairKind kind;
  int n;

  int m() const;
  std::string name() const;  // CLI name, e.g. "sympA"
  std::string label() const;  // "sympA(5)"
  static PairCase parse(const std::string& name, int n);
  bool operator==(const PairCase&) const = default;
};

enum class Split { None, I, II };
std::string to_string(Split s);

struct OrbitDescriptor {
  PairCase pcase;
  Partition partition;
  Split split = Split::None;

  std::string str() const;
  bool operator==(const OrbitDescriptor&) const = default;
};

bool valid_for(const PairCase& c, const Partition& p);
std::vector<OrbitDescriptor> classify_orbits(const PairCase& c);
long orbit_dim_symmetric(const PairCase& c, const Partition& p);
long orbit_dim_classical(const PairCase& c, const Partition& p);
long orbit_dim(const PairCase& c, const Partition& p);

struct HasseDiagram {
  std::vector<OrbitDescriptor> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (larger, covered)
  std::string dot() const;
};

HasseDiagram closure_hasse(const PairCase& c);

}  // namespace nilgr
