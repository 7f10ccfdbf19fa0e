#include "nilgr/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "nilgr/errors.hpp"

namespace nilgr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw InvalidInput("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    os << (first ? "" : " ") << parts_[i];
    if (j - i > 1) os << '^' << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == ',') s += ' ';
    else s += ch;
  }
  std::istringstream is(s);
  std::string tok;
  std::vector<int> parts;
  while (is >> tok) {
    auto caret = tok.find('^');
    auto num = [&](const std::string& t) {
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw InvalidInput("malformed partition '" + text + "'");
      return std::stoi(t);
    };
    int part = num(tok.substr(0, caret));
    int mult = caret == std::string::npos ? 1 : num(tok.substr(caret + 1));
    for (int k = 0; k < mult; ++k) parts.push_back(part);
  }
  return Partition(parts);
}

Partition dual(const Partition& p) {
  std::vector<int> s;
  if (p.parts().empty()) return Partition();
  for (int i = 1; i <= p.parts().front(); ++i) {
    int c = 0;
    for (int d : p.parts()) c += d >= i;
    s.push_back(c);
  }
  return Partition(s);
}

bool dominates(const Partition& d, const Partition& f) {
  if (d.n() != f.n()) throw InvalidInput("dominates: partitions of different size");
  long a = 0, b = 0;
  std::size_t len = std::max(d.parts().size(), f.parts().size());
  for (std::size_t i = 0; i < len; ++i) {
    a += i < d.parts().size() ? d.parts()[i] : 0;
    b += i < f.parts().size() ? f.parts()[i] : 0;
    if (a < b) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

int PairCase::m() const {
  switch (kind) {
    case PairKind::SympOnA:
    case PairKind::OrthEvenOnA:
    case PairKind::LieSp:
      return 2 * n;
    case PairKind::OrthOddOnA:
    case PairKind::LieSOOdd:
      return 2 * n + 1;
    case PairKind::OrthDiagramD:
      return 2 * n + 2;
  }
  return 0;
}

std::string PairCase::name() const {
  switch (kind) {
    case PairKind::SympOnA: return "sympA";
    case PairKind::OrthOddOnA: return "orthOddA";
    case PairKind::OrthEvenOnA: return "orthEvenA";
    case PairKind::LieSp: return "lieSp";
    case PairKind::LieSOOdd: return "lieSOOdd";
    case PairKind::OrthDiagramD: return "diagD";
  }
  return "";
}

std::string PairCase::label() const { return name() + "(" + std::to_string(n) + ")"; }

PairCase PairCase::parse(const std::string& name, int n) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  for (auto k : {PairKind::SympOnA, PairKind::OrthOddOnA, PairKind::OrthEvenOnA, PairKind::LieSp,
                 PairKind::LieSOOdd, PairKind::OrthDiagramD}) {
    PairCase c{k, n};
    if (c.name() == name) return c;
  }
  throw InvalidInput("unknown pair case '" + name + "'");
}

std::string to_string(Split s) {
  switch (s) {
    case Split::I: return "I";
    case Split::II: return "II";
    default: return "";
  }
}

std::string OrbitDescriptor::str() const {
  std::string s = "[" + partition.str() + "]";
  if (split != Split::None) s += "_" + to_string(split);
  return s;
}

namespace {

bool all_even(const Partition& p) {
  return std::all_of(p.parts().begin(), p.parts().end(), [](int d) { return d % 2 == 0; });
}

bool mult_even_where(const Partition& p, int parity) {
  for (int d : p.parts())
    if (d % 2 == parity && p.multiplicity(d) % 2) return false;
  return true;
}

long sum_dual_squares(const Partition& p) {
  long s = 0;
  Partition d = dual(p);
  for (int v : d.parts()) s += static_cast<long>(v) * v;
  return s;
}

long odd_parts(const Partition& p) {
  return std::count_if(p.parts().begin(), p.parts().end(), [](int d) { return d % 2; });
}

void require_valid(const PairCase& c, const Partition& p) {
  if (!valid_for(c, p))
    throw InvalidInput("partition [" + p.str() + "] is not valid for " + c.label());
}

}  // namespace

bool valid_for(const PairCase& c, const Partition& p) {
  if (p.n() != c.m()) return false;
  switch (c.kind) {
    case PairKind::SympOnA:
      for (int d : p.parts())
        if (p.multiplicity(d) % 2) return false;
      return true;
    case PairKind::OrthOddOnA:
    case PairKind::OrthEvenOnA:
      return true;
    case PairKind::LieSp:
      return mult_even_where(p, 1);
    case PairKind::LieSOOdd:
      return mult_even_where(p, 0);
    case PairKind::OrthDiagramD:
      return p == Partition(std::vector<int>(c.m(), 1)) ||
             p == Partition([&] {
               std::vector<int> v(c.m() - 2, 1);
               v[0] = 3;
               return v;
             }());
  }
  return false;
}

std::vector<OrbitDescriptor> classify_orbits(const PairCase& c) {
  std::vector<OrbitDescriptor> out;
  for (const auto& p : partitions_of(c.m())) {
    if (!valid_for(c, p)) continue;
    if (c.kind == PairKind::OrthEvenOnA && all_even(p)) {
      out.push_back({c, p, Split::I});
      out.push_back({c, p, Split::II});
    } else {
      out.push_back({c, p, Split::None});
    }
  }
  return out;
}

long orbit_dim_symmetric(const PairCase& c, const Partition& p) {
  if (c.kind != PairKind::SympOnA && c.kind != PairKind::OrthOddOnA &&
      c.kind != PairKind::OrthEvenOnA)
    throw InvalidInput("orbit_dim_symmetric: not a self-adjoint case");
  require_valid(c, p);
  long m = c.m();
  long v = m * m - sum_dual_squares(p);
  return v / 2;
}

long orbit_dim_classical(const PairCase& c, const Partition& p) {
  require_valid(c, p);
  long n = c.n;
  long s2 = sum_dual_squares(p), odd = odd_parts(p);
  switch (c.kind) {
    case PairKind::LieSp:
      return (2 * n * n + n) - (s2 + odd) / 2;
    case PairKind::LieSOOdd:
      return n * (2 * n + 1) - (s2 - odd) / 2;
    default:
      throw InvalidInput("orbit_dim_classical: not a classical Lie algebra case");
  }
}

long orbit_dim(const PairCase& c, const Partition& p) {
  switch (c.kind) {
    case PairKind::LieSp:
    case PairKind::LieSOOdd:
      return orbit_dim_classical(c, p);
    case PairKind::OrthDiagramD:
      require_valid(c, p);
      // Nonzero nilpotents of p form the punctured isotropic cone in a (2n+1)-dimensional space.
      return p.parts().front() == 1 ? 0 : 2L * c.n;
    default:
      return orbit_dim_symmetric(c, p);
  }
}

std::string HasseDiagram::dot() const {
  std::ostringstream os;
  os << "digraph hasse {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << nodes[i].str() << "\"];\n";
  for (auto [a, b] : edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

HasseDiagram closure_hasse(const PairCase& c) {
  HasseDiagram h;
  h.nodes = classify_orbits(c);
  const std::size_t k = h.nodes.size();
  std::vector<std::vector<char>> above(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const auto& a = h.nodes[i];
      const auto& b = h.nodes[j];
      if (a.partition == b.partition) continue;  // split twins are incomparable
      above[i][j] = dominates(a.partition, b.partition);
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (!above[i][j]) continue;
      bool covered = true;
      for (std::size_t mid = 0; mid < k && covered; ++mid)
        if (above[i][mid] && above[mid][j]) covered = false;
      if (covered) h.edges.emplace_back(i, j);
    }
  return h;
}

}  // namespace nilgr
