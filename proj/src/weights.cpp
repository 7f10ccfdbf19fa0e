#include "nilgr/weights.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "nilgr/errors.hpp"

namespace nilgr {

HType HType::B(int rank) {
  if (rank < 1) throw InvalidInput("rank must be >= 1");
  return {HKind::B, rank};
}

HType HType::C(int rank) {
  if (rank < 1) throw InvalidInput("rank must be >= 1");
  return {HKind::C, rank};
}

std::string HType::name() const {
  return (kind == HKind::B ? "B" : "C") + std::to_string(rank);
}

WeightTuple::WeightTuple(HType htype, std::vector<long> coords)
    : htype_(htype), coords_(std::move(coords)) {
  if (htype_.rank < 1) throw InvalidInput("rank must be >= 1");
  if (static_cast<int>(coords_.size()) != htype_.rank)
    throw DimensionMismatch("weight tuple of length " + std::to_string(coords_.size()) +
                            " for " + htype_.name());
  if (htype_.kind == HKind::C) {
    long s = std::accumulate(coords_.begin(), coords_.end(), 0L);
    if (s % 2 != 0) throw InvalidInput("coordinate sum must be even for type C");
  }
}

bool WeightTuple::dominant() const {
  for (std::size_t i = 0; i + 1 < coords_.size(); ++i)
    if (coords_[i] < coords_[i + 1]) return false;
  return coords_.back() >= 0;
}

std::string WeightTuple::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

RootDatum simple_roots(HType htype) {
  const int l = htype.rank;
  RootDatum rd{htype, {}, std::vector<long>(l, 0), {}};
  for (int i = 0; i + 1 < l; ++i) {
    std::vector<long> g(l, 0);
    g[i] = 1;
    g[i + 1] = -1;
    rd.simple.push_back(g);
  }
  std::vector<long> last(l, 0);
  last[l - 1] = htype.kind == HKind::B ? 1 : 2;
  rd.simple.push_back(last);

  rd.gamma0[0] = 1;
  if (htype.kind == HKind::C && l >= 2) rd.gamma0[1] = 1;
  if (htype.kind == HKind::C && l == 1) rd.gamma0[0] = 2;

  for (int j = 1; j <= l; ++j) {
    std::vector<mpq_class> w(l, 0);
    bool half = htype.kind == HKind::B && j == l;
    for (int i = 0; i < j; ++i) w[i] = half ? mpq_class(1, 2) : mpq_class(1);
    rd.fundamental.push_back(w);
  }
  return rd;
}

namespace {

long dot(const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// <a, b^vee> = 2 (a.b)/(b.b); integral on roots.
long pairing(const std::vector<long>& a, const std::vector<long>& b) {
  return 2 * dot(a, b) / dot(b, b);
}

void require_dominant(const WeightTuple& w) {
  if (!w.dominant()) throw NotDominant("weight " + w.str() + " is not dominant");
}

}  // namespace

std::vector<std::vector<long>> positive_roots(HType htype) {
  auto simple = simple_roots(htype).simple;
  std::set<std::vector<long>> seen(simple.begin(), simple.end());
  std::deque<std::vector<long>> queue(simple.begin(), simple.end());
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    for (const auto& g : simple) {
      if (beta == g) continue;
      // beta + k g is a root for 0 <= k <= p - <beta, g^vee>, p = length of the downward string.
      int p = 0;
      for (;;) {
        std::vector<long> down(beta);
        for (std::size_t i = 0; i < down.size(); ++i) down[i] -= (p + 1) * g[i];
        if (!seen.count(down)) break;
        ++p;
      }
      long q = p - pairing(beta, g);
      if (q > 0) {
        std::vector<long> up(beta);
        for (std::size_t i = 0; i < up.size(); ++i) up[i] += g[i];
        if (seen.insert(up).second) queue.push_back(up);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<mpq_class> simple_root_coefficients(const WeightTuple& mu, const WeightTuple& lambda) {
  if (!(mu.htype() == lambda.htype())) throw InvalidInput("htype mismatch");
  const int l = mu.rank();
  std::vector<mpq_class> c(l);
  mpq_class acc = 0;
  for (int k = 0; k < l; ++k) {
    acc += lambda[k] - mu[k];
    c[k] = acc;
  }
  if (mu.htype().kind == HKind::C) c[l - 1] /= 2;
  return c;
}

bool dominance_le(const WeightTuple& mu, const WeightTuple& lambda) {
  require_dominant(mu);
  require_dominant(lambda);
  for (const auto& c : simple_root_coefficients(mu, lambda))
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

bool is_small(const WeightTuple& lambda) {
  require_dominant(lambda);
  WeightTuple two_gamma0(lambda.htype(), [&] {
    auto g = simple_roots(lambda.htype()).gamma0;
    for (auto& v : g) v *= 2;
    return g;
  }());
  return !dominance_le(two_gamma0, lambda);
}

long height(const WeightTuple& lambda) {
  WeightTuple zero(lambda.htype(), std::vector<long>(lambda.rank(), 0));
  mpq_class h = 0;
  for (const auto& c : simple_root_coefficients(zero, lambda)) h += c;
  return h.get_num().get_si() / h.get_den().get_si();
}

std::vector<WeightTuple> enumerate_small(HType htype) {
  const int l = htype.rank;
  std::vector<WeightTuple> out;
  auto ones = [&](int lead, int k) {
    std::vector<long> v(l, 0);
    for (int i = 0; i < k; ++i) v[i] = 1;
    if (lead) v[0] = lead;
    return WeightTuple(htype, v);
  };
  if (htype.kind == HKind::B) {
    for (int j = 0; j <= l; ++j) out.push_back(ones(0, j));
  } else {
    for (int j = 0; 2 * j <= l; ++j) out.push_back(ones(0, 2 * j));
    for (int j = 0; 2 * j + 1 <= l; ++j) out.push_back(ones(2, 2 * j + 1));
  }
  std::stable_sort(out.begin(), out.end(), [](const WeightTuple& a, const WeightTuple& b) {
    long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a.coords() < b.coords();
  });
  return out;
}

long schubert_dim(const WeightTuple& lambda) {
  require_dominant(lambda);
  long s = 0;
  for (const auto& beta : positive_roots(lambda.htype())) s += pairing(lambda.coords(), beta);
  return s;
}

std::vector<WeightTuple> dominant_weights(HType htype, long max_first) {
  std::vector<WeightTuple> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long bound) -> void {
    if (static_cast<int>(cur.size()) == htype.rank) {
      long s = std::accumulate(cur.begin(), cur.end(), 0L);
      if (htype.kind == HKind::C && s % 2) return;
      out.emplace_back(htype, cur);
      return;
    }
    for (long v = 0; v <= bound; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, max_first);
  return out;
}

}  // namespace nilgr
