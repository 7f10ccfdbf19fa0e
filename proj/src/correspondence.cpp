#include "nilgr/correspondence.hpp"

#include <random>

#include "nilgr/errors.hpp"

namespace nilgr {

std::string to_string(Branch b) {
  switch (b) {
    case Branch::I: return "I";
    case Branch::II: return "II";
    default: return "";
  }
}

Branch parse_branch(const std::string& s) {
  if (s.empty() || s == "none") return Branch::None;
  if (s == "I") return Branch::I;
  if (s == "II") return Branch::II;
  throw InvalidInput("unknown branch '" + s + "'");
}

namespace {

// Builds a partition from (part, multiplicity) pairs; nullopt if a multiplicity is negative.
std::optional<Partition> make_partition(std::initializer_list<std::pair<int, int>> spec) {
  std::vector<int> parts;
  for (auto [p, k] : spec) {
    if (k < 0) return std::nullopt;
    for (int i = 0; i < k; ++i) parts.push_back(p);
  }
  return Partition(parts);
}

struct Shape {
  int lead;  // a_1
  int ones;  // number of coordinates equal to 1 (excluding a lead of 2)
};

// Recognizes (1^k 0^...) and (2 1^k 0^...); throws otherwise.
Shape shape_of(const WeightTuple& w) {
  Shape s{0, 0};
  const auto& a = w.coords();
  std::size_t i = 0;
  if (!a.empty() && a[0] == 2) {
    s.lead = 2;
    i = 1;
  }
  for (; i < a.size() && a[i] == 1; ++i) ++s.ones;
  if (s.lead == 0 && s.ones > 0) s.lead = 1;
  for (; i < a.size(); ++i)
    if (a[i] != 0) throw InvalidInput("weight " + w.str() + " is not small");
  return s;
}

RationalMatrix E(int m, int i, int j) { return RationalMatrix::unit(m, i, j); }

void require_small(const TwistedCase& c, const WeightTuple& lambda) {
  if (!(lambda.htype() == c.htype())) throw InvalidInput("weight type does not match " + c.label());
  if (!lambda.dominant() || !is_small(lambda))
    throw InvalidInput("weight " + lambda.str() + " is not small for " + c.label());
}

// Square-zero skew matrix of rank 2h in an L x L block, skew about the antidiagonal.
RationalMatrix antidiagonal_block(int L, int h) {
  RationalMatrix b(L, L);
  for (int i = 0; i < h; ++i) {
    b(i, h - 1 - i) = 1;
    b(L - h + i, L - 1 - i) = -1;
  }
  return b;
}

RationalMatrix d_center_x0(const TwistedCase& c) {
  const int m = c.m(), l = c.ell();
  RationalMatrix x(m, m);
  x.set_block(l - 1, l - 1, RationalMatrix::from_ints({{0, 1, -1, 0}, {0, 0, 0, 1}, {0, 0, 0, -1}, {0, 0, 0, 0}}));
  return x;
}

}  // namespace

std::vector<CellImageRow> table_rows(const TwistedCase& c) {
  std::vector<CellImageRow> rows;
  for (const auto& w : enumerate_small(c.htype())) {
    if (c.kind() == TwistKind::A2lMinus1 && w[0] == 2) {
      rows.push_back(expected_image(c, w, Branch::I));
      rows.push_back(expected_image(c, w, Branch::II));
    } else {
      rows.push_back(expected_image(c, w, Branch::None));
    }
  }
  return rows;
}

CellImageRow expected_image(const TwistedCase& c, const WeightTuple& lambda, Branch branch) {
  require_small(c, lambda);
  const int l = c.ell();
  const PairCase pc = c.pair_case();
  Shape s = shape_of(lambda);
  std::vector<std::optional<Partition>> parts;
  switch (c.kind()) {
    case TwistKind::A2l:
      if (branch != Branch::None) throw InvalidInput("branches exist only for A2lMinus1");
      parts.push_back(make_partition({{2, s.ones}, {1, 2 * l + 1 - 2 * s.ones}}));
      break;
    case TwistKind::A2lMinus1: {
      if (s.lead < 2) {
        if (branch != Branch::None) throw InvalidInput("this row has no branch");
        parts.push_back(make_partition({{2, s.ones}, {1, 2 * l - 2 * s.ones}}));
        break;
      }
      const int j = s.ones / 2;
      if (branch == Branch::I) {
        parts.push_back(make_partition({{2, 2 * j}, {1, 2 * l - 4 * j}}));
        parts.push_back(make_partition({{2, 2 * j + 2}, {1, 2 * l - 4 * j - 4}}));
      } else if (branch == Branch::II) {
        if (j >= 1) parts.push_back(make_partition({{3, 2}, {2, 2 * j - 2}, {1, 2 * l - 4 * j - 2}}));
      } else {
        throw InvalidInput("rows with a_1 = 2 need a branch (I or II)");
      }
      break;
    }
    case TwistKind::D: {
      if (branch != Branch::None) throw InvalidInput("branches exist only for A2lMinus1");
      const int m = c.m();
      auto zero = make_partition({{1, m}});
      auto min = make_partition({{3, 1}, {1, m - 3}});
      if (s.ones == 0) parts.push_back(zero);
      else if (s.ones % 2) parts.push_back(min);
      else {
        parts.push_back(zero);
        parts.push_back(min);
      }
      break;
    }
  }
  CellImageRow row{c, lambda, branch, {}};
  for (const auto& p : parts)
    if (p && valid_for(pc, *p)) row.orbits.push_back({pc, *p, Split::None});
  return row;
}

std::vector<OrbitDescriptor> refuted_entries(const TwistedCase& c, const WeightTuple& lambda, Branch branch) {
  require_small(c, lambda);
  std::vector<OrbitDescriptor> out;
  if (c.kind() != TwistKind::A2lMinus1 || branch != Branch::II) return out;
  Shape s = shape_of(lambda);
  const int j = s.ones / 2, l = c.ell();
  if (s.lead != 2 || j < 2) return out;
  auto p = make_partition({{3, 2}, {2, 2 * j - 4}, {1, 2 * l - 4 * j + 2}});
  if (p && valid_for(c.pair_case(), *p)) out.push_back({c.pair_case(), *p, Split::None});
  return out;
}

RationalMatrix standard_order2(const TwistedCase& c, int r) {
  const int m = c.m(), l = c.ell();
  RationalMatrix x(m, m);
  if (c.kind() == TwistKind::A2l) {
    if (r < 0 || r > l) throw InvalidInput("rank out of range");
    for (int i = 0; i < r; ++i) x(i, m - 1 - i) = 1;
    return x;
  }
  if (c.kind() == TwistKind::A2lMinus1) {
    if (r < 0 || r % 2 || r > l) throw InvalidInput("rank must be even and at most l");
    for (int i = 0; i < r / 2; ++i) x += project_p(c, E(m, 2 * i, 2 * i + 1));
    return x;
  }
  throw InvalidInput("order-2 representatives are defined for the A cases");
}

LaurentMatrix order2_embed(const TwistedCase& c, const RationalMatrix& x) {
  if (!c.is_a()) throw InvalidInput("order2_embed is defined for the A cases");
  if (!in_p(c, x)) throw InvalidInput("x is not in p");
  if (!(x * x).is_zero()) throw InvalidInput("x^2 != 0");
  LaurentMatrix g = LaurentMatrix::identity(c.m());
  g.add(-1, x);
  return g;
}

LaurentMatrix witness(const TwistedCase& c, const WeightTuple& lambda, Branch branch,
                      const OrbitDescriptor& orbit) {
  CellImageRow row = expected_image(c, lambda, branch);
  bool listed = false;
  for (const auto& o : row.orbits) listed |= o.partition == orbit.partition;
  if (!listed) throw InvalidInput("orbit [" + orbit.partition.str() + "] is not in the row " + lambda.str());
  const int m = c.m(), l = c.ell();
  Shape s = shape_of(lambda);
  RationalMatrix zero = RationalMatrix::zero(m);
  auto p = [&](int i, int j) { return project_p(c, E(m, i, j)); };

  switch (c.kind()) {
    case TwistKind::A2l:
      return order2_embed(c, standard_order2(c, s.ones));
    case TwistKind::A2lMinus1: {
      if (s.lead < 2) return order2_embed(c, standard_order2(c, s.ones));
      const int j = s.ones / 2;
      if (branch == Branch::I) {
        RationalMatrix x = zero;
        for (int i = 0; i < j; ++i) x += p(2 * i + 1, 2 * i + 2);
        if (orbit.partition.multiplicity(2) == 2 * j + 2) x += p(0, 2 * j + 1);
        return LaurentMatrix::unipotent(x, E(m, 0, m - 1));
      }
      RationalMatrix x = p(0, 1) + p(1, 2);
      for (int i = 0; i < j - 1; ++i) x += p(3 + 2 * i, 4 + 2 * i);
      return LaurentMatrix::unipotent(x, E(m, 0, 2));
    }
    case TwistKind::D: {
      const int j = s.ones;
      const bool zero_orbit = orbit.partition.parts().front() == 1;
      RationalMatrix z = zero;
      if (j % 2 == 0) {
        z.set_block(0, l + 2, antidiagonal_block(l, j / 2));
        if (zero_orbit) return LaurentMatrix::unipotent(zero, z);
      } else {
        z.set_block(0, l + 3, antidiagonal_block(l - 1, (j - 1) / 2));
      }
      RationalMatrix x0 = d_center_x0(c);
      return LaurentMatrix::unipotent(x0, x0 * x0 * Rational(1, 2) + z);
    }
  }
  throw InvalidInput("unsupported case");
}

Branch branch_of(const TwistedCase& c, const LaurentMatrix& g) {
  if (c.kind() != TwistKind::A2lMinus1) throw InvalidInput("branch_of applies to A2lMinus1");
  if (g.is_zero() || g.lowest() < -2 || g.highest() > 0 ||
      g.coeff(0) != RationalMatrix::identity(c.m()))
    throw InvalidInput("branch_of expects I + x t^-1 + y t^-2");
  RationalMatrix y = g.coeff(-2);
  if (rank(y) != 1) throw InvalidInput("branch_of expects rank y = 1");
  RationalMatrix y2 = iota(g).coeff(-2);
  return rank(hstack(y, y2)) == 1 ? Branch::I : Branch::II;
}

bool fiber_contains(const TwistedCase& c, const RationalMatrix& x, const RationalMatrix& z) {
  const int m = c.m();
  if (x.rows() != m || x.cols() != m || z.rows() != m || z.cols() != m)
    throw DimensionMismatch("fiber_contains expects " + std::to_string(m) + "x" + std::to_string(m) + " matrices");
  if (!in_p(c, x)) return false;
  RationalMatrix x2 = x * x;
  if (c.kind() == TwistKind::A2l) return x2.is_zero() && z.is_zero();
  if (!is_nilpotent(x) || !in_k(c, z)) return false;
  if (!(x * z + z * x).is_zero()) return false;
  if (z * z != x2 * x2 * Rational(1, 4)) return false;
  if (c.kind() == TwistKind::A2lMinus1 && rank(z + x2 * Rational(1, 2)) > 1) return false;
  return true;
}

FiberProfile fiber_zero_profile(const TwistedCase& c) {
  const int l = c.ell();
  switch (c.kind()) {
    case TwistKind::A2l: {
      PairCase pc = c.pair_case();
      Partition p(std::vector<int>(c.m(), 1));
      return {{pc, p, Split::None}, 0};
    }
    case TwistKind::A2lMinus1: {
      PairCase pc{PairKind::LieSp, l};
      std::vector<int> parts(2 * l - 1, 1);
      parts[0] = 2;
      Partition p(parts);
      return {{pc, p, Split::None}, orbit_dim_classical(pc, p)};
    }
    case TwistKind::D: {
      PairCase pc{PairKind::LieSOOdd, l};
      const int k = l - (l % 2);
      std::vector<int> parts;
      for (int i = 0; i < k; ++i) parts.push_back(2);
      for (int i = 0; i < 2 * l + 1 - 2 * k; ++i) parts.push_back(1);
      Partition p(parts);
      return {{pc, p, Split::None}, orbit_dim_classical(pc, p)};
    }
  }
  throw InvalidInput("unsupported case");
}

std::vector<long> two_gamma0(HType h) {
  auto g = simple_roots(h).gamma0;
  for (auto& v : g) v *= 2;
  return g;
}

LaurentMatrix sigma_image(const TwistedCase& c, const LaurentMatrix& g) {
  if (!c.is_a()) throw InvalidInput("sigma_image is implemented for the A cases");
  return c.form_inverse() * iota(g).transpose() * c.form();
}

LaurentMatrix non_small_witness(const TwistedCase& c) {
  const int m = c.m();
  auto embed = [&](int a, int b, const std::vector<std::vector<std::vector<long>>>& blk) {
    // blk[k] is the 2x2 coefficient of t^-k on indices {a, b}.
    LaurentMatrix g = LaurentMatrix::identity(m);
    RationalMatrix fix = RationalMatrix::zero(m);
    fix(a, a) = -1;
    fix(b, b) = -1;
    g.add(0, fix);
    for (std::size_t k = 0; k < blk.size(); ++k) {
      RationalMatrix coef = RationalMatrix::zero(m);
      coef(a, a) = blk[k][0][0];
      coef(a, b) = blk[k][0][1];
      coef(b, a) = blk[k][1][0];
      coef(b, b) = blk[k][1][1];
      g.add(-static_cast<int>(k), coef);
    }
    return g;
  };
  switch (c.kind()) {
    case TwistKind::A2l:
      return embed(0, m - 1, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}});
    case TwistKind::A2lMinus1: {
      if (c.ell() < 2) throw InvalidInput("the non-small witness needs l >= 2");
      LaurentMatrix g1 = embed(0, m - 2, {{{1, 0}, {0, 1}}, {{1, 0}, {1, -1}}, {{0, 1}, {0, 1}}});
      return g1 * sigma_image(c, g1);
    }
    case TwistKind::D:
      throw InvalidInput("no non-small witness is provided for the D case");
  }
  throw InvalidInput("unsupported case");
}

namespace {

void check_instance(const TwistedCase& c, const CellImageRow& row, const OrbitDescriptor& orbit,
                    const LaurentMatrix& g, RowChecks& ck, std::string& detail) {
  try {
    ck.sigma_fixed = sigma_fixed(c, g);
  } catch (const Error& e) {
    ck.sigma_fixed = false;
    detail = e.what();
  }
  try {
    WeightTuple got = cell_of(c, g);
    ck.cell = got == row.lambda;
    if (!ck.cell) detail = "cell " + got.str();
  } catch (const Error& e) {
    ck.cell = false;
    detail = e.what();
  }
  try {
    RationalMatrix x = pi(g);
    ck.jordan = in_p(c, x) && jordan_type(x) == orbit.partition;
    if (!ck.jordan) detail = "pi(g) has type [" + jordan_type(x).str() + "]";
  } catch (const Error& e) {
    ck.jordan = false;
    detail = e.what();
  }
  if (row.branch != Branch::None) {
    try {
      ck.branch = branch_of(c, g) == row.branch;
      if (!ck.branch) detail = "branch mismatch";
    } catch (const Error& e) {
      ck.branch = false;
      detail = e.what();
    }
  }
}

}  // namespace

TableReport verify_table(const TwistedCase& c, std::uint64_t seed, int conjugates) {
  TableReport rep{c, seed, conjugates, {}, {}, true};
  std::mt19937_64 rng(seed);
  for (const auto& row : table_rows(c)) {
    if (row.orbits.empty()) {
      RowReport rr{row.lambda, row.branch, std::nullopt, {}, "empty image", true};
      rr.checks = {true, true, true, true, true};
      rep.rows.push_back(rr);
      continue;
    }
    for (const auto& orbit : row.orbits) {
      RowReport rr{row.lambda, row.branch, orbit, {}, "", false};
      LaurentMatrix g = witness(c, row.lambda, row.branch, orbit);
      check_instance(c, row, orbit, g, rr.checks, rr.detail);
      bool conj_ok = true;
      for (int k = 0; k < conjugates && conj_ok; ++k) {
        RationalMatrix kk = random_k_element(c, rng);
        RationalMatrix kinv = form_adjoint(c, kk);
        LaurentMatrix h = kk * g * kinv;
        RowChecks ck;
        std::string d;
        check_instance(c, row, orbit, h, ck, d);
        bool equivariant = false;
        try {
          equivariant = pi(h) == kk * pi(g) * kinv;
        } catch (const Error&) {
        }
        conj_ok = ck.sigma_fixed && ck.cell && ck.jordan && ck.branch && equivariant;
        if (!conj_ok && rr.detail.empty()) rr.detail = "conjugate " + std::to_string(k) + ": " + d;
      }
      rr.checks.conjugation = conj_ok;
      rr.pass = rr.checks.sigma_fixed && rr.checks.cell && rr.checks.jordan && rr.checks.branch &&
                rr.checks.conjugation;
      rep.pass = rep.pass && rr.pass;
      rep.rows.push_back(rr);
    }
  }
  if (c.is_a() && (c.kind() == TwistKind::A2l || c.ell() >= 2)) {
    NonSmallReport& ns = rep.non_small;
    ns.applicable = true;
    LaurentMatrix g = non_small_witness(c);
    try {
      ns.sigma_fixed = sigma_fixed(c, g);
      WeightTuple w = cell_of(c, g);
      ns.cell = w.coords() == two_gamma0(c.htype());
      RationalMatrix x = pi(g);
      ns.non_nilpotent = !x.power(c.m()).is_zero();
    } catch (const Error&) {
    }
    ns.pass = ns.sigma_fixed && ns.cell && ns.non_nilpotent;
    rep.pass = rep.pass && ns.pass;
  } else {
    rep.non_small.pass = true;
  }
  return rep;
}

std::vector<DualityRow> duality_dims(int n) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  std::vector<DualityRow> out;
  PairCase oo{PairKind::OrthOddOnA, n}, sp{PairKind::LieSp, n};
  for (int j = 0; j <= n; ++j) {
    Partition a(*make_partition({{2, j}, {1, 2 * n + 1 - 2 * j}}));
    Partition b(*make_partition({{2, j}, {1, 2 * n - 2 * j}}));
    long ds = orbit_dim_symmetric(oo, a), dc = orbit_dim_classical(sp, b);
    long cf = static_cast<long>(j) * (2 * n + 1 - j);
    out.push_back({"orthOddA/lieSp", n, j, ds, dc, cf, ds == cf && dc == cf});
  }
  PairCase sy{PairKind::SympOnA, n}, so{PairKind::LieSOOdd, n};
  for (int j = 0; 2 * j <= n; ++j) {
    Partition a(*make_partition({{2, 2 * j}, {1, 2 * n - 4 * j}}));
    Partition b(*make_partition({{2, 2 * j}, {1, 2 * n + 1 - 4 * j}}));
    long ds = orbit_dim_symmetric(sy, a), dc = orbit_dim_classical(so, b);
    long cf = 4L * j * (n - j);
    out.push_back({"sympA/lieSOOdd", n, j, ds, dc, cf, ds == cf && dc == cf});
  }
  return out;
}

}  // namespace nilgr
