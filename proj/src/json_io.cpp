#include "nilgr/json_io.hpp"

#include "nilgr/errors.hpp"

namespace nilgr {

json rational_to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw InvalidInput("malformed rational '" + j.get<std::string>() + "'");
    if (q.get_den() == 0) throw InvalidInput("zero denominator");
    q.canonicalize();
    return q;
  }
  throw InvalidInput("rationals must be integers or \"p/q\" strings");
}

json matrix_to_json(const RationalMatrix& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(rational_to_json(a(i, j)));
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("matrix must be a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw InvalidInput("matrix rows must be arrays");
    rows.emplace_back();
    for (const auto& v : r) rows.back().push_back(rational_from_json(v));
  }
  return RationalMatrix::from_rows(rows);
}

json laurent_to_json(const LaurentMatrix& g) {
  json coeffs = json::object();
  for (const auto& [e, a] : g.coeffs()) coeffs[std::to_string(e)] = matrix_to_json(a);
  return {{"m", g.m()}, {"coeffs", coeffs}};
}

LaurentMatrix laurent_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("coeffs"))
    throw InvalidInput("Laurent matrix JSON needs \"m\" and \"coeffs\"");
  int m = j.at("m").get<int>();
  if (m < 1) throw InvalidInput("m must be positive");
  LaurentMatrix g(m);
  for (const auto& [key, val] : j.at("coeffs").items()) {
    std::size_t pos = 0;
    int e = 0;
    try {
      e = std::stoi(key, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("bad exponent key '" + key + "'");
    }
    if (pos != key.size()) throw InvalidInput("bad exponent key '" + key + "'");
    RationalMatrix a = matrix_from_json(val);
    if (a.rows() != m || a.cols() != m) throw DimensionMismatch("coefficient size does not match m");
    g.add(e, a);
  }
  return g;
}

json weight_to_json(const WeightTuple& w) {
  return {{"htype", w.htype().kind == HKind::B ? "B" : "C"}, {"coords", w.coords()}};
}

WeightTuple weight_from_json(const json& j) {
  std::string t = j.at("htype").get<std::string>();
  auto coords = j.at("coords").get<std::vector<long>>();
  int l = static_cast<int>(coords.size());
  if (t == "B") return WeightTuple(HType::B(l), coords);
  if (t == "C") return WeightTuple(HType::C(l), coords);
  throw InvalidInput("htype must be B or C");
}

Partition partition_from_json(const json& j) {
  if (j.is_string()) return Partition::parse(j.get<std::string>());
  if (j.is_array()) return Partition(j.get<std::vector<int>>());
  throw InvalidInput("partition must be a string or an array");
}

json orbit_to_json(const OrbitDescriptor& o) {
  json split = o.split == Split::None ? json(nullptr) : json(to_string(o.split));
  return {{"case", {{"name", o.pcase.name()}, {"n", o.pcase.n}}},
          {"partition", o.partition.parts()},
          {"notation", o.partition.str()},
          {"split", split}};
}

json report_to_json(const TableReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"lambda", row.lambda.coords()},
                    {"branch", row.branch == Branch::None ? json(nullptr) : json(to_string(row.branch))},
                    {"orbit", row.orbit ? json(row.orbit->partition.str()) : json(nullptr)},
                    {"checks",
                     {{"sigma_fixed", row.checks.sigma_fixed},
                      {"cell", row.checks.cell},
                      {"jordan", row.checks.jordan},
                      {"branch", row.checks.branch},
                      {"conjugation", row.checks.conjugation}}},
                    {"detail", row.detail},
                    {"pass", row.pass}});
  }
  json ns = json::object();
  ns["applicable"] = r.non_small.applicable;
  if (r.non_small.applicable) {
    ns["sigma_fixed"] = r.non_small.sigma_fixed;
    ns["cell"] = r.non_small.cell;
    ns["non_nilpotent"] = r.non_small.non_nilpotent;
  }
  ns["pass"] = r.non_small.pass;
  return {{"case", r.tcase.name()},
          {"rank", r.tcase.ell()},
          {"seed", r.seed},
          {"conjugates", r.conjugates},
          {"rows", rows},
          {"non_small", ns},
          {"pass", r.pass}};
}

json duality_to_json(const std::vector<DualityRow>& rows) {
  json out = json::array();
  for (const auto& d : rows)
    out.push_back({{"pair", d.pair},
                   {"n", d.n},
                   {"j", d.j},
                   {"dim_symmetric", d.dim_symmetric},
                   {"dim_classical", d.dim_classical},
                   {"closed_form", d.closed_form},
                   {"ok", d.ok}});
  return out;
}

}  // namespace nilgr
