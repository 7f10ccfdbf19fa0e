#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nilgr/cli.hpp"
#include "nilgr/correspondence.hpp"
#include "nilgr/errors.hpp"
#include "nilgr/json_io.hpp"

namespace py = pybind11;
using namespace nilgr;

namespace {

std::vector<long> cell_of_json(const std::string& kase, int rank, const std::string& g) {
  return cell_of(TwistedCase::parse(kase, rank), laurent_from_json(json::parse(g))).coords();
}

std::string pi_json(const std::string& g) { return matrix_to_json(pi(laurent_from_json(json::parse(g)))).dump(); }

std::string iota_json(const std::string& g) { return laurent_to_json(iota(laurent_from_json(json::parse(g)))).dump(); }

bool sigma_fixed_json(const std::string& kase, int rank, const std::string& g) {
  return sigma_fixed(TwistedCase::parse(kase, rank), laurent_from_json(json::parse(g)));
}

std::string witness_json(const std::string& kase, int rank, const std::vector<long>& lambda,
                         const std::string& branch, const std::string& orbit) {
  TwistedCase c = TwistedCase::parse(kase, rank);
  OrbitDescriptor o{c.pair_case(), Partition::parse(orbit), Split::None};
  return laurent_to_json(witness(c, WeightTuple(c.htype(), lambda), parse_branch(branch), o)).dump();
}

std::vector<std::pair<std::string, long>> orbits(const std::string& kase, int n) {
  PairCase c = PairCase::parse(kase, n);
  std::vector<std::pair<std::string, long>> out;
  for (const auto& o : classify_orbits(c)) out.emplace_back(o.str(), orbit_dim(c, o.partition));
  return out;
}

std::vector<std::vector<long>> small_weights(const std::string& htype, int rank) {
  HType h = htype == "B" ? HType::B(rank) : htype == "C" ? HType::C(rank) : throw InvalidInput("htype must be B or C");
  std::vector<std::vector<long>> out;
  for (const auto& w : enumerate_small(h)) out.push_back(w.coords());
  return out;
}

std::string verify_table_json(const std::string& kase, int rank, std::uint64_t seed, int conjugates) {
  return report_to_json(verify_table(TwistedCase::parse(kase, rank), seed, conjugates)).dump();
}

std::pair<std::string, long> fiber_profile(const std::string& kase, int rank) {
  auto p = fiber_zero_profile(TwistedCase::parse(kase, rank));
  return {p.orbit.str(), p.dim};
}

std::string duality_json(int n) { return duality_to_json(duality_dims(n)).dump(); }

std::tuple<int, std::string, std::string> cli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_nilgr, m) {
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::tuple value_bases = py::make_tuple(base, py::handle(PyExc_ValueError));
  py::register_exception<InvalidInput>(m, "InvalidInput", value_bases.ptr());
  py::register_exception<NotNilpotent>(m, "NotNilpotent", base.ptr());
  py::register_exception<MembershipError>(m, "MembershipError", value_bases.ptr());

  m.def("orbits", &orbits, py::arg("case"), py::arg("n"));
  m.def("small_weights", &small_weights, py::arg("htype"), py::arg("rank"));
  m.def("cell_of_json", &cell_of_json, py::arg("case"), py::arg("rank"), py::arg("g"));
  m.def("sigma_fixed_json", &sigma_fixed_json, py::arg("case"), py::arg("rank"), py::arg("g"));
  m.def("pi_json", &pi_json, py::arg("g"));
  m.def("iota_json", &iota_json, py::arg("g"));
  m.def("witness_json", &witness_json, py::arg("case"), py::arg("rank"), py::arg("lambda_"), py::arg("branch"),
        py::arg("orbit"));
  m.def("verify_table_json", &verify_table_json, py::arg("case"), py::arg("rank"), py::arg("seed") = 0,
        py::arg("conjugates") = 20);
  m.def("fiber_profile", &fiber_profile, py::arg("case"), py::arg("rank"));
  m.def("duality_json", &duality_json, py::arg("n"));
  m.def("cli", &cli, py::arg("args"), py::arg("input") = "");
}
