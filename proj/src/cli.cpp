#include "nilgr/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nilgr/correspondence.hpp"
#include "nilgr/errors.hpp"
#include "nilgr/json_io.hpp"

namespace nilgr {

namespace {

json read_json(const std::string& path, std::istream& in) {
  try {
    if (path.empty() || path == "-") return json::parse(in);
    std::ifstream f(path);
    if (!f) throw InvalidInput("cannot open '" + path + "'");
    return json::parse(f);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

int rank_from_size(const std::string& name, int m) {
  if (name == "A2l" && m % 2 == 1) return (m - 1) / 2;
  if (name == "A2lMinus1" && m % 2 == 0) return m / 2;
  if (name == "D" && m % 2 == 0 && m >= 4) return (m - 2) / 2;
  throw InvalidInput("matrix size " + std::to_string(m) + " does not fit case " + name);
}

TwistedCase case_for(const std::string& name, int rank, int m) {
  int l = rank_from_size(name, m);
  if (rank > 0 && rank != l) throw InvalidInput("--rank does not match the matrix size");
  return TwistedCase::parse(name, l);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent orbits and twisted affine Schubert cells"};
  app.require_subcommand(1);

  std::string pair_name, twist_name, htype, in_path, out_path, x_path, z_path;
  int n = 0, rank = 0, conjugates = 20;
  std::uint64_t seed = 0;
  bool as_json = false, profile = false;

  auto* orbits = app.add_subcommand("orbits", "List nilpotent orbits with dimensions and the closure diagram");
  orbits->add_option("--case", pair_name, "sympA|orthOddA|orthEvenA|lieSp|lieSOOdd|diagD")->required();
  orbits->add_option("--n", n, "Rank parameter n")->required();
  orbits->add_flag("--json", as_json);

  auto* hasse = app.add_subcommand("hasse", "Closure order Hasse diagram in DOT");
  hasse->add_option("--case", pair_name)->required();
  hasse->add_option("--n", n)->required();

  auto* small = app.add_subcommand("small-weights", "Small dominant weights");
  small->add_option("--htype", htype, "B or C")->required()->check(CLI::IsMember({"B", "C"}));
  small->add_option("--rank", rank)->required();
  small->add_flag("--json", as_json);

  auto* cell = app.add_subcommand("cell-of", "Schubert cell of a sigma-fixed Laurent matrix");
  auto* pi_cmd = app.add_subcommand("pi", "t^-1 coefficient of a normalized representative");
  auto* iota_cmd = app.add_subcommand("iota", "g(t) -> g(-t)^-1");
  for (auto* sc : {cell, pi_cmd, iota_cmd}) {
    sc->add_option("--in", in_path, "JSON file (default stdin)");
    sc->add_flag("--json", as_json);
  }
  cell->add_option("--case", twist_name, "A2l|A2lMinus1|D")->required();
  cell->add_option("--rank", rank);

  auto* verify = app.add_subcommand("verify-table", "Verify the cell to orbit correspondence");
  verify->add_option("--case", twist_name)->required();
  verify->add_option("--rank", rank)->required();
  verify->add_option("--seed", seed);
  verify->add_option("--conjugates", conjugates);

  auto* fiber = app.add_subcommand("fiber", "Fiber membership of (x, z), or the zero-fiber profile");
  fiber->add_option("--case", twist_name)->required();
  fiber->add_option("--rank", rank)->required();
  fiber->add_option("--x", x_path);
  fiber->add_option("--z", z_path);
  fiber->add_flag("--profile", profile);

  auto* duality = app.add_subcommand("duality", "Dimension identities between the paired orbits");
  duality->add_option("--n", n)->required();
  duality->add_flag("--json", as_json);

  for (auto* sc : app.get_subcommands([](CLI::App*) { return true; }))
    sc->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<std::string> argv_store{"nilgr"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  std::ostringstream buf;
  int code = 0;
  try {
    if (orbits->parsed()) {
      PairCase pc = PairCase::parse(pair_name, n);
      auto h = closure_hasse(pc);
      if (as_json) {
        json arr = json::array();
        for (const auto& o : h.nodes) {
          json e = orbit_to_json(o);
          e["dim"] = orbit_dim(pc, o.partition);
          arr.push_back(e);
        }
        buf << json{{"case", pc.label()}, {"m", pc.m()}, {"orbits", arr}, {"dot", h.dot()}}.dump(2) << "\n";
      } else {
        buf << "# " << pc.label() << " m=" << pc.m() << " orbits=" << h.nodes.size() << "\n";
        for (const auto& o : h.nodes) buf << o.str() << "\t" << orbit_dim(pc, o.partition) << "\n";
        buf << h.dot();
      }
    } else if (hasse->parsed()) {
      buf << closure_hasse(PairCase::parse(pair_name, n)).dot();
    } else if (small->parsed()) {
      HType h = htype == "B" ? HType::B(rank) : HType::C(rank);
      auto ws = enumerate_small(h);
      if (as_json) {
        json arr = json::array();
        for (const auto& w : ws) {
          json e = weight_to_json(w);
          e["schubert_dim"] = schubert_dim(w);
          arr.push_back(e);
        }
        buf << arr.dump(2) << "\n";
      } else {
        for (const auto& w : ws) buf << w.str() << "\t" << schubert_dim(w) << "\n";
      }
    } else if (cell->parsed()) {
      LaurentMatrix g = laurent_from_json(read_json(in_path, in));
      TwistedCase c = case_for(twist_name, rank, g.m());
      if (!sigma_fixed(c, g)) throw InvalidInput("input is not sigma-fixed for " + c.label());
      WeightTuple w = cell_of(c, g);
      if (as_json) buf << weight_to_json(w).dump() << "\n";
      else buf << w.str() << "\n";
    } else if (pi_cmd->parsed()) {
      LaurentMatrix g = laurent_from_json(read_json(in_path, in));
      buf << matrix_to_json(pi(g)).dump() << "\n";
    } else if (iota_cmd->parsed()) {
      LaurentMatrix g = laurent_from_json(read_json(in_path, in));
      buf << laurent_to_json(iota(g)).dump() << "\n";
    } else if (verify->parsed()) {
      TwistedCase c = TwistedCase::parse(twist_name, rank);
      if (conjugates < 0) throw InvalidInput("--conjugates must be >= 0");
      TableReport r = verify_table(c, seed, conjugates);
      buf << report_to_json(r).dump(2) << "\n";
      code = r.pass ? 0 : 1;
    } else if (fiber->parsed()) {
      TwistedCase c = TwistedCase::parse(twist_name, rank);
      if (profile) {
        FiberProfile fp = fiber_zero_profile(c);
        json j{{"case", c.label()}, {"orbit", orbit_to_json(fp.orbit)}, {"dim", fp.dim}};
        if (c.kind() == TwistKind::A2lMinus1) {
          j["stated_dim"] = 2 * c.ell() + 1;
          j["matches_stated"] = fp.dim == 2 * c.ell() + 1;
        }
        buf << j.dump(2) << "\n";
      } else {
        if (x_path.empty() || z_path.empty()) throw InvalidInput("fiber needs --x and --z (or --profile)");
        RationalMatrix x = matrix_from_json(read_json(x_path, in));
        RationalMatrix z = matrix_from_json(read_json(z_path, in));
        buf << json{{"case", c.label()}, {"member", fiber_contains(c, x, z)}}.dump() << "\n";
      }
    } else if (duality->parsed()) {
      auto rows = duality_dims(n);
      bool ok = true;
      for (const auto& d : rows) ok = ok && d.ok;
      if (as_json) {
        buf << duality_to_json(rows).dump(2) << "\n";
      } else {
        buf << "pair\tn\tj\tdim_symmetric\tdim_classical\tclosed_form\tok\n";
        for (const auto& d : rows)
          buf << d.pair << "\t" << d.n << "\t" << d.j << "\t" << d.dim_symmetric << "\t" << d.dim_classical
              << "\t" << d.closed_form << "\t" << (d.ok ? "yes" : "no") << "\n";
      }
      code = ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (out_path.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    f << buf.str();
  }
  return code;
}

}  // namespace nilgr
