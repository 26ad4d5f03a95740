// mfree: run multiplicity-freeness scenarios and inspect modules.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mfree/mfree.hpp"

namespace {

struct Common {
  std::uint64_t seed = 42;
  std::size_t workers = 1;
  std::size_t lattice_cap = 4096;
  std::size_t max_induced_dim = 256;
  std::string report;
  std::string cache_dir;
  bool timing = false;
};

struct ModuleArgs {
  std::string group = "sym(3)";
  std::string sub = "whole";
  std::string character = "trivial";
  std::string field = "gf(2,1)";
  std::string module = "induced";
};

void add_module_args(CLI::App* app, ModuleArgs& a, bool with_module) {
  app->add_option("--group", a.group, "group spec, e.g. sym(4) or gl(2,3,1)")->capture_default_str();
  app->add_option("--field", a.field, "representation field gf(p,k)")->capture_default_str();
  app->add_option("--sub", a.sub, "subgroup spec")->capture_default_str();
  app->add_option("--char", a.character, "character of the subgroup")->capture_default_str();
  if (with_module) app->add_option("--module", a.module, "induced | regular | trivial | natural")->capture_default_str();
}

mfree::EngineOptions engine_options(const Common& c) {
  mfree::EngineOptions o;
  o.seed = c.seed;
  o.workers = c.workers;
  o.lattice_cap = c.lattice_cap;
  o.max_induced_dim = c.max_induced_dim;
  o.timing = c.timing;
  if (!c.cache_dir.empty()) o.cache_dir = c.cache_dir;
  return o;
}

int run_scenarios(const Common& c, const std::string& label, const std::vector<mfree::Scenario>& scenarios) {
  mfree::Engine engine(engine_options(c));
  const auto reports = engine.run_all(scenarios);
  for (const auto& r : reports) std::cout << mfree::summary_line(r) << "\n";
  const auto s = mfree::summarize(reports);
  std::cout << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.inconclusive << " inconclusive";
  if (s.violations) std::cout << ", " << s.violations << " THEOREM-VIOLATION";
  std::cout << "\n";
  if (!c.report.empty()) {
    std::ofstream os(c.report, std::ios::trunc);
    if (!os) {
      std::cerr << "error: cannot write report " << c.report << "\n";
      return 2;
    }
    os << mfree::machine_report(label, reports, c.seed, c.timing).dump(2) << "\n";
  }
  return s.exit_code();
}

mfree::Representation build(const ModuleArgs& a, const Common& c) {
  const auto f = mfree::parse_field(a.field);
  const auto g = mfree::parse_group(a.group);
  if (a.module == "regular") return mfree::regular_rep(g, f);
  if (a.module == "trivial") return mfree::trivial_rep(g, f);
  if (a.module == "natural") return mfree::natural_rep(g);
  if (a.module != "induced") mfree::fail(mfree::ErrorKind::ParseError, "unknown module '" + a.module + "'");
  const auto h = mfree::parse_subgroup(g, a.sub);
  return mfree::induce(mfree::parse_character(h, f, a.character), h, c.max_induced_dim);
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicity-freeness verification over finite splitting fields"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--seed", c.seed, "global RNG seed")->capture_default_str();
  app.add_option("--workers", c.workers, "parallel scenarios")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--lattice-cap", c.lattice_cap, "submodule lattice node cap")->capture_default_str();
  app.add_option("--max-induced-dim", c.max_induced_dim, "induced module dimension cap")->capture_default_str();
  app.add_option("--report", c.report, "write the machine report (JSON) here");
  app.add_option("--cache-dir", c.cache_dir, "directory for cached inventories");
  app.add_flag("--timing", c.timing, "include wall times in the machine report");

  std::string scenario_file, suite_name;
  auto* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("file", scenario_file, "scenario file")->required();
  auto* suite = app.add_subcommand("suite", "run a built-in suite");
  suite->add_option("name", suite_name, "gelfand-pairs | gelfand-graev | structure-audit | non-examples | properties")->required();

  ModuleArgs ha, ca, la, ia;
  auto* hecke = app.add_subcommand("hecke", "Hecke algebra dimension and commutativity");
  add_module_args(hecke, ha, false);
  auto* chop = app.add_subcommand("chop", "composition factors of a module");
  add_module_args(chop, ca, true);
  auto* lattice = app.add_subcommand("lattice", "submodule lattice, radical and socle");
  add_module_args(lattice, la, true);
  auto* inventory = app.add_subcommand("inventory", "irreducible inventory of a group");
  inventory->add_option("--group", ia.group, "group spec")->capture_default_str();
  inventory->add_option("--field", ia.field, "field spec")->capture_default_str();

  for (auto* sub : {run, suite, hecke, chop, lattice, inventory}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*run) return run_scenarios(c, scenario_file, mfree::load_scenario_file(scenario_file));
    if (*suite) return run_scenarios(c, suite_name, mfree::builtin_suite(suite_name));

    mfree::MeataxeOptions mo;
    mo.seed = c.seed;
    if (*hecke) {
      const auto f = mfree::parse_field(ha.field);
      const auto g = mfree::parse_group(ha.group);
      const auto h = mfree::parse_subgroup(g, ha.sub);
      const auto hk = mfree::hecke_algebra_convolution(h, mfree::parse_character(h, f, ha.character));
      std::cout << "dim=" << hk.dim() << " commutative=" << (mfree::is_commutative(hk) ? "true" : "false") << "\n";
      return 0;
    }
    if (*chop) {
      const auto rho = build(ca, c);
      const auto rep = mfree::chop(mfree::module_of(rho), mo);
      std::cout << "dim=" << rep.total_dim << " factors=" << rep.factors.size() << "\n";
      for (const auto& fac : rep.factors)
        std::cout << "  dim=" << fac.module.dim << " multiplicity=" << fac.composition_multiplicity << " end_dim=" << fac.end_dim
                  << " absolutely_irreducible=" << (fac.absolutely_irreducible ? "true" : "false") << "\n";
      return 0;
    }
    if (*lattice) {
      const auto rho = build(la, c);
      const auto m = mfree::module_of(rho);
      mfree::LatticeOptions lo;
      lo.node_cap = c.lattice_cap;
      const auto lat = mfree::submodule_lattice(m, lo);
      std::cout << "dim=" << m.dim << " nodes=" << lat.nodes.size() << " complete=" << (lat.complete ? "true" : "false") << "\n";
      if (!lat.complete) {
        std::cout << "reason: " << lat.reason << "\n";
        return 2;
      }
      std::vector<std::size_t> dims;
      for (const auto& n : lat.nodes) dims.push_back(n.dim());
      std::sort(dims.begin(), dims.end());
      std::cout << "node_dims=" << join(dims) << "\n";
      const auto inv = mfree::irreducible_inventory(rho.group(), rho.field(), mo);
      const auto sr = mfree::structure_report(m, lat, mfree::simple_modules(inv));
      std::cout << "radical_dim=" << sr.radical.dim() << " socle_dim=" << sr.socle.dim() << " cosocle_dim=" << sr.cosocle_dim
                << " socle_mult=" << join(sr.socle_mult_vector) << "\n";
      std::cout << "self_projective=" << (*sr.self_projective ? "true" : "false")
                << " self_injective=" << (*sr.self_injective ? "true" : "false") << "\n";
      return 0;
    }
    if (*inventory) {
      const auto f = mfree::parse_field(ia.field);
      const auto g = mfree::parse_group(ia.group);
      const auto inv = mfree::irreducible_inventory(g, f, mo);
      std::cout << "group=" << g->name() << " order=" << g->order() << " field=" << f->spec() << " irreducibles=" << inv.size()
                << " certified=" << (inv.certified ? "true" : "false") << "\n";
      for (std::size_t i = 0; i < inv.size(); ++i)
        std::cout << "  [" << i << "] dim=" << inv.irreducibles[i].dim() << " end_dim=" << inv.end_dims[i]
                  << " regular_multiplicity=" << inv.regular_multiplicity[i] << "\n";
      return 0;
    }
  } catch (const mfree::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
