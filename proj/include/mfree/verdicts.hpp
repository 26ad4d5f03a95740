#pragma once

// Scenario engine: theorem pipelines, built-in suites, scenario files and
// machine reports.

#include <algorithm>
#include <cctype>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "mfree/cache.hpp"
#include "mfree/ext.hpp"
#include "mfree/homalg.hpp"
#include "mfree/parse.hpp"
#include "mfree/structure.hpp"
#include "mfree/zoo.hpp"

namespace mfree {

using json = nlohmann::json;

enum class Outcome { Pass, Fail, Inconclusive };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

struct Caps {
  std::size_t lattice = 4096;
  std::size_t induced_dim = 256;
};

struct Scenario {
  std::string id;
  std::string pipeline;
  std::string field = "gf(2,1)";
  std::string group = "sym(3)";
  std::string subgroup = "whole";
  std::string character = "trivial";
  std::string module = "induced";     ///< induced | regular | trivial | natural | irreducible(i) | non_example_2
  std::string involution = "inversion";
  std::string nonsplit = "abort";     ///< abort | descent
  std::optional<Caps> caps;
  std::map<std::string, std::string> expect;  ///< quantity name -> JSON literal
  int line = 0;                                ///< source line in a scenario file
};

struct VerdictReport {
  std::string id;
  std::string pipeline;
  Outcome verdict = Outcome::Inconclusive;
  json quantities = json::object();
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
  double wall_ms = 0;
  bool theorem_violation = false;

  json to_json(bool with_time) const {
    json j;
    j["id"] = id;
    j["pipeline"] = pipeline;
    j["verdict"] = std::string(to_string(verdict));
    j["quantities"] = quantities;
    j["witnesses"] = witnesses;
    j["notes"] = notes;
    j["seed"] = seed;
    j["theorem_violation"] = theorem_violation;
    if (with_time) j["wall_ms"] = wall_ms;
    return j;
  }
};

struct EngineOptions {
  std::uint64_t seed = 42;
  std::size_t workers = 1;
  std::size_t lattice_cap = 4096;
  std::size_t max_induced_dim = 256;
  bool timing = false;
  std::optional<std::filesystem::path> cache_dir;
};

/// FNV-1a, for per-scenario seeds.
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t scenario_seed(std::uint64_t global, std::string_view id) { return global ^ fnv1a(id); }

// ---------------------------------------------------------------------------
// Scenario files: key = value lines, [caps] and [expect] tables, and
// [[scenario]] headers separating several scenarios in one file.

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

/// Strips a trailing comment that is not inside a string.
inline std::string strip_comment(const std::string& line) {
  bool in_str = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) in_str = !in_str;
    if (line[i] == '#' && !in_str) return line.substr(0, i);
  }
  return line;
}

}  // namespace detail

inline std::vector<Scenario> parse_scenarios(std::istream& in, const std::string& source) {
  std::vector<Scenario> out;
  Scenario cur;
  bool any_key = false;
  std::string section;
  std::string line;
  int lineno = 0;
  auto err = [&](const std::string& msg) { fail(ErrorKind::ParseError, source + ":" + std::to_string(lineno) + ": " + msg); };
  auto flush = [&]() {
    if (!any_key) return;
    if (cur.id.empty()) fail(ErrorKind::ParseError, source + ":" + std::to_string(cur.line) + ": scenario without id");
    if (cur.pipeline.empty()) fail(ErrorKind::ParseError, source + ":" + std::to_string(cur.line) + ": scenario without pipeline");
    out.push_back(cur);
    cur = Scenario{};
    any_key = false;
  };
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(detail::strip_comment(line));
    if (t.empty()) continue;
    if (t == "[[scenario]]") {
      flush();
      section.clear();
      cur.line = lineno;
      continue;
    }
    if (t.front() == '[') {
      if (t.back() != ']') err("unterminated table header");
      section = detail::trim(std::string_view(t).substr(1, t.size() - 2));
      if (section != "caps" && section != "expect") err("unknown table [" + section + "]");
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) err("expected key = value");
    const std::string key = detail::trim(std::string_view(t).substr(0, eq));
    const std::string raw = detail::trim(std::string_view(t).substr(eq + 1));
    if (key.empty() || raw.empty()) err("empty key or value");
    if (!any_key && cur.line == 0) cur.line = lineno;
    any_key = true;
    if (section == "expect") {
      if (!json::accept(raw)) err("expectation for '" + key + "' is not a literal");
      cur.expect[key] = json::parse(raw).dump();
      continue;
    }
    if (section == "caps") {
      std::size_t v = 0;
      try {
        std::size_t used = 0;
        v = std::stoull(raw, &used);
        if (raw.empty() || !std::isdigit(static_cast<unsigned char>(raw[0])) || used != raw.size()) throw std::invalid_argument(raw);
      } catch (const std::exception&) {
        err("cap '" + key + "' must be a non-negative integer");
      }
      if (!cur.caps) cur.caps = Caps{};
      if (key == "lattice") cur.caps->lattice = v;
      else if (key == "induced_dim") cur.caps->induced_dim = v;
      else err("unknown cap '" + key + "'");
      continue;
    }
    if (raw.size() < 2 || raw.front() != '"' || raw.back() != '"') err("value for '" + key + "' must be a quoted string");
    const std::string val = raw.substr(1, raw.size() - 2);
    if (key == "id") cur.id = val;
    else if (key == "pipeline") cur.pipeline = val;
    else if (key == "field") cur.field = val;
    else if (key == "group") cur.group = val;
    else if (key == "subgroup") cur.subgroup = val;
    else if (key == "character") cur.character = val;
    else if (key == "module") cur.module = val;
    else if (key == "involution") cur.involution = val;
    else if (key == "nonsplit") cur.nonsplit = val;
    else err("unknown key '" + key + "'");
  }
  flush();
  if (out.empty()) fail(ErrorKind::ParseError, source + ": no scenarios");
  return out;
}

inline std::vector<Scenario> load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::ParseError, path.string() + ": cannot open scenario file");
  return parse_scenarios(in, path.string());
}

// ---------------------------------------------------------------------------
// Engine

inline const std::set<std::string>& known_pipelines() {
  static const std::set<std::string> names{"gelfand_pair",   "mult_free_triple",  "hecke_comm",         "gelfand_trick",
                                           "thm_multfree",   "restriction_multfree", "structure_audit", "non_example",
                                           "steinberg_untwisted", "cuspidal_count", "triple_product", "algebra_properties",
                                           "structure_zoo"};
  return names;
}

class Engine {
 public:
  explicit Engine(EngineOptions opts = {}) : opts_(std::move(opts)) {}

  const EngineOptions& options() const noexcept { return opts_; }

  GroupPtr group(const std::string& spec) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = groups_.find(spec);
    if (it != groups_.end()) return it->second;
    auto g = parse_group(spec);
    groups_.emplace(spec, g);
    return g;
  }

  /// Inventory under the global seed, so its ordering never depends on
  /// which scenario asked first.
  std::shared_ptr<const Inventory> inventory(const std::string& gspec, const GroupPtr& g, const FieldPtr& f, bool require_split) {
    const std::string key = inventory_cache_key(gspec, f->spec()) + (require_split ? "" : "|nonsplit");
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = inventories_.find(key);
      if (it != inventories_.end()) return it->second;
    }
    std::optional<std::filesystem::path> file;
    if (opts_.cache_dir && require_split) file = *opts_.cache_dir / (std::to_string(fnv1a(key)) + ".inv");
    std::shared_ptr<const Inventory> inv;
    if (file) {
      if (auto loaded = load_inventory(*file, key, g, f)) inv = std::make_shared<const Inventory>(std::move(*loaded));
    }
    if (!inv) {
      MeataxeOptions mo;
      mo.seed = opts_.seed;
      inv = std::make_shared<const Inventory>(irreducible_inventory(g, f, mo, require_split));
      if (file) {
        std::filesystem::create_directories(*opts_.cache_dir);
        save_inventory(*file, key, *inv);
      }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return inventories_.emplace(key, inv).first->second;
  }

  VerdictReport run(const Scenario& s);

  std::vector<VerdictReport> run_all(const std::vector<Scenario>& scenarios) {
    std::vector<VerdictReport> out(scenarios.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (std::size_t i = next++; i < scenarios.size(); i = next++) out[i] = run(scenarios[i]);
    };
    const std::size_t nw = std::max<std::size_t>(1, std::min(opts_.workers, scenarios.size()));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < nw; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::stable_sort(out.begin(), out.end(), [](const VerdictReport& a, const VerdictReport& b) { return a.id < b.id; });
    return out;
  }

 private:
  EngineOptions opts_;
  std::mutex mu_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, std::shared_ptr<const Inventory>> inventories_;
};

namespace pipelines {

struct Ctx {
  Engine& engine;
  const Scenario& s;
  VerdictReport& r;
  Caps caps;
  MeataxeOptions meataxe;
  FieldPtr field;
  GroupPtr group;

  LatticeOptions lattice_opts() const {
    LatticeOptions lo;
    lo.node_cap = caps.lattice;
    return lo;
  }
  Subgroup subgroup() const { return parse_subgroup(group, s.subgroup); }
  std::shared_ptr<const Inventory> inventory(bool require_split = true) {
    return engine.inventory(s.group, group, field, require_split);
  }
  void fail_with(std::string witness) {
    r.verdict = Outcome::Fail;
    r.witnesses.push_back(std::move(witness));
  }
  void violation(std::string witness) {
    r.theorem_violation = true;
    fail_with("THEOREM-VIOLATION: " + witness);
  }
};

template <class T>
std::size_t max_of(const std::vector<T>& v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

inline std::vector<std::size_t> dims_of(const Inventory& inv) {
  std::vector<std::size_t> d;
  for (const auto& r : inv.irreducibles) d.push_back(r.dim());
  return d;
}

/// The module a scenario talks about.
inline Representation build_module(Ctx& c) {
  const std::string& m = c.s.module;
  if (m == "induced") {
    const auto h = c.subgroup();
    return induce(parse_character(h, c.field, c.s.character), h, c.caps.induced_dim);
  }
  if (m == "regular") return regular_rep(c.group, c.field);
  if (m == "trivial") return trivial_rep(c.group, c.field);
  if (m == "natural") {
    require(c.group->kind() == GroupKind::Matrix && c.group->matrix_field() == c.field, ErrorKind::InvalidArgument,
            "natural module needs a matrix group over the scenario field");
    return natural_rep(c.group);
  }
  if (m == "non_example_2") {
    auto ne = find_non_example_two(*c.inventory());
    require(ne.has_value(), ErrorKind::PreconditionFailed, "SKIPPED: no pi with two non-split extensions within caps");
    return ne->rho;
  }
  if (m.rfind("irreducible(", 0) == 0 && m.back() == ')') {
    const auto i = static_cast<std::size_t>(std::stoul(m.substr(12, m.size() - 13)));
    const auto inv = c.inventory();
    require(i < inv->size(), ErrorKind::InvalidArgument, "irreducible index out of range");
    return inv->irreducibles[i];
  }
  fail(ErrorKind::ParseError, "unknown module spec '" + m + "'");
}

/// Multiplicity-free triple core shared by gelfand_pair / mult_free_triple.
inline void triple(Ctx& c, bool force_trivial) {
  const auto h = c.subgroup();
  const auto eta = parse_character(h, c.field, force_trivial ? "trivial" : c.s.character);
  if (eta.dim() > 1) require(is_irreducible(module_of(eta), c.meataxe).irreducible, ErrorKind::PreconditionFailed, "eta is reducible");
  const auto ind = induce(eta, h, c.caps.induced_dim);
  HeckeOptions ho;
  const auto hk = hecke_algebra_convolution(h, eta, ho);
  const auto cert = hecke_vs_end_iso_check(hk, ind);
  const auto dc = double_cosets(h, h);
  auto& q = c.r.quantities;
  q["induced_dim"] = ind.dim();
  q["double_cosets"] = dc.representatives.size();
  q["hecke_dim"] = cert.hecke_dim;
  q["end_dim"] = cert.end_dim;
  q["commutative"] = cert.hecke_commutative;
  q["end_commutative"] = cert.end_commutative;
  q["iso_certificate"] = cert.ok();
  if (force_trivial) q["end_equals_double_cosets"] = cert.end_dim == dc.representatives.size();

  std::vector<std::size_t> mv;
  const bool descent = c.s.nonsplit == "descent";
  const auto inv = c.inventory(!descent);
  if (inv->certified) {
    mv = multiplicity_vector(ind, *inv);
    q["multiplicity_mode"] = "split";
  } else {
    mv = closure_multiplicity_vector(ind, *inv);
    q["multiplicity_mode"] = "galois_descent";
    q["inventory_end_dims"] = inv->end_dims;
    c.r.notes.push_back(c.field->spec() + " does not split the group; multiplicities are over the algebraic closure by descent");
  }
  q["inventory_dims"] = dims_of(*inv);
  q["multiplicity_vector"] = mv;
  const bool mf = max_of(mv) <= 1;
  q["multiplicity_free"] = mf;

  c.r.verdict = Outcome::Pass;
  if (!cert.ok()) c.fail_with("Hecke convolution algebra and End_G(ind) disagree");
  if (cert.hecke_commutative && !mf) c.violation("commutative Hecke algebra with a multiplicity >= 2");
  if (!cert.hecke_commutative && mf) c.r.notes.push_back("converse fails: noncommutative Hecke algebra, multiplicity-free anyway");
  if (!cert.hecke_commutative && !mf) c.r.notes.push_back("antecedent false");
}

inline void hecke_comm(Ctx& c) {
  const auto h = c.subgroup();
  const auto eta = parse_character(h, c.field, c.s.character);
  const auto hk = hecke_algebra_convolution(h, eta);
  const auto cert = hecke_vs_end_iso_check(hk, induce(eta, h, c.caps.induced_dim));
  auto& q = c.r.quantities;
  q["hecke_dim"] = cert.hecke_dim;
  q["end_dim"] = cert.end_dim;
  q["commutative"] = cert.hecke_commutative;
  q["end_commutative"] = cert.end_commutative;
  q["iso_certificate"] = cert.ok();
  c.r.verdict = Outcome::Pass;
  if (!cert.ok()) c.fail_with("Hecke convolution algebra and End_G(ind) disagree");
}

inline void gelfand_trick(Ctx& c) {
  const auto h = c.subgroup();
  const auto eta = parse_character(h, c.field, c.s.character);
  AntiInvolution iota;
  if (c.s.involution == "inversion") iota = inversion_map(c.group);
  else if (c.s.involution == "transpose") iota = transpose_map(c.group);
  else fail(ErrorKind::ParseError, "unknown involution '" + c.s.involution + "'");
  const auto hk = hecke_algebra_convolution(h, eta);
  const auto dc = double_cosets(h, h);
  const bool preserves = check_anti_involution_preserves_double_cosets(iota, h, h, dc);
  const auto res = check_gelfand_trick(hk, iota);
  auto& q = c.r.quantities;
  q["hecke_dim"] = hk.dim();
  q["preserves_double_cosets"] = preserves;
  q["fixes_basis"] = res.fixes_basis;
  q["commutative"] = res.commutative;
  c.r.verdict = Outcome::Pass;
  if (!res.consistent()) c.violation("anti-involution fixes the Hecke basis but the algebra is noncommutative");
  if (!res.fixes_basis) c.r.notes.push_back("trick not applicable: some basis function is not iota-invariant");
}

inline void thm_multfree(Ctx& c) {
  const auto rho = build_module(c);
  const auto m = module_of(rho);
  const auto end = end_algebra(rho);
  const bool comm = is_commutative(end);
  const auto lat = submodule_lattice(m, c.lattice_opts());
  const auto inj = is_relatively_injective(m, m, lat);
  const auto inv = c.inventory();
  const auto mv = multiplicity_vector(rho, *inv);
  const bool mf = max_of(mv) <= 1;
  auto& q = c.r.quantities;
  q["dim"] = rho.dim();
  q["end_dim"] = end.dim();
  q["end_commutative"] = comm;
  q["lattice_nodes"] = lat.nodes.size();
  q["lattice_complete"] = lat.complete;
  q["self_injective"] = inj.verdict.str();
  q["exactness_agrees"] = inj.exactness_agrees;
  q["multiplicity_vector"] = mv;
  q["multiplicity_free"] = mf;
  c.r.verdict = Outcome::Pass;
  if (!inj.exactness_agrees) c.r.notes.push_back("finding: submodule-extension and Hom-exactness tests disagree");
  if (comm && inj.verdict.is_true() && !mf) {
    c.violation("commutative End, self-injective, multiplicity >= 2");
  } else if (comm && !mf && inj.verdict.truth == Truth::Inconclusive) {
    c.r.verdict = Outcome::Inconclusive;
    c.r.witnesses.push_back(inj.verdict.str());
  }
  if (mf && !(comm && inj.verdict.is_true())) c.r.notes.push_back("converse fails: a hypothesis is false, multiplicity-free anyway");
  if (!mf && comm && inj.verdict.is_false()) c.r.notes.push_back("self-injectivity is necessary: commutative End with multiplicity >= 2");
}

inline void restriction_multfree(Ctx& c) {
  const auto rho = build_module(c);
  const auto h = c.subgroup();
  const auto res = restrict(rho, h);
  const auto n = induce(res, h, c.caps.induced_dim);
  const auto nlat = submodule_lattice(module_of(n), c.lattice_opts());
  const auto inj = is_relatively_injective(module_of(rho), module_of(n), nlat);
  const bool comm = is_commutative(end_algebra(res));
  MeataxeOptions mo = c.meataxe;
  mo.seed = c.engine.options().seed;
  const auto hinv = irreducible_inventory(h.group, c.field, mo);
  const auto mv = multiplicity_vector(res, hinv);
  const bool mf = max_of(mv) <= 1;
  auto& q = c.r.quantities;
  q["dim"] = rho.dim();
  q["ind_res_dim"] = n.dim();
  q["lattice_nodes"] = nlat.nodes.size();
  q["lattice_complete"] = nlat.complete;
  q["rho_ind_res_injective"] = inj.verdict.str();
  q["res_end_commutative"] = comm;
  q["res_multiplicity_vector"] = mv;
  q["res_multiplicity_free"] = mf;
  c.r.verdict = Outcome::Pass;
  if (inj.verdict.is_true() && comm && !mf) c.violation("both hypotheses hold but res(rho) is not multiplicity-free");
  else if (comm && !mf && inj.verdict.truth == Truth::Inconclusive) {
    c.r.verdict = Outcome::Inconclusive;
    c.r.witnesses.push_back(inj.verdict.str());
  }
}

inline void structure_audit(Ctx& c) {
  const auto rho = build_module(c);
  const auto m = module_of(rho);
  const auto lat = submodule_lattice(m, c.lattice_opts());
  auto& q = c.r.quantities;
  q["dim"] = rho.dim();
  q["lattice_nodes"] = lat.nodes.size();
  q["lattice_complete"] = lat.complete;
  if (!lat.complete) {
    c.r.verdict = Outcome::Inconclusive;
    c.r.witnesses.push_back(lat.reason);
    return;
  }
  const auto simples = simple_modules(*c.inventory());
  const auto sr = structure_report(m, lat, simples);
  q["radical_dim"] = sr.radical.dim();
  q["socle_dim"] = sr.socle.dim();
  q["cosocle_dim"] = sr.cosocle_dim;
  q["socle_mult_vector"] = sr.socle_mult_vector;
  q["self_projective"] = *sr.self_projective;
  q["self_injective"] = *sr.self_injective;
  q["radical_superfluous"] = *sr.radical_superfluous;
  q["socle_essential"] = *sr.socle_essential;
  c.r.verdict = Outcome::Pass;

  Subspace meet = Subspace::full(m.field, m.dim), join = Subspace::zero(m.field, m.dim);
  for (auto i : lat.maximal_nodes()) meet = meet.intersect(lat.nodes[i]);
  for (auto i : lat.minimal_nodes()) join = join.sum(lat.nodes[i]);
  q["radical_matches_lattice"] = meet == sr.radical;
  q["socle_matches_lattice"] = join == sr.socle;
  if (!(meet == sr.radical)) c.fail_with("radical differs from the intersection of maximal nodes");
  if (!(join == sr.socle)) c.fail_with("socle differs from the sum of minimal nodes");

  const auto dm = module_of(dual(rho));
  const auto dlat = submodule_lattice(dm, c.lattice_opts());
  if (dlat.complete) {
    const bool dp = is_relatively_projective(dm, dm, dlat).verdict.is_true();
    q["dual_self_projective"] = dp;
    if (dp != *sr.self_injective) c.fail_with("duality transfer: self-injective(rho) != self-projective(dual rho)");
  }

  for (Flavor fl : {Flavor::Projective, Flavor::Injective}) {
    const std::string tag(to_string(fl));
    try {
      const auto th = verify_rad_end_theorem(m, lat, simples, fl, c.meataxe);
      q["rad_end_theorem_" + tag] = {{"end_dim", th.end_dim}, {"rad_end_dim", th.rad_end_dim}, {"top_end_dim", th.top_end_dim},
                                      {"holds", th.holds}};
      if (!th.holds) c.violation("rad(End) dimension identity fails (" + tag + ")");
      const auto lm = verify_lemma_rad_end_characterization(m, lat, simples, fl, c.meataxe, c.r.seed);
      q["rad_end_lemma_" + tag] = {{"checked", lm.checked}, {"counterexamples", lm.counterexamples},
                                   {"mode", lm.exhaustive ? "EXHAUSTIVE" : "SAMPLED"}};
      if (!lm.holds()) c.violation("rad(End) characterization fails (" + tag + ")");
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PreconditionFailed) throw;
      q["rad_end_theorem_" + tag] = "PreconditionFailed";
    }
  }
}

inline void non_example(Ctx& c) {
  auto& q = c.r.quantities;
  if (c.s.module == "non_example_2") {
    const auto inv = c.inventory();
    auto ne = find_non_example_two(*inv);
    if (!ne) {
      c.r.verdict = Outcome::Inconclusive;
      c.r.witnesses.push_back("SKIPPED: no pi with two non-split extensions within caps");
      return;
    }
    const auto& pi = inv->irreducibles[ne->pi_index];
    const auto end = end_algebra(ne->rho);
    const bool comm = is_commutative(end);
    const std::size_t mult = hom_space(pi, ne->rho).dim();
    const auto lat = submodule_lattice(module_of(ne->rho), c.lattice_opts());
    const auto inj = is_relatively_injective(module_of(ne->rho), module_of(ne->rho), lat);
    q["pi_dim"] = pi.dim();
    q["tau_dims"] = {inv->irreducibles[ne->tau1_index].dim(), inv->irreducibles[ne->tau2_index].dim()};
    q["rho_dim"] = ne->rho.dim();
    q["end_dim"] = end.dim();
    q["end_commutative"] = comm;
    q["pi_multiplicity"] = mult;
    q["sigma_hom_dim"] = hom_space(ne->sigma1, ne->sigma2).dim();
    q["self_injective"] = inj.verdict.str();
    c.r.verdict = Outcome::Pass;
    if (comm && mult >= 2 && inj.verdict.is_true()) c.violation("self-injective rho with commutative End and multiplicity >= 2");
    else if (!(comm && mult >= 2)) c.fail_with("search result is not a non-example: End noncommutative or multiplicity <= 1");
    else if (!inj.verdict.is_false()) {
      c.r.verdict = Outcome::Inconclusive;
      c.r.witnesses.push_back(inj.verdict.str());
    } else {
      c.r.notes.push_back("self-injectivity is necessary: commutative End with multiplicity >= 2");
    }
    return;
  }
  const auto rho = build_module(c);
  const auto end = end_algebra(rho);
  const bool comm = is_commutative(end);
  const auto inv = c.inventory();
  const auto sr = radical_and_socle(module_of(rho), simple_modules(*inv));
  const auto mv = multiplicity_vector(rho, *inv);
  const bool mf = max_of(mv) <= 1;
  q["dim"] = rho.dim();
  q["end_dim"] = end.dim();
  q["end_commutative"] = comm;
  q["inventory_size"] = inv->size();
  q["inventory_dims"] = dims_of(*inv);
  q["socle_dim"] = sr.socle.dim();
  q["multiplicity_vector"] = mv;
  q["multiplicity_free"] = mf;
  c.r.verdict = Outcome::Pass;
  if (comm) c.fail_with("End is commutative: not a non-example");
  else if (!mf) c.fail_with("multiplicity >= 2: not a non-example");
  else c.r.notes.push_back("converse fails");
}

inline void steinberg_untwisted(Ctx& c) {
  const auto u = unitriangular_subgroup(c.group);
  const auto inv = c.inventory();
  const auto triv = trivial_rep(u.group, c.field);
  std::vector<std::size_t> fixed;
  for (const auto& pi : inv->irreducibles) fixed.push_back(hom_space(triv, restrict(pi, u)).dim());
  c.r.quantities["inventory_dims"] = dims_of(*inv);
  c.r.quantities["u_fixed_dims"] = fixed;
  c.r.verdict = Outcome::Pass;
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (fixed[i] != 1) c.fail_with("irreducible " + std::to_string(i) + " has U-fixed space of dim " + std::to_string(fixed[i]));
}

inline void cuspidal_count(Ctx& c) {
  require(c.group->kind() == GroupKind::Matrix && c.group->matrix_degree() == 2, ErrorKind::InvalidArgument,
          "cuspidal_count needs GL_2(F_q)");
  const std::size_t q = c.group->matrix_field()->q();
  const auto b = borel_subgroup(c.group);
  const auto inv = c.inventory();
  MeataxeOptions mo = c.meataxe;
  mo.seed = c.engine.options().seed;
  const auto binv = irreducible_inventory(b.group, c.field, mo);
  std::vector<Representation> principal;
  for (const auto& chi : binv.irreducibles)
    if (chi.dim() == 1) principal.push_back(induce(chi, b, c.caps.induced_dim));
  std::vector<std::size_t> cusp_dims;
  for (const auto& pi : inv->irreducibles) {
    bool embeds = false;
    for (const auto& ps : principal)
      if (hom_space(pi, ps).dim() > 0) {
        embeds = true;
        break;
      }
    if (!embeds) cusp_dims.push_back(pi.dim());
  }
  auto& qq = c.r.quantities;
  qq["q"] = q;
  qq["inventory_dims"] = dims_of(*inv);
  qq["borel_characters"] = principal.size();
  qq["cuspidal_count"] = cusp_dims.size();
  qq["cuspidal_dims"] = cusp_dims;
  qq["expected_count"] = q * (q - 1) / 2;
  qq["expected_dim"] = q - 1;
  c.r.verdict = Outcome::Pass;
  if (cusp_dims.size() != q * (q - 1) / 2) c.fail_with("cuspidal count " + std::to_string(cusp_dims.size()));
  for (auto d : cusp_dims)
    if (d != q - 1) c.fail_with("cuspidal of dimension " + std::to_string(d));
}

inline void triple_product(Ctx& c) {
  const auto g = c.group;
  const auto inv = c.inventory();
  auto& q = c.r.quantities;
  std::vector<std::size_t> mults;
  const auto triv = trivial_rep(g, c.field);
  for (const auto& a : inv->irreducibles)
    for (const auto& b : inv->irreducibles)
      for (const auto& d : inv->irreducibles) mults.push_back(hom_space(triv, tensor(tensor(a, b), d)).dim());
  q["inventory_dims"] = dims_of(*inv);
  q["triple_multiplicities"] = mults;
  const bool mf = max_of(mults) <= 1;
  q["triples_multiplicity_free"] = mf;
  c.r.verdict = Outcome::Pass;
  const std::uint64_t n = g->order();
  if (n * n * n > FiniteGroup::kTableCap || n * n > c.caps.induced_dim) {
    q["hecke"] = "skipped: caps";
    c.r.notes.push_back("(G^3, diag G) Hecke algebra beyond caps; triple multiplicities reported alone");
    return;
  }
  const auto g3 = product_group({g, g, g});
  const auto diag = diagonal_subgroup(g3);
  HeckeOptions ho;
  ho.max_dim = 256;
  const auto hk = hecke_algebra_convolution(diag, trivial_rep(diag.group, c.field), ho);
  const bool comm = is_commutative(hk);
  q["hecke_dim"] = hk.dim();
  q["commutative"] = comm;
  if (comm && !mf) c.violation("commutative Hecke algebra of (G^3, diag G) with a triple multiplicity >= 2");
}

inline void algebra_properties(Ctx& c) {
  const auto h = c.subgroup();
  const auto eta = parse_character(h, c.field, c.s.character);
  const auto ind = induce(eta, h, c.caps.induced_dim);
  const auto inv = c.inventory();
  auto& q = c.r.quantities;
  std::size_t checks = 0, failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      c.fail_with(what);
    }
  };
  c.r.verdict = Outcome::Pass;
  const auto dual_eta = dual(eta);
  const auto ind_dual = induce(dual_eta, h, c.caps.induced_dim);
  const auto dual_ind = dual(ind);
  for (std::size_t i = 0; i < inv->size(); ++i) {
    const auto& rho = inv->irreducibles[i];
    const auto res = restrict(rho, h);
    const std::string tag = "irreducible " + std::to_string(i);
    check(hom_space(ind, rho).dim() == hom_space(eta, res).dim(), "Frobenius (ind, res) fails at " + tag);
    check(hom_space(rho, coinduce(eta, h, c.caps.induced_dim)).dim() == hom_space(res, eta).dim(),
          "Frobenius (res, coind) fails at " + tag);
    check(hom_space(rho, dual_ind).dim() == hom_space(rho, ind_dual).dim(), "dual/induce profile differs at " + tag);
    check(hom_space(rho, ind).dim() == hom_space(dual(ind), dual(rho)).dim(), "Hom duality fails at " + tag);
  }
  // Mackey: dims, and the intertwining number for one-dimensional eta.
  const auto dc = double_cosets(h, h);
  std::size_t mackey_dim = 0, mackey_end = 0;
  const auto& g = *c.group;
  for (std::size_t s : dc.representatives) {
    const auto hs = conjugate_intersection(h, s);
    mackey_dim += (h.order() / hs.order()) * eta.dim();
    if (eta.dim() == 1) {
      bool agree = true;
      for (std::size_t x : hs.members) {
        const std::size_t y = g.mul(g.mul(g.inv(s), x), s);
        if (eta.image(h.to_view(x)) != eta.image(h.to_view(y))) {
          agree = false;
          break;
        }
      }
      mackey_end += agree ? 1 : 0;
    }
  }
  const auto end = end_algebra(ind);
  check(restrict(ind, h).dim() == mackey_dim, "Mackey dimension identity fails");
  if (eta.dim() == 1) check(end.dim() == mackey_end, "Mackey intertwining number differs from dim End(ind)");
  const auto cert = hecke_vs_end_iso_check(hecke_algebra_convolution(h, eta), ind);
  check(cert.ok(), "Hecke convolution algebra and End_G(ind) disagree");
  std::size_t acc = 0, squares = 0;
  for (std::size_t i = 0; i < inv->size(); ++i) {
    acc += inv->irreducibles[i].dim() * inv->regular_multiplicity[i];
    squares += inv->irreducibles[i].dim() * inv->irreducibles[i].dim();
  }
  check(acc == g.order(), "chop dimension accounting fails for the regular module");
  const bool semisimple = g.order() % c.field->p() != 0;
  if (semisimple) check(squares == g.order(), "Wedderburn sum of squares fails");
  q["checks"] = checks;
  q["failures"] = failures;
  q["hecke_dim"] = cert.hecke_dim;
  q["end_dim"] = end.dim();
  q["mackey_restricted_dim"] = mackey_dim;
  q["semisimple"] = semisimple;
  q["sum_of_squares"] = squares;
  q["inventory_dims"] = dims_of(*inv);
}

inline void structure_zoo_pipeline(Ctx& c) {
  ZooOptions zo;
  zo.meataxe = c.meataxe;
  zo.lattice.node_cap = c.caps.lattice;
  zo.seed = c.r.seed;
  MeataxeOptions mo = c.meataxe;
  mo.seed = c.engine.options().seed;
  const auto zoo = structure_zoo(mo);
  const auto rep = run_structure_zoo(zoo, zo);
  auto& q = c.r.quantities;
  q["modules"] = rep.modules;
  q["all_lattices_complete"] = rep.all_complete;
  std::map<std::string, std::size_t> checked, bad;
  for (const auto& ch : rep.checks) {
    std::string prop = ch.property;
    checked[prop] += ch.checked;
    bad[prop] += ch.counterexamples;
    if (ch.counterexamples) c.r.witnesses.push_back(ch.entry + ": " + ch.property + " " + ch.detail);
  }
  q["checked"] = checked;
  q["counterexamples"] = bad;
  q["findings"] = rep.findings;
  c.r.verdict = Outcome::Pass;
  if (rep.counterexamples() > 0) {
    c.r.verdict = Outcome::Fail;
    c.r.theorem_violation = true;
  } else if (!rep.all_complete) {
    c.r.verdict = Outcome::Inconclusive;
    c.r.witnesses.push_back("some zoo lattice is incomplete");
  }
}

}  // namespace pipelines

inline VerdictReport Engine::run(const Scenario& s) {
  VerdictReport r;
  r.id = s.id;
  r.pipeline = s.pipeline;
  r.seed = scenario_seed(opts_.seed, s.id);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    require(known_pipelines().count(s.pipeline) > 0, ErrorKind::ParseError, "unknown pipeline '" + s.pipeline + "'");
    Caps caps{opts_.lattice_cap, opts_.max_induced_dim};
    if (s.caps) caps = *s.caps;
    MeataxeOptions mo;
    mo.seed = r.seed;
    pipelines::Ctx c{*this, s, r, caps, mo, parse_field(s.field), group(s.group)};
    const auto& p = s.pipeline;
    if (p == "gelfand_pair") pipelines::triple(c, true);
    else if (p == "mult_free_triple") pipelines::triple(c, false);
    else if (p == "hecke_comm") pipelines::hecke_comm(c);
    else if (p == "gelfand_trick") pipelines::gelfand_trick(c);
    else if (p == "thm_multfree") pipelines::thm_multfree(c);
    else if (p == "restriction_multfree") pipelines::restriction_multfree(c);
    else if (p == "structure_audit") pipelines::structure_audit(c);
    else if (p == "non_example") pipelines::non_example(c);
    else if (p == "steinberg_untwisted") pipelines::steinberg_untwisted(c);
    else if (p == "cuspidal_count") pipelines::cuspidal_count(c);
    else if (p == "triple_product") pipelines::triple_product(c);
    else if (p == "algebra_properties") pipelines::algebra_properties(c);
    else if (p == "structure_zoo") pipelines::structure_zoo_pipeline(c);
    // Expectations pin computed quantities.
    for (const auto& [key, want] : s.expect) {
      if (!r.quantities.contains(key)) {
        r.verdict = Outcome::Fail;
        r.witnesses.push_back("expected quantity '" + key + "' was not computed");
      } else if (r.quantities[key].dump() != want) {
        r.verdict = Outcome::Fail;
        r.witnesses.push_back("expected " + key + "=" + want + ", got " + r.quantities[key].dump());
      }
    }
  } catch (const Error& e) {
    r.verdict = Outcome::Inconclusive;
    r.witnesses.push_back(e.what());
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// ---------------------------------------------------------------------------
// Built-in suites

namespace detail {

inline Scenario make_scenario(std::string id, std::string pipeline, std::string field, std::string group, std::string sub = "whole",
                              std::string character = "trivial", std::map<std::string, std::string> expect = {}) {
  Scenario s;
  s.id = std::move(id);
  s.pipeline = std::move(pipeline);
  s.field = std::move(field);
  s.group = std::move(group);
  s.subgroup = std::move(sub);
  s.character = std::move(character);
  s.expect = std::move(expect);
  return s;
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gelfand-pairs", "gelfand-graev", "structure-audit", "non-examples", "properties"};
  return names;
}

inline std::vector<Scenario> builtin_suite(const std::string& name) {
  using detail::make_scenario;
  std::vector<Scenario> out;
  if (name == "gelfand-pairs") {
    for (int n : {3, 4, 5})
      for (int l : {2, 3, 5}) {
        const std::string id = "sym" + std::to_string(n) + "_sym" + std::to_string(n - 1) + ".gf" + std::to_string(l);
        out.push_back(make_scenario(id, "gelfand_pair", "gf(" + std::to_string(l) + ",1)", "sym(" + std::to_string(n) + ")",
                                    "young(" + std::to_string(n - 1) + ")", "trivial",
                                    {{"hecke_dim", "2"}, {"commutative", "true"}, {"multiplicity_free", "true"}}));
        auto trick = make_scenario("gelfand_trick." + id, "gelfand_trick", "gf(" + std::to_string(l) + ",1)",
                                   "sym(" + std::to_string(n) + ")", "young(" + std::to_string(n - 1) + ")", "trivial",
                                   {{"fixes_basis", "true"}, {"commutative", "true"}});
        out.push_back(trick);
      }
    out.push_back(make_scenario("sym3_sym3.gf5", "gelfand_pair", "gf(5,1)", "sym(3)", "whole", "trivial", {{"hecke_dim", "1"}}));
    out.push_back(make_scenario("sym4_sym3.gf2.triple", "mult_free_triple", "gf(2,1)", "sym(4)", "young(3)", "trivial",
                                {{"hecke_dim", "2"}, {"commutative", "true"}, {"multiplicity_free", "true"}}));
    out.push_back(make_scenario("gl2_3_cartan.gf17", "mult_free_triple", "gf(17,1)", "gl(2,3,1)", "cartan", "multchar(1)",
                                {{"commutative", "true"}, {"multiplicity_free", "true"}}));
    out.push_back(make_scenario("gl2_3_cartan.gf25", "mult_free_triple", "gf(5,2)", "gl(2,3,1)", "cartan", "multchar(1)",
                                {{"commutative", "true"}, {"multiplicity_free", "true"}}));
    auto tr = make_scenario("gelfand_trick.gl2_3_torus.gf5", "gelfand_trick", "gf(5,1)", "gl(2,3,1)", "torus", "trivial",
                            {{"preserves_double_cosets", "false"}, {"commutative", "false"}});
    tr.involution = "transpose";
    out.push_back(tr);
    out.push_back(make_scenario("triple_product.cyclic3.gf7", "triple_product", "gf(7,1)", "cyclic(3)", "whole", "trivial",
                                {{"triples_multiplicity_free", "true"}}));
    out.push_back(make_scenario("triple_product.sym3.gf7", "triple_product", "gf(7,1)", "sym(3)"));
    out.push_back(make_scenario("triple_product.quaternion8.gf3", "triple_product", "gf(3,1)", "quaternion8"));
  } else if (name == "gelfand-graev") {
    out.push_back(make_scenario("gl2_2_whittaker.gf3", "mult_free_triple", "gf(3,1)", "gl(2,2,1)", "unitriangular", "gg(2)",
                                {{"commutative", "true"}, {"multiplicity_free", "true"}, {"iso_certificate", "true"}}));
    out.push_back(make_scenario("gl2_3_whittaker.gf4", "mult_free_triple", "gf(2,2)", "gl(2,3,1)", "unitriangular", "gg(3)",
                                {{"hecke_dim", "6"}, {"end_dim", "6"}, {"commutative", "true"}, {"multiplicity_free", "true"}}));
    auto gf7 = make_scenario("gl2_3_whittaker.gf7", "mult_free_triple", "gf(7,1)", "gl(2,3,1)", "unitriangular", "gg(3)",
                             {{"commutative", "true"}, {"multiplicity_free", "true"}, {"iso_certificate", "true"}});
    gf7.nonsplit = "descent";
    out.push_back(gf7);
    out.push_back(make_scenario("gl2_3_whittaker.gf49", "mult_free_triple", "gf(7,2)", "gl(2,3,1)", "unitriangular", "gg(3)",
                                {{"commutative", "true"}, {"multiplicity_free", "true"}, {"multiplicity_mode", "\"split\""}}));
    out.push_back(make_scenario("steinberg.q2", "steinberg_untwisted", "gf(2,1)", "gl(2,2,1)"));
    out.push_back(make_scenario("steinberg.q3", "steinberg_untwisted", "gf(3,1)", "gl(2,3,1)"));
    out.push_back(make_scenario("cuspidal.gl2_3.gf25", "cuspidal_count", "gf(5,2)", "gl(2,3,1)", "whole", "trivial",
                                {{"cuspidal_count", "3"}}));
    auto thm = make_scenario("thm_multfree.gl2_2_whittaker.gf3", "thm_multfree", "gf(3,1)", "gl(2,2,1)", "unitriangular", "gg(2)",
                             {{"end_commutative", "true"}, {"self_injective", "\"TRUE\""}, {"multiplicity_free", "true"}});
    out.push_back(thm);
  } else if (name == "structure-audit") {
    auto audit = [&](std::string id, std::string field, std::string group, std::string module, std::string sub = "whole",
                     std::string ch = "trivial", std::map<std::string, std::string> expect = {}) {
      auto s = make_scenario(std::move(id), "structure_audit", std::move(field), std::move(group), std::move(sub), std::move(ch),
                             std::move(expect));
      s.module = std::move(module);
      out.push_back(s);
    };
    audit("audit.cyclic2.reg.gf2", "gf(2,1)", "cyclic(2)", "regular", "whole", "trivial",
          {{"lattice_nodes", "3"}, {"self_injective", "true"}, {"socle_dim", "1"}, {"radical_dim", "1"}});
    audit("audit.sym3.perm3.gf2", "gf(2,1)", "sym(3)", "induced", "young(2)", "trivial", {{"lattice_nodes", "4"}});
    audit("audit.sym3.perm3.gf3", "gf(3,1)", "sym(3)", "induced", "young(2)");
    audit("audit.sym3.reg.gf5", "gf(5,1)", "sym(3)", "regular", "whole", "trivial", {{"radical_dim", "0"}, {"socle_dim", "6"}});
    audit("audit.quaternion8.reg.gf2", "gf(2,1)", "quaternion8", "regular", "whole", "trivial",
          {{"socle_dim", "1"}, {"radical_dim", "7"}, {"radical_superfluous", "true"}});
    audit("audit.gl2_2.natural.gf2", "gf(2,1)", "gl(2,2,1)", "natural");
    audit("audit.alt4.non_example_2.gf4", "gf(2,2)", "alt(4)", "non_example_2");
    auto r1 = make_scenario("restriction.sym3_std.gf5", "restriction_multfree", "gf(5,1)", "sym(3)", "young(2)", "trivial",
                            {{"res_end_commutative", "true"}, {"res_multiplicity_free", "true"}});
    r1.module = "irreducible(2)";
    out.push_back(r1);
    auto r2 = make_scenario("restriction.trivial.sym4.gf3", "restriction_multfree", "gf(3,1)", "sym(4)", "young(3)");
    r2.module = "trivial";
    out.push_back(r2);
    auto r3 = make_scenario("restriction.gl2_2_natural.gf2", "restriction_multfree", "gf(2,1)", "gl(2,2,1)", "unitriangular");
    r3.module = "natural";
    out.push_back(r3);
  } else if (name == "non-examples") {
    for (const auto& [id, g] : {std::pair<std::string, std::string>{"quaternion8", "quaternion8"}, {"dihedral4", "dihedral(4)"}}) {
      auto s = make_scenario("non_example_1." + id + ".gf2", "non_example", "gf(2,1)", g, "whole", "trivial",
                             {{"end_dim", "8"}, {"end_commutative", "false"}, {"inventory_size", "1"}, {"socle_dim", "1"}});
      s.module = "regular";
      out.push_back(s);
      auto t = make_scenario("thm_multfree." + id + ".reg.gf2", "thm_multfree", "gf(2,1)", g, "whole", "trivial",
                             {{"end_commutative", "false"}, {"multiplicity_free", "true"}});
      t.module = "regular";
      out.push_back(t);
    }
    auto ne2 = make_scenario("non_example_2.alt4.gf4", "non_example", "gf(2,2)", "alt(4)", "whole", "trivial",
                             {{"end_commutative", "true"}, {"pi_multiplicity", "2"}, {"self_injective", "\"FALSE(restriction to node of dim 1)\""}});
    ne2.module = "non_example_2";
    out.push_back(ne2);
    auto thm2 = make_scenario("thm_multfree.non_example_2.alt4.gf4", "thm_multfree", "gf(2,2)", "alt(4)", "whole", "trivial",
                              {{"end_commutative", "true"}, {"multiplicity_free", "false"}});
    thm2.module = "non_example_2";
    out.push_back(thm2);
  } else if (name == "properties") {
    out.push_back(make_scenario("props.sym3_sym2.gf5", "algebra_properties", "gf(5,1)", "sym(3)", "young(2)"));
    out.push_back(make_scenario("props.sym3_sym2_sign.gf3", "algebra_properties", "gf(3,1)", "sym(3)", "young(2)", "sign"));
    out.push_back(make_scenario("props.sym4_sym3.gf2", "algebra_properties", "gf(2,1)", "sym(4)", "young(3)"));
    out.push_back(make_scenario("props.sym4_sym2.gf5", "algebra_properties", "gf(5,1)", "sym(4)", "young(2)", "sign"));
    out.push_back(make_scenario("props.gl2_2_u.gf3", "algebra_properties", "gf(3,1)", "gl(2,2,1)", "unitriangular", "gg(2)"));
    out.push_back(make_scenario("props.gl2_2_u.gf7", "algebra_properties", "gf(7,1)", "gl(2,2,1)", "unitriangular", "trivial"));
    out.push_back(make_scenario("props.gl2_3_u.gf4", "algebra_properties", "gf(2,2)", "gl(2,3,1)", "unitriangular", "gg(3)"));
    out.push_back(make_scenario("props.gl2_3_borel.gf25", "algebra_properties", "gf(5,2)", "gl(2,3,1)", "borel", "trivial"));
    out.push_back(make_scenario("props.quaternion8_c4.gf5", "algebra_properties", "gf(5,1)", "quaternion8", "gens[[[0,2],[1,0]]]",
                                "multchar(1)"));
    out.push_back(make_scenario("props.alt4_c3.gf4", "algebra_properties", "gf(2,2)", "alt(4)", "young(3)", "multchar(1)"));
    out.push_back(make_scenario("props.structure_zoo", "structure_zoo", "gf(2,1)", "sym(3)"));
  } else {
    fail(ErrorKind::ParseError, "unknown suite '" + name + "'");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct RunSummary {
  std::size_t pass = 0, fail = 0, inconclusive = 0, violations = 0;
  int exit_code() const noexcept { return fail ? 1 : inconclusive ? 2 : 0; }
};

inline RunSummary summarize(const std::vector<VerdictReport>& reports) {
  RunSummary s;
  for (const auto& r : reports) {
    if (r.verdict == Outcome::Pass) ++s.pass;
    else if (r.verdict == Outcome::Fail) ++s.fail;
    else ++s.inconclusive;
    if (r.theorem_violation) ++s.violations;
  }
  return s;
}

inline json machine_report(const std::string& label, const std::vector<VerdictReport>& reports, std::uint64_t seed, bool with_time) {
  json j;
  j["run"] = label;
  j["seed"] = seed;
  j["scenarios"] = json::array();
  for (const auto& r : reports) j["scenarios"].push_back(r.to_json(with_time));
  const auto s = summarize(reports);
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"inconclusive", s.inconclusive}, {"theorem_violations", s.violations}};
  return j;
}

/// One human line per scenario.
inline std::string summary_line(const VerdictReport& r) {
  std::ostringstream os;
  os << "[" << to_string(r.verdict) << "] " << r.id << " (" << r.pipeline << ")";
  const auto& q = r.quantities;
  for (const char* k : {"hecke_dim", "commutative", "multiplicity_free", "end_dim", "cuspidal_count", "self_injective"})
    if (q.contains(k)) os << " " << k << "=" << (q[k].is_string() ? q[k].get<std::string>() : q[k].dump());
  for (const auto& w : r.witnesses) os << "\n    witness: " << w;
  for (const auto& n : r.notes) os << "\n    note: " << n;
  return os.str();
}

}  // namespace mfree
