// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "mfree/verdicts.hpp"

using namespace mfree;

namespace {

using Reports = std::vector<VerdictReport>;

std::map<std::string, Reports> g_suites;

const Reports& suite(const std::string& name) {
  auto it = g_suites.find(name);
  if (it == g_suites.end()) {
    EngineOptions o;
    o.workers = 4;
    it = g_suites.emplace(name, Engine(o).run_all(builtin_suite(name))).first;
  }
  return it->second;
}

const VerdictReport* find(const Reports& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.id == id) return &r;
  return nullptr;
}

struct Check {
  std::vector<std::string> problems;
  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  // Report must exist and have the given verdict.
  const VerdictReport* report(const Reports& rs, const std::string& id, Outcome want = Outcome::Pass) {
    const auto* r = find(rs, id);
    if (!r) {
      problems.push_back(id + ": missing");
      return nullptr;
    }
    if (r->verdict != want) problems.push_back(summary_line(*r));
    return r;
  }
};

bool all_at_most_one(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v)
    if (!x.is_number_integer() || x.get<long>() > 1) return false;
  return true;
}

void criterion1(Check& c) {
  const auto& rs = suite("gelfand-pairs");
  for (int n : {3, 4, 5})
    for (int l : {2, 3, 5}) {
      const auto id = "sym" + std::to_string(n) + "_sym" + std::to_string(n - 1) + ".gf" + std::to_string(l);
      const auto* r = c.report(rs, id);
      if (!r) continue;
      const auto& q = r->quantities;
      c.require(q.value("hecke_dim", -1) == 2, id + ": hecke_dim != 2");
      c.require(q.value("commutative", false), id + ": not commutative");
      c.require(q.value("multiplicity_free", false), id + ": not multiplicity free");
      c.require(q.contains("multiplicity_vector") && all_at_most_one(q["multiplicity_vector"]),
                id + ": multiplicity vector has an entry above 1");
    }
}

void criterion2(Check& c) {
  const auto& rs = suite("gelfand-graev");
  for (const std::string id : {"gl2_2_whittaker.gf3", "gl2_3_whittaker.gf4", "gl2_3_whittaker.gf7"}) {
    const auto* r = c.report(rs, id);
    if (!r) continue;
    const auto& q = r->quantities;
    c.require(q.value("commutative", false), id + ": Hecke algebra not commutative");
    c.require(q.value("multiplicity_free", false), id + ": not multiplicity free");
    c.require(q.value("hecke_dim", -1) == q.value("end_dim", -2), id + ": hecke_dim != end_dim");
    if (id.rfind("gl2_3", 0) == 0) c.require(q.value("hecke_dim", -1) == 6, id + ": hecke_dim != 6");
  }
}

void criterion3(Check& c) {
  const auto* r = c.report(suite("gelfand-graev"), "cuspidal.gl2_3.gf25");
  if (!r) return;
  const auto& q = r->quantities;
  c.require(q.value("cuspidal_count", -1) == 3, "cuspidal_count != 3");
  bool dims_ok = q.contains("cuspidal_dims") && q["cuspidal_dims"].size() == 3;
  if (dims_ok)
    for (const auto& d : q["cuspidal_dims"]) dims_ok = dims_ok && d == 2;
  c.require(dims_ok, "cuspidal dims are not all 2");
}

void criterion4(Check& c) {
  for (const std::string id : {"steinberg.q2", "steinberg.q3"}) {
    const auto* r = c.report(suite("gelfand-graev"), id);
    if (!r) continue;
    const auto& d = r->quantities.value("u_fixed_dims", json::array());
    bool ok = !d.empty();
    for (const auto& x : d) ok = ok && x == 1;
    c.require(ok, id + ": U-fixed dims " + d.dump());
  }
}

void criterion5(Check& c) {
  for (const std::string id : {"non_example_1.quaternion8.gf2", "non_example_1.dihedral4.gf2"}) {
    const auto* r = c.report(suite("non-examples"), id);
    if (!r) continue;
    const auto& q = r->quantities;
    c.require(q.value("end_dim", -1) == 8, id + ": end_dim != 8");
    c.require(q.value("end_commutative", true) == false, id + ": End commutative");
    c.require(q.value("inventory_size", -1) == 1, id + ": inventory is not {trivial}");
    c.require(q.value("socle_dim", -1) == 1, id + ": socle dim != 1");
    c.require(std::find(r->notes.begin(), r->notes.end(), "converse fails") != r->notes.end(),
              id + ": no 'converse fails' note");
  }
}

void criterion6(Check& c) {
  const auto* r = c.report(suite("properties"), "props.structure_zoo");
  if (!r) return;
  const auto& q = r->quantities;
  c.require(q.value("modules", 0) >= 25, "zoo has fewer than 25 modules");
  c.require(q.value("all_lattices_complete", false), "some zoo lattice is incomplete");
  if (q.contains("counterexamples"))
    for (const auto& [k, v] : q["counterexamples"].items()) {
      if (v.get<long>() != 0) c.problems.push_back("zoo counterexamples for " + k + ": " + v.dump());
    }
  else
    c.problems.push_back("zoo report has no counterexample table");
}

void criterion7(Check& c) {
  std::size_t seen = 0;
  for (const auto& r : suite("properties")) {
    if (r.pipeline != "algebra_properties") continue;
    ++seen;
    if (r.verdict != Outcome::Pass) c.problems.push_back(summary_line(r));
    c.require(r.quantities.value("failures", -1) == 0, r.id + ": failures " + r.quantities.value("failures", json()).dump());
    c.require(r.quantities.value("checks", 0) > 0, r.id + ": no checks ran");
  }
  c.require(seen >= 10, "fewer than 10 property fixtures");
}

void criterion8(Check& c) {
  for (const std::string name : {"gelfand-pairs", "non-examples"}) {
    std::string dumps[3];
    for (int i = 0; i < 3; ++i) {
      EngineOptions o;
      o.seed = 42;
      o.workers = i == 2 ? 4 : 1;
      dumps[i] = machine_report(name, Engine(o).run_all(builtin_suite(name)), 42, false).dump(2);
    }
    c.require(dumps[0] == dumps[1], name + ": two seed-42 runs differ");
    c.require(dumps[0] == dumps[2], name + ": report depends on worker count");
  }
}

// No scenario in any suite may witness a violated implication.
void theorem_gate(Check& c) {
  for (const auto& name : suite_names())
    for (const auto& r : suite(name))
      if (r.theorem_violation) c.problems.push_back("violation: " + summary_line(r));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"Gelfand pairs (S_n, S_n-1) over GF(2), GF(3), GF(5)", criterion1},
      {"Gelfand-Graev triples are multiplicity free, Hecke dim 6 for GL2(3)", criterion2},
      {"three cuspidal irreducibles of dimension 2 for GL2(3)", criterion3},
      {"U-fixed spaces are one-dimensional for GL2(2), GL2(3)", criterion4},
      {"Q8 and D8 regular modules: converse fails", criterion5},
      {"structure zoo has no counterexamples", criterion6},
      {"Frobenius, Mackey, Hecke=End, Wedderburn and chop accounting", criterion7},
      {"seed-42 suite reports are byte-identical", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.problems.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = c.problems.empty();
    failed += !ok;
    std::printf("[%s] criterion %zu: %s (%.1fs)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), s);
    for (const auto& p : c.problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
  }
  Check gate;
  theorem_gate(gate);
  std::printf("[%s] theorem gate over all suites\n", gate.problems.empty() ? "PASS" : "FAIL");
  for (const auto& p : gate.problems) std::printf("    %s\n", p.c_str());
  failed += !gate.problems.empty();
  return failed ? 1 : 0;
}
