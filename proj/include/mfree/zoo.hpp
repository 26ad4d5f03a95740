#pragma once

// A fixed collection of small modules (dim <= 12, q^dim <= 2^16) and the
// structure-theory property sweep run over it.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfree/ext.hpp"
#include "mfree/parse.hpp"
#include "mfree/structure.hpp"

namespace mfree {

struct ZooEntry {
  std::string name;
  Representation rep;
  std::optional<Subgroup> sub;  ///< subgroup used for the induction/restriction transfer checks
};

/// Representation carried by an invariant subspace of rho.
inline Representation subrepresentation(const Representation& rho, const Subspace& w) {
  const auto sv = submodule(module_of(rho), w);
  return Representation::from_generators(rho.group(), rho.field(), w.dim(), sv.module.gens);
}

inline Representation natural_rep(const GroupPtr& g) {
  require(g->kind() == GroupKind::Matrix, ErrorKind::InvalidArgument, "natural module needs a matrix group");
  const std::size_t n = g->matrix_degree();
  std::vector<Matrix> images;
  for (const auto& w : g->elements()) images.emplace_back(g->matrix_field(), n, n, std::vector<Elt>(w.begin(), w.end()));
  return Representation(g, g->matrix_field(), std::move(images));
}

inline std::vector<ZooEntry> structure_zoo(const MeataxeOptions& opts = {}) {
  std::vector<ZooEntry> zoo;
  const auto gf2 = make_field(2, 1), gf3 = make_field(3, 1), gf4 = make_field(2, 2), gf5 = make_field(5, 1);
  const auto s3 = symmetric_group(3), s4 = symmetric_group(4), a4 = alternating_group(4);
  const auto c2 = cyclic_group(2), c3 = cyclic_group(3), c4 = cyclic_group(4);
  const auto q8 = quaternion8(), d8 = dihedral_group(4), gl22 = general_linear_group(2, gf2);
  const auto klein = product_group({c2, c2});
  const auto s3_s2 = young_subgroup(s3, 2), s4_s3 = young_subgroup(s4, 3), s4_s2 = young_subgroup(s4, 2);
  const auto a4_a3 = young_subgroup(a4, 3), d8_stab = young_subgroup(d8, 3);
  const auto c4_c2 = parse_subgroup(c4, "gens[(1 3)(2 4)]");
  const auto u22 = unitriangular_subgroup(gl22);

  auto inv_member = [&](const GroupPtr& g, const FieldPtr& f, std::size_t dim) {
    const auto inv = irreducible_inventory(g, f, opts);
    for (const auto& r : inv.irreducibles)
      if (r.dim() == dim) return r;
    fail(ErrorKind::InvalidArgument, "no irreducible of the requested dimension");
  };
  auto add = [&](std::string name, Representation rep, std::optional<Subgroup> sub = std::nullopt) {
    zoo.push_back({std::move(name), std::move(rep), std::move(sub)});
  };

  // GF(2)
  add("sym3.triv.gf2", trivial_rep(s3, gf2), s3_s2);
  add("sym3.perm3.gf2", permutation_rep(s3_s2, gf2), s3_s2);
  add("sym3.std.gf2", inv_member(s3, gf2, 2), s3_s2);
  add("sym3.triv2.gf2", direct_sum(trivial_rep(s3, gf2), trivial_rep(s3, gf2)));
  add("sym3.reg.gf2", regular_rep(s3, gf2), s3_s2);
  add("cyclic2.reg.gf2", regular_rep(c2, gf2), trivial_subgroup(c2));
  add("cyclic4.reg.gf2", regular_rep(c4, gf2), c4_c2);
  add("klein.reg.gf2", regular_rep(klein, gf2), diagonal_subgroup(klein));
  add("quaternion8.reg.gf2", regular_rep(q8, gf2));
  add("dihedral4.reg.gf2", regular_rep(d8, gf2));
  add("sym4.perm4.gf2", permutation_rep(s4_s3, gf2), s4_s3);
  add("sym4.perm12.gf2", permutation_rep(s4_s2, gf2));
  add("dihedral4.perm4.gf2", permutation_rep(d8_stab, gf2), d8_stab);
  add("gl2_2.natural.gf2", natural_rep(gl22), u22);

  // GF(3)
  const auto perm3_gf3 = permutation_rep(s3_s2, gf3);
  Matrix ones(gf3, 1, 3, {1, 1, 1});
  add("sym3.perm3.gf3", perm3_gf3, s3_s2);
  add("sym3.sumzero.gf3", subrepresentation(perm3_gf3, kernel(ones)), s3_s2);
  add("sym3.sign.gf3", sign_rep(s3, gf3), s3_s2);
  add("sym3.reg.gf3", regular_rep(s3, gf3), s3_s2);
  add("cyclic3.reg.gf3", regular_rep(c3, gf3), trivial_subgroup(c3));
  add("sym4.perm4.gf3", permutation_rep(s4_s3, gf3), s4_s3);
  add("gl2_2.gelfand_graev.gf3", induce(gelfand_graev_character(u22, gf3, 2), u22), u22);

  // GF(4)
  add("cyclic2.reg.gf4", regular_rep(c2, gf4), trivial_subgroup(c2));
  add("cyclic3.reg.gf4", regular_rep(c3, gf4), trivial_subgroup(c3));
  add("alt4.perm4.gf4", permutation_rep(a4_a3, gf4), a4_a3);
  add("sym3.reg.gf4", regular_rep(s3, gf4), s3_s2);
  if (auto ne = find_non_example_two(irreducible_inventory(a4, gf4, opts))) {
    add("alt4.sigma1.gf4", ne->sigma1, a4_a3);
    add("alt4.sigma1_plus_sigma2.gf4", ne->rho);
  }

  // GF(5)
  add("sym3.perm3.gf5", permutation_rep(s3_s2, gf5), s3_s2);
  add("sym3.std.gf5", inv_member(s3, gf5, 2), s3_s2);
  add("sym3.reg.gf5", regular_rep(s3, gf5), s3_s2);
  add("sym3.ind_sign.gf5", induce(sign_rep(s3_s2.group, gf5), s3_s2), s3_s2);
  add("cyclic4.reg.gf5", regular_rep(c4, gf5), c4_c2);
  return zoo;
}

struct ZooCheck {
  std::string entry;
  std::string property;
  std::size_t checked = 0;
  std::size_t counterexamples = 0;
  bool sampled = false;
  std::string detail;
};

struct ZooReport {
  std::size_t modules = 0;
  bool all_complete = true;
  std::vector<ZooCheck> checks;
  std::vector<std::string> findings;  ///< lifting vs exactness disagreements

  std::size_t counterexamples() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.counterexamples;
    return n;
  }
  std::size_t checked(const std::string& property) const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (c.property == property) n += c.checked;
    return n;
  }
};

struct ZooOptions {
  MeataxeOptions meataxe;
  LatticeOptions lattice;
  std::size_t closure_nodes = 24;  ///< lattice nodes tried per closure check
  std::size_t max_sum_dim = 12;    ///< n ⊕ n closure checks only up to this dimension
  std::uint64_t seed = 42;
};

namespace detail {

inline bool fits(const FieldPtr& f, std::size_t dim, std::uint64_t cap) {
  std::uint64_t t = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    t *= f->q();
    if (t > cap) return false;
  }
  return true;
}

/// Surjections n -> m among basis combinations (all when Hom is small).
inline std::vector<Matrix> find_surjections(const ModuleOverAlgebra& n, const ModuleOverAlgebra& m, std::size_t limit = 16) {
  const auto fs = hom_basis(n, m);
  std::vector<Matrix> out;
  if (fs.empty()) return out;
  const Field& F = *n.field;
  auto consider = [&](const std::vector<Elt>& c) {
    Matrix f(n.field, m.dim, n.dim);
    for (std::size_t i = 0; i < fs.size(); ++i) f.add_scaled(c[i], fs[i]);
    if (rank(f) == m.dim) out.push_back(std::move(f));
    return out.size() < limit;
  };
  if (fits(n.field, fs.size(), 1u << 12)) {
    for_each_projective_point(F, fs.size(), consider);
  } else {
    for (std::size_t i = 0; i < fs.size() && out.size() < limit; ++i) {
      std::vector<Elt> c(fs.size(), 0);
      c[i] = 1;
      consider(c);
    }
  }
  return out;
}

}  // namespace detail

/// Runs every structure property over the zoo.  Counterexamples are counted,
/// never thrown; incomplete lattices are recorded in all_complete.
inline ZooReport run_structure_zoo(const std::vector<ZooEntry>& zoo, const ZooOptions& opts = {}) {
  ZooReport rep;
  rep.modules = zoo.size();
  std::map<const FiniteGroup*, std::vector<ModuleOverAlgebra>> simples_cache;
  std::map<std::pair<const FiniteGroup*, const Field*>, Inventory> inv_cache;
  auto inventory = [&](const GroupPtr& g, const FieldPtr& f) -> const Inventory& {
    auto key = std::make_pair(g.get(), f.get());
    auto it = inv_cache.find(key);
    if (it == inv_cache.end()) it = inv_cache.emplace(key, irreducible_inventory(g, f, opts.meataxe)).first;
    return it->second;
  };

  for (const auto& entry : zoo) {
    const auto& rho = entry.rep;
    const auto n = module_of(rho);
    const auto lat = submodule_lattice(n, opts.lattice);
    auto record = [&](const std::string& prop, std::size_t checked, std::size_t bad, std::string detail = {}, bool sampled = false) {
      rep.checks.push_back({entry.name, prop, checked, bad, sampled, std::move(detail)});
    };
    if (!lat.complete) {
      rep.all_complete = false;
      record("lattice", 1, 0, "incomplete: " + lat.reason);
      continue;
    }
    const auto& inv = inventory(rho.group(), rho.field());
    const auto simples = simple_modules(inv);

    // Cross-validation of rad/soc against the lattice.
    const auto sr = radical_and_socle(n, simples);
    {
      Subspace meet = Subspace::full(n.field, n.dim);
      for (auto i : lat.maximal_nodes()) meet = meet.intersect(lat.nodes[i]);
      Subspace join = Subspace::zero(n.field, n.dim);
      for (auto i : lat.minimal_nodes()) join = join.sum(lat.nodes[i]);
      record("rad_soc_cross_validation", 2, (meet == sr.radical ? 0 : 1) + (join == sr.socle ? 0 : 1));
    }

    // Radical of End and dimension identities, hypothesis-gated.
    const auto self_proj = is_relatively_projective(n, n, lat);
    const auto self_inj = is_relatively_injective(n, n, lat);
    if (!self_proj.exactness_agrees || !self_inj.exactness_agrees)
      rep.findings.push_back(entry.name + ": lifting and Hom-exactness routes disagree");
    for (Flavor fl : {Flavor::Projective, Flavor::Injective}) {
      const bool hyp = fl == Flavor::Projective ? self_proj.verdict.is_true() && is_superfluous(sr.radical, lat).is_true()
                                                : self_inj.verdict.is_true() && is_essential(sr.socle, lat).is_true();
      if (!hyp) continue;
      const auto th = verify_rad_end_theorem(n, lat, simples, fl, opts.meataxe);
      record(std::string("rad_end_theorem.") + std::string(to_string(fl)), 1, th.holds ? 0 : 1,
             std::to_string(th.end_dim) + "-" + std::to_string(th.rad_end_dim) + " vs " + std::to_string(th.top_end_dim));
      const auto lm = verify_lemma_rad_end_characterization(n, lat, simples, fl, opts.meataxe, opts.seed);
      record(std::string("rad_end_lemma.") + std::string(to_string(fl)), lm.checked, lm.counterexamples, {}, !lm.exhaustive);
    }

    // Duality transfer: self-injective(rho) iff self-projective(dual rho).
    {
      const auto dn = module_of(dual(rho));
      const auto dlat = submodule_lattice(dn, opts.lattice);
      if (dlat.complete) {
        const bool dp = is_relatively_projective(dn, dn, dlat).verdict.is_true();
        const bool di = is_relatively_injective(dn, dn, dlat).verdict.is_true();
        record("duality_transfer", 2, (self_inj.verdict.is_true() == dp ? 0 : 1) + (self_proj.verdict.is_true() == di ? 0 : 1));
      }
    }

    // Closure under submodules, quotients and split sums, with m over the simples and n itself.
    std::vector<ModuleOverAlgebra> ms = simples;
    ms.push_back(n);
    for (const auto& m : ms) {
      const auto proj = is_relatively_projective(m, n, lat);
      const auto inj = is_relatively_injective(m, n, lat);
      std::size_t checked = 0, bad = 0;
      const std::size_t limit = std::min(lat.nodes.size(), opts.closure_nodes);
      for (std::size_t i = 0; i < limit; ++i) {
        const auto& l = lat.nodes[i];
        if (l.is_zero() || l.is_full()) continue;
        const auto sub = submodule(n, l).module;
        const auto quo = quotient(n, l).module;
        const auto sub_lat = submodule_lattice(sub, opts.lattice);
        const auto quo_lat = submodule_lattice(quo, opts.lattice);
        if (!sub_lat.complete || !quo_lat.complete) continue;
        if (proj.verdict.is_true()) {
          checked += 2;
          bad += is_relatively_projective(m, sub, sub_lat).verdict.is_true() ? 0 : 1;
          bad += is_relatively_projective(m, quo, quo_lat).verdict.is_true() ? 0 : 1;
        }
        if (inj.verdict.is_true()) {
          checked += 2;
          bad += is_relatively_injective(m, sub, sub_lat).verdict.is_true() ? 0 : 1;
          bad += is_relatively_injective(m, quo, quo_lat).verdict.is_true() ? 0 : 1;
        }
      }
      if (2 * n.dim <= opts.max_sum_dim && detail::fits(n.field, 2 * n.dim, opts.lattice.sweep_cap) &&
          (proj.verdict.is_true() || inj.verdict.is_true())) {
        const auto nn = direct_sum(n, n);
        const auto nn_lat = submodule_lattice(nn, opts.lattice);
        if (nn_lat.complete) {
          if (proj.verdict.is_true()) {
            ++checked;
            bad += is_relatively_projective(m, nn, nn_lat).verdict.is_true() ? 0 : 1;
          }
          if (inj.verdict.is_true()) {
            ++checked;
            bad += is_relatively_injective(m, nn, nn_lat).verdict.is_true() ? 0 : 1;
          }
        }
      }
      record("closure", checked, bad);

      std::size_t sc = 0, sbad = 0;
      if (inj.verdict.is_true() && m.dim < n.dim) {
        for (const auto& f : find_embeddings(m, n, 16, opts.seed)) {
          ++sc;
          if (!find_complement(image_of(f), lat)) ++sbad;
        }
      }
      if (proj.verdict.is_true() && m.dim < n.dim) {
        for (const auto& f : detail::find_surjections(n, m)) {
          ++sc;
          if (!find_complement(kernel(f), lat)) ++sbad;
        }
      }
      record("split_corollary", sc, sbad);
    }

    // Transfer along (ind, res) and (res, coind).
    if (entry.sub) {
      const auto& h = *entry.sub;
      const auto res_n = module_of(restrict(rho, h));
      const auto res_lat = submodule_lattice(res_n, opts.lattice);
      std::size_t checked = 0, bad = 0;
      if (res_lat.complete) {
        const auto& hinv = inventory(h.group, rho.field());
        std::vector<Representation> hm = hinv.irreducibles;
        hm.push_back(restrict(rho, h));
        for (const auto& m : hm) {
          if (m.dim() * (rho.group()->order() / h.order()) > 12) continue;
          const auto mm = module_of(m);
          const auto ind = module_of(induce(m, h));
          if (is_relatively_projective(mm, res_n, res_lat).verdict.is_true()) {
            ++checked;
            bad += is_relatively_projective(ind, n, lat).verdict.is_true() ? 0 : 1;
          }
          if (is_relatively_injective(mm, res_n, res_lat).verdict.is_true()) {
            ++checked;
            bad += is_relatively_injective(ind, n, lat).verdict.is_true() ? 0 : 1;
          }
        }
        // (i)/(iii): n as the G-module, N ranging over the H-simples.
        for (const auto& nh : hinv.irreducibles) {
          const auto ind_n = module_of(induce(nh, h));
          if (!detail::fits(rho.field(), ind_n.dim, opts.lattice.sweep_cap)) continue;
          const auto ind_lat = submodule_lattice(ind_n, opts.lattice);
          const auto nh_mod = module_of(nh);
          const auto nh_lat = submodule_lattice(nh_mod, opts.lattice);
          if (!ind_lat.complete || !nh_lat.complete) continue;
          if (is_relatively_projective(n, ind_n, ind_lat).verdict.is_true()) {
            ++checked;
            bad += is_relatively_projective(res_n, nh_mod, nh_lat).verdict.is_true() ? 0 : 1;
          }
          if (is_relatively_injective(n, ind_n, ind_lat).verdict.is_true()) {
            ++checked;
            bad += is_relatively_injective(res_n, nh_mod, nh_lat).verdict.is_true() ? 0 : 1;
          }
        }
      }
      record("functorial_transfer", checked, bad);
    }
  }
  return rep;
}

}  // namespace mfree
