#pragma once

// Submodule lattices and the module-theoretic predicates evaluated over them:
// radical/socle, superfluous/essential submodules, relative projectivity and
// injectivity, and the rad(End) theorems.
//
// Quantifiers over "all submodules" range over an enumerated lattice.  An
// incomplete lattice never yields TRUE or FALSE; it yields INCONCLUSIVE.

#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "mfree/algebra.hpp"
#include "mfree/homalg.hpp"
#include "mfree/meataxe.hpp"
#include "mfree/module.hpp"

namespace mfree {

enum class Truth { True, False, Inconclusive };

struct Verdict {
  Truth truth = Truth::Inconclusive;
  std::string detail;  ///< witness for FALSE, reason for INCONCLUSIVE

  static Verdict yes() { return {Truth::True, {}}; }
  static Verdict no(std::string witness) { return {Truth::False, std::move(witness)}; }
  static Verdict unknown(std::string reason) { return {Truth::Inconclusive, std::move(reason)}; }

  bool is_true() const noexcept { return truth == Truth::True; }
  bool is_false() const noexcept { return truth == Truth::False; }

  std::string str() const {
    switch (truth) {
      case Truth::True: return "TRUE";
      case Truth::False: return "FALSE(" + detail + ")";
      case Truth::Inconclusive: return "INCONCLUSIVE(" + detail + ")";
    }
    return "?";
  }
};

struct LatticeOptions {
  std::size_t node_cap = 4096;
  std::uint64_t sweep_cap = std::uint64_t{1} << 16;  ///< max q^dim for the cyclic sweep
};

struct SubmoduleLattice {
  ModuleOverAlgebra module;
  std::vector<Subspace> nodes;
  bool complete = false;
  std::string reason;
  std::unordered_map<std::vector<Elt>, std::size_t, VectorHash> index;

  std::optional<std::size_t> find(const Subspace& s) const {
    auto it = index.find(s.key());
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  bool add(Subspace s) {
    if (index.count(s.key())) return false;
    index.emplace(s.key(), nodes.size());
    nodes.push_back(std::move(s));
    return true;
  }

  const Subspace& full() const { return nodes[*find(Subspace::full(module.field, module.dim))]; }

  /// Proper nodes contained in no other proper node.
  std::vector<std::size_t> maximal_nodes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].is_full()) continue;
      bool maximal = true;
      for (std::size_t j = 0; j < nodes.size() && maximal; ++j)
        if (j != i && !nodes[j].is_full() && nodes[j].dim() > nodes[i].dim() && nodes[j].contains(nodes[i])) maximal = false;
      if (maximal) out.push_back(i);
    }
    return out;
  }

  /// Nonzero nodes containing no other nonzero node.
  std::vector<std::size_t> minimal_nodes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].is_zero()) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < nodes.size() && minimal; ++j)
        if (j != i && !nodes[j].is_zero() && nodes[j].dim() < nodes[i].dim() && nodes[i].contains(nodes[j])) minimal = false;
      if (minimal) out.push_back(i);
    }
    return out;
  }

  /// Covering pairs (lower, upper).
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = 0; b < nodes.size(); ++b) {
        if (nodes[b].dim() <= nodes[a].dim() || !nodes[b].contains(nodes[a])) continue;
        bool cover = true;
        for (std::size_t c = 0; c < nodes.size() && cover; ++c) {
          if (nodes[c].dim() <= nodes[a].dim() || nodes[c].dim() >= nodes[b].dim()) continue;
          if (nodes[c].contains(nodes[a]) && nodes[b].contains(nodes[c])) cover = false;
        }
        if (cover) out.emplace_back(a, b);
      }
    return out;
  }
};

/// All submodules: every cyclic submodule, closed under sums.
inline SubmoduleLattice submodule_lattice(const ModuleOverAlgebra& m, const LatticeOptions& opts = {}) {
  SubmoduleLattice lat;
  lat.module = m;
  lat.add(Subspace::zero(m.field, m.dim));
  lat.add(Subspace::full(m.field, m.dim));
  std::uint64_t total = 1;
  bool sweepable = true;
  for (std::size_t i = 0; i < m.dim; ++i) {
    total *= m.field->q();
    if (total > opts.sweep_cap) {
      sweepable = false;
      break;
    }
  }
  if (!sweepable) {
    lat.complete = false;
    lat.reason = "q^dim exceeds the sweep cap";
    for (std::size_t i = 0; i < m.dim; ++i) {
      std::vector<Elt> e(m.dim, 0);
      e[i] = 1;
      lat.add(spin_vector(m, e));
    }
    return lat;
  }
  bool capped = false;
  std::vector<std::size_t> cyclic;
  for_each_projective_point(*m.field, m.dim, [&](const std::vector<Elt>& v) {
    if (lat.add(spin_vector(m, v))) cyclic.push_back(lat.nodes.size() - 1);
    if (lat.nodes.size() > opts.node_cap) {
      capped = true;
      return false;
    }
    return true;
  });
  // Every submodule is a sum of cyclic ones, so joining each node with the
  // cyclic submodules reaches all of them.
  for (std::size_t i = 0; i < lat.nodes.size() && !capped; ++i)
    for (std::size_t j : cyclic) {
      if (lat.nodes[i].contains(lat.nodes[j])) continue;
      lat.add(lat.nodes[i].sum(lat.nodes[j]));
      if (lat.nodes.size() > opts.node_cap) {
        capped = true;
        break;
      }
    }
  lat.complete = !capped;
  if (capped) lat.reason = "node cap " + std::to_string(opts.node_cap) + " exceeded";
  return lat;
}

// ---------------------------------------------------------------------------
// Radical and socle

struct StructureReport {
  Subspace radical;
  Subspace socle;
  std::size_t cosocle_dim = 0;
  std::vector<std::size_t> socle_mult_vector;
  std::optional<bool> self_projective, self_injective, radical_superfluous, socle_essential;
};

inline std::vector<ModuleOverAlgebra> simple_modules(const Inventory& inv) {
  require(inv.certified, ErrorKind::UncertifiedInventory, "inventory is not certified");
  std::vector<ModuleOverAlgebra> out;
  for (const auto& r : inv.irreducibles) out.push_back(module_of(r));
  return out;
}

/// rad(M) = ∩ ker f over f: M -> S; soc(M) = Σ im f over f: S -> M.
inline StructureReport radical_and_socle(const ModuleOverAlgebra& m, const std::vector<ModuleOverAlgebra>& simples) {
  StructureReport rep;
  Matrix kernels(m.field, 0, m.dim);
  Matrix images(m.field, 0, m.dim);
  for (const auto& s : simples) {
    for (const auto& f : hom_basis(m, s)) kernels = vstack(kernels, f);
    const auto in = hom_basis(s, m);
    rep.socle_mult_vector.push_back(in.size());
    for (const auto& f : in) images = vstack(images, f.transpose());
  }
  rep.radical = kernel(kernels);
  rep.socle = Subspace::span(images);
  rep.cosocle_dim = m.dim - rep.radical.dim();
  return rep;
}

inline Verdict is_superfluous(const Subspace& n, const SubmoduleLattice& lat) {
  if (!lat.complete) return Verdict::unknown(lat.reason);
  for (const auto& k : lat.nodes)
    if (!k.is_full() && n.sum(k).is_full()) return Verdict::no("complement of dim " + std::to_string(k.dim()));
  return Verdict::yes();
}

inline Verdict is_essential(const Subspace& n, const SubmoduleLattice& lat) {
  if (!lat.complete) return Verdict::unknown(lat.reason);
  for (const auto& k : lat.nodes)
    if (!k.is_zero() && n.intersect(k).is_zero()) return Verdict::no("disjoint node of dim " + std::to_string(k.dim()));
  return Verdict::yes();
}

// ---------------------------------------------------------------------------
// Relative projectivity / injectivity

struct RelativeResult {
  Verdict verdict;
  bool exactness_agrees = true;  ///< Hom-dimension exactness route matched the lifting route at every node
  std::optional<std::size_t> witness_node;
};

/// m is n-projective iff Hom(m, n) -> Hom(m, n/L) is onto for every submodule L.
inline RelativeResult is_relatively_projective(const ModuleOverAlgebra& m, const ModuleOverAlgebra& n,
                                               const SubmoduleLattice& n_lattice) {
  if (!n_lattice.complete) return {Verdict::unknown(n_lattice.reason), true, std::nullopt};
  const auto fs = hom_basis(m, n);
  RelativeResult res{Verdict::yes(), true, std::nullopt};
  for (std::size_t idx = 0; idx < n_lattice.nodes.size(); ++idx) {
    const auto& l = n_lattice.nodes[idx];
    const auto q = quotient(n, l);
    const std::size_t target = hom_dim(m, q.module);
    Matrix flat(m.field, fs.size(), q.module.dim * m.dim);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const Matrix pf = q.projection * fs[i];
      std::copy(pf.data().begin(), pf.data().end(), flat.row(i).begin());
    }
    const bool onto = rank(flat) == target;
    const auto sub = submodule(n, l);
    const bool exact = fs.size() == hom_dim(m, sub.module) + target;
    if (onto != exact) res.exactness_agrees = false;
    if (!onto && res.verdict.is_true()) {
      res.verdict = Verdict::no("quotient by node of dim " + std::to_string(l.dim()));
      res.witness_node = idx;
    }
  }
  return res;
}

/// m is n-injective iff Hom(n, m) -> Hom(K, m) is onto for every submodule K.
inline RelativeResult is_relatively_injective(const ModuleOverAlgebra& m, const ModuleOverAlgebra& n,
                                              const SubmoduleLattice& n_lattice) {
  if (!n_lattice.complete) return {Verdict::unknown(n_lattice.reason), true, std::nullopt};
  const auto fs = hom_basis(n, m);
  RelativeResult res{Verdict::yes(), true, std::nullopt};
  for (std::size_t idx = 0; idx < n_lattice.nodes.size(); ++idx) {
    const auto& k = n_lattice.nodes[idx];
    const auto sub = submodule(n, k);
    const std::size_t target = hom_dim(sub.module, m);
    Matrix flat(m.field, fs.size(), m.dim * k.dim());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const Matrix fi = fs[i] * sub.inclusion;
      std::copy(fi.data().begin(), fi.data().end(), flat.row(i).begin());
    }
    const bool onto = rank(flat) == target;
    const auto q = quotient(n, k);
    const bool exact = fs.size() == hom_dim(q.module, m) + target;
    if (onto != exact) res.exactness_agrees = false;
    if (!onto && res.verdict.is_true()) {
      res.verdict = Verdict::no("restriction to node of dim " + std::to_string(k.dim()));
      res.witness_node = idx;
    }
  }
  return res;
}

/// Full structure report with all four flags.
inline StructureReport structure_report(const ModuleOverAlgebra& m, const SubmoduleLattice& lat,
                                        const std::vector<ModuleOverAlgebra>& simples) {
  auto rep = radical_and_socle(m, simples);
  if (lat.complete) {
    rep.self_projective = is_relatively_projective(m, m, lat).verdict.is_true();
    rep.self_injective = is_relatively_injective(m, m, lat).verdict.is_true();
    rep.radical_superfluous = is_superfluous(rep.radical, lat).is_true();
    rep.socle_essential = is_essential(rep.socle, lat).is_true();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Theorem verifiers

enum class Flavor { Projective, Injective };

inline std::string_view to_string(Flavor f) { return f == Flavor::Projective ? "projective" : "injective"; }

struct RadEndReport {
  Flavor flavor = Flavor::Projective;
  std::size_t end_dim = 0;
  std::size_t rad_end_dim = 0;
  std::size_t top_end_dim = 0;  ///< dim End(cosoc M) or dim End(soc M)
  bool holds = false;
};

namespace detail {

inline void establish_hypotheses(const ModuleOverAlgebra& m, const SubmoduleLattice& lat, const StructureReport& sr,
                                 Flavor flavor) {
  require(lat.complete, ErrorKind::PreconditionFailed, "lattice incomplete: " + lat.reason);
  if (flavor == Flavor::Projective) {
    require(is_relatively_projective(m, m, lat).verdict.is_true(), ErrorKind::PreconditionFailed, "M is not self-projective");
    require(is_superfluous(sr.radical, lat).is_true(), ErrorKind::PreconditionFailed, "rad(M) is not superfluous");
  } else {
    require(is_relatively_injective(m, m, lat).verdict.is_true(), ErrorKind::PreconditionFailed, "M is not self-injective");
    require(is_essential(sr.socle, lat).is_true(), ErrorKind::PreconditionFailed, "soc(M) is not essential");
  }
}

}  // namespace detail

/// dim End(M) - dim rad End(M) = dim End(cosoc M) (projective flavor) or
/// dim End(soc M) (injective flavor), after establishing the hypotheses.
inline RadEndReport verify_rad_end_theorem(const ModuleOverAlgebra& m, const SubmoduleLattice& lat,
                                           const std::vector<ModuleOverAlgebra>& simples, Flavor flavor,
                                           const MeataxeOptions& mopts = {}) {
  const auto sr = radical_and_socle(m, simples);
  detail::establish_hypotheses(m, lat, sr, flavor);
  RadEndReport r;
  r.flavor = flavor;
  const auto end = end_algebra(m);
  r.end_dim = end.dim();
  r.rad_end_dim = algebra_radical(end, mopts).dim();
  if (flavor == Flavor::Projective) {
    r.top_end_dim = hom_dim(quotient(m, sr.radical).module, quotient(m, sr.radical).module);
  } else {
    const auto soc = submodule(m, sr.socle).module;
    r.top_end_dim = hom_dim(soc, soc);
  }
  r.holds = r.end_dim - r.rad_end_dim == r.top_end_dim;
  return r;
}

struct RadEndCharacterization {
  Flavor flavor = Flavor::Projective;
  bool exhaustive = false;  ///< false: SAMPLED
  std::size_t checked = 0;
  std::size_t counterexamples = 0;
  std::size_t rad_end_dim = 0;

  bool holds() const noexcept { return counterexamples == 0; }
};

/// rad(End M) = {f : im f superfluous} (projective) or {f : ker f essential}
/// (injective), checked elementwise over End(M).
inline RadEndCharacterization verify_lemma_rad_end_characterization(const ModuleOverAlgebra& m, const SubmoduleLattice& lat,
                                                                    const std::vector<ModuleOverAlgebra>& simples,
                                                                    Flavor flavor, const MeataxeOptions& mopts = {},
                                                                    std::uint64_t seed = 42) {
  const auto sr = radical_and_socle(m, simples);
  detail::establish_hypotheses(m, lat, sr, flavor);
  const auto end = end_algebra(m);
  const auto rad = algebra_radical(end, mopts);
  RadEndCharacterization out;
  out.flavor = flavor;
  out.rad_end_dim = rad.dim();
  const Field& F = *m.field;
  auto check = [&](const std::vector<Elt>& c) {
    const Matrix f = end.element(c);
    const bool in_rad = rad.contains(c);
    bool property;
    if (flavor == Flavor::Projective) {
      const auto im = image_of(f);
      require(lat.find(im).has_value(), ErrorKind::InvalidArgument, "image of an endomorphism is not a lattice node");
      property = is_superfluous(im, lat).is_true();
    } else {
      const auto ker = kernel(f);
      require(lat.find(ker).has_value(), ErrorKind::InvalidArgument, "kernel of an endomorphism is not a lattice node");
      property = is_essential(ker, lat).is_true();
    }
    ++out.checked;
    if (in_rad != property) ++out.counterexamples;
    return true;
  };
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < end.dim(); ++i) {
    total *= F.q();
    if (total > (1u << 12)) small = false;
  }
  if (small) {
    out.exhaustive = true;
    for_each_vector(F, end.dim(), check);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elt> pick(0, F.q() - 1);
    for (int s = 0; s < 1000; ++s) {
      std::vector<Elt> c(end.dim());
      for (auto& x : c) x = pick(rng);
      check(c);
    }
    // Radical elements are rare under uniform sampling; sweep them explicitly.
    for (std::size_t r = 0; r < rad.dim(); ++r) {
      std::vector<Elt> c(rad.basis().row(r).begin(), rad.basis().row(r).end());
      check(c);
    }
  }
  return out;
}

/// A node K with n = w ⊕ K, if one exists.
inline std::optional<std::size_t> find_complement(const Subspace& w, const SubmoduleLattice& lat) {
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    const auto& k = lat.nodes[i];
    if (k.dim() + w.dim() != lat.module.dim) continue;
    if (w.intersect(k).is_zero()) return i;
  }
  return std::nullopt;
}

/// Injective homomorphisms m -> n (all of them when Hom is small, else the
/// injective basis elements and random combinations).
inline std::vector<Matrix> find_embeddings(const ModuleOverAlgebra& m, const ModuleOverAlgebra& n, std::size_t limit = 16,
                                           std::uint64_t seed = 42) {
  const auto fs = hom_basis(m, n);
  std::vector<Matrix> out;
  if (fs.empty() || m.dim == 0) return out;
  const Field& F = *m.field;
  auto consider = [&](const std::vector<Elt>& c) {
    Matrix f(m.field, n.dim, m.dim);
    for (std::size_t i = 0; i < fs.size(); ++i) f.add_scaled(c[i], fs[i]);
    if (rank(f) == m.dim) out.push_back(std::move(f));
    return out.size() < limit;
  };
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    total *= F.q();
    if (total > (1u << 12)) small = false;
  }
  if (small) {
    for_each_projective_point(F, fs.size(), consider);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elt> pick(0, F.q() - 1);
    for (int s = 0; s < 256 && out.size() < limit; ++s) {
      std::vector<Elt> c(fs.size());
      for (auto& x : c) x = pick(rng);
      consider(c);
    }
  }
  return out;
}

}  // namespace mfree
