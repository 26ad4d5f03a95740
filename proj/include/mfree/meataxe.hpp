#pragma once

// Composition-factor machinery: Norton irreducibility test, chopping,
// isomorphism of simples, irreducible inventories and algebra radicals.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mfree/algebra.hpp"
#include "mfree/module.hpp"

namespace mfree {

struct MeataxeOptions {
  std::uint64_t seed = 42;
  std::size_t budget = 200;             ///< random algebra samples per irreducibility test
  std::size_t max_kernel_points = 64;   ///< projective points of a kernel we are willing to spin
  std::size_t max_dim = 256;
};

struct IrreducibilityResult {
  bool irreducible = false;
  std::optional<Subspace> witness;  ///< proper nonzero invariant subspace when reducible
  std::string certificate;
};

namespace detail {

class RandomAlgebraElements {
 public:
  RandomAlgebraElements(const ModuleOverAlgebra& m, std::mt19937_64& rng) : m_(m), rng_(rng), words_(m.gens) {}

  Matrix next() {
    const Field& F = *m_.field;
    if (words_.size() < 40 && !words_.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, words_.size() - 1);
      words_.push_back(words_[pick(rng_)] * words_[pick(rng_)]);
    }
    Matrix a(m_.field, m_.dim, m_.dim);
    if (words_.empty()) return a;
    std::uniform_int_distribution<std::size_t> pick(0, words_.size() - 1);
    std::uniform_int_distribution<Elt> coeff(1, F.q() - 1);
    const std::size_t terms = std::min<std::size_t>(3, words_.size());
    for (std::size_t t = 0; t < terms; ++t) a.add_scaled(coeff(rng_), words_[pick(rng_)]);
    return a;
  }

 private:
  const ModuleOverAlgebra& m_;
  std::mt19937_64& rng_;
  std::vector<Matrix> words_;
};

inline std::uint64_t projective_points(std::uint64_t q, std::size_t n, std::uint64_t cap) {
  std::uint64_t total = 0, pw = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += pw;
    if (total > cap) return cap + 1;
    pw *= q;
    if (pw > cap) pw = cap + 1;
  }
  return total;
}

/// Some vector in `s` (combination c of the basis) spins to a proper subspace?
inline std::optional<Subspace> find_proper_spin(const ModuleOverAlgebra& m, const Subspace& s, bool all_points) {
  std::optional<Subspace> found;
  auto try_vec = [&](const std::vector<Elt>& c) {
    std::vector<Elt> v(m.dim, 0);
    for (std::size_t r = 0; r < s.dim(); ++r) detail::axpy(*m.field, v, c[r], s.basis().row(r));
    auto sp = spin_vector(m, v);
    if (!sp.is_full()) {
      found = std::move(sp);
      return false;
    }
    return true;
  };
  if (all_points) {
    for_each_projective_point(*m.field, s.dim(), try_vec);
  } else {
    std::vector<Elt> c(s.dim(), 0);
    c[0] = 1;
    try_vec(c);
  }
  return found;
}

}  // namespace detail

/// Norton-style irreducibility test.  Reducible answers always carry an
/// invariant-subspace witness; irreducible answers carry the certificate of
/// the algebra element used (or of the exhaustive sweep).
inline IrreducibilityResult is_irreducible(const ModuleOverAlgebra& m, std::mt19937_64& rng,
                                           const MeataxeOptions& opts = {}) {
  const std::size_t n = m.dim;
  require(n >= 1, ErrorKind::InvalidArgument, "irreducibility of the zero module");
  if (n == 1) return {true, std::nullopt, "dim 1"};
  const Field& F = *m.field;
  const ModuleOverAlgebra mt = transpose_module(m);
  detail::RandomAlgebraElements sampler(m, rng);

  for (std::size_t sample = 0; sample < opts.budget; ++sample) {
    const Matrix a = sampler.next();
    for (Elt lambda = 0; lambda < F.q(); ++lambda) {
      Matrix b = a;
      for (std::size_t i = 0; i < n; ++i) b(i, i) = F.sub(b(i, i), lambda);
      const Subspace ker = kernel(b);
      if (ker.is_zero()) continue;
      // A single spun kernel vector that stays proper already proves reducibility.
      if (auto w = detail::find_proper_spin(m, ker, false)) return {false, std::move(w), "kernel vector spin"};
      if (detail::projective_points(F.q(), ker.dim(), opts.max_kernel_points) > opts.max_kernel_points) continue;
      if (auto w = detail::find_proper_spin(m, ker, true)) return {false, std::move(w), "kernel vector spin"};
      const Subspace kert = kernel(b.transpose());
      if (auto wt = detail::find_proper_spin(mt, kert, true)) {
        return {false, wt->annihilator(), "transpose kernel spin"};
      }
      return {true, std::nullopt,
              "norton: sample " + std::to_string(sample) + ", shift " + F.format(lambda) + ", nullity " +
                  std::to_string(ker.dim())};
    }
  }
  // Exhaustive fallback for small modules: spin every projective point.
  if (n <= 6 && F.q() <= 4) {
    if (auto w = detail::find_proper_spin(m, Subspace::full(m.field, n), true)) return {false, std::move(w), "exhaustive"};
    return {true, std::nullopt, "exhaustive sweep"};
  }
  fail(ErrorKind::RandomBudgetExhausted,
       "irreducibility of a " + std::to_string(n) + "-dim module undecided after " + std::to_string(opts.budget) + " samples");
}

inline IrreducibilityResult is_irreducible(const ModuleOverAlgebra& m, const MeataxeOptions& opts = {}) {
  std::mt19937_64 rng(opts.seed);
  return is_irreducible(m, rng, opts);
}

/// Simples are isomorphic iff a nonzero intertwiner exists.
inline bool iso_test(const ModuleOverAlgebra& s1, const ModuleOverAlgebra& s2) {
  if (s1.dim != s2.dim || s1.gens.size() != s2.gens.size() || s1.field != s2.field) return false;
  return hom_dim(s1, s2) > 0;
}

/// Jordan-Hölder multiplicity: counts composition factors, not Hom dimensions.
struct CompositionFactor {
  ModuleOverAlgebra module;
  std::size_t composition_multiplicity = 0;
  std::size_t end_dim = 0;
  bool absolutely_irreducible = false;
};

struct CompositionReport {
  std::vector<CompositionFactor> factors;
  std::size_t total_dim = 0;

  std::size_t accounted_dim() const {
    std::size_t s = 0;
    for (const auto& f : factors) s += f.module.dim * f.composition_multiplicity;
    return s;
  }
};

namespace detail {

inline void chop_into(const ModuleOverAlgebra& m, std::mt19937_64& rng, const MeataxeOptions& opts,
                      std::vector<ModuleOverAlgebra>& out) {
  if (m.dim == 0) return;
  auto r = is_irreducible(m, rng, opts);
  if (r.irreducible) {
    out.push_back(m);
    return;
  }
  chop_into(submodule(m, *r.witness).module, rng, opts, out);
  chop_into(quotient(m, *r.witness).module, rng, opts, out);
}

}  // namespace detail

inline CompositionReport chop(const ModuleOverAlgebra& m, const MeataxeOptions& opts = {}) {
  require(m.dim <= opts.max_dim, ErrorKind::SizeCapExceeded, "chop supports dim <= " + std::to_string(opts.max_dim));
  std::mt19937_64 rng(opts.seed);
  std::vector<ModuleOverAlgebra> simples;
  detail::chop_into(m, rng, opts, simples);
  CompositionReport rep;
  rep.total_dim = m.dim;
  for (auto& s : simples) {
    bool matched = false;
    for (auto& f : rep.factors) {
      if (iso_test(f.module, s)) {
        ++f.composition_multiplicity;
        matched = true;
        break;
      }
    }
    if (!matched) {
      CompositionFactor f;
      f.end_dim = hom_dim(s, s);
      f.absolutely_irreducible = f.end_dim == 1;
      f.module = std::move(s);
      f.composition_multiplicity = 1;
      rep.factors.push_back(std::move(f));
    }
  }
  require(rep.accounted_dim() == m.dim, ErrorKind::InvalidArgument, "chop dimension accounting failed");
  return rep;
}

/// Irreducible representations of a group over a field, from the regular module.
struct Inventory {
  GroupPtr group;
  FieldPtr field;
  std::vector<Representation> irreducibles;     ///< sorted by (dim, discovery order)
  std::vector<std::size_t> regular_multiplicity;  ///< composition multiplicity in the regular module
  std::vector<std::size_t> end_dims;              ///< dim End(S); all 1 over a splitting field
  bool certified = false;                         ///< complete and absolutely irreducible

  std::size_t size() const noexcept { return irreducibles.size(); }
};

/// With `require_split` false, factors that are not absolutely irreducible are
/// kept (certified stays false) so multiplicities can be read off by descent.
inline Inventory inventory_from_report(const GroupPtr& g, const FieldPtr& f, const CompositionReport& rep,
                                       bool require_split = true) {
  std::vector<std::size_t> order(rep.factors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rep.factors[a].module.dim < rep.factors[b].module.dim; });
  Inventory inv;
  inv.group = g;
  inv.field = f;
  for (std::size_t i : order) {
    const auto& fac = rep.factors[i];
    if (!fac.absolutely_irreducible && require_split) {
      fail(ErrorKind::SplittingFieldInsufficient,
           f->spec() + " does not split " + g->name() + ": a " + std::to_string(fac.module.dim) +
               "-dim factor has End of dimension " + std::to_string(fac.end_dim) + "; enlarge the extension degree");
    }
    inv.irreducibles.push_back(Representation::from_generators(g, f, fac.module.dim, fac.module.gens));
    inv.regular_multiplicity.push_back(fac.composition_multiplicity);
    inv.end_dims.push_back(fac.end_dim);
  }
  inv.certified = std::all_of(inv.end_dims.begin(), inv.end_dims.end(), [](std::size_t d) { return d == 1; });
  return inv;
}

inline Inventory irreducible_inventory(const GroupPtr& g, const FieldPtr& f, const MeataxeOptions& opts = {},
                                       bool require_split = true) {
  require(g->order() <= 256, ErrorKind::SizeCapExceeded, "inventory needs |G| <= 256");
  if (g->order() == 1) {
    Inventory inv{g, f, {trivial_rep(g, f)}, {1}, {1}, true};
    return inv;
  }
  const auto reg = module_of(regular_rep(g, f));
  return inventory_from_report(g, f, chop(reg, opts), require_split);
}

/// Jacobson radical: elements acting as zero on every composition factor of
/// the (faithful) natural module.
inline Subspace algebra_radical(const MatrixAlgebra& a, const MeataxeOptions& opts = {}) {
  const std::size_t d = a.dim();
  if (d == 0) return Subspace::zero(a.field(), 0);
  const auto m = ModuleOverAlgebra::make(a.field(), a.ambient_dim(), a.basis(), Provenance::Algebra);
  const auto rep = chop(m, opts);
  std::size_t cols = 0;
  for (const auto& f : rep.factors) cols += f.module.dim * f.module.dim;
  Matrix sys(a.field(), d, cols);
  std::size_t off = 0;
  for (const auto& f : rep.factors) {
    const std::size_t s = f.module.dim * f.module.dim;
    for (std::size_t i = 0; i < d; ++i)
      std::copy(f.module.gens[i].data().begin(), f.module.gens[i].data().end(), sys.row(i).begin() + static_cast<std::ptrdiff_t>(off));
    off += s;
  }
  return kernel(sys.transpose());
}

/// Span of products x*y for x in I (coordinates), y in J, inside the algebra.
inline Subspace ideal_product(const MatrixAlgebra& a, const Subspace& x, const Subspace& y) {
  Matrix rows(a.field(), x.dim() * y.dim(), a.dim());
  std::size_t r = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    std::vector<Elt> xi(x.basis().row(i).begin(), x.basis().row(i).end());
    for (std::size_t j = 0; j < y.dim(); ++j) {
      std::vector<Elt> yj(y.basis().row(j).begin(), y.basis().row(j).end());
      const auto p = a.multiply(xi, yj);
      std::copy(p.begin(), p.end(), rows.row(r++).begin());
    }
  }
  return Subspace::span(rows);
}

}  // namespace mfree
