#pragma once

// Intertwiner spaces, endomorphism algebras, socle multiplicities, and the
// Hecke algebra as a convolution algebra together with its map onto
// End_G(ind_H^G eta).

#include <string>
#include <vector>

#include "mfree/algebra.hpp"
#include "mfree/meataxe.hpp"
#include "mfree/module.hpp"
#include "mfree/rep.hpp"

namespace mfree {

struct HomSpace {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<Matrix> basis;  ///< target_dim x source_dim intertwiners

  std::size_t dim() const noexcept { return basis.size(); }
};

/// Hom_G(pi, rho): every T with T pi(s) = rho(s) T on the generators.
inline HomSpace hom_space(const Representation& pi, const Representation& rho) {
  require(pi.group() == rho.group(), ErrorKind::GroupMismatch, "hom between representations of different groups");
  require(pi.field() == rho.field(), ErrorKind::CtxMismatch, "hom between representations over different fields");
  return {pi.dim(), rho.dim(), hom_basis(module_of(pi), module_of(rho))};
}

/// Every basis element intertwines on every group element, not just generators.
inline bool verify_intertwiners(const HomSpace& hs, const Representation& pi, const Representation& rho) {
  for (const auto& t : hs.basis)
    for (std::size_t g = 0; g < pi.group()->order(); ++g)
      if (!(t * pi.image(g) == rho.image(g) * t)) return false;
  Matrix flat(pi.field(), hs.dim(), hs.source_dim * hs.target_dim);
  for (std::size_t i = 0; i < hs.dim(); ++i)
    std::copy(hs.basis[i].data().begin(), hs.basis[i].data().end(), flat.row(i).begin());
  return rank(flat) == hs.dim();
}

inline MatrixAlgebra end_algebra(const Representation& rho) {
  auto hs = hom_space(rho, rho);
  auto a = MatrixAlgebra::from_basis(rho.field(), rho.dim(), std::move(hs.basis));
  require(a.has_unit(), ErrorKind::InvalidArgument, "endomorphism algebra lacks the identity");
  return a;
}

inline MatrixAlgebra end_algebra(const ModuleOverAlgebra& m) {
  auto a = MatrixAlgebra::from_basis(m.field, m.dim, hom_basis(m, m));
  return a;
}

/// Entry i = dim Hom_G(inventory_i, rho): socle multiplicities.
inline std::vector<std::size_t> multiplicity_vector(const Representation& rho, const Inventory& inv) {
  require(inv.certified, ErrorKind::UncertifiedInventory, "inventory is not certified absolutely irreducible");
  require(inv.group == rho.group(), ErrorKind::GroupMismatch, "inventory of a different group");
  std::vector<std::size_t> out;
  for (const auto& pi : inv.irreducibles) out.push_back(hom_space(pi, rho).dim());
  return out;
}

/// Multiplicities over the algebraic closure from a possibly non-split
/// inventory.  Over a finite field an irreducible S with dim End(S) = d
/// becomes d distinct Galois-conjugate absolutely irreducible summands, each
/// occurring in rho-bar with the same multiplicity dim Hom(S, rho) / d.
inline std::vector<std::size_t> closure_multiplicity_vector(const Representation& rho, const Inventory& inv) {
  require(inv.group == rho.group(), ErrorKind::GroupMismatch, "inventory of a different group");
  require(inv.end_dims.size() == inv.size(), ErrorKind::UncertifiedInventory, "inventory lacks endomorphism dimensions");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const std::size_t h = hom_space(inv.irreducibles[i], rho).dim();
    require(h % inv.end_dims[i] == 0, ErrorKind::InvalidArgument, "Hom dimension not divisible by dim End(S)");
    out.push_back(h / inv.end_dims[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hecke algebra

/// Bi-equivariant function G -> End(eta), stored at every element.
struct HeckeElement {
  std::vector<Matrix> values;
};

struct HeckeAlgebra {
  Subgroup sub;
  Representation eta;
  DoubleCosetDecomposition double_cosets;
  std::vector<HeckeElement> basis;
  std::vector<std::size_t> support;  ///< double-coset position of each basis element
  std::vector<Elt> structure_constants;  ///< (i*d + j)*d + k
  MatrixAlgebra algebra;  ///< faithful left-regular matrix model

  std::size_t dim() const noexcept { return basis.size(); }
  Elt c(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return structure_constants[(i * dim() + j) * dim() + k];
  }
};

struct HeckeOptions {
  bool highest_coset_reps = false;  ///< sum over the other choice of H\G representatives
  std::size_t max_dim = 64;
};

namespace detail {

inline HeckeElement convolve(const HeckeAlgebra& hk, const HeckeElement& a, const HeckeElement& b,
                             const std::vector<std::size_t>& right_reps) {
  const auto& g = *hk.sub.parent;
  const FieldPtr& f = hk.eta.field();
  const std::size_t d = hk.eta.dim();
  HeckeElement out{std::vector<Matrix>(g.order(), Matrix(f, d, d))};
  for (std::size_t x : right_reps) {
    const Matrix& bx = b.values[x];
    if (bx.is_zero()) continue;
    const std::size_t xi = g.inv(x);
    for (std::size_t y = 0; y < g.order(); ++y) {
      const Matrix& ay = a.values[g.mul(y, xi)];
      if (ay.is_zero()) continue;
      out.values[y] = out.values[y] + ay * bx;
    }
  }
  return out;
}

}  // namespace detail

/// Convolution Hecke algebra of (G, H, eta): functions with
/// Delta(h2 g h1) = eta(h2) Delta(g) eta(h1), product summed over H\G.
inline HeckeAlgebra hecke_algebra_convolution(const Subgroup& h, const Representation& eta, const HeckeOptions& opts = {}) {
  require(eta.group() == h.group, ErrorKind::GroupMismatch, "eta must be a representation of the subgroup");
  const auto& g = *h.parent;
  const FieldPtr& f = eta.field();
  const std::size_t d = eta.dim();
  HeckeAlgebra hk;
  hk.sub = h;
  hk.eta = eta;
  hk.double_cosets = double_cosets(h, h);
  const auto& dc = hk.double_cosets;
  require(d == 1 || d * dc.representatives.size() <= opts.max_dim, ErrorKind::SizeCapExceeded,
          "Hecke algebra exceeds the size cap");

  for (std::size_t pos = 0; pos < dc.representatives.size(); ++pos) {
    const std::size_t s = dc.representatives[pos];
    const std::size_t si = g.inv(s);
    // eta(x) X = X eta(s^-1 x s) for x in H ∩ sHs^-1.
    std::vector<SylvesterBlock> blocks;
    for (std::size_t x : h.members) {
      const std::size_t y = g.mul(g.mul(si, x), s);
      if (!h.contains(y)) continue;
      blocks.push_back({eta.image(h.to_view(x)), eta.image(h.to_view(y))});
    }
    const auto sols = unflatten(solve_linear_system(blocks), d, d);
    if (sols.empty()) continue;
    // Decompose each element of HsH as h2 s h1.
    std::vector<std::pair<std::size_t, std::size_t>> decomp(g.order(), {Subgroup::npos, Subgroup::npos});
    for (std::size_t a : h.members)
      for (std::size_t b : h.members) {
        const std::size_t z = g.mul(g.mul(a, s), b);
        if (decomp[z].first == Subgroup::npos) decomp[z] = {a, b};
      }
    for (const auto& x : sols) {
      HeckeElement e{std::vector<Matrix>(g.order(), Matrix(f, d, d))};
      for (std::size_t z = 0; z < g.order(); ++z) {
        if (decomp[z].first == Subgroup::npos) continue;
        e.values[z] = eta.image(h.to_view(decomp[z].first)) * x * eta.image(h.to_view(decomp[z].second));
      }
      hk.basis.push_back(std::move(e));
      hk.support.push_back(pos);
    }
  }

  // Coordinates from the values at the double-coset representatives.
  const std::size_t n = hk.basis.size();
  const std::size_t nreps = dc.representatives.size();
  auto sample = [&](const HeckeElement& e) {
    std::vector<Elt> v;
    v.reserve(nreps * d * d);
    for (std::size_t s : dc.representatives) v.insert(v.end(), e.values[s].data().begin(), e.values[s].data().end());
    return v;
  };
  Matrix flat(f, n, nreps * d * d);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = sample(hk.basis[i]);
    std::copy(v.begin(), v.end(), flat.row(i).begin());
  }
  const Coordinatizer coords(flat);
  const auto right_reps = right_coset_reps(h, opts.highest_coset_reps);
  hk.structure_constants.assign(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto prod = detail::convolve(hk, hk.basis[i], hk.basis[j], right_reps);
      const auto c = coords.coords(sample(prod));
      // Certify the expansion at every element, not only at representatives.
      for (std::size_t z = 0; z < g.order(); ++z) {
        Matrix expect(f, d, d);
        for (std::size_t k = 0; k < n; ++k) expect.add_scaled(c[k], hk.basis[k].values[z]);
        require(expect == prod.values[z], ErrorKind::InvalidArgument, "Hecke product does not re-expand in the basis");
      }
      for (std::size_t k = 0; k < n; ++k) hk.structure_constants[(i * n + j) * n + k] = c[k];
    }
  std::vector<Matrix> left;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix l(f, n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) l(k, j) = hk.c(i, j, k);
    left.push_back(std::move(l));
  }
  hk.algebra = MatrixAlgebra::from_basis(f, n, std::move(left));
  return hk;
}

inline bool is_commutative(const HeckeAlgebra& hk) {
  const std::size_t n = hk.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (hk.c(i, j, k) != hk.c(j, i, k)) return false;
  return true;
}

/// T_Delta on ind_H^G eta (lowest left-coset representatives t_i):
/// block (j, i) = Delta(t_j^{-1} t_i).
inline Matrix hecke_to_endomorphism(const HeckeAlgebra& hk, const HeckeElement& e) {
  const auto& g = *hk.sub.parent;
  const auto lc = left_cosets(hk.sub);
  const std::size_t m = lc.reps.size(), d = hk.eta.dim();
  Matrix t(hk.eta.field(), m * d, m * d);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) t.set_block(j * d, i * d, e.values[g.mul(g.inv(lc.reps[j]), lc.reps[i])]);
  return t;
}

struct HeckeEndCertificate {
  std::size_t hecke_dim = 0;
  std::size_t end_dim = 0;
  bool hecke_commutative = false;
  bool end_commutative = false;
  bool intertwining = false;
  bool injective = false;
  bool multiplicative = false;

  bool ok() const noexcept {
    return hecke_dim == end_dim && intertwining && injective && multiplicative && hecke_commutative == end_commutative;
  }
};

inline HeckeEndCertificate hecke_vs_end_iso_check(const HeckeAlgebra& hk, const Representation& induced) {
  HeckeEndCertificate cert;
  cert.hecke_dim = hk.dim();
  cert.hecke_commutative = is_commutative(hk);
  const auto end = end_algebra(induced);
  cert.end_dim = end.dim();
  cert.end_commutative = is_commutative(end);
  std::vector<Matrix> ts;
  for (const auto& e : hk.basis) ts.push_back(hecke_to_endomorphism(hk, e));
  cert.intertwining = true;
  for (const auto& t : ts)
    for (std::size_t s : induced.group()->generators())
      if (!(t * induced.image(s) == induced.image(s) * t)) cert.intertwining = false;
  const std::size_t n = induced.dim();
  Matrix flat(induced.field(), ts.size(), n * n);
  for (std::size_t i = 0; i < ts.size(); ++i) std::copy(ts[i].data().begin(), ts[i].data().end(), flat.row(i).begin());
  cert.injective = rank(flat) == ts.size();
  cert.multiplicative = true;
  for (std::size_t i = 0; i < ts.size() && cert.multiplicative; ++i)
    for (std::size_t j = 0; j < ts.size(); ++j) {
      Matrix expect(induced.field(), n, n);
      for (std::size_t k = 0; k < ts.size(); ++k) expect.add_scaled(hk.c(i, j, k), ts[k]);
      if (!(ts[i] * ts[j] == expect)) {
        cert.multiplicative = false;
        break;
      }
    }
  return cert;
}

inline HeckeEndCertificate hecke_vs_end_iso_check(const Subgroup& h, const Representation& eta, std::size_t max_induced = 256) {
  const auto hk = hecke_algebra_convolution(h, eta);
  return hecke_vs_end_iso_check(hk, induce(eta, h, max_induced));
}

struct GelfandTrickResult {
  bool fixes_basis = false;   ///< f∘iota = f on every basis function
  bool commutative = false;   ///< direct commutativity of the Hecke algebra
  bool consistent() const noexcept { return !fixes_basis || commutative; }
};

inline GelfandTrickResult check_gelfand_trick(const HeckeAlgebra& hk, const AntiInvolution& iota) {
  require(iota.group == hk.sub.parent, ErrorKind::GroupMismatch, "anti-involution on a different group");
  GelfandTrickResult r;
  r.fixes_basis = true;
  for (const auto& e : hk.basis) {
    for (std::size_t g = 0; g < e.values.size(); ++g)
      if (!(e.values[iota(g)] == e.values[g])) {
        r.fixes_basis = false;
        break;
      }
    if (!r.fixes_basis) break;
  }
  r.commutative = is_commutative(hk);
  return r;
}

}  // namespace mfree
