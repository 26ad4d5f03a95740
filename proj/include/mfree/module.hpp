#pragma once

// Modules over a matrix algebra given by acting generators, with the
// submodule/quotient constructions and the intertwiner solver they share.

#include <string>
#include <vector>

#include "mfree/matrix.hpp"
#include "mfree/rep.hpp"

namespace mfree {

enum class Provenance { GroupRep, EndAlgebra, Quotient, Submodule, Algebra, Transpose };

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::GroupRep: return "group-rep";
    case Provenance::EndAlgebra: return "end-algebra";
    case Provenance::Quotient: return "quotient";
    case Provenance::Submodule: return "submodule";
    case Provenance::Algebra: return "algebra";
    case Provenance::Transpose: return "transpose";
  }
  return "?";
}

struct ModuleOverAlgebra {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<Matrix> gens;  ///< acting matrices on column vectors
  Provenance provenance = Provenance::GroupRep;

  static ModuleOverAlgebra make(FieldPtr f, std::size_t dim, std::vector<Matrix> gens, Provenance p) {
    for (const auto& a : gens) {
      require(a.rows() == dim && a.cols() == dim, ErrorKind::ShapeMismatch, "acting matrices must be dim x dim");
      require(a.field() == f, ErrorKind::CtxMismatch, "acting matrix over a different field");
    }
    return {std::move(f), dim, std::move(gens), p};
  }
};

inline ModuleOverAlgebra module_of(const Representation& rho) {
  return ModuleOverAlgebra::make(rho.field(), rho.dim(), rho.generator_images(), Provenance::GroupRep);
}

/// Same space, transposed action (the dual module up to the antipode).
inline ModuleOverAlgebra transpose_module(const ModuleOverAlgebra& m) {
  std::vector<Matrix> t;
  for (const auto& a : m.gens) t.push_back(a.transpose());
  return ModuleOverAlgebra::make(m.field, m.dim, std::move(t), Provenance::Transpose);
}

/// Basis of Hom(src, dst): all T (dst.dim x src.dim) with T src_s = dst_s T.
inline std::vector<Matrix> hom_basis(const ModuleOverAlgebra& src, const ModuleOverAlgebra& dst) {
  require(src.field == dst.field, ErrorKind::CtxMismatch, "hom between modules over different fields");
  require(src.gens.size() == dst.gens.size(), ErrorKind::ShapeMismatch, "hom between modules with different generator counts");
  const std::size_t n = dst.dim, m = src.dim;
  if (n == 0 || m == 0) return {};
  if (src.gens.empty()) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < n * m; ++i) {
      Matrix t(src.field, n, m);
      t.data()[i] = 1;
      out.push_back(std::move(t));
    }
    return out;
  }
  std::vector<SylvesterBlock> blocks;
  for (std::size_t s = 0; s < src.gens.size(); ++s) blocks.push_back({dst.gens[s], src.gens[s]});
  return unflatten(solve_linear_system(blocks), n, m);
}

inline std::size_t hom_dim(const ModuleOverAlgebra& src, const ModuleOverAlgebra& dst) { return hom_basis(src, dst).size(); }

inline bool is_invariant(const ModuleOverAlgebra& m, const Subspace& w) {
  for (const auto& a : m.gens)
    for (std::size_t r = 0; r < w.dim(); ++r)
      if (!w.contains(a.apply(w.basis().row(r)))) return false;
  return true;
}

/// Smallest invariant subspace containing the seeds.
inline Subspace spin(const ModuleOverAlgebra& m, const Subspace& seeds) {
  require(seeds.ambient_dim() == m.dim, ErrorKind::AmbientMismatch, "seed vectors outside the module");
  EchelonBuilder eb(m.field, m.dim);
  std::vector<std::vector<Elt>> queue;
  for (std::size_t r = 0; r < seeds.dim(); ++r) {
    std::vector<Elt> v(seeds.basis().row(r).begin(), seeds.basis().row(r).end());
    if (eb.insert(v)) queue.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < queue.size() && eb.dim() < m.dim; ++i) {
    for (const auto& a : m.gens) {
      auto w = a.apply(queue[i]);
      if (eb.insert(w)) queue.push_back(std::move(w));
    }
  }
  return eb.to_subspace();
}

inline Subspace spin_vector(const ModuleOverAlgebra& m, const std::vector<Elt>& v) {
  Matrix row(m.field, 1, m.dim, v);
  return spin(m, Subspace::span(row));
}

struct SubmoduleView {
  ModuleOverAlgebra module;
  Matrix inclusion;  ///< dim(M) x dim(W): columns are the echelon basis
  Subspace space;
};

/// Action on an invariant subspace in its echelon basis.
inline SubmoduleView submodule(const ModuleOverAlgebra& m, const Subspace& w) {
  const std::size_t k = w.dim();
  std::vector<Matrix> acts;
  for (const auto& a : m.gens) {
    Matrix s(m.field, k, k);
    for (std::size_t r = 0; r < k; ++r) {
      const auto img = a.apply(w.basis().row(r));
      require(w.contains(img), ErrorKind::InvalidArgument, "subspace is not invariant");
      const auto c = w.coordinates(img);
      for (std::size_t i = 0; i < k; ++i) s(i, r) = c[i];
    }
    acts.push_back(std::move(s));
  }
  return {ModuleOverAlgebra::make(m.field, k, std::move(acts), Provenance::Submodule), w.basis().transpose(), w};
}

struct QuotientView {
  ModuleOverAlgebra module;
  Matrix projection;  ///< dim(M/W) x dim(M)
  std::vector<std::size_t> complement;  ///< non-pivot coordinates spanning the complement
};

/// M/W with basis the images of the standard vectors at W's non-pivot columns.
inline QuotientView quotient(const ModuleOverAlgebra& m, const Subspace& w) {
  const std::size_t n = m.dim;
  std::vector<bool> is_pivot(n, false);
  for (auto c : w.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) comp.push_back(c);
  const std::size_t qd = comp.size();
  Matrix proj(m.field, qd, n);
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<Elt> e(n, 0);
    e[t] = 1;
    const auto red = w.reduce(std::move(e));
    for (std::size_t i = 0; i < qd; ++i) proj(i, t) = red[comp[i]];
  }
  std::vector<Matrix> acts;
  for (const auto& a : m.gens) {
    Matrix s(m.field, qd, qd);
    for (std::size_t j = 0; j < qd; ++j) {
      std::vector<Elt> col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = a(i, comp[j]);
      const auto red = w.reduce(std::move(col));
      for (std::size_t i = 0; i < qd; ++i) s(i, j) = red[comp[i]];
    }
    acts.push_back(std::move(s));
  }
  return {ModuleOverAlgebra::make(m.field, qd, std::move(acts), Provenance::Quotient), std::move(proj), std::move(comp)};
}

inline ModuleOverAlgebra direct_sum(const ModuleOverAlgebra& a, const ModuleOverAlgebra& b) {
  require(a.gens.size() == b.gens.size(), ErrorKind::ShapeMismatch, "direct sum with different generator counts");
  std::vector<Matrix> acts;
  for (std::size_t s = 0; s < a.gens.size(); ++s) acts.push_back(block_diagonal(a.gens[s], b.gens[s]));
  return ModuleOverAlgebra::make(a.field, a.dim + b.dim, std::move(acts), a.provenance);
}

/// Column space of a linear map, i.e. its image.
inline Subspace image_of(const Matrix& f) { return Subspace::column_span(f); }

}  // namespace mfree
