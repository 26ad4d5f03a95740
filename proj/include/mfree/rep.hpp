#pragma once

// Matrix representations of enumerated groups, acting on column vectors,
// and the functors between them.

#include <random>
#include <string>
#include <vector>

#include "mfree/group.hpp"
#include "mfree/matrix.hpp"

namespace mfree {

class Representation {
 public:
  Representation() = default;

  /// Images for every group element, in element-index order.
  Representation(GroupPtr group, FieldPtr field, std::vector<Matrix> images)
      : group_(std::move(group)), field_(std::move(field)), images_(std::move(images)) {
    require(images_.size() == group_->order(), ErrorKind::ShapeMismatch, "one image per group element required");
    dim_ = images_.empty() ? 0 : images_[0].rows();
    for (const auto& m : images_) {
      require(m.rows() == dim_ && m.cols() == dim_, ErrorKind::ShapeMismatch, "images must be square of equal size");
      require(m.field() == field_, ErrorKind::CtxMismatch, "image over a different field");
    }
  }

  /// Extend generator images to the whole group along the Cayley graph.
  /// Correctness requires the generator images to satisfy the group's
  /// relations; check_homomorphism() certifies that.
  static Representation from_generators(const GroupPtr& g, const FieldPtr& f, std::size_t dim,
                                        const std::vector<Matrix>& gen_images) {
    require(gen_images.size() == g->generators().size(), ErrorKind::ShapeMismatch, "one image per generator required");
    std::vector<Matrix> images(g->order());
    std::vector<bool> done(g->order(), false);
    images[g->identity()] = Matrix::identity(f, dim);
    done[g->identity()] = true;
    std::vector<std::size_t> queue{g->identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::size_t x = queue[i];
      for (std::size_t s = 0; s < gen_images.size(); ++s) {
        const std::size_t y = g->mul(x, g->generators()[s]);
        if (done[y]) continue;
        done[y] = true;
        images[y] = images[x] * gen_images[s];
        queue.push_back(y);
      }
    }
    return Representation(g, f, std::move(images));
  }

  const GroupPtr& group() const noexcept { return group_; }
  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const Matrix& image(std::size_t g) const { return images_[g]; }
  const std::vector<Matrix>& images() const noexcept { return images_; }

  std::vector<Matrix> generator_images() const {
    std::vector<Matrix> out;
    for (std::size_t s : group_->generators()) out.push_back(images_[s]);
    return out;
  }

 private:
  GroupPtr group_;
  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<Matrix> images_;
};

/// rho(e) = I and rho(g) rho(h) = rho(gh): exhaustive for |G| <= 300,
/// `samples` random pairs otherwise.
inline bool check_homomorphism(const Representation& rho, std::uint64_t seed = 42, std::size_t samples = 10000) {
  const auto& g = *rho.group();
  if (!rho.image(g.identity()).is_identity()) return false;
  auto ok = [&](std::size_t a, std::size_t b) { return rho.image(a) * rho.image(b) == rho.image(g.mul(a, b)); };
  if (g.order() <= 300) {
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b)
        if (!ok(a, b)) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (std::size_t i = 0; i < samples; ++i)
    if (!ok(pick(rng), pick(rng))) return false;
  return true;
}

/// Cheaper certificate: rho(s) rho(g) = rho(sg) for generators s, all g.
inline bool check_generator_homomorphism(const Representation& rho) {
  const auto& g = *rho.group();
  if (!rho.image(g.identity()).is_identity()) return false;
  for (std::size_t s : g.generators())
    for (std::size_t x = 0; x < g.order(); ++x)
      if (!(rho.image(s) * rho.image(x) == rho.image(g.mul(s, x)))) return false;
  return true;
}

inline Representation one_dimensional(const GroupPtr& g, const FieldPtr& f, const std::vector<Elt>& values) {
  std::vector<Matrix> images;
  images.reserve(g->order());
  for (Elt v : values) images.emplace_back(f, 1, 1, std::vector<Elt>{v});
  return Representation(g, f, std::move(images));
}

inline Representation trivial_rep(const GroupPtr& g, const FieldPtr& f) {
  return one_dimensional(g, f, std::vector<Elt>(g->order(), 1));
}

inline int permutation_parity(const Word& w) {
  std::vector<bool> seen(w.size(), false);
  int parity = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w[j])) {
      seen[j] = true;
      ++len;
    }
    parity ^= static_cast<int>((len + 1) % 2);
  }
  return parity;
}

inline Representation sign_rep(const GroupPtr& g, const FieldPtr& f) {
  require(g->kind() == GroupKind::Permutation, ErrorKind::InvalidArgument, "sign needs a permutation group");
  std::vector<Elt> vals(g->order());
  for (std::size_t i = 0; i < g->order(); ++i) vals[i] = permutation_parity(g->element(i)) ? f->neg(1) : 1;
  return one_dimensional(g, f, vals);
}

/// eta_psi(u) = zeta^{Tr(sum of superdiagonal entries)} on the unitriangular
/// group; zeta must have order 1 (trivial psi) or p = char of the matrix field.
inline Representation gelfand_graev_character(const Subgroup& u, const FieldElement& zeta) {
  const auto& ug = u.group;
  require(ug->kind() == GroupKind::Matrix, ErrorKind::InvalidArgument, "Gelfand-Graev character needs a matrix group");
  const FieldPtr& mf = ug->matrix_field();
  const FieldPtr& rf = zeta.ctx();
  require(zeta.pow(mf->p()).code() == 1, ErrorKind::NoSuchRoot, "zeta must satisfy zeta^p = 1");
  const std::size_t n = ug->matrix_degree();
  std::vector<Elt> vals(ug->order());
  for (std::size_t i = 0; i < ug->order(); ++i) {
    const Word& w = ug->element(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c <= r; ++c)
        require(w[r * n + c] == (r == c ? 1 : 0), ErrorKind::InvalidArgument, "subgroup is not unitriangular");
    Elt s = 0;
    for (std::size_t r = 0; r + 1 < n; ++r) s = mf->add(s, static_cast<Elt>(w[r * n + r + 1]));
    const Elt tr = mf->trace_to_prime(s);  // prime-field code = integer lift
    vals[i] = rf->pow(zeta.code(), tr);
  }
  for (std::size_t a = 0; a < ug->order(); ++a)
    for (std::size_t b = 0; b < ug->order(); ++b)
      require(rf->mul(vals[a], vals[b]) == vals[ug->mul(a, b)], ErrorKind::InvalidArgument,
              "Gelfand-Graev character is not multiplicative");
  return one_dimensional(ug, rf, vals);
}

/// Convenience: zeta = root of unity of the requested order (1 or p) in rf.
inline Representation gelfand_graev_character(const Subgroup& u, const FieldPtr& rf, std::uint64_t zeta_order) {
  const std::uint32_t p = u.group->matrix_field()->p();
  require(zeta_order == 1 || zeta_order == p, ErrorKind::InvalidArgument, "gg(order) needs order 1 or p");
  return gelfand_graev_character(u, root_of_unity(rf, zeta_order));
}

/// Character of a cyclic group: c0^i -> gamma^{exponent * i}, with c0 the
/// lowest-index generator and gamma a primitive |H|-th root of unity.
inline Representation multiplicative_character(const GroupPtr& h, const FieldPtr& f, std::uint64_t exponent) {
  const std::size_t n = h->order();
  std::size_t c0 = h->order();
  for (std::size_t i = 0; i < n; ++i)
    if (h->element_order(i) == n) {
      c0 = i;
      break;
    }
  require(c0 < n, ErrorKind::InvalidArgument, "multiplicative character needs a cyclic group");
  const Elt gamma = f->root_of_unity(n);
  std::vector<Elt> vals(n, 0);
  std::size_t x = h->identity();
  for (std::size_t i = 0; i < n; ++i) {
    vals[x] = f->pow(gamma, (exponent % n) * i % n);
    x = h->mul(x, c0);
  }
  return one_dimensional(h, f, vals);
}

inline Representation restrict(const Representation& rho, const Subgroup& h) {
  require(rho.group() == h.parent, ErrorKind::GroupMismatch, "restriction to a subgroup of a different group");
  std::vector<Matrix> images;
  images.reserve(h.order());
  for (std::size_t m : h.members) images.push_back(rho.image(m));
  return Representation(h.group, rho.field(), std::move(images));
}

/// ind_H^G eta on the basis t_i ⊗ v, with t_i the lowest-index left-coset
/// representatives: g t_i = t_j h puts eta(h) in block (j, i).
inline Representation induce(const Representation& eta, const Subgroup& h, std::size_t max_dim = 256) {
  require(eta.group() == h.group, ErrorKind::GroupMismatch, "inducing a representation of a different group");
  const auto& g = h.parent;
  const LeftCosets lc = left_cosets(h);
  const std::size_t idx = lc.reps.size(), d = eta.dim();
  require(idx * d <= max_dim, ErrorKind::SizeCapExceeded,
          "induced dimension " + std::to_string(idx * d) + " exceeds cap " + std::to_string(max_dim));
  std::vector<Matrix> images;
  images.reserve(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) {
    Matrix m(eta.field(), idx * d, idx * d);
    for (std::size_t i = 0; i < idx; ++i) {
      const std::size_t y = g->mul(x, lc.reps[i]);
      const std::size_t j = lc.coset_of[y];
      const std::size_t hh = g->mul(g->inv(lc.reps[j]), y);
      m.set_block(j * d, i * d, eta.image(h.to_view(hh)));
    }
    images.push_back(std::move(m));
  }
  return Representation(g, eta.field(), std::move(images));
}

/// Coinduction realized as induction (finite index: ind ≅ coind).
inline Representation coinduce(const Representation& eta, const Subgroup& h, std::size_t max_dim = 256) {
  return induce(eta, h, max_dim);
}

/// G acting on the left cosets of H by permutation matrices.
inline Representation permutation_rep(const Subgroup& h, const FieldPtr& f) {
  const auto& g = h.parent;
  const LeftCosets lc = left_cosets(h);
  const std::size_t n = lc.reps.size();
  std::vector<Matrix> images;
  images.reserve(g->order());
  for (std::size_t x = 0; x < g->order(); ++x) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(lc.coset_of[g->mul(x, lc.reps[i])], i) = 1;
    images.push_back(std::move(m));
  }
  return Representation(g, f, std::move(images));
}

inline Representation regular_rep(const GroupPtr& g, const FieldPtr& f) {
  require(g->order() <= 256, ErrorKind::SizeCapExceeded, "regular representation needs |G| <= 256");
  const std::size_t n = g->order();
  std::vector<Matrix> images;
  images.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    Matrix m(f, n, n);
    for (std::size_t y = 0; y < n; ++y) m(g->mul(x, y), y) = 1;
    images.push_back(std::move(m));
  }
  return Representation(g, f, std::move(images));
}

/// rho*(g) = rho(g^{-1})^T.
inline Representation dual(const Representation& rho) {
  const auto& g = *rho.group();
  std::vector<Matrix> images;
  images.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) images.push_back(rho.image(g.inv(x)).transpose());
  return Representation(rho.group(), rho.field(), std::move(images));
}

inline Representation tensor(const Representation& a, const Representation& b) {
  require(a.group() == b.group(), ErrorKind::GroupMismatch, "tensor of representations of different groups");
  require(a.field() == b.field(), ErrorKind::CtxMismatch, "tensor over different fields");
  std::vector<Matrix> images;
  for (std::size_t x = 0; x < a.group()->order(); ++x) images.push_back(kron(a.image(x), b.image(x)));
  return Representation(a.group(), a.field(), std::move(images));
}

inline Representation direct_sum(const Representation& a, const Representation& b) {
  require(a.group() == b.group(), ErrorKind::GroupMismatch, "direct sum of representations of different groups");
  require(a.field() == b.field(), ErrorKind::CtxMismatch, "direct sum over different fields");
  std::vector<Matrix> images;
  for (std::size_t x = 0; x < a.group()->order(); ++x) images.push_back(block_diagonal(a.image(x), b.image(x)));
  return Representation(a.group(), a.field(), std::move(images));
}

/// Representation of a product group pulled back from the i-th factor.
inline Representation inflate_from_component(const Representation& rho, const GroupPtr& prod, std::size_t i) {
  require(prod->kind() == GroupKind::Product && prod->components()[i] == rho.group(), ErrorKind::GroupMismatch,
          "inflation from a non-component");
  std::vector<Matrix> images;
  for (std::size_t x = 0; x < prod->order(); ++x) images.push_back(rho.image(static_cast<std::size_t>(prod->element(x)[i])));
  return Representation(prod, rho.field(), std::move(images));
}

}  // namespace mfree
