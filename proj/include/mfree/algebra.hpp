#pragma once

#include <memory>
#include <vector>

#include "mfree/matrix.hpp"

namespace mfree {

/// Subalgebra of square matrices given by a basis, with certified structure
/// constants: b_i b_j = sum_k c(i,j,k) b_k.
class MatrixAlgebra {
 public:
  MatrixAlgebra() = default;

  static MatrixAlgebra from_basis(const FieldPtr& f, std::size_t ambient_dim, std::vector<Matrix> basis) {
    MatrixAlgebra a;
    a.field_ = f;
    a.ambient_ = ambient_dim;
    a.basis_ = std::move(basis);
    const std::size_t d = a.basis_.size();
    Matrix flat(f, d, ambient_dim * ambient_dim);
    for (std::size_t i = 0; i < d; ++i) {
      require(a.basis_[i].rows() == ambient_dim && a.basis_[i].cols() == ambient_dim, ErrorKind::ShapeMismatch,
              "algebra basis element shape");
      std::copy(a.basis_[i].data().begin(), a.basis_[i].data().end(), flat.row(i).begin());
    }
    const Coordinatizer coords(flat);
    a.c_.assign(d * d * d, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Matrix prod = a.basis_[i] * a.basis_[j];
        bool inside = false;
        const auto c = coords.coords(prod.data(), &inside);
        require(inside, ErrorKind::InvalidArgument, "basis is not closed under multiplication");
        for (std::size_t k = 0; k < d; ++k) a.c_[(i * d + j) * d + k] = c[k];
      }
    bool unit_inside = false;
    if (d > 0) {
      a.unit_coords_ = coords.coords(Matrix::identity(f, ambient_dim).data(), &unit_inside);
    }
    a.has_unit_ = unit_inside;
    a.coords_ = std::make_shared<Coordinatizer>(coords);
    return a;
  }

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  const std::vector<Matrix>& basis() const noexcept { return basis_; }
  bool has_unit() const noexcept { return has_unit_; }
  const std::vector<Elt>& unit_coords() const noexcept { return unit_coords_; }

  Elt structure_constant(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return c_[(i * dim() + j) * dim() + k];
  }

  Matrix element(const std::vector<Elt>& coeffs) const {
    Matrix m(field_, ambient_, ambient_);
    for (std::size_t i = 0; i < dim(); ++i) m.add_scaled(coeffs[i], basis_[i]);
    return m;
  }

  /// Coordinates of a member matrix; throws if outside the algebra.
  std::vector<Elt> coords(const Matrix& m) const { return coords_->coords(m.data()); }

  /// Product of coordinate vectors through the structure constants.
  std::vector<Elt> multiply(const std::vector<Elt>& x, const std::vector<Elt>& y) const {
    const Field& F = *field_;
    const std::size_t d = dim();
    std::vector<Elt> out(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const Elt xy = F.mul(x[i], y[j]);
        if (!xy) continue;
        for (std::size_t k = 0; k < d; ++k) out[k] = F.add(out[k], F.mul(xy, structure_constant(i, j, k)));
      }
    }
    return out;
  }

  /// Left-regular representation matrices L_i (column k, row j: c(i,j,->)).
  std::vector<Matrix> left_regular() const {
    std::vector<Matrix> out;
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i) {
      Matrix l(field_, d, d);
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) l(k, j) = structure_constant(i, j, k);
      out.push_back(std::move(l));
    }
    return out;
  }

 private:
  FieldPtr field_;
  std::size_t ambient_ = 0;
  std::vector<Matrix> basis_;
  std::vector<Elt> c_;
  std::vector<Elt> unit_coords_;
  bool has_unit_ = false;
  std::shared_ptr<const Coordinatizer> coords_;
};

inline bool is_commutative(const MatrixAlgebra& a) {
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (a.structure_constant(i, j, k) != a.structure_constant(j, i, k)) return false;
  return true;
}

/// Matrix algebra isomorphic to `a` acting on itself by left multiplication.
inline MatrixAlgebra regular_matrix_algebra(const MatrixAlgebra& a) {
  require(a.has_unit(), ErrorKind::PreconditionFailed, "left-regular model needs a unital algebra");
  return MatrixAlgebra::from_basis(a.field(), a.dim(), a.left_regular());
}

}  // namespace mfree
