#pragma once

// Dense exact linear algebra over a Field.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mfree/field.hpp"

namespace mfree {

namespace detail {

/// dst += f * src, elementwise.
inline void axpy(const Field& F, std::span<Elt> dst, Elt f, std::span<const Elt> src) {
  if (f == 0) return;
  const std::size_t n = dst.size();
  if (F.p() == 2 && F.k() == 1) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
    return;
  }
  if (F.is_prime_field()) {
    const std::uint64_t p = F.p();
    for (std::size_t i = 0; i < n; ++i) {
      if (src[i] != 0) dst[i] = static_cast<Elt>((dst[i] + std::uint64_t{f} * src[i]) % p);
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (src[i] != 0) dst[i] = F.add(dst[i], F.mul(f, src[i]));
  }
}

inline void scale(const Field& F, std::span<Elt> v, Elt f) {
  if (f == 1) return;
  for (auto& x : v) x = F.mul(f, x);
}

}  // namespace detail

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elt> data)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    require(data_.size() == rows_ * cols_, ErrorKind::ShapeMismatch, "entry count does not match shape");
  }

  static Matrix identity(const FieldPtr& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Build from small integer literals (reduced mod p) for tests and specs.
  static Matrix from_ints(const FieldPtr& f, const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      require(rows[i].size() == c, ErrorKind::ShapeMismatch, "ragged matrix literal");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = f->from_int(rows[i][j]);
    }
    return m;
  }

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Elt& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Elt operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<Elt> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elt> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Elt>& data() const noexcept { return data_; }
  std::vector<Elt>& data() noexcept { return data_; }

  bool is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elt x) { return x == 0; });
  }

  bool is_identity() const noexcept {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix scaled(Elt f) const {
    Matrix m = *this;
    detail::scale(*field_, m.data_, f);
    return m;
  }

  /// Rows [r0, r0+n) and columns [c0, c0+m).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t n, std::size_t m) const {
    Matrix b(field_, n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  /// Matrix times column vector.
  std::vector<Elt> apply(std::span<const Elt> v) const {
    std::vector<Elt> out(rows_, 0);
    const Field& F = *field_;
    for (std::size_t i = 0; i < rows_; ++i) {
      Elt acc = 0;
      const auto r = row(i);
      for (std::size_t j = 0; j < cols_; ++j)
        if (r[j] != 0 && v[j] != 0) acc = F.add(acc, F.mul(r[j], v[j]));
      out[i] = acc;
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.field_ == b.field_, ErrorKind::CtxMismatch, "matrix product over different fields");
    require(a.cols_ == b.rows_, ErrorKind::ShapeMismatch, "matrix product shape");
    Matrix c(a.field_, a.rows_, b.cols_);
    const Field& F = *a.field_;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      auto out = c.row(i);
      for (std::size_t k = 0; k < a.cols_; ++k) detail::axpy(F, out, a(i, k), b.row(k));
    }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.field_ == b.field_, ErrorKind::CtxMismatch, "matrix sum over different fields");
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::ShapeMismatch, "matrix sum shape");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_->add(a.data_[i], b.data_[i]);
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.field_ == b.field_, ErrorKind::CtxMismatch, "matrix difference over different fields");
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorKind::ShapeMismatch, "matrix difference shape");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_->sub(a.data_[i], b.data_[i]);
    return c;
  }

  /// this += f * other
  void add_scaled(Elt f, const Matrix& other) { detail::axpy(*field_, data_, f, other.data_); }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += field_->format((*this)(i, j));
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elt> data_;
};

struct RrefResult {
  Matrix form;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form (Gauss-Jordan).
inline RrefResult rref(Matrix m) {
  const Field& F = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
    detail::scale(F, m.row(r), F.inv(m(r, c)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != r && m(i, c) != 0) detail::axpy(F, m.row(i), F.neg(m(i, c)), m.row(r));
    }
    pivots.push_back(c);
    ++r;
  }
  const std::size_t rank = r;
  return {m.block(0, 0, rank, m.cols()), rank, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), ErrorKind::ShapeMismatch, "vstack column mismatch");
  require(a.field() == b.field(), ErrorKind::CtxMismatch, "vstack over different fields");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  std::copy(a.data().begin(), a.data().end(), out.data().begin());
  std::copy(b.data().begin(), b.data().end(), out.data().begin() + static_cast<std::ptrdiff_t>(a.data().size()));
  return out;
}

inline Matrix hstack(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), ErrorKind::ShapeMismatch, "hstack row mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  require(a.field() == b.field(), ErrorKind::CtxMismatch, "kron over different fields");
  const Field& F = *a.field();
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Elt x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = F.mul(x, b(k, l));
    }
  return out;
}

inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  require(a.field() == b.field(), ErrorKind::CtxMismatch, "direct sum over different fields");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

/// Inverse of a square matrix; throws DivisionByZero when singular.
inline Matrix inverse(const Matrix& m) {
  require(m.is_square(), ErrorKind::ShapeMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  auto r = rref(hstack(m, Matrix::identity(m.field(), n)));
  require(r.rank >= n && r.pivots[n - 1] == n - 1, ErrorKind::DivisionByZero, "singular matrix");
  return r.form.block(0, n, n, n);
}

/// A subspace of F^n, held as the canonical RREF basis (rows).
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const FieldPtr& f, std::size_t ambient) { return Subspace(Matrix(f, 0, ambient), {}); }
  static Subspace full(const FieldPtr& f, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(Matrix::identity(f, ambient), std::move(piv));
  }
  /// Row span of an arbitrary matrix.
  static Subspace span(const Matrix& rows) {
    auto r = rref(rows);
    return Subspace(std::move(r.form), std::move(r.pivots));
  }
  /// Span of the columns of a matrix (the image of the linear map).
  static Subspace column_span(const Matrix& m) { return span(m.transpose()); }

  const FieldPtr& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  /// v minus its projection along the echelon basis; zero iff v is in the span.
  std::vector<Elt> reduce(std::vector<Elt> v) const {
    const Field& F = *field();
    for (std::size_t r = 0; r < dim(); ++r) {
      const Elt c = v[pivots_[r]];
      if (c != 0) detail::axpy(F, v, F.neg(c), basis_.row(r));
    }
    return v;
  }

  bool contains(std::span<const Elt> v) const {
    require(v.size() == ambient_dim(), ErrorKind::AmbientMismatch, "vector length");
    const auto red = reduce(std::vector<Elt>(v.begin(), v.end()));
    return std::all_of(red.begin(), red.end(), [](Elt x) { return x == 0; });
  }

  bool contains(const Subspace& other) const {
    check(other);
    for (std::size_t r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_.row(r))) return false;
    return true;
  }

  /// Coordinates of a member vector relative to the echelon basis.
  std::vector<Elt> coordinates(std::span<const Elt> v) const {
    std::vector<Elt> c(dim());
    for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && a.basis_.data() == b.basis_.data() && a.dim() == b.dim();
  }

  Subspace sum(const Subspace& other) const {
    check(other);
    return span(vstack(basis_, other.basis_));
  }

  /// Zassenhaus: rref [[A, A], [B, 0]]; rows with zero left half span A ∩ B.
  Subspace intersect(const Subspace& other) const {
    check(other);
    const std::size_t n = ambient_dim();
    Matrix z(field(), dim() + other.dim(), 2 * n);
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t j = 0; j < n; ++j) {
        z(r, j) = basis_(r, j);
        z(r, n + j) = basis_(r, j);
      }
    for (std::size_t r = 0; r < other.dim(); ++r)
      for (std::size_t j = 0; j < n; ++j) z(dim() + r, j) = other.basis_(r, j);
    auto red = rref(std::move(z));
    std::size_t first = 0;
    while (first < red.rank && red.pivots[first] < n) ++first;
    return span(red.form.block(first, n, red.rank - first, n));
  }

  /// {x : <b, x> = 0 for all basis rows b}.
  Subspace annihilator() const;

  /// Flat key for hashing/deduplication (canonical because RREF is unique).
  const std::vector<Elt>& key() const noexcept { return basis_.data(); }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  void check(const Subspace& other) const {
    if (ambient_dim() != other.ambient_dim())
      fail(ErrorKind::AmbientMismatch,
           "subspaces of F^" + std::to_string(ambient_dim()) + " and F^" + std::to_string(other.ambient_dim()));
    require(field() == other.field(), ErrorKind::CtxMismatch, "subspaces over different fields");
  }

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space {v : m v = 0}.
inline Subspace kernel(const Matrix& m) {
  const auto r = rref(m);
  const std::size_t n = m.cols();
  const Field& F = *m.field();
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  Matrix basis(m.field(), n - r.rank, n);
  std::size_t out = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(out, free) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) basis(out, r.pivots[i]) = F.neg(r.form(i, free));
    ++out;
  }
  return Subspace::span(basis);
}

inline Subspace Subspace::annihilator() const { return kernel(basis_); }

inline std::size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

struct SylvesterBlock {
  Matrix a;  ///< n x n, acts on the left of X
  Matrix b;  ///< m x m, acts on the right of X
};

/// All n x m matrices X with A_i X = X B_i for every block, as a subspace of
/// flattened (row-major) X.
inline Subspace solve_linear_system(std::span<const SylvesterBlock> blocks) {
  require(!blocks.empty(), ErrorKind::ShapeMismatch, "no constraint blocks");
  const FieldPtr& f = blocks[0].a.field();
  const std::size_t n = blocks[0].a.rows(), m = blocks[0].b.rows();
  const Field& F = *f;
  Matrix sys(f, blocks.size() * n * m, n * m);
  std::size_t base = 0;
  for (const auto& blk : blocks) {
    require(blk.a.rows() == n && blk.a.cols() == n && blk.b.rows() == m && blk.b.cols() == m,
            ErrorKind::ShapeMismatch, "Sylvester block shapes");
    require(blk.a.field() == f && blk.b.field() == f, ErrorKind::CtxMismatch, "Sylvester blocks over different fields");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t row = base + i * m + j;
        for (std::size_t k = 0; k < n; ++k) {
          const Elt x = blk.a(i, k);
          if (x) sys(row, k * m + j) = F.add(sys(row, k * m + j), x);
        }
        for (std::size_t k = 0; k < m; ++k) {
          const Elt y = blk.b(k, j);
          if (y) sys(row, i * m + k) = F.sub(sys(row, i * m + k), y);
        }
      }
    base += n * m;
  }
  return kernel(sys);
}

/// Unflatten basis rows of a solution subspace into n x m matrices.
inline std::vector<Matrix> unflatten(const Subspace& s, std::size_t n, std::size_t m) {
  std::vector<Matrix> out;
  out.reserve(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const auto row = s.basis().row(r);
    out.emplace_back(s.field(), n, m, std::vector<Elt>(row.begin(), row.end()));
  }
  return out;
}

/// Incrementally built semi-echelon basis; used by spinning.
class EchelonBuilder {
 public:
  EchelonBuilder(FieldPtr f, std::size_t ambient) : field_(std::move(f)), ambient_(ambient) {}

  /// Reduce v against the current rows; if independent, normalize, store and
  /// return true.  The stored row is written back into v.
  bool insert(std::vector<Elt>& v) {
    const Field& F = *field_;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elt c = v[pivots_[r]];
      if (c != 0) detail::axpy(F, v, F.neg(c), rows_[r]);
    }
    std::size_t piv = 0;
    while (piv < ambient_ && v[piv] == 0) ++piv;
    if (piv == ambient_) return false;
    detail::scale(F, v, F.inv(v[piv]));
    rows_.push_back(v);
    pivots_.push_back(piv);
    return true;
  }

  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<std::vector<Elt>>& rows() const noexcept { return rows_; }

  Subspace to_subspace() const {
    Matrix m(field_, rows_.size(), ambient_);
    for (std::size_t r = 0; r < rows_.size(); ++r) std::copy(rows_[r].begin(), rows_[r].end(), m.row(r).begin());
    return Subspace::span(m);
  }

 private:
  FieldPtr field_;
  std::size_t ambient_;
  std::vector<std::vector<Elt>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Expresses vectors in a fixed (independent) basis; throws if not in span.
class Coordinatizer {
 public:
  explicit Coordinatizer(const Matrix& basis_rows) : n_(basis_rows.rows()) {
    auto r = rref(hstack(basis_rows, Matrix::identity(basis_rows.field(), n_)));
    require(r.rank == n_ && (n_ == 0 || r.pivots[n_ - 1] < basis_rows.cols()), ErrorKind::InvalidArgument,
            "basis is linearly dependent");
    echelon_ = r.form.block(0, 0, n_, basis_rows.cols());
    transform_ = r.form.block(0, basis_rows.cols(), n_, n_);
    pivots_ = std::move(r.pivots);
    basis_ = basis_rows;
  }

  /// Coefficients c with sum c_i basis_i = v, or nullopt-like empty vector
  /// flagged through `ok` when v is outside the span.
  std::vector<Elt> coords(std::span<const Elt> v, bool* ok = nullptr) const {
    const Field& F = *basis_.field();
    std::vector<Elt> red(v.begin(), v.end());
    std::vector<Elt> c_ech(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      c_ech[r] = red[pivots_[r]];
      if (c_ech[r]) detail::axpy(F, red, F.neg(c_ech[r]), echelon_.row(r));
    }
    const bool inside = std::all_of(red.begin(), red.end(), [](Elt x) { return x == 0; });
    if (ok) *ok = inside;
    else require(inside, ErrorKind::InvalidArgument, "vector outside the span");
    std::vector<Elt> c(n_, 0);
    for (std::size_t r = 0; r < n_; ++r) detail::axpy(F, c, c_ech[r], transform_.row(r));
    return c;
  }

  std::size_t size() const noexcept { return n_; }

 private:
  std::size_t n_;
  Matrix basis_, echelon_, transform_;
  std::vector<std::size_t> pivots_;
};

struct VectorHash {
  std::size_t operator()(const std::vector<Elt>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elt x : v) h = (h ^ x) * 1099511628211ull;
    return h ^ v.size();
  }
};

/// Calls fn(v) for every nonzero vector of F^n whose first nonzero entry is 1.
inline void for_each_projective_point(const Field& F, std::size_t n, const std::function<bool(const std::vector<Elt>&)>& fn) {
  std::vector<Elt> v(n, 0);
  for (std::size_t lead = n; lead-- > 0;) {
    // v = (0,...,0,1,*,...,*) with the 1 at position `lead`, counted from the left.
    const std::size_t pos = n - 1 - lead;
    std::fill(v.begin(), v.end(), 0);
    v[pos] = 1;
    const std::size_t tail = n - pos - 1;
    std::vector<Elt> digits(tail, 0);
    while (true) {
      for (std::size_t i = 0; i < tail; ++i) v[pos + 1 + i] = digits[i];
      if (!fn(v)) return;
      std::size_t i = 0;
      while (i < tail && ++digits[i] == F.q()) digits[i++] = 0;
      if (i == tail) break;
    }
  }
}

/// Calls fn(v) for every vector of F^n (including zero).
inline void for_each_vector(const Field& F, std::size_t n, const std::function<bool(const std::vector<Elt>&)>& fn) {
  std::vector<Elt> v(n, 0);
  while (true) {
    if (!fn(v)) return;
    std::size_t i = 0;
    while (i < n && ++v[i] == F.q()) v[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace mfree
