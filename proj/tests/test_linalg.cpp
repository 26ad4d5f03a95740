#include <gtest/gtest.h>

#include <random>

#include "mfree/group.hpp"
#include "mfree/matrix.hpp"

using namespace mfree;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, std::mt19937_64& rng, double zero_bias = 0.0) {
  std::uniform_int_distribution<Elt> d(0, f->q() - 1);
  std::bernoulli_distribution z(zero_bias);
  Matrix m(f, r, c);
  for (auto& e : m.data()) e = z(rng) ? 0 : d(rng);
  return m;
}

// Textbook Gauss-Jordan using only scalar field operations.
Matrix naive_rref(Matrix m) {
  const Field& F = *m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    const Elt s = F.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = F.mul(s, m(r, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elt t = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = F.sub(m(i, j), F.mul(t, m(r, j)));
    }
    ++r;
  }
  return m.block(0, 0, r, m.cols());
}

// All n x n matrices X (as flattened codes) with A X = X A for every A.
std::size_t brute_force_commutant(const std::vector<Matrix>& as) {
  const auto& f = as[0].field();
  const std::size_t n = as[0].rows(), q = f->q();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= q;
  std::size_t count = 0;
  std::vector<Elt> x(n * n, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (auto& e : x) {
      e = static_cast<Elt>(c % q);
      c /= q;
    }
    const Matrix X(f, n, n, x);
    bool ok = true;
    for (const auto& a : as)
      if (!(a * X == X * a)) {
        ok = false;
        break;
      }
    count += ok;
  }
  return count;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<FieldPtr> test_fields() { return {make_field(2, 1), make_field(3, 1), make_field(2, 2), make_field(5, 1)}; }

}  // namespace

TEST(Rref, Examples) {
  const auto f5 = make_field(5, 1);
  const auto id = Matrix::identity(f5, 3);
  const auto r = rref(id);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_TRUE(r.form == id);

  const auto z = Matrix(make_field(3, 1), 2, 4);
  EXPECT_EQ(rref(z).rank, 0u);

  const auto f2 = make_field(2, 1);
  const auto m = Matrix::from_ints(f2, {{1, 1}, {1, 1}});
  const auto rm = rref(m);
  EXPECT_EQ(rm.rank, 1u);
  EXPECT_TRUE(rm.form == Matrix::from_ints(f2, {{1, 1}}));
}

TEST(Rref, MatchesNaiveGaussJordanOnEveryField) {
  std::mt19937_64 rng(11);
  for (const auto& f : test_fields())
    for (int t = 0; t < 300; ++t) {
      const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
      const auto m = random_matrix(f, r, c, rng, 0.4);
      const auto fast = rref(m);
      const auto slow = naive_rref(m);
      ASSERT_TRUE(fast.form == slow) << f->spec() << "\n" << m.str();
      ASSERT_EQ(fast.rank, slow.rows());
      ASSERT_TRUE(rref(fast.form).form == fast.form) << "rref not idempotent";
    }
}

TEST(Kernel, Examples) {
  const auto f3 = make_field(3, 1);
  EXPECT_TRUE(kernel(Matrix::identity(f3, 4)).is_zero());
  EXPECT_EQ(kernel(Matrix(f3, 2, 2)).dim(), 2u);
  const auto f2 = make_field(2, 1);
  const auto k = kernel(Matrix::from_ints(f2, {{1, 1}}));
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains(std::vector<Elt>{1, 1}));
}

TEST(Kernel, RankNullityAndAnnihilation) {
  std::mt19937_64 rng(5);
  for (const auto& f : test_fields())
    for (int t = 0; t < 1000; ++t) {
      const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
      const auto m = random_matrix(f, r, c, rng, 0.3);
      const auto k = kernel(m);
      ASSERT_EQ(k.dim() + rank(m), c);
      for (std::size_t i = 0; i < k.dim(); ++i) {
        const auto v = m.apply(k.basis().row(i));
        for (Elt e : v) ASSERT_EQ(e, 0u);
      }
    }
}

TEST(SolveLinearSystem, Examples) {
  const auto f3 = make_field(3, 1);
  const auto i2 = Matrix::identity(f3, 2);
  std::vector<SylvesterBlock> b1{{i2, i2}};
  EXPECT_EQ(solve_linear_system(b1).dim(), 4u);
  std::vector<SylvesterBlock> b2{{i2, Matrix(f3, 2, 2)}};
  EXPECT_TRUE(solve_linear_system(b2).is_zero());

  // S_3 on three points over GF(2): commutant of both generator images.
  const auto f2 = make_field(2, 1);
  const auto t = Matrix::from_ints(f2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  const auto c = Matrix::from_ints(f2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  std::vector<SylvesterBlock> b3{{t, t}, {c, c}};
  const auto sol = solve_linear_system(b3);
  EXPECT_EQ(sol.dim(), 2u);
  EXPECT_EQ(ipow(2, sol.dim()), brute_force_commutant({t, c}));

  std::vector<SylvesterBlock> bad{{i2, Matrix::identity(f3, 3)}, {Matrix::identity(f3, 3), i2}};
  try {
    solve_linear_system(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
}

TEST(SolveLinearSystem, MatchesBruteForceUpToNineUnknowns) {
  std::mt19937_64 rng(3);
  for (const auto& f : {make_field(2, 1), make_field(3, 1)}) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + rng() % 3;
      std::vector<Matrix> as;
      std::vector<SylvesterBlock> blocks;
      const std::size_t nb = 1 + rng() % 2;
      for (std::size_t i = 0; i < nb; ++i) {
        // Sparse-ish matrices keep commutants nontrivial.
        as.push_back(random_matrix(f, n, n, rng, 0.5));
        blocks.push_back({as.back(), as.back()});
      }
      const auto sol = solve_linear_system(blocks);
      ASSERT_EQ(ipow(f->q(), sol.dim()), brute_force_commutant(as)) << f->spec() << " n=" << n;
    }
  }
  // Rectangular: A X = X B with A 3x3, B 2x2 over GF(2) enumerated directly (6 unknowns).
  const auto f2 = make_field(2, 1);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_matrix(f2, 3, 3, rng, 0.5), b = random_matrix(f2, 2, 2, rng, 0.5);
    std::vector<SylvesterBlock> blk{{a, b}};
    const auto sol = solve_linear_system(blk);
    std::size_t count = 0;
    for (std::size_t code = 0; code < 64; ++code) {
      std::vector<Elt> x(6);
      for (std::size_t i = 0; i < 6; ++i) x[i] = (code >> i) & 1;
      const Matrix X(f2, 3, 2, x);
      count += (a * X == X * b);
    }
    ASSERT_EQ(ipow(2, sol.dim()), count);
  }
}

TEST(Kron, Examples) {
  const auto f = make_field(5, 1);
  EXPECT_TRUE(kron(Matrix::identity(f, 2), Matrix::identity(f, 3)) == Matrix::identity(f, 6));
  std::mt19937_64 rng(9);
  const auto a = random_matrix(f, 2, 3, rng);
  EXPECT_TRUE(kron(a, Matrix::identity(f, 1)) == a);
  const auto f3 = make_field(3, 1);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_matrix(f3, 2, 2, rng), y = random_matrix(f3, 2, 2, rng);
    ASSERT_EQ(rank(kron(x, y)), rank(x) * rank(y));
  }
  try {
    kron(Matrix::identity(f, 1), Matrix::identity(f3, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CtxMismatch);
  }
}

TEST(Subspace, Examples) {
  const auto f2 = make_field(2, 1);
  const auto e1 = Subspace::span(Matrix::from_ints(f2, {{1, 0, 0}}));
  const auto e2 = Subspace::span(Matrix::from_ints(f2, {{0, 1, 0}}));
  EXPECT_EQ(e1.sum(e2).dim(), 2u);
  EXPECT_EQ(e1.intersect(e2).dim(), 0u);
  EXPECT_TRUE(e1.sum(Subspace::zero(f2, 3)) == e1);
  EXPECT_TRUE(e1.intersect(Subspace::full(f2, 3)) == e1);
  try {
    (void)e1.sum(Subspace::zero(f2, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbientMismatch);
  }
}

TEST(Subspace, ModularLawAndIntersectionByMembership) {
  std::mt19937_64 rng(21);
  const auto f2 = make_field(2, 1);
  for (int t = 0; t < 200; ++t) {
    const auto a = Subspace::span(random_matrix(f2, rng() % 5, 6, rng));
    const auto b = Subspace::span(random_matrix(f2, rng() % 5, 6, rng));
    const auto c = Subspace::span(random_matrix(f2, rng() % 5, 6, rng));
    const auto ab = a.intersect(b);
    ASSERT_EQ(a.sum(b).dim(), a.dim() + b.dim() - ab.dim());
    // Intersection equals the set of ambient vectors in both.
    std::size_t both = 0;
    for_each_vector(*f2, 6, [&](const std::vector<Elt>& v) {
      both += a.contains(v) && b.contains(v);
      return true;
    });
    ASSERT_EQ(both, ipow(2, ab.dim()));
    // Dedekind: if A <= C then A + (B ∩ C) = (A + B) ∩ C.
    const auto ac = a.intersect(c);
    ASSERT_TRUE(ac.sum(b.intersect(c)) == ac.sum(b).intersect(c));
  }
}

TEST(Subspace, CanonicalFormIsBasisIndependent) {
  std::mt19937_64 rng(2);
  const auto f = make_field(3, 1);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(f, 3, 5, rng);
    const auto g = random_matrix(f, 3, 3, rng);
    if (rank(g) < 3) continue;
    ASSERT_TRUE(Subspace::span(m) == Subspace::span(g * m));
    ASSERT_TRUE(Subspace::span(m).key() == Subspace::span(g * m).key());
  }
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(4);
  for (const auto& f : test_fields())
    for (int t = 0; t < 100; ++t) {
      const auto m = random_matrix(f, 4, 4, rng);
      if (rank(m) < 4) {
        EXPECT_THROW(inverse(m), Error);
        continue;
      }
      ASSERT_TRUE((inverse(m) * m).is_identity());
    }
}
