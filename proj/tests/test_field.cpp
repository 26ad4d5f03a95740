#include <gtest/gtest.h>

#include <random>

#include "mfree/field.hpp"

using namespace mfree;

namespace {

// Schoolbook product of digit vectors reduced by the monic defining polynomial.
Elt oracle_mul(const Field& F, Elt a, Elt b) {
  const auto p = F.p();
  const auto k = F.k();
  const auto da = F.digits(a), db = F.digits(b);
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
  const auto& f = F.defining_poly();
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::uint64_t c = prod[d];
    if (!c) continue;
    for (std::uint32_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * f[i]) % p;
  }
  std::vector<std::uint32_t> out(k);
  for (std::uint32_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return F.from_digits(out);
}

Elt oracle_add(const Field& F, Elt a, Elt b) {
  auto da = F.digits(a);
  const auto db = F.digits(b);
  for (std::size_t i = 0; i < da.size(); ++i) da[i] = (da[i] + db[i]) % F.p();
  return F.from_digits(da);
}

}  // namespace

TEST(Field, PrimeFieldHasLinearDefiningPoly) {
  const auto f = make_field(2, 1);
  EXPECT_EQ(f->q(), 2u);
  EXPECT_EQ(f->defining_poly(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Field, Gf4UsesTheUniqueIrreducibleQuadratic) {
  const auto f = make_field(2, 2);
  EXPECT_EQ(f->defining_poly(), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(Field, DefiningPolyIsIrreducibleAndLexMinimal) {
  for (auto [p, k] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}, {7u, 2u}, {2u, 4u}, {3u, 3u}}) {
    const auto f = make_field(p, k);
    const auto& poly = f->defining_poly();
    ASSERT_EQ(poly.size(), k + 1);
    EXPECT_EQ(poly[k], 1u);
    // No roots in GF(p) and, for k <= 3, that suffices; k = 4 needs no quadratic factor:
    // check by counting elements x with poly(x) = 0 over the constructed field GF(p^k).
    std::size_t roots = 0;
    for (Elt x = 0; x < f->q(); ++x) {
      Elt acc = 0;
      for (std::size_t i = poly.size(); i-- > 0;) acc = f->add(f->mul(acc, x), f->from_int(poly[i]));
      roots += acc == 0;
    }
    EXPECT_EQ(roots, k) << "irreducible poly of degree k splits into k distinct roots over GF(p^k)";
  }
  // Lexicographic minimality for GF(9): x^2+1 is the first irreducible monic quadratic over GF(3).
  EXPECT_EQ(make_field(3, 2)->defining_poly(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(Field, Gf9HasGeneratorOfOrder8) {
  const auto f = make_field(3, 2);
  EXPECT_EQ(f->order(f->generator()), 8u);
  std::size_t generators = 0;
  for (Elt a = 1; a < 9; ++a) {
    std::uint64_t n = 1;
    Elt x = a;
    while (x != 1) {
      x = oracle_mul(*f, x, a);
      ++n;
    }
    generators += n == 8;
    EXPECT_EQ(f->order(a), n);
  }
  EXPECT_EQ(generators, 4u);  // phi(8)
}

TEST(Field, Examples) {
  const auto f4 = make_field(2, 2);
  const Elt x = f4->from_digits({0, 1}), x1 = f4->from_digits({1, 1});
  EXPECT_EQ(f4->mul(x, x1), 1u);
  EXPECT_EQ(f4->trace_to_prime(x), 1u);

  const auto f7 = make_field(7, 1);
  EXPECT_EQ(f7->inv(3), 5u);
  const auto r3 = f7->root_of_unity(3);
  EXPECT_EQ(f7->order(r3), 3u);

  const auto f9 = make_field(3, 2);
  EXPECT_EQ(f9->pow(f9->generator(), 8), 1u);
  EXPECT_EQ(f9->trace_to_prime(0), 0u);

  const auto f5 = make_field(5, 1);
  for (Elt a = 0; a < 5; ++a) EXPECT_EQ(f5->trace_to_prime(a), a);

  const auto w = f4->root_of_unity(3);
  EXPECT_TRUE(w == x || w == x1);
  EXPECT_EQ(make_field(3, 1)->root_of_unity(2), 2u);
}

TEST(Field, Errors) {
  EXPECT_THROW(
      {
        try {
          make_field(4, 1);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::NonPrime);
          throw;
        }
      },
      Error);
  try {
    make_field(2, 21);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeCapExceeded);
  }
  try {
    make_field(3, 1)->root_of_unity(3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSuchRoot);
  }
  try {
    make_field(5, 1)->inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZero);
  }
  const FieldElement a(make_field(2, 2), 1), b(make_field(3, 1), 1);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CtxMismatch);
  }
}

TEST(Field, InterningGivesPointerEquality) {
  EXPECT_EQ(make_field(5, 2), make_field(5, 2));
  EXPECT_NE(Field::make(5, 2), make_field(5, 2));
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldAxioms, MatchPolynomialOracle) {
  const auto [p, k] = GetParam();
  const auto f = make_field(p, k);
  const Field& F = *f;
  const Elt q = F.q();
  if (q <= 16) {
    for (Elt a = 0; a < q; ++a)
      for (Elt b = 0; b < q; ++b) {
        ASSERT_EQ(F.mul(a, b), oracle_mul(F, a, b));
        ASSERT_EQ(F.add(a, b), oracle_add(F, a, b));
        ASSERT_EQ(F.mul(a, b), F.mul(b, a));
        ASSERT_EQ(F.add(a, F.neg(a)), 0u);
        for (Elt c = 0; c < q; ++c) {
          ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
          ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
          ASSERT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
        }
      }
  } else {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Elt> d(0, q - 1);
    for (int i = 0; i < 10000; ++i) {
      const Elt a = d(rng), b = d(rng), c = d(rng);
      ASSERT_EQ(F.mul(a, b), oracle_mul(F, a, b));
      ASSERT_EQ(F.mul(a, b), F.mul(b, a));
      ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
      ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
    }
  }
  if (q <= 1024) {
    for (Elt a = 1; a < q; ++a) ASSERT_EQ(F.mul(F.inv(a), a), 1u);
    for (Elt a = 0; a < q; ++a) {
      const Elt t = F.trace_to_prime(a);
      ASSERT_LT(t, F.p()) << "trace leaves the prime subfield";
      for (Elt b = 0; b < std::min<Elt>(q, 32); ++b) ASSERT_EQ(F.trace_to_prime(F.add(a, b)), F.add(t, F.trace_to_prime(b)));
    }
  }
  for (std::uint64_t n = 1; n <= q - 1; ++n) {
    if ((q - 1) % n) continue;
    const Elt z = F.root_of_unity(n);
    ASSERT_EQ(F.pow(z, n), 1u);
    for (std::uint64_t m = 1; m < n; ++m) ASSERT_NE(F.pow(z, m), 1u) << "root of order " << n;
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{5u, 1u}, std::pair{7u, 1u},
                                           std::pair{2u, 2u}, std::pair{2u, 3u}, std::pair{2u, 4u}, std::pair{3u, 2u},
                                           std::pair{5u, 2u}, std::pair{7u, 2u}, std::pair{17u, 1u}, std::pair{2u, 10u},
                                           std::pair{3u, 7u}));
