#include <gtest/gtest.h>

#include <set>

#include "mfree/group.hpp"
#include "mfree/parse.hpp"

using namespace mfree;

namespace {

std::size_t brute_force_classes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t classes = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++classes;
    for (std::size_t y = 0; y < g.order(); ++y) seen[g.mul(g.mul(y, x), g.inv(y))] = true;
  }
  return classes;
}

// Orbits of H x K acting by (h, k) . g = h g k^{-1}, counted directly.
std::multiset<std::size_t> brute_force_double_coset_sizes(const Subgroup& h, const Subgroup& k) {
  const auto& g = *h.parent;
  std::vector<bool> seen(g.order(), false);
  std::multiset<std::size_t> sizes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<std::size_t> orbit;
    for (std::size_t a : h.members)
      for (std::size_t b : k.members) orbit.insert(g.mul(g.mul(a, x), b));
    for (auto y : orbit) seen[y] = true;
    sizes.insert(orbit.size());
  }
  return sizes;
}

}  // namespace

TEST(Groups, SymmetricOrdersAndClasses) {
  EXPECT_EQ(symmetric_group(3)->order(), 6u);
  EXPECT_EQ(symmetric_group(4)->order(), 24u);
  const auto s5 = symmetric_group(5);
  EXPECT_EQ(s5->order(), 120u);
  EXPECT_EQ(brute_force_classes(*s5), 7u);
  EXPECT_EQ(s5->conjugacy_class_count(), 7u);
  EXPECT_EQ(s5->generators().size(), 2u);
}

TEST(Groups, GeneralLinearOrders) {
  EXPECT_EQ(general_linear_group(2, make_field(2, 1))->order(), 6u);
  EXPECT_EQ(general_linear_group(2, make_field(3, 1))->order(), 48u);
  EXPECT_EQ(general_linear_group(2, make_field(5, 1))->order(), 480u);
  EXPECT_EQ(general_linear_group(3, make_field(2, 1))->order(), 168u);
  EXPECT_EQ(general_linear_group(2, make_field(2, 2))->order(), 180u);
}

TEST(Groups, OtherConstructions) {
  EXPECT_EQ(cyclic_group(5)->order(), 5u);
  EXPECT_EQ(dihedral_group(4)->order(), 8u);
  EXPECT_EQ(alternating_group(4)->order(), 12u);
  EXPECT_EQ(quaternion8()->order(), 8u);
  EXPECT_EQ(brute_force_classes(*quaternion8()), 5u);
  EXPECT_EQ(brute_force_classes(*dihedral_group(4)), 5u);
  std::size_t order4 = 0;
  const auto q8 = quaternion8();
  for (std::size_t x = 0; x < 8; ++x) order4 += q8->element_order(x) == 4;
  EXPECT_EQ(order4, 6u);  // Q_8 has six elements of order 4, D_8 only two
  std::size_t d_order4 = 0;
  const auto d8 = dihedral_group(4);
  for (std::size_t x = 0; x < 8; ++x) d_order4 += d8->element_order(x) == 4;
  EXPECT_EQ(d_order4, 2u);
}

TEST(Groups, AxiomAuditPasses) {
  for (const auto& g : {symmetric_group(4), general_linear_group(2, make_field(3, 1)), quaternion8(), alternating_group(4),
                        product_group({symmetric_group(3), cyclic_group(2)})})
    EXPECT_TRUE(audit_group(*g)) << g->name();
}

TEST(Subgroups, Examples) {
  const auto s3 = symmetric_group(3);
  const auto t = s3->index_of(perm_from_cycles(3, {{1, 2}}));
  EXPECT_EQ(subgroup_from_generators(s3, {t}).order(), 2u);

  const auto gl23 = general_linear_group(2, make_field(3, 1));
  EXPECT_EQ(unitriangular_subgroup(gl23).order(), 3u);
  const auto c = cartan_subgroup(gl23);
  EXPECT_EQ(c.order(), 8u);
  std::size_t max_order = 0;
  for (std::size_t m : c.members) max_order = std::max<std::size_t>(max_order, gl23->element_order(m));
  EXPECT_EQ(max_order, 8u) << "Cartan subgroup is cyclic of order q^2 - 1";
  EXPECT_EQ(borel_subgroup(gl23).order(), 12u);
  EXPECT_EQ(torus_subgroup(gl23).order(), 4u);
  EXPECT_EQ(young_subgroup(symmetric_group(5), 4).order(), 24u);
}

TEST(Subgroups, LagrangeAndClosure) {
  const auto g = general_linear_group(2, make_field(3, 1));
  for (const auto& h : {unitriangular_subgroup(g), borel_subgroup(g), torus_subgroup(g), cartan_subgroup(g), whole_group(g),
                        trivial_subgroup(g)}) {
    EXPECT_EQ(g->order() % h.order(), 0u);
    for (std::size_t a : h.members) {
      EXPECT_TRUE(h.contains(g->inv(a)));
      for (std::size_t b : h.members) ASSERT_TRUE(h.contains(g->mul(a, b)));
    }
  }
}

TEST(Products, DiagonalAndDoubleCosets) {
  const auto s3 = symmetric_group(3);
  const auto p = product_group({s3, s3});
  EXPECT_EQ(p->order(), 36u);
  const auto d = diagonal_subgroup(p);
  EXPECT_EQ(d.order(), 6u);
  EXPECT_EQ(double_cosets(d, d).representatives.size(), 3u);
  EXPECT_EQ(brute_force_double_coset_sizes(d, d).size(), 3u);

  const auto q8 = quaternion8();
  const auto q3 = product_group({q8, q8, q8});
  EXPECT_EQ(q3->order(), 512u);
  EXPECT_EQ(diagonal_subgroup(q3).order(), 8u);
}

TEST(Products, DiagonalIsIsomorphicToFactor) {
  for (const auto& g : {symmetric_group(3), quaternion8(), cyclic_group(4)}) {
    const auto d = diagonal_subgroup(product_group({g, g}));
    ASSERT_EQ(d.order(), g->order());
    // Product words store component indices; the first one gives the bijection.
    std::vector<std::size_t> to_factor(d.order());
    for (std::size_t i = 0; i < d.order(); ++i) {
      const Word& w = d.group->element(i);
      ASSERT_EQ(w[0], w[1]);
      to_factor[i] = static_cast<std::size_t>(w[0]);
    }
    for (std::size_t a = 0; a < d.order(); ++a)
      for (std::size_t b = 0; b < d.order(); ++b)
        ASSERT_EQ(to_factor[d.group->mul(a, b)], g->mul(to_factor[a], to_factor[b]));
  }
}

TEST(DoubleCosets, Examples) {
  const auto s3 = symmetric_group(3);
  const auto h = young_subgroup(s3, 2);
  const auto dc = double_cosets(h, h);
  std::multiset<std::size_t> sizes(dc.sizes.begin(), dc.sizes.end());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{2, 4}));
  EXPECT_EQ(sizes, brute_force_double_coset_sizes(h, h));
  EXPECT_EQ(double_cosets(whole_group(s3), whole_group(s3)).representatives.size(), 1u);
  EXPECT_EQ(double_cosets(trivial_subgroup(s3), trivial_subgroup(s3)).representatives.size(), 6u);
}

TEST(DoubleCosets, PartitionAndMatchOrbitCount) {
  const auto g = general_linear_group(2, make_field(3, 1));
  const std::vector<Subgroup> subs{unitriangular_subgroup(g), borel_subgroup(g), torus_subgroup(g), cartan_subgroup(g)};
  for (const auto& h : subs)
    for (const auto& k : subs) {
      const auto dc = double_cosets(h, k);
      std::size_t total = 0;
      for (auto s : dc.sizes) total += s;
      ASSERT_EQ(total, g->order());
      std::multiset<std::size_t> sizes(dc.sizes.begin(), dc.sizes.end());
      ASSERT_EQ(sizes, brute_force_double_coset_sizes(h, k));
      for (std::size_t pos = 0; pos < dc.representatives.size(); ++pos) {
        const std::size_t r = dc.representatives[pos];
        for (std::size_t x = 0; x < r; ++x) ASSERT_NE(dc.membership[x], pos) << "representative is not lowest-index";
      }
    }
}

TEST(AntiInvolutions, InversionOnSymmetricPairs) {
  for (std::size_t n : {3u, 4u, 5u}) {
    const auto g = symmetric_group(n);
    const auto h = young_subgroup(g, n - 1);
    EXPECT_TRUE(check_anti_involution_preserves_double_cosets(inversion_map(g), h, h, double_cosets(h, h))) << n;
  }
  const auto c = cyclic_group(6);
  const auto h = subgroup_from_generators(c, {c->mul(c->generators()[0], c->generators()[0])});
  EXPECT_TRUE(check_anti_involution_preserves_double_cosets(inversion_map(c), h, h, double_cosets(h, h)));
}

TEST(AntiInvolutions, TransposeOnGl2Subgroups) {
  const auto g = general_linear_group(2, make_field(3, 1));
  const auto iota = transpose_map(g);
  // diag(a,b) [[1,1],[0,1]] diag(c,d) = [[ac, ad], [0, bd]] is always upper triangular, so the
  // transposed element lies in a different torus double coset.
  const auto t = torus_subgroup(g);
  EXPECT_FALSE(check_anti_involution_preserves_double_cosets(iota, t, t, double_cosets(t, t)));
  const auto u = *g->find(Word{1, 1, 0, 1});
  const auto dc = double_cosets(t, t);
  EXPECT_NE(dc.membership[u], dc.membership[iota(u)]);
  // The trivial subgroup coset {g} is preserved only by symmetric matrices.
  const auto e = trivial_subgroup(g);
  EXPECT_FALSE(check_anti_involution_preserves_double_cosets(iota, e, e, double_cosets(e, e)));
}

TEST(AntiInvolutions, RejectsNonAntiHomomorphisms) {
  const auto g = symmetric_group(3);
  std::vector<std::size_t> id(g->order());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  EXPECT_THROW(make_anti_involution(g, id), Error);  // identity is not an anti-homomorphism on S_3
}

TEST(Parse, GroupAndSubgroupSpecs) {
  EXPECT_EQ(parse_group("sym(4)")->order(), 24u);
  EXPECT_EQ(parse_group("gl(2,3,1)")->order(), 48u);
  EXPECT_EQ(parse_group("prod(sym(3), cyclic(2))")->order(), 12u);
  EXPECT_EQ(parse_group("dihedral(4)")->order(), 8u);
  EXPECT_EQ(parse_group("quaternion8")->order(), 8u);
  const auto s4 = parse_group("sym(4)");
  EXPECT_EQ(parse_subgroup(s4, "gens[(1 2),(1 2 3)]").order(), 6u);
  EXPECT_EQ(parse_subgroup(s4, "young(3)").order(), 6u);
  const auto gl = parse_group("gl(2,3,1)");
  EXPECT_EQ(parse_subgroup(gl, "gens[[[1,1],[0,1]]]").order(), 3u);
  EXPECT_EQ(parse_subgroup(parse_group("prod(sym(3),sym(3))"), "diag").order(), 6u);
  for (const char* bad : {"sym(", "sym(0)", "foo(3)", "gl(2,4,1)", "sym(3) x"}) {
    try {
      parse_group(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::NonPrime) << bad;
    }
  }
  try {
    parse_subgroup(s4, "gens[(1 5)]");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("column"), std::string::npos);
  }
}
