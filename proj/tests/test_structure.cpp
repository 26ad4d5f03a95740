#include <gtest/gtest.h>

#include <set>

#include "mfree/ext.hpp"
#include "mfree/parse.hpp"
#include "mfree/structure.hpp"
#include "mfree/zoo.hpp"

using namespace mfree;

namespace {

// Every subspace of F^n, grown one vector at a time from zero; then the invariant ones.
std::size_t brute_force_submodule_count(const ModuleOverAlgebra& m) {
  std::vector<std::vector<Elt>> vectors;
  for_each_vector(*m.field, m.dim, [&](const std::vector<Elt>& v) {
    vectors.push_back(v);
    return true;
  });
  std::set<std::vector<Elt>> seen;
  std::vector<Subspace> all{Subspace::zero(m.field, m.dim)};
  seen.insert(all[0].key());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& v : vectors) {
      auto s = all[i].sum(Subspace::span(Matrix(m.field, 1, m.dim, v)));
      if (seen.insert(s.key()).second) all.push_back(std::move(s));
    }
  std::size_t count = 0;
  for (const auto& s : all) {
    bool inv = true;
    for (std::size_t r = 0; r < s.dim() && inv; ++r)
      for (const auto& a : m.gens) inv = inv && s.contains(a.apply(s.basis().row(r)));
    count += inv;
  }
  return count;
}

struct Fixture {
  std::string name;
  Representation rep;
};

std::vector<Fixture> small_fixtures() {
  const auto gf2 = make_field(2, 1), gf3 = make_field(3, 1), gf4 = make_field(2, 2), gf5 = make_field(5, 1);
  const auto s3 = symmetric_group(3), c2 = cyclic_group(2), c4 = cyclic_group(4), q8 = quaternion8();
  const auto klein = product_group({c2, c2});
  const auto s3_s2 = young_subgroup(s3, 2);
  return {
      {"s3.perm3.gf2", permutation_rep(s3_s2, gf2)},
      {"s3.triv2.gf2", direct_sum(trivial_rep(s3, gf2), trivial_rep(s3, gf2))},
      {"c2.reg.gf2", regular_rep(c2, gf2)},
      {"c4.reg.gf2", regular_rep(c4, gf2)},
      {"klein.reg.gf2", regular_rep(klein, gf2)},
      {"c2.triv_plus_reg.gf2", direct_sum(trivial_rep(c2, gf2), regular_rep(c2, gf2))},
      {"s3.perm3.gf3", permutation_rep(s3_s2, gf3)},
      {"c2.reg.gf4", regular_rep(c2, gf4)},
      {"s3.perm3.gf5", permutation_rep(s3_s2, gf5)},
      {"q8.reg.gf2", regular_rep(q8, gf2)},
      {"s3.reg.gf3", regular_rep(s3, gf3)},
  };
}

std::vector<ModuleOverAlgebra> simples_for(const Representation& rho) {
  return simple_modules(irreducible_inventory(rho.group(), rho.field()));
}

}  // namespace

TEST(Lattice, Examples) {
  const auto s3 = symmetric_group(3);
  const auto gf2 = make_field(2, 1), gf5 = make_field(5, 1);
  const auto inv5 = irreducible_inventory(s3, gf5);
  EXPECT_EQ(submodule_lattice(module_of(inv5.irreducibles.back())).nodes.size(), 2u);
  const auto triv2 = submodule_lattice(module_of(direct_sum(trivial_rep(s3, gf2), trivial_rep(s3, gf2))));
  EXPECT_TRUE(triv2.complete);
  EXPECT_EQ(triv2.nodes.size(), 5u);
  const auto perm = submodule_lattice(module_of(permutation_rep(young_subgroup(s3, 2), gf2)));
  EXPECT_EQ(perm.nodes.size(), 4u);
  EXPECT_EQ(perm.hasse_edges().size(), 4u);
  EXPECT_EQ(perm.maximal_nodes().size(), 2u);
  EXPECT_EQ(perm.minimal_nodes().size(), 2u);
  const auto c4 = submodule_lattice(module_of(regular_rep(cyclic_group(4), gf2)));
  EXPECT_EQ(c4.nodes.size(), 5u) << "uniserial of length 4";
  EXPECT_EQ(c4.hasse_edges().size(), 4u);
}

TEST(Lattice, MatchesBruteForceEnumeration) {
  for (const auto& fx : small_fixtures()) {
    const auto m = module_of(fx.rep);
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < m.dim; ++i) size *= m.field->q();
    if (size > 81) continue;
    const auto lat = submodule_lattice(m);
    ASSERT_TRUE(lat.complete) << fx.name;
    EXPECT_EQ(lat.nodes.size(), brute_force_submodule_count(m)) << fx.name;
  }
}

TEST(Lattice, ClosedUnderSumAndIntersection) {
  for (const auto& fx : small_fixtures()) {
    const auto m = module_of(fx.rep);
    const auto lat = submodule_lattice(m);
    ASSERT_TRUE(lat.complete) << fx.name;
    for (const auto& a : lat.nodes) {
      ASSERT_TRUE(is_invariant(m, a)) << fx.name;
      for (const auto& b : lat.nodes) {
        ASSERT_TRUE(lat.find(a.sum(b)).has_value()) << fx.name;
        ASSERT_TRUE(lat.find(a.intersect(b)).has_value()) << fx.name;
      }
    }
  }
}

TEST(Lattice, NodeCapMakesQueriesInconclusive) {
  const auto s3 = symmetric_group(3);
  const auto gf2 = make_field(2, 1);
  const auto m = module_of(direct_sum(trivial_rep(s3, gf2), trivial_rep(s3, gf2)));
  LatticeOptions o;
  o.node_cap = 3;
  const auto lat = submodule_lattice(m, o);
  EXPECT_FALSE(lat.complete);
  EXPECT_FALSE(lat.reason.empty());
  const auto v = is_superfluous(Subspace::zero(gf2, 2), lat);
  EXPECT_EQ(v.truth, Truth::Inconclusive);
  EXPECT_EQ(is_relatively_projective(m, m, lat).verdict.truth, Truth::Inconclusive);
}

TEST(RadicalSocle, Examples) {
  const auto gf2 = make_field(2, 1), gf5 = make_field(5, 1);
  const auto q8 = regular_rep(quaternion8(), gf2);
  const auto rq = radical_and_socle(module_of(q8), simples_for(q8));
  EXPECT_EQ(rq.socle.dim(), 1u);
  EXPECT_EQ(rq.radical.dim(), 7u);
  EXPECT_EQ(rq.cosocle_dim, 1u);
  EXPECT_EQ(rq.socle_mult_vector, (std::vector<std::size_t>{1}));

  const auto c2 = regular_rep(cyclic_group(2), gf2);
  const auto rc = radical_and_socle(module_of(c2), simples_for(c2));
  EXPECT_TRUE(rc.radical == rc.socle);
  EXPECT_EQ(rc.radical.dim(), 1u);

  const auto s3 = regular_rep(symmetric_group(3), gf5);
  const auto rs = radical_and_socle(module_of(s3), simples_for(s3));
  EXPECT_TRUE(rs.radical.is_zero());
  EXPECT_TRUE(rs.socle.is_full());
}

TEST(RadicalSocle, AgreeWithLatticeMeetAndJoin) {
  for (const auto& fx : small_fixtures()) {
    const auto m = module_of(fx.rep);
    const auto lat = submodule_lattice(m);
    ASSERT_TRUE(lat.complete);
    const auto sr = radical_and_socle(m, simples_for(fx.rep));
    Subspace meet = Subspace::full(m.field, m.dim);
    for (auto i : lat.maximal_nodes()) meet = meet.intersect(lat.nodes[i]);
    Subspace join = Subspace::zero(m.field, m.dim);
    for (auto i : lat.minimal_nodes()) join = join.sum(lat.nodes[i]);
    EXPECT_TRUE(meet == sr.radical) << fx.name;
    EXPECT_TRUE(join == sr.socle) << fx.name;
  }
}

TEST(RadicalSocle, DualityExchangesTopAndSocle) {
  for (const auto& fx : small_fixtures()) {
    const auto simples = simples_for(fx.rep);
    const auto a = radical_and_socle(module_of(fx.rep), simples);
    const auto b = radical_and_socle(module_of(dual(fx.rep)), simples_for(dual(fx.rep)));
    EXPECT_EQ(a.cosocle_dim, b.socle.dim()) << fx.name;
    EXPECT_EQ(a.socle.dim(), b.cosocle_dim) << fx.name;
  }
}

TEST(SuperfluousEssential, Examples) {
  const auto gf2 = make_field(2, 1);
  const auto q8 = regular_rep(quaternion8(), gf2);
  const auto m = module_of(q8);
  const auto lat = submodule_lattice(m);
  const auto sr = radical_and_socle(m, simples_for(q8));
  EXPECT_TRUE(is_superfluous(sr.radical, lat).is_true());
  EXPECT_TRUE(is_essential(sr.socle, lat).is_true());
  EXPECT_TRUE(is_superfluous(Subspace::zero(gf2, 8), lat).is_true());
  EXPECT_FALSE(is_superfluous(Subspace::full(gf2, 8), lat).is_true());

  const auto perm = module_of(permutation_rep(young_subgroup(symmetric_group(3), 2), gf2));
  const auto plat = submodule_lattice(perm);
  const auto line = spin_vector(perm, {1, 1, 1});
  EXPECT_TRUE(is_superfluous(line, plat).is_false());
  EXPECT_TRUE(is_essential(line, plat).is_false());
  EXPECT_TRUE(is_essential(Subspace::full(gf2, 3), plat).is_true());
}

TEST(RelativeProjectivity, Examples) {
  const auto gf2 = make_field(2, 1);
  const auto c2 = cyclic_group(2);
  const auto reg = module_of(regular_rep(c2, gf2));
  const auto triv = module_of(trivial_rep(c2, gf2));
  const auto lat = submodule_lattice(reg);
  const auto p = is_relatively_projective(reg, reg, lat);
  const auto i = is_relatively_injective(reg, reg, lat);
  EXPECT_TRUE(p.verdict.is_true());
  EXPECT_TRUE(i.verdict.is_true());
  EXPECT_TRUE(p.exactness_agrees && i.exactness_agrees);
  // reg -> triv does not split, so triv is neither reg-projective nor reg-injective.
  const auto tp = is_relatively_projective(triv, reg, lat);
  EXPECT_TRUE(tp.verdict.is_false());
  EXPECT_TRUE(tp.witness_node.has_value());
  EXPECT_TRUE(is_relatively_injective(triv, reg, lat).verdict.is_false());

  const auto tr = direct_sum(triv, reg);
  const auto trl = submodule_lattice(tr);
  EXPECT_TRUE(is_relatively_projective(tr, tr, trl).verdict.is_false());
  EXPECT_TRUE(is_relatively_injective(tr, tr, trl).verdict.is_false());

  const auto perm = module_of(permutation_rep(young_subgroup(symmetric_group(3), 2), gf2));
  const auto pl = submodule_lattice(perm);
  EXPECT_TRUE(is_relatively_projective(perm, perm, pl).verdict.is_true()) << "semisimple modules are self-projective";
  EXPECT_TRUE(is_relatively_injective(perm, perm, pl).verdict.is_true());
}

TEST(RelativeProjectivity, LiftingAndExactnessRoutesAgree) {
  for (const auto& fx : small_fixtures()) {
    const auto n = module_of(fx.rep);
    const auto lat = submodule_lattice(n);
    auto ms = simples_for(fx.rep);
    ms.push_back(n);
    for (const auto& m : ms) {
      EXPECT_TRUE(is_relatively_projective(m, n, lat).exactness_agrees) << fx.name;
      EXPECT_TRUE(is_relatively_injective(m, n, lat).exactness_agrees) << fx.name;
    }
  }
}

TEST(RelativeProjectivity, SelfInjectiveIffDualSelfProjective) {
  for (const auto& fx : small_fixtures()) {
    const auto n = module_of(fx.rep), d = module_of(dual(fx.rep));
    const auto nl = submodule_lattice(n), dl = submodule_lattice(d);
    EXPECT_EQ(is_relatively_injective(n, n, nl).verdict.is_true(), is_relatively_projective(d, d, dl).verdict.is_true()) << fx.name;
    EXPECT_EQ(is_relatively_projective(n, n, nl).verdict.is_true(), is_relatively_injective(d, d, dl).verdict.is_true()) << fx.name;
  }
}

TEST(RadEnd, Examples) {
  const auto gf2 = make_field(2, 1);
  const auto c2 = regular_rep(cyclic_group(2), gf2);
  const auto m = module_of(c2);
  const auto lat = submodule_lattice(m);
  for (Flavor fl : {Flavor::Projective, Flavor::Injective}) {
    const auto r = verify_rad_end_theorem(m, lat, simples_for(c2), fl);
    EXPECT_EQ(r.end_dim, 2u);
    EXPECT_EQ(r.rad_end_dim, 1u);
    EXPECT_EQ(r.top_end_dim, 1u);
    EXPECT_TRUE(r.holds);
  }
  const auto q8 = regular_rep(quaternion8(), gf2);
  const auto qm = module_of(q8);
  const auto qr = verify_rad_end_theorem(qm, submodule_lattice(qm), simples_for(q8), Flavor::Projective);
  EXPECT_EQ(qr.end_dim, 8u);
  EXPECT_EQ(qr.rad_end_dim, 7u);
  EXPECT_TRUE(qr.holds);

  const auto s3 = regular_rep(symmetric_group(3), make_field(5, 1));
  const auto sm = module_of(s3);
  const auto sr = verify_rad_end_theorem(sm, submodule_lattice(sm), simples_for(s3), Flavor::Injective);
  EXPECT_EQ(sr.rad_end_dim, 0u);
  EXPECT_EQ(sr.top_end_dim, 6u);
}

TEST(RadEnd, RefusesWithoutHypotheses) {
  const auto gf2 = make_field(2, 1);
  const auto c2 = cyclic_group(2);
  const auto tr = direct_sum(trivial_rep(c2, gf2), regular_rep(c2, gf2));
  const auto m = module_of(tr);
  try {
    verify_rad_end_theorem(m, submodule_lattice(m), simples_for(tr), Flavor::Projective);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionFailed);
  }
}

TEST(RadEnd, HoldsAcrossFixturesWhereHypothesesHold) {
  std::size_t verified = 0;
  for (const auto& fx : small_fixtures()) {
    const auto m = module_of(fx.rep);
    const auto lat = submodule_lattice(m);
    const auto simples = simples_for(fx.rep);
    const auto sr = radical_and_socle(m, simples);
    for (Flavor fl : {Flavor::Projective, Flavor::Injective}) {
      const bool hyp = fl == Flavor::Projective
                           ? is_relatively_projective(m, m, lat).verdict.is_true() && is_superfluous(sr.radical, lat).is_true()
                           : is_relatively_injective(m, m, lat).verdict.is_true() && is_essential(sr.socle, lat).is_true();
      if (!hyp) continue;
      EXPECT_TRUE(verify_rad_end_theorem(m, lat, simples, fl).holds) << fx.name;
      const auto lm = verify_lemma_rad_end_characterization(m, lat, simples, fl);
      EXPECT_EQ(lm.counterexamples, 0u) << fx.name;
      EXPECT_GT(lm.checked, 0u);
      ++verified;
    }
  }
  EXPECT_GE(verified, 10u);
}

TEST(Complements, Examples) {
  const auto gf2 = make_field(2, 1);
  const auto perm = module_of(permutation_rep(young_subgroup(symmetric_group(3), 2), gf2));
  const auto pl = submodule_lattice(perm);
  const auto line = spin_vector(perm, {1, 1, 1});
  const auto c = find_complement(line, pl);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(pl.nodes[*c].dim(), 2u);
  const auto reg = module_of(regular_rep(cyclic_group(2), gf2));
  const auto rl = submodule_lattice(reg);
  EXPECT_FALSE(find_complement(spin_vector(reg, {1, 1}), rl).has_value());
  const auto triv = module_of(trivial_rep(symmetric_group(3), gf2));
  const auto emb = find_embeddings(triv, perm);
  ASSERT_EQ(emb.size(), 1u);
  EXPECT_TRUE(image_of(emb[0]) == line);
}

TEST(Ext, Examples) {
  const auto gf2 = make_field(2, 1), gf3 = make_field(3, 1), gf5 = make_field(5, 1);
  const auto c2 = cyclic_group(2), s3 = symmetric_group(3);
  EXPECT_EQ(ext1_dim(trivial_rep(c2, gf2), trivial_rep(c2, gf2)), 1u);
  EXPECT_EQ(ext1_dim(trivial_rep(s3, gf5), sign_rep(s3, gf5)), 0u);
  EXPECT_EQ(ext1_dim(trivial_rep(s3, gf5), trivial_rep(s3, gf5)), 0u);
  EXPECT_EQ(ext1_dim(trivial_rep(s3, gf3), sign_rep(s3, gf3)), 1u);
  EXPECT_EQ(ext1_dim(trivial_rep(s3, gf3), trivial_rep(s3, gf3)), 0u);
  const auto sigma = nonsplit_extension(trivial_rep(s3, gf3), sign_rep(s3, gf3));
  ASSERT_TRUE(sigma.has_value());
  EXPECT_TRUE(check_homomorphism(*sigma));
  const auto m = module_of(*sigma);
  EXPECT_EQ(submodule_lattice(m).nodes.size(), 3u) << "non-split extension is uniserial";
  EXPECT_FALSE(nonsplit_extension(trivial_rep(s3, gf5), sign_rep(s3, gf5)).has_value());
}

TEST(Ext, SecondNonExampleOverAlt4) {
  const auto a4 = alternating_group(4);
  const auto gf4 = make_field(2, 2);
  const auto inv = irreducible_inventory(a4, gf4);
  const auto ne = find_non_example_two(inv);
  ASSERT_TRUE(ne.has_value());
  EXPECT_NE(ne->tau1_index, ne->tau2_index);
  EXPECT_NE(ne->pi_index, ne->tau1_index);
  EXPECT_NE(ne->pi_index, ne->tau2_index);
  for (const auto* s : {&ne->sigma1, &ne->sigma2}) {
    ASSERT_TRUE(check_homomorphism(*s));
    const auto m = module_of(*s);
    const auto lat = submodule_lattice(m);
    EXPECT_EQ(lat.nodes.size(), 3u);
    const auto sr = radical_and_socle(m, simple_modules(inv));
    EXPECT_EQ(sr.socle.dim(), 1u);
    EXPECT_EQ(sr.socle_mult_vector[ne->pi_index], 1u);
  }
  const auto rho = module_of(ne->rho);
  const auto sr = radical_and_socle(rho, simple_modules(inv));
  EXPECT_EQ(sr.socle_mult_vector[ne->pi_index], 2u);
  EXPECT_EQ(sr.socle.dim(), 2u);
}

TEST(Zoo, HasEnoughEntriesAndSmallSubsetIsClean) {
  const auto zoo = structure_zoo();
  EXPECT_GE(zoo.size(), 25u);
  std::set<std::string> names;
  for (const auto& e : zoo) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_TRUE(check_generator_homomorphism(e.rep)) << e.name;
  }
  const std::vector<ZooEntry> subset(zoo.begin(), zoo.begin() + 6);
  const auto rep = run_structure_zoo(subset);
  EXPECT_EQ(rep.modules, 6u);
  EXPECT_TRUE(rep.all_complete);
  EXPECT_EQ(rep.counterexamples(), 0u);
  EXPECT_TRUE(rep.findings.empty());
  EXPECT_GT(rep.checked("rad_soc_cross_validation"), 0u);
}
