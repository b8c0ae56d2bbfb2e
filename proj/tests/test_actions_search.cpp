#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace pairgraph;
using namespace testsupport;

namespace {

Permutation multiply_by(unsigned n, unsigned u) {
  Permutation p(n);
  for (Element x = 0; x < n; ++x) p[x] = (x * u) % n;
  return p;
}

std::vector<Permutation> brute_force_automorphisms(const FiniteGroup& g) {
  Permutation p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (Element a = 0; a < g.order() && ok; ++a)
      for (Element b = 0; b < g.order() && ok; ++b) ok = p[g.mul(a, b)] == g.mul(p[a], p[b]);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST(Actions, RightTranslate) {
  const auto z20 = make_cyclic(20);
  const auto evens = builtin_subgroup(z20, "evens");
  EXPECT_EQ(right_translate_set(evens, {3, 5, 7}, 4), (ElementSet{7, 9, 11}));
  EXPECT_EQ(right_translate_set(evens, {3, 5, 7}, 0), (ElementSet{3, 5, 7}));
  EXPECT_THROW(right_translate_set(evens, {3, 5, 7}, 1), ValidationError);
  EXPECT_THROW(right_translate_set(evens, {2}, 4), ValidationError);
}

TEST(Actions, RightTranslationIsomorphismIsExplicit) {
  const auto gl = make_gl2(3);
  const auto sl = builtin_subgroup(gl, "sl2_in_gl2");
  const ElementSet s = seeded_subset(sl.complement(), 7, 99);
  const auto a = build_pair_graph(sl, s);
  for (Element hh : sl.elements()) {
    const auto b = build_pair_graph(sl, right_translate_set(sl, s, hh));
    EXPECT_TRUE(is_graph_isomorphism(a, b, right_translation_isomorphism(sl, hh)));
  }
}

TEST(Actions, AutomorphismGroupOrders) {
  EXPECT_EQ(automorphism_group(make_cyclic(12)).size(), 4u);
  EXPECT_EQ(automorphism_group(make_cyclic(20)).size(), 8u);
  EXPECT_EQ(automorphism_group(make_cyclic(7)).size(), 6u);
  EXPECT_EQ(automorphism_group(make_symmetric(4)).size(), 24u);
  EXPECT_EQ(automorphism_group(make_dihedral(4)).size(), 8u);
  EXPECT_EQ(automorphism_group(make_alternating(4)).size(), 24u);
  EXPECT_EQ(automorphism_group(make_field_additive(2, 3)).size(), 168u);
  EXPECT_EQ(automorphism_group(make_gl2(3)).size(), 48u);
  EXPECT_THROW(automorphism_group(make_cyclic(121)), SizeCapError);
}

TEST(Actions, AutomorphismGroupMatchesBruteForce) {
  for (const auto& g : {make_symmetric(3), make_cyclic(8), make_dihedral(4), make_direct_product(make_cyclic(2), make_cyclic(4))}) {
    EXPECT_EQ(automorphism_group(g), brute_force_automorphisms(g)) << g.descriptor().kind;
  }
}

TEST(Actions, ApplyAutomorphism) {
  const auto z20 = make_cyclic(20);
  const auto evens = builtin_subgroup(z20, "evens");
  const auto img = apply_automorphism_to_set(evens, multiply_by(20, 3), {3, 5, 7});
  EXPECT_EQ(img, (ElementSet{1, 9, 15}));
  EXPECT_LT(max_deviation(sorted_spectrum(build_pair_graph(evens, {3, 5, 7})), sorted_spectrum(build_pair_graph(evens, img))),
            1e-8);
  EXPECT_THROW(apply_automorphism_to_set(evens, multiply_by(20, 2), {3}), ValidationError);

  const auto z12 = make_cyclic(12);
  const auto h = Subgroup::from_elements(z12, {0, 3, 6, 9});
  const auto neg = apply_automorphism_to_set(h, multiply_by(12, 11), {1, 7});
  EXPECT_EQ(neg, (ElementSet{5, 11}));
  EXPECT_EQ(components_bfs(build_pair_graph(h, neg)).count, 6u);
  Permutation id(12);
  std::iota(id.begin(), id.end(), 0);
  EXPECT_EQ(apply_automorphism_to_set(h, id, {1, 7}), (ElementSet{1, 7}));
}

TEST(Actions, AutomorphismMustPreserveSubgroup) {
  // Swapping the factors of Z/2 x Z/2 moves the subgroup {(0,0), (0,1)}.
  const auto v4 = make_direct_product(make_cyclic(2), make_cyclic(2));
  const auto h = Subgroup::from_elements(v4, {0, 1});
  const Permutation swap{0, 2, 1, 3};
  ASSERT_TRUE(is_automorphism(v4, swap));
  EXPECT_THROW(apply_automorphism_to_set(h, swap, {2}), ValidationError);
}

TEST(Actions, Orbits) {
  const auto z20 = make_cyclic(20);
  const auto evens = builtin_subgroup(z20, "evens");
  const auto orbit = orbit_of_set(evens, {3, 5, 7});
  EXPECT_TRUE(std::binary_search(orbit.begin(), orbit.end(), ElementSet{7, 9, 11}));
  const auto base = sorted_spectrum(build_pair_graph(evens, {3, 5, 7}));
  for (const auto& s : orbit) {
    const auto g = build_pair_graph(evens, s);
    EXPECT_LT(max_deviation(base, sorted_spectrum(g)), 1e-8);
    EXPECT_EQ(components_bfs(g).count, 1u);
    EXPECT_TRUE(find_isomorphism(build_pair_graph(evens, {3, 5, 7}), g).has_value());
  }
  EXPECT_EQ(orbit_of_set(evens, evens.complement()), (std::vector<ElementSet>{evens.complement()}));
  const auto z12 = make_cyclic(12);
  const auto e12 = builtin_subgroup(z12, "evens");
  EXPECT_EQ(orbit_of_set(e12, {1}).size(), 6u);
  EXPECT_THROW(orbit_of_set(Subgroup::from_elements(z12, {0, 3, 6, 9}), {1}), ValidationError);
}

TEST(Actions, IsomorphismSearch) {
  const auto z20 = make_cyclic(20);
  const auto evens = builtin_subgroup(z20, "evens");
  const auto a = build_pair_graph(evens, {3, 5, 7});
  const auto b = build_pair_graph(evens, {1, 9, 15});
  const auto phi = find_isomorphism(a, b);
  ASSERT_TRUE(phi.has_value());
  EXPECT_TRUE(is_graph_isomorphism(a, b, *phi));
  // a 20-cycle versus two 10-cycles
  EXPECT_FALSE(find_isomorphism(build_pair_graph(evens, {1, 19}), build_pair_graph(evens, {1, 9})).has_value());
  // orbit members of S4/A4 are isomorphic
  const auto s4 = make_symmetric(4);
  const auto a4 = builtin_subgroup(s4, "alternating_in_symmetric");
  const auto s = seeded_subset(a4.complement(), 5, 3);
  const auto autos = automorphism_group(s4);
  const auto img = apply_automorphism_to_set(a4, autos[5], right_translate_set(a4, s, a4.elements()[3]));
  EXPECT_TRUE(find_isomorphism(build_pair_graph(a4, s), build_pair_graph(a4, img)).has_value());
}

TEST(Search, SeededSubsetsAreDeterministic) {
  const ElementSet pool{1, 3, 5, 7, 9, 11, 13};
  EXPECT_EQ(seeded_subset(pool, 3, 42), seeded_subset(pool, 3, 42));
  EXPECT_EQ(seeded_subset(pool, 7, 1), pool);
  EXPECT_THROW(seeded_subset(pool, 8, 1), ValidationError);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_below(rng, 7), 7u);
  // every 2-subset reachable
  std::set<ElementSet> seen;
  for (std::uint64_t seed = 0; seed < 400; ++seed) seen.insert(seeded_subset(pool, 2, seed));
  EXPECT_EQ(seen.size(), 21u);
}

TEST(Search, CosetCountedSets) {
  const auto gl5 = make_gl2(5);
  const auto sl5 = builtin_subgroup(gl5, "sl2_in_gl2");
  std::vector<std::size_t> counts{2, 2, 3};
  const auto s = random_set_with_coset_counts(sl5, counts, 7);
  const auto gen = GeneratingSet::validate(sl5, s);
  EXPECT_EQ(gen.coset_counts, (std::vector<std::size_t>{0, 2, 2, 3}));
}

TEST(Search, RandomModeDeterministicAndSound) {
  const auto gl = make_gl2(3);
  const auto sl = builtin_subgroup(gl, "sl2_in_gl2");
  SearchConfig cfg;
  cfg.k = 17;
  cfg.trials = 10;
  cfg.seed = 5;
  const auto a = search_ramanujan(sl, cfg);
  const auto b = search_ramanujan(sl, cfg);
  ASSERT_EQ(a.size(), 10u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(trial_to_json(a[i]).dump(), trial_to_json(b[i]).dump());
    EXPECT_FALSE(a[i].bound_violation);
    if (a[i].connected) {
      EXPECT_TRUE(*a[i].ramanujan);
    }
  }
}

TEST(Search, ExhaustiveAndEdgeCases) {
  const auto z12 = make_cyclic(12);
  const auto evens = builtin_subgroup(z12, "evens");
  SearchConfig cfg;
  cfg.k = 1;
  cfg.mode = SearchMode::exhaustive;
  const auto ones = search_ramanujan(evens, cfg);
  EXPECT_EQ(ones.size(), 6u);
  for (const auto& r : ones) EXPECT_FALSE(r.connected);
  cfg.k = 3;
  const auto threes = search_ramanujan(evens, cfg);
  EXPECT_EQ(threes.size(), 20u);
  EXPECT_EQ(threes.front().set, (ElementSet{1, 3, 5}));
  EXPECT_EQ(threes.back().set, (ElementSet{7, 9, 11}));
  cfg.k = 0;
  EXPECT_THROW(search_ramanujan(evens, cfg), ValidationError);
  cfg.k = 7;
  EXPECT_THROW(search_ramanujan(evens, cfg), ValidationError);
  const auto s4 = make_symmetric(4);
  const auto a4 = builtin_subgroup(s4, "alternating_in_symmetric");
  cfg.k = 12;
  const auto full = search_ramanujan(a4, cfg);
  ASSERT_EQ(full.size(), 1u);
  EXPECT_TRUE(full[0].connected);
  EXPECT_TRUE(full[0].ramanujan.has_value());
  cfg.certify = false;
  EXPECT_FALSE(search_ramanujan(a4, cfg)[0].ramanujan.has_value());
}

TEST(Search, ClassCountExperiment) {
  const auto z12 = make_cyclic(12);
  const auto evens = builtin_subgroup(z12, "evens");
  const auto c = equivalence_class_counts(evens, 2);
  EXPECT_EQ(c.k, 2u);
  EXPECT_GE(c.orbits_k, c.classes_k);
  EXPECT_GE(c.orbits_complement, c.classes_complement);
  EXPECT_GE(c.classes_k, 1u);
  EXPECT_THROW(equivalence_class_counts(evens, 0), ValidationError);
}
