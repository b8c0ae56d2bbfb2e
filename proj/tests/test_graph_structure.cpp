#include <gtest/gtest.h>

#include "support.hpp"

using namespace pairgraph;
using namespace testsupport;

namespace {

Subgroup z12_h() {
  static const auto g = make_cyclic(12);
  return Subgroup::from_elements(g, {0, 3, 6, 9});
}

std::vector<std::size_t> profile(const PairGraph& graph) {
  std::vector<std::size_t> out;
  for (const auto& d : degree_profile(graph)) out.push_back(d.degree);
  return out;
}

}  // namespace

TEST(GeneratingSet, Validation) {
  const auto h = z12_h();
  EXPECT_THROW(GeneratingSet::validate(h, {0, 4}), IdentityInSet);
  EXPECT_THROW(GeneratingSet::validate(h, {3, 4}), SymmetryViolation);
  EXPECT_THROW(GeneratingSet::validate(h, {12}), ValidationError);
  const auto gen = GeneratingSet::validate(h, {8, 3, 9, 4, 4});
  EXPECT_EQ(gen.all, (ElementSet{3, 4, 8, 9}));
  EXPECT_EQ(gen.inner, (ElementSet{3, 9}));
  EXPECT_EQ(gen.outer, (ElementSet{4, 8}));
  EXPECT_EQ(gen.coset_counts, (std::vector<std::size_t>{2, 1, 1}));
  EXPECT_EQ(gen.covered_cosets(), 2u);
}

TEST(PairGraph, Z12DegreeProfile) {
  const auto graph = build_pair_graph(z12_h(), {2, 4, 5, 7, 8});
  EXPECT_EQ(profile(graph), (std::vector<std::size_t>{5, 2, 3}));
  EXPECT_FALSE(regularity_check(graph).regular);
  EXPECT_TRUE(regularity_check(graph).agrees);
  EXPECT_EQ(graph.vertex_count(), 12u);
  EXPECT_EQ(graph.edge_count(), 20u);
}

TEST(PairGraph, StarAndEmpty) {
  const auto g = make_cyclic(7);
  const auto star = build_pair_graph(builtin_subgroup(g, "trivial"), {1, 2, 3, 4, 5, 6});
  EXPECT_EQ(star.degree(0), 6u);
  for (Element v = 1; v < 7; ++v) EXPECT_EQ(star.neighbors(v), (ElementSet{0}));
  const auto empty = build_pair_graph(builtin_subgroup(g, "whole"), {});
  EXPECT_EQ(empty.edge_count(), 0u);
  EXPECT_EQ(isolated_vertices(empty).size(), 7u);
  EXPECT_TRUE(regularity_check(empty).regular);
}

TEST(PairGraph, RegularityExamples) {
  const auto z20 = make_cyclic(20);
  const auto evens = builtin_subgroup(z20, "evens");
  auto r = regularity_check(build_pair_graph(evens, {3, 5, 7}));
  EXPECT_TRUE(r.regular);
  EXPECT_EQ(r.degree, 3u);
  auto whole = builtin_subgroup(z20, "whole");
  auto c = regularity_check(build_pair_graph(whole, {1, 19, 10}));
  EXPECT_TRUE(c.regular && c.agrees);
  EXPECT_EQ(c.degree, 3u);
}

TEST(PairGraph, CayleyReduction) {
  const auto z20 = make_cyclic(20);
  const auto evens = builtin_subgroup(z20, "evens");
  const auto cycle = build_pair_graph(evens, {1, 19});
  EXPECT_TRUE(is_cayley_reduction(cycle));
  for (Element v = 0; v < 20; ++v) EXPECT_EQ(cycle.neighbors(v), normalize({(v + 1) % 20, (v + 19) % 20}));
  EXPECT_FALSE(is_cayley_reduction(build_pair_graph(evens, {3, 5, 7})));
  EXPECT_THROW(is_cayley_reduction(build_pair_graph(z12_h(), {1})), ValidationError);
  EXPECT_THROW(is_cayley_reduction(build_pair_graph(evens, {2, 18, 1})), ValidationError);
  // odd involutions of S4
  const auto s4 = make_symmetric(4);
  const auto a4 = builtin_subgroup(s4, "alternating_in_symmetric");
  EXPECT_TRUE(is_cayley_reduction(build_pair_graph(a4, parse_element_list(s4, "(1,2);(1,3);(1,4);(2,3);(2,4);(3,4)"))));
}

TEST(PairGraph, GroupMatrixRowsAndEdgeSum) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 150; ++i) {
    const auto inst = random_instance(rng);
    const auto h = Subgroup::from_elements(inst.group, inst.h);
    const auto graph = build_pair_graph(h, inst.s);
    const auto dense = graph.dense_adjacency();
    const auto def = definition_adjacency(inst.group, inst.h, inst.s);
    const auto rows = adjacency_rows_via_group_matrix(h, inst.s);
    const std::size_t n = inst.group.order();
    for (std::size_t r = 0; r < inst.h.size(); ++r)
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_EQ(rows[r][j], dense[inst.h[r] * n + j]);
        ASSERT_EQ(def[inst.h[r]][j], dense[inst.h[r] * n + j]);
      }
    const auto& gen = graph.generating_set();
    std::size_t degree_sum = 0;
    for (auto d : graph.degrees()) degree_sum += d;
    EXPECT_EQ(degree_sum, h.order() * (gen.size() + gen.outer.size()));
    EXPECT_EQ(graph.degree(h.coset_rep(0)), gen.size());
    std::size_t outer_sum = 0;
    for (std::uint32_t c = 1; c < h.index(); ++c) outer_sum += graph.degree(h.coset_rep(c));
    EXPECT_EQ(outer_sum, gen.outer.size());
    EXPECT_EQ(regularity_check(graph).agrees, true) << regularity_check(graph).reason;
  }
}

TEST(PairGraph, LeftTranslationIsAutomorphism) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    const auto inst = random_instance(rng);
    const auto graph = build_pair_graph(Subgroup::from_elements(inst.group, inst.h), inst.s);
    for (Element hh : inst.h)
      for (const auto& [u, v] : graph.edges())
        ASSERT_TRUE(graph.adjacent(inst.group.mul(hh, u), inst.group.mul(hh, v)));
  }
}

TEST(PairGraph, WholeGroupIsCayley) {
  const auto g = make_symmetric(4);
  const ElementSet s = parse_element_list(g, "(1,2);(2,3,4);(2,4,3)");
  const auto a = build_pair_graph(builtin_subgroup(g, "whole"), s);
  const auto b = build_cayley_graph(g, s);
  for (Element v = 0; v < g.order(); ++v) EXPECT_EQ(a.neighbors(v), b.neighbors(v));
}

TEST(Structure, Z12Examples) {
  const auto h = z12_h();
  auto check = [&](ElementSet s, std::size_t count, std::size_t a, std::size_t b, std::size_t c) {
    const auto graph = build_pair_graph(h, s);
    EXPECT_EQ(components_bfs(graph).count, count);
    const auto f = component_count_formula(h, graph.generating_set());
    EXPECT_EQ(f.subgroup_index, a);
    EXPECT_EQ(f.outer_vertices, b);
    EXPECT_EQ(f.covered_vertices, c);
    EXPECT_EQ(f.total(), count);
  };
  check({2, 4, 5, 7, 8}, 1, 1, 8, 8);
  check({1, 7}, 6, 2, 8, 4);
  check({4, 5, 6, 10, 11}, 2, 2, 8, 8);
  check({}, 12, 4, 8, 0);
}

TEST(Structure, ConnectivityWitness) {
  const auto h = z12_h();
  const auto yes = is_connected(h, GeneratingSet::validate(h, {2, 4, 5, 7, 8}));
  EXPECT_TRUE(yes.connected);
  const auto no = is_connected(h, GeneratingSet::validate(h, {1, 7}));
  EXPECT_FALSE(no.connected);
  EXPECT_EQ(no.reachable_subgroup, (ElementSet{0, 6}));
  EXPECT_EQ(no.uncovered_cosets, (std::vector<std::uint32_t>{2}));
  EXPECT_NE(no.witness.find("uncovered"), std::string::npos);
}

TEST(Structure, IdentityComponentAndTranslation) {
  const auto h = z12_h();
  const auto gen = GeneratingSet::validate(h, {1, 7});
  EXPECT_EQ(identity_component_formula(h, gen), (ElementSet{0, 1, 6, 7}));
  EXPECT_EQ(translate_component(h, 3, {0, 1, 6, 7}), (ElementSet{3, 4, 9, 10}));
  EXPECT_EQ(translate_component(h, 0, {0, 1, 6, 7}), (ElementSet{0, 1, 6, 7}));
  EXPECT_THROW(translate_component(h, 1, {0}), ValidationError);
  EXPECT_EQ(identity_component_formula(h, GeneratingSet::validate(h, {})), (ElementSet{0}));
}

TEST(Structure, RandomInstancesAgreeWithOracles) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto inst = random_instance(rng);
    const auto h = Subgroup::from_elements(inst.group, inst.h);
    const auto graph = build_pair_graph(h, inst.s);
    const auto& gen = graph.generating_set();
    const auto comps = components_bfs(graph);
    const auto def = definition_adjacency(inst.group, inst.h, inst.s);
    ASSERT_EQ(comps.count, union_find_components(def));
    ASSERT_EQ(component_count_formula(h, gen).total(), comps.count);
    ASSERT_EQ(is_connected(h, gen).connected, comps.count == 1);
    ElementSet u_gens = gen.inner;
    for (Element x : naive_differences(inst.group, gen.outer))
      if (std::binary_search(inst.h.begin(), inst.h.end(), x)) u_gens.push_back(x);
    ASSERT_EQ(identity_subgroup(h, gen), naive_closure(inst.group, u_gens));
    if (!gen.empty()) {
      ASSERT_EQ(identity_component_formula(h, gen), comps.members(comps.component_of[0]));
    }
    // components meeting H all look alike; singletons are outer vertices
    std::optional<std::pair<std::size_t, std::size_t>> shape;
    for (std::uint32_t c = 0; c < comps.count; ++c) {
      const auto members = comps.members(c);
      std::size_t inside = 0;
      for (Element v : members) inside += h.contains(v);
      if (inside == 0) {
        ASSERT_EQ(members.size(), 1u);
        continue;
      }
      if (!shape) shape = {members.size(), inside};
      ASSERT_EQ(shape->first, members.size());
      ASSERT_EQ(shape->second, inside);
    }
    for (Element hh : inst.h) {
      const auto moved = translate_component(h, hh, comps.identity_component);
      ASSERT_EQ(moved, comps.members(comps.component_of[moved.front()]));
    }
    const bool bip = is_bipartite(graph).bipartite;
    if (gen.inner.empty()) {
      ASSERT_TRUE(bip);
    }
    if (sign_homomorphism_exists(inst.group, gen.all)) {
      ASSERT_TRUE(bip);
    }
  }
}

TEST(Structure, Bipartiteness) {
  const auto a4 = make_alternating(4);
  const auto klein = builtin_subgroup(a4, "klein_in_a4");
  const auto s = parse_element_list(a4, "(1,2)(3,4);(1,4)(2,3);(1,2,3);(1,4,3);(2,3,4);(2,4,3)");
  const auto graph = build_pair_graph(klein, s);
  EXPECT_TRUE(is_bipartite(graph).bipartite);
  EXPECT_FALSE(sign_homomorphism_exists(a4, s));
  const auto z3 = make_cyclic(3);
  EXPECT_FALSE(is_bipartite(build_cayley_graph(z3, {1, 2})).bipartite);
  const auto z20 = make_cyclic(20);
  EXPECT_TRUE(sign_homomorphism_exists(z20, {1, 3, 5}));
  EXPECT_FALSE(sign_homomorphism_exists(z20, {1, 2}));
  const auto coloring = is_bipartite(build_pair_graph(builtin_subgroup(z20, "evens"), {3, 5, 7})).coloring;
  ASSERT_TRUE(coloring.has_value());
  for (Element v = 0; v < 20; ++v) EXPECT_EQ((*coloring)[v], v % 2);
}

TEST(Structure, IndexTwoSubgroups) {
  EXPECT_EQ(index_two_subgroups(make_alternating(4)).size(), 0u);
  EXPECT_EQ(index_two_subgroups(make_symmetric(4)).size(), 1u);
  EXPECT_EQ(index_two_subgroups(make_cyclic(12)).size(), 1u);
  EXPECT_EQ(index_two_subgroups(make_direct_product(make_cyclic(2), make_cyclic(2))).size(), 3u);
  EXPECT_EQ(index_two_subgroups(make_dihedral(4)).size(), 3u);
  EXPECT_EQ(index_two_subgroups(make_cyclic(9)).size(), 0u);
  for (const auto& g : small_groups()) {
    for (const auto& k : index_two_subgroups(g)) {
      EXPECT_EQ(k.size() * 2, g.order());
      EXPECT_NO_THROW(Subgroup::from_elements(g, k));
    }
  }
}
