#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "pairgraph/error.hpp"
#include "pairgraph/group.hpp"
#include "pairgraph/pair_graph.hpp"
#include "pairgraph/subgroup.hpp"

namespace pairgraph {

struct ComponentDecomposition {
  /// Component ids are ordered by the minimal vertex they contain.
  std::vector<std::uint32_t> component_of;
  std::size_t count = 0;
  std::vector<std::size_t> sizes;
  ElementSet identity_component;

  ElementSet members(std::uint32_t id) const {
    ElementSet out;
    for (Element v = 0; v < component_of.size(); ++v)
      if (component_of[v] == id) out.push_back(v);
    return out;
  }
};

inline ComponentDecomposition components_bfs(const PairGraph& graph) {
  ComponentDecomposition d;
  const std::size_t n = graph.vertex_count();
  const auto unseen = UINT32_MAX;
  d.component_of.assign(n, unseen);
  std::deque<Element> queue;
  for (Element start = 0; start < n; ++start) {
    if (d.component_of[start] != unseen) continue;
    const auto id = static_cast<std::uint32_t>(d.count++);
    d.sizes.push_back(0);
    d.component_of[start] = id;
    queue.push_back(start);
    while (!queue.empty()) {
      Element v = queue.front();
      queue.pop_front();
      ++d.sizes[id];
      for (Element w : graph.neighbors(v))
        if (d.component_of[w] == unseen) {
          d.component_of[w] = id;
          queue.push_back(w);
        }
    }
  }
  d.identity_component = d.members(d.component_of[graph.group().identity()]);
  return d;
}

/// U = ⟨H ∩ (S_H ∪ S_O S_O^-1)⟩, the part of H reachable from e.
inline ElementSet identity_subgroup(const Subgroup& h, const GeneratingSet& gen) {
  ElementSet gens;
  for (Element x : difference_set(h.parent(), gen.outer, gen.outer))
    if (h.contains(x)) gens.push_back(x);
  gens.insert(gens.end(), gen.inner.begin(), gen.inner.end());
  return generated_elements(h.parent(), normalize(std::move(gens)));
}

/// The three terms of the closed component count:
///   [H : U] + |G − H| − |∪_{s ∈ S_O} H s|.
struct ComponentFormula {
  std::size_t subgroup_index = 0;
  std::size_t outer_vertices = 0;
  std::size_t covered_vertices = 0;

  std::size_t total() const { return subgroup_index + outer_vertices - covered_vertices; }
};

inline ComponentFormula component_count_formula(const Subgroup& h, const GeneratingSet& gen) {
  ComponentFormula f;
  f.subgroup_index = h.order() / identity_subgroup(h, gen).size();
  f.outer_vertices = h.parent().order() - h.order();
  f.covered_vertices = gen.covered_cosets() * h.order();
  return f;
}

struct ConnectivityVerdict {
  bool connected = false;
  ElementSet reachable_subgroup;  // U
  bool subgroup_is_h = false;
  std::vector<std::uint32_t> uncovered_cosets;
  std::string witness;
};

/// Criterion: U = H and S_O meets every nontrivial coset.
inline ConnectivityVerdict is_connected(const Subgroup& h, const GeneratingSet& gen) {
  ConnectivityVerdict v;
  v.reachable_subgroup = identity_subgroup(h, gen);
  v.subgroup_is_h = v.reachable_subgroup.size() == h.order();
  for (std::uint32_t c = 1; c < h.index(); ++c)
    if (gen.coset_counts[c] == 0) v.uncovered_cosets.push_back(c);
  v.connected = v.subgroup_is_h && v.uncovered_cosets.empty();
  const FiniteGroup& g = h.parent();
  if (v.connected) {
    v.witness = "U = H and every nontrivial coset meets S";
  } else {
    if (!v.subgroup_is_h) {
      v.witness = "U is a proper subgroup of H: {";
      for (std::size_t i = 0; i < v.reachable_subgroup.size(); ++i)
        v.witness += (i ? ", " : "") + g.label(v.reachable_subgroup[i]);
      v.witness += "}";
    }
    if (!v.uncovered_cosets.empty()) {
      if (!v.witness.empty()) v.witness += "; ";
      v.witness += "uncovered cosets H" + g.label(h.coset_rep(v.uncovered_cosets.front()));
      for (std::size_t i = 1; i < v.uncovered_cosets.size(); ++i)
        v.witness += ", H" + g.label(h.coset_rep(v.uncovered_cosets[i]));
    }
  }
  return v;
}

/// U ∪ (∪_{s ∈ S_O} U s).
inline ElementSet identity_component_formula(const Subgroup& h, const GeneratingSet& gen) {
  const FiniteGroup& g = h.parent();
  ElementSet u = identity_subgroup(h, gen);
  ElementSet out = u;
  for (Element s : gen.outer)
    for (Element x : u) out.push_back(g.mul(x, s));
  return normalize(std::move(out));
}

/// Left translate h * comp for h in H.
inline ElementSet translate_component(const Subgroup& h, Element by, const ElementSet& comp) {
  if (by >= h.parent().order() || !h.contains(by))
    throw ValidationError("translation element must lie in H");
  ElementSet out;
  out.reserve(comp.size());
  for (Element x : comp) out.push_back(h.parent().mul(by, x));
  return normalize(std::move(out));
}

struct BipartiteResult {
  bool bipartite = false;
  /// 0/1 part per vertex, present when bipartite; each component's minimal
  /// vertex gets color 0.
  std::optional<std::vector<std::uint8_t>> coloring;
};

inline BipartiteResult is_bipartite(const PairGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::uint8_t> color(n, 2);
  std::deque<Element> queue;
  for (Element start = 0; start < n; ++start) {
    if (color[start] != 2) continue;
    color[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      Element v = queue.front();
      queue.pop_front();
      for (Element w : graph.neighbors(v)) {
        if (color[w] == 2) {
          color[w] = color[v] ^ 1;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return {false, std::nullopt};
        }
      }
    }
  }
  return {true, std::move(color)};
}

/// Every index-2 subgroup of G. They all contain Q = ⟨g^2⟩ (which already
/// contains [G, G]), so they are the kernels of the nonzero functionals on
/// the elementary abelian 2-group G/Q.
inline std::vector<ElementSet> index_two_subgroups(const FiniteGroup& g) {
  ElementSet squares;
  for (Element x = 0; x < g.order(); ++x) squares.push_back(g.mul(x, x));
  const Subgroup q = Subgroup::from_elements(g, generated_elements(g, normalize(std::move(squares))));
  const std::size_t cosets = q.index();
  // coordinates of each coset of Q in a greedily chosen basis
  std::vector<std::uint32_t> coord(cosets, 0);
  std::vector<char> known(cosets, 0);
  known[0] = 1;
  unsigned rank = 0;
  for (std::uint32_t c = 1; c < cosets; ++c) {
    if (known[c]) continue;
    const Element b = q.coset_rep(c);
    const std::uint32_t bit = 1u << rank++;
    std::vector<std::uint32_t> span;
    for (std::uint32_t d = 0; d < cosets; ++d)
      if (known[d]) span.push_back(d);
    for (std::uint32_t d : span) {
      const std::uint32_t target = q.coset_of(g.mul(q.coset_rep(d), b));
      coord[target] = coord[d] | bit;
      known[target] = 1;
    }
  }
  std::vector<ElementSet> out;
  for (std::uint32_t f = 1; f < (1u << rank); ++f) {
    ElementSet kernel;
    for (Element x = 0; x < g.order(); ++x)
      if (std::popcount(coord[q.coset_of(x)] & f) % 2 == 0) kernel.push_back(x);
    out.push_back(std::move(kernel));
  }
  return out;
}

/// Kernel N of a homomorphism χ: G → {±1} with χ(S) = {−1}, if one exists.
inline std::optional<ElementSet> sign_homomorphism_kernel(const FiniteGroup& g, const ElementSet& s) {
  if (s.empty()) return g.all_elements();  // the trivial character
  for (auto& kernel : index_two_subgroups(g)) {
    bool disjoint = std::none_of(s.begin(), s.end(), [&](Element x) { return set_contains(kernel, x); });
    if (disjoint) return std::move(kernel);
  }
  return std::nullopt;
}

inline bool sign_homomorphism_exists(const FiniteGroup& g, const ElementSet& s) {
  return sign_homomorphism_kernel(g, s).has_value();
}

}  // namespace pairgraph
