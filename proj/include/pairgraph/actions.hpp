#pragma once

// Transformations of generating sets that give isomorphic pair graphs (right
// translation by H, automorphisms of G), orbit enumeration, and an exact
// isomorphism search for small graphs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pairgraph/error.hpp"
#include "pairgraph/group.hpp"
#include "pairgraph/pair_graph.hpp"
#include "pairgraph/subgroup.hpp"

namespace pairgraph {

/// Image list: element x maps to perm[x].
using Permutation = std::vector<Element>;

inline constexpr std::size_t kAutomorphismCap = 120;

/// {s h : s in S}; requires h in H and S ⊆ G − H.
inline ElementSet right_translate_set(const Subgroup& h, const ElementSet& s, Element by) {
  const FiniteGroup& g = h.parent();
  if (by >= g.order() || !h.contains(by)) throw ValidationError("right translation element must lie in H");
  ElementSet out;
  for (Element x : s) {
    if (x >= g.order() || h.contains(x)) throw ValidationError("right translation needs S ⊆ G − H");
    out.push_back(g.mul(x, by));
  }
  return normalize(std::move(out));
}

/// The vertex map x ↦ x h' off H, identity on H, which carries G(G,H,S) onto
/// G(G,H,S h').
inline Permutation right_translation_isomorphism(const Subgroup& h, Element by) {
  const FiniteGroup& g = h.parent();
  if (by >= g.order() || !h.contains(by)) throw ValidationError("right translation element must lie in H");
  Permutation phi(g.order());
  for (Element x = 0; x < g.order(); ++x) phi[x] = h.contains(x) ? x : g.mul(x, by);
  return phi;
}

/// Bijection check plus ψ(ab) = ψ(a)ψ(b): exhaustive for |G| <= 64, else
/// `samples` pairs from a fixed seed.
inline bool is_automorphism(const FiniteGroup& g, const Permutation& psi, std::size_t samples = 10000,
                            std::uint64_t seed = 0xa5a5) {
  const std::size_t m = g.order();
  if (psi.size() != m) return false;
  std::vector<char> hit(m, 0);
  for (Element x : psi) {
    if (x >= m || hit[x]) return false;
    hit[x] = 1;
  }
  if (m <= 64) {
    for (Element a = 0; a < m; ++a)
      for (Element b = 0; b < m; ++b)
        if (psi[g.mul(a, b)] != g.mul(psi[a], psi[b])) return false;
    return true;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    Element a = rng() % m, b = rng() % m;
    if (psi[g.mul(a, b)] != g.mul(psi[a], psi[b])) return false;
  }
  return true;
}

/// ψ(S). ψ must be an automorphism that maps H onto itself, which always
/// holds at index 2.
inline ElementSet apply_automorphism_to_set(const Subgroup& h, const Permutation& psi, const ElementSet& s) {
  const FiniteGroup& g = h.parent();
  if (!is_automorphism(g, psi)) throw ValidationError("map is not an automorphism of G");
  for (Element x : h.elements())
    if (!h.contains(psi[x])) throw ValidationError("automorphism does not preserve H");
  ElementSet out;
  for (Element x : s) {
    if (x >= g.order()) throw ValidationError("element " + std::to_string(x) + " out of range");
    out.push_back(psi[x]);
  }
  return normalize(std::move(out));
}

/// Every automorphism of G, identity first. Brute force over images of a
/// small generating set, so limited to |G| <= 120.
inline std::vector<Permutation> automorphism_group(const FiniteGroup& g) {
  const std::size_t m = g.order();
  if (m > kAutomorphismCap)
    throw SizeCapError("automorphism enumeration limited to |G| <= " + std::to_string(kAutomorphismCap));
  std::vector<std::size_t> order(m);
  for (Element x = 0; x < m; ++x) order[x] = g.element_order(x);

  // greedy generating set, trying elements of large order first
  std::vector<Element> candidates = g.all_elements();
  std::stable_sort(candidates.begin(), candidates.end(), [&](Element a, Element b) { return order[a] > order[b]; });
  std::vector<Element> gens;
  ElementSet span{g.identity()};
  for (Element x : candidates) {
    if (span.size() == m) break;
    if (set_contains(span, x)) continue;
    gens.push_back(x);
    span = generated_elements(g, normalize(gens));
  }

  // spanning tree of the Cayley digraph: x = parent[x] * gens[via[x]]
  const auto none = Element(-1);
  std::vector<Element> parent(m, none), via(m, none), bfs{g.identity()};
  parent[g.identity()] = g.identity();
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Element y = g.mul(bfs[i], gens[j]);
      if (parent[y] == none) {
        parent[y] = bfs[i];
        via[y] = static_cast<Element>(j);
        bfs.push_back(y);
      }
    }

  std::vector<Permutation> out;
  std::vector<Element> images(gens.size());
  auto try_extend = [&]() {
    Permutation psi(m);
    psi[g.identity()] = g.identity();
    for (std::size_t i = 1; i < bfs.size(); ++i) psi[bfs[i]] = g.mul(psi[parent[bfs[i]]], images[via[bfs[i]]]);
    std::vector<char> hit(m, 0);
    for (Element y : psi) {
      if (hit[y]) return;
      hit[y] = 1;
    }
    for (Element x = 0; x < m; ++x)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (psi[g.mul(x, gens[j])] != g.mul(psi[x], images[j])) return;
    out.push_back(std::move(psi));
  };
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == gens.size()) {
      try_extend();
      return;
    }
    for (Element y = 0; y < m; ++y) {
      if (order[y] != order[gens[depth]]) continue;
      images[depth] = y;
      self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Closure of {S} under right translations by H and the given automorphisms.
/// Returned sorted.
inline std::vector<ElementSet> orbit_of_set(const Subgroup& h, const ElementSet& s,
                                            const std::vector<Permutation>& automorphisms) {
  if (h.index() != 2) throw ValidationError("orbit enumeration needs [G:H] = 2");
  std::set<ElementSet> seen{normalize(s)};
  std::vector<ElementSet> frontier{normalize(s)};
  for (const auto& psi : automorphisms)
    if (!is_automorphism(h.parent(), psi)) throw ValidationError("supplied map is not an automorphism");
  while (!frontier.empty()) {
    ElementSet cur = std::move(frontier.back());
    frontier.pop_back();
    auto visit = [&](ElementSet next) {
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    };
    for (Element x : h.elements()) visit(right_translate_set(h, cur, x));
    for (const auto& psi : automorphisms) {
      ElementSet img;
      for (Element x : cur) img.push_back(psi[x]);
      visit(normalize(std::move(img)));
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<ElementSet> orbit_of_set(const Subgroup& h, const ElementSet& s) {
  return orbit_of_set(h, s, automorphism_group(h.parent()));
}

namespace detail {

/// Joint color refinement of two graphs given as neighbor lists. Returns
/// false as soon as the color histograms differ.
inline bool refine_colors(const PairGraph& a, const PairGraph& b, std::vector<std::uint32_t>& ca,
                          std::vector<std::uint32_t>& cb) {
  const std::size_t n = a.vertex_count();
  ca.assign(n, 0);
  cb.assign(n, 0);
  for (Element v = 0; v < n; ++v) {
    ca[v] = static_cast<std::uint32_t>(a.degree(v));
    cb[v] = static_cast<std::uint32_t>(b.degree(v));
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    auto signature = [](const PairGraph& g, const std::vector<std::uint32_t>& c, Element v) {
      std::vector<std::uint32_t> sig{c[v]};
      for (Element w : g.neighbors(v)) sig.push_back(c[w]);
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<std::uint32_t>> sa(n), sb(n);
    for (Element v = 0; v < n; ++v) {
      sa[v] = signature(a, ca, v);
      sb[v] = signature(b, cb, v);
      ids.emplace(sa[v], 0);
      ids.emplace(sb[v], 0);
    }
    std::uint32_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (Element v = 0; v < n; ++v) {
      ca[v] = ids[sa[v]];
      cb[v] = ids[sb[v]];
    }
    std::vector<std::size_t> ha(next, 0), hb(next, 0);
    for (Element v = 0; v < n; ++v) {
      ++ha[ca[v]];
      ++hb[cb[v]];
    }
    if (ha != hb) return false;
    if (next == classes) return true;
    classes = next;
  }
}

}  // namespace detail

/// Exact isomorphism search: color refinement followed by backtracking with
/// adjacency consistency. Throws once `node_budget` search nodes are used.
inline std::optional<Permutation> find_isomorphism(const PairGraph& a, const PairGraph& b,
                                                   std::size_t node_budget = 20'000'000) {
  const std::size_t n = a.vertex_count();
  if (b.vertex_count() != n || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<std::uint32_t> ca, cb;
  if (!detail::refine_colors(a, b, ca, cb)) return std::nullopt;

  // visit a's vertices in BFS order so each new vertex has mapped neighbors
  std::vector<Element> sequence;
  std::vector<char> queued(n, 0);
  for (Element s = 0; s < n; ++s) {
    if (queued[s]) continue;
    queued[s] = 1;
    sequence.push_back(s);
    for (std::size_t i = sequence.size() - 1; i < sequence.size(); ++i)
      for (Element w : a.neighbors(sequence[i]))
        if (!queued[w]) {
          queued[w] = 1;
          sequence.push_back(w);
        }
  }

  const auto none = Element(-1);
  Permutation map(n, none);
  std::vector<char> used(n, 0);
  std::size_t nodes = 0;
  auto recurse = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    if (++nodes > node_budget) throw Error("isomorphism search exceeded its node budget");
    const Element v = sequence[depth];
    for (Element w = 0; w < n; ++w) {
      if (used[w] || cb[w] != ca[v]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Element u = sequence[i];
        ok = a.adjacent(u, v) == b.adjacent(map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, depth + 1)) return true;
      used[w] = 0;
      map[v] = none;
    }
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  return map;
}

/// True iff phi maps every edge of `a` onto an edge of `b` and is a
/// bijection with equal edge counts.
inline bool is_graph_isomorphism(const PairGraph& a, const PairGraph& b, const Permutation& phi) {
  if (phi.size() != a.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<char> hit(phi.size(), 0);
  for (Element y : phi) {
    if (y >= phi.size() || hit[y]) return false;
    hit[y] = 1;
  }
  for (const auto& [u, v] : a.edges())
    if (!b.adjacent(phi[u], phi[v])) return false;
  return true;
}

}  // namespace pairgraph
