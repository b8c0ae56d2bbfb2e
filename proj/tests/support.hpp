// Shared test helpers: independent oracles and seeded instance generators.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pairgraph.hpp"

namespace testsupport {

using namespace pairgraph;

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

/// Adjacency straight from the edge definition {h, hs}, no library graph code.
inline std::vector<std::vector<std::uint8_t>> definition_adjacency(const FiniteGroup& g, const ElementSet& h,
                                                                   const ElementSet& s) {
  std::vector<std::vector<std::uint8_t>> a(g.order(), std::vector<std::uint8_t>(g.order(), 0));
  for (Element x : h)
    for (Element y : s) {
      const Element z = g.mul(x, y);
      a[x][z] = a[z][x] = 1;
    }
  return a;
}

inline std::vector<std::vector<double>> as_double(const std::vector<std::vector<std::uint8_t>>& a) {
  std::vector<std::vector<double>> out(a.size(), std::vector<double>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = a[i][j];
  return out;
}

/// Component count by union-find over the definition adjacency.
inline std::size_t union_find_components(const std::vector<std::vector<std::uint8_t>>& a) {
  std::vector<std::size_t> parent(a.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = a.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i][j] && find(i) != find(j)) {
        parent[find(i)] = find(j);
        --count;
      }
  return count;
}

/// Subgroup generated by `gens`, by saturating products of all pairs until nothing new appears.
inline ElementSet naive_closure(const FiniteGroup& g, const ElementSet& gens) {
  std::set<Element> cur(gens.begin(), gens.end());
  cur.insert(g.identity());
  while (true) {
    std::set<Element> next = cur;
    for (Element a : cur)
      for (Element b : cur) next.insert(g.mul(a, b));
    if (next.size() == cur.size()) break;
    cur = std::move(next);
  }
  return ElementSet(cur.begin(), cur.end());
}

/// {a b^-1 : a, b in s}, enumerated directly.
inline ElementSet naive_differences(const FiniteGroup& g, const ElementSet& s) {
  std::set<Element> out;
  for (Element a : s)
    for (Element b : s) out.insert(g.mul(a, g.inv(b)));
  return ElementSet(out.begin(), out.end());
}

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }

/// Groups of order at most 48 for property tests.
inline const std::vector<FiniteGroup>& small_groups() {
  static const std::vector<FiniteGroup> groups = [] {
    std::vector<FiniteGroup> v;
    for (unsigned n : {2u, 4u, 6u, 8u, 9u, 10u, 12u, 15u, 16u, 20u, 24u}) v.push_back(make_cyclic(n));
    for (unsigned n : {3u, 4u, 5u, 6u, 8u, 12u}) v.push_back(make_dihedral(n));
    v.push_back(make_symmetric(3));
    v.push_back(make_symmetric(4));
    v.push_back(make_alternating(4));
    v.push_back(make_gl2(2));
    v.push_back(make_gl2(3));
    v.push_back(make_sl2(3));
    v.push_back(make_field_additive(2, 4));
    v.push_back(make_field_additive(3, 2));
    v.push_back(make_field_additive(5, 2));
    v.push_back(make_direct_product(make_cyclic(2), make_cyclic(6)));
    v.push_back(make_direct_product(make_symmetric(3), make_cyclic(4)));
    return v;
  }();
  return groups;
}

struct Instance {
  FiniteGroup group;
  ElementSet h;
  ElementSet s;
};

/// Random valid (G, H, S): H generated by up to two random elements, S a
/// random subset of G minus the identity whose H-part is closed under inverses.
inline Instance random_instance(std::mt19937_64& rng) {
  const auto& groups = small_groups();
  const FiniteGroup g = groups[below(rng, groups.size())];
  ElementSet gens;
  const auto ngens = below(rng, 3);
  for (std::uint64_t i = 0; i < ngens; ++i) gens.push_back(static_cast<Element>(below(rng, g.order())));
  ElementSet h = naive_closure(g, gens);
  std::set<Element> hset(h.begin(), h.end());
  const double density = 0.05 + 0.5 * std::uniform_real_distribution<double>(0, 1)(rng);
  std::set<Element> s;
  for (Element x = 0; x < g.order(); ++x) {
    if (x == g.identity()) continue;
    if (std::uniform_real_distribution<double>(0, 1)(rng) < density) {
      s.insert(x);
      if (hset.count(x)) s.insert(g.inv(x));
    }
  }
  return {g, std::move(h), ElementSet(s.begin(), s.end())};
}

/// Index-2 subgroups available for the complementary-pair properties.
struct IndexTwoPair {
  FiniteGroup group;
  Subgroup h;
};

inline std::vector<IndexTwoPair> index_two_corpus() {
  std::vector<IndexTwoPair> v;
  for (unsigned m : {2u, 3u, 4u, 5u, 6u, 8u, 10u, 12u}) {
    const auto g = make_cyclic(2 * m);
    v.push_back({g, builtin_subgroup(g, "evens")});
  }
  const auto s4 = make_symmetric(4);
  v.push_back({s4, builtin_subgroup(s4, "alternating_in_symmetric")});
  const auto gl = make_gl2(3);
  v.push_back({gl, builtin_subgroup(gl, "sl2_in_gl2")});
  return v;
}

inline std::vector<double> sorted_spectrum(const PairGraph& graph) { return compute_spectrum(graph).eigenvalues; }

inline double max_deviation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace testsupport
