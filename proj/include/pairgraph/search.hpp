#pragma once

// Seeded and exhaustive search for Ramanujan pair graphs at index 2, plus the
// class-count experiment for complementary set sizes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pairgraph/actions.hpp"
#include "pairgraph/error.hpp"
#include "pairgraph/pair_graph.hpp"
#include "pairgraph/spectral.hpp"
#include "pairgraph/structure.hpp"
#include "pairgraph/subgroup.hpp"

namespace pairgraph {

inline constexpr std::uint64_t kTrialSeedStride = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kExhaustiveCap = 1'000'000;

/// Uniform integer in [0, bound) by rejection; stable across platforms,
/// unlike std::uniform_int_distribution.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Fisher–Yates shuffle of `pool` under mt19937_64(seed), first k taken.
inline ElementSet seeded_subset(ElementSet pool, std::size_t k, std::uint64_t seed) {
  if (k > pool.size()) throw ValidationError("subset size exceeds pool size");
  std::mt19937_64 rng(seed);
  for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[uniform_below(rng, i)]);
  pool.resize(k);
  return normalize(std::move(pool));
}

/// counts[i] elements drawn from nontrivial coset i + 1.
inline ElementSet random_set_with_coset_counts(const Subgroup& h, const std::vector<std::size_t>& counts,
                                               std::uint64_t seed) {
  if (counts.size() + 1 != h.index()) throw ValidationError("need one count per nontrivial coset");
  ElementSet out;
  for (std::uint32_t c = 1; c < h.index(); ++c) {
    auto part = seeded_subset(h.coset_members(c), counts[c - 1], seed + c * kTrialSeedStride);
    out.insert(out.end(), part.begin(), part.end());
  }
  return normalize(std::move(out));
}

enum class SearchMode { exhaustive, random };

struct SearchConfig {
  std::size_t k = 1;
  SearchMode mode = SearchMode::random;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  bool certify = true;
  double tolerance = kDefaultTolerance;
};

struct TrialResult {
  std::size_t trial = 0;
  ElementSet set;
  bool connected = false;
  /// Present when the candidate was connected and certified.
  std::optional<bool> ramanujan;
  std::optional<double> worst_nontrivial;
  double bound = 0.0;       // 2 sqrt(k − 1)
  double size_bound = 0.0;  // n + 2 − 2 sqrt(n)
  /// Connected, |S| >= size_bound, yet certified non-Ramanujan. Must never happen.
  bool bound_violation = false;
};

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return static_cast<std::uint64_t>(std::llround(r));
}

inline TrialResult evaluate_candidate(const Subgroup& h, std::size_t trial, ElementSet s, const SearchConfig& cfg) {
  TrialResult r;
  r.trial = trial;
  const auto gen = GeneratingSet::validate(h, std::move(s));
  r.set = gen.all;
  const double k = static_cast<double>(gen.size());
  const double n = static_cast<double>(h.order());
  r.bound = 2.0 * std::sqrt(std::max(0.0, k - 1.0));
  r.size_bound = n + 2.0 - 2.0 * std::sqrt(n);
  r.connected = is_connected(h, gen).connected;
  if (r.connected && cfg.certify) {
    const PairGraph graph(h, gen);
    const auto verdict = is_ramanujan(graph, cfg.tolerance);
    r.ramanujan = verdict.ramanujan;
    r.worst_nontrivial = verdict.worst_nontrivial;
    r.bound_violation = k >= r.size_bound && !verdict.ramanujan;
  }
  return r;
}

/// One result per trial, in trial order. Random mode: trial i shuffles G − H
/// with seed + i * stride. Exhaustive mode: trial i is the i-th k-subset of
/// G − H in lexicographic order.
inline std::vector<TrialResult> search_ramanujan(const Subgroup& h, const SearchConfig& cfg) {
  if (h.index() != 2) throw ValidationError("Ramanujan search needs [G:H] = 2");
  const ElementSet outer = h.complement();
  if (cfg.k < 1 || cfg.k > outer.size())
    throw ValidationError("set size k must lie in [1, |G − H|] = [1, " + std::to_string(outer.size()) + "]");
  std::vector<TrialResult> out;
  if (cfg.mode == SearchMode::random) {
    for (std::size_t i = 0; i < cfg.trials; ++i)
      out.push_back(evaluate_candidate(h, i, seeded_subset(outer, cfg.k, cfg.seed + i * kTrialSeedStride), cfg));
    return out;
  }
  if (binomial(outer.size(), cfg.k) > kExhaustiveCap)
    throw ValidationError("exhaustive search limited to C(|G − H|, k) <= 10^6");
  std::vector<std::size_t> pick(cfg.k);
  for (std::size_t i = 0; i < cfg.k; ++i) pick[i] = i;
  for (std::size_t trial = 0;; ++trial) {
    ElementSet s;
    for (auto i : pick) s.push_back(outer[i]);
    out.push_back(evaluate_candidate(h, trial, std::move(s), cfg));
    // next combination
    std::size_t i = cfg.k;
    while (i > 0 && pick[i - 1] == outer.size() - cfg.k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < cfg.k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

struct ClassCounts {
  std::size_t k = 0;
  std::size_t orbits_k = 0;
  std::size_t classes_k = 0;
  std::size_t orbits_complement = 0;
  std::size_t classes_complement = 0;
};

namespace detail {

/// Orbits of all k-subsets of G − H, then orbits merged when their pair
/// graphs are isomorphic. Returns {orbit count, isomorphism class count}.
inline std::pair<std::size_t, std::size_t> count_classes(const Subgroup& h, std::size_t k,
                                                         const std::vector<Permutation>& autos) {
  const ElementSet outer = h.complement();
  std::set<ElementSet> assigned;
  std::vector<PairGraph> reps;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    ElementSet s;
    for (auto i : pick) s.push_back(outer[i]);
    if (!assigned.count(s)) {
      for (auto& member : orbit_of_set(h, s, autos)) assigned.insert(std::move(member));
      reps.push_back(build_pair_graph(h, s));
    }
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == outer.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::vector<const PairGraph*> classes;
  for (const auto& g : reps) {
    bool fresh = true;
    for (const auto* c : classes)
      if (find_isomorphism(g, *c)) {
        fresh = false;
        break;
      }
    if (fresh) classes.push_back(&g);
  }
  return {reps.size(), classes.size()};
}

}  // namespace detail

/// Experiment only: compares the number of isomorphism classes of k-regular
/// and (n − k)-regular pair graphs for a fixed index-2 pair. No relation
/// between the two counts is asserted.
inline ClassCounts equivalence_class_counts(const Subgroup& h, std::size_t k) {
  if (h.index() != 2) throw ValidationError("class counting needs [G:H] = 2");
  const std::size_t n = h.order();
  if (k < 1 || k >= n) throw ValidationError("class counting needs 0 < k < n");
  if (binomial(n, k) > 20000) throw SizeCapError("class counting limited to C(n, k) <= 20000");
  const auto autos = automorphism_group(h.parent());
  ClassCounts c;
  c.k = k;
  std::tie(c.orbits_k, c.classes_k) = detail::count_classes(h, k, autos);
  std::tie(c.orbits_complement, c.classes_complement) = detail::count_classes(h, n - k, autos);
  return c;
}

}  // namespace pairgraph
