#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pairgraph/error.hpp"
#include "pairgraph/group.hpp"

namespace pairgraph {

/// A subgroup H of a parent group together with its right-coset
/// decomposition. Coset 0 is H itself; the remaining cosets are numbered in
/// increasing order of their minimal element, which is also their
/// representative.
class Subgroup {
 public:
  /// Validates closure; throws NotClosedError otherwise.
  static Subgroup from_elements(const FiniteGroup& g, ElementSet elems) {
    elems = normalize(std::move(elems));
    if (elems.empty()) throw ValidationError("subgroup element list is empty");
    if (elems.back() >= g.order())
      throw ValidationError("subgroup element " + std::to_string(elems.back()) + " out of range");
    if (!set_contains(elems, g.identity())) throw NotClosedError("subgroup does not contain the identity");
    std::vector<char> member(g.order(), 0);
    for (Element x : elems) member[x] = 1;
    for (Element a : elems) {
      if (!member[g.inv(a)]) throw NotClosedError("subgroup not closed under inverses at " + g.label(a));
      for (Element b : elems)
        if (!member[g.mul(a, b)])
          throw NotClosedError("subgroup not closed: " + g.label(a) + " * " + g.label(b) + " missing");
    }
    return Subgroup(g, std::move(elems));
  }

  const FiniteGroup& parent() const { return parent_; }
  const ElementSet& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  /// [G:H]
  std::size_t index() const { return coset_reps_.size(); }
  bool contains(Element x) const { return coset_of_[x] == 0; }
  std::uint32_t coset_of(Element x) const { return coset_of_[x]; }
  const std::vector<std::uint32_t>& coset_labels() const { return coset_of_; }
  Element coset_rep(std::uint32_t coset) const { return coset_reps_[coset]; }
  const ElementSet& coset_reps() const { return coset_reps_; }

  /// Members of the coset, ascending.
  ElementSet coset_members(std::uint32_t coset) const {
    ElementSet out;
    for (Element x = 0; x < coset_of_.size(); ++x)
      if (coset_of_[x] == coset) out.push_back(x);
    return out;
  }

  ElementSet complement() const {
    ElementSet out;
    for (Element x = 0; x < coset_of_.size(); ++x)
      if (coset_of_[x] != 0) out.push_back(x);
    return out;
  }

 private:
  Subgroup(FiniteGroup g, ElementSet elems) : parent_(std::move(g)), elements_(std::move(elems)) {
    const std::uint32_t unassigned = UINT32_MAX;
    coset_of_.assign(parent_.order(), unassigned);
    for (Element h : elements_) coset_of_[h] = 0;
    coset_reps_.push_back(elements_.front());
    for (Element x = 0; x < parent_.order(); ++x) {
      if (coset_of_[x] != unassigned) continue;
      const auto id = static_cast<std::uint32_t>(coset_reps_.size());
      coset_reps_.push_back(x);
      for (Element h : elements_) coset_of_[parent_.mul(h, x)] = id;
    }
  }

  FiniteGroup parent_;
  ElementSet elements_;
  std::vector<std::uint32_t> coset_of_;
  ElementSet coset_reps_;
};

/// Smallest subgroup containing `generators`. Closure by right
/// multiplication with a greedily reduced generator list; an empty input
/// yields {e}.
inline ElementSet generated_elements(const FiniteGroup& g, const ElementSet& generators) {
  std::vector<char> member(g.order(), 0);
  ElementSet elems{g.identity()};
  member[g.identity()] = 1;
  ElementSet gens;
  for (Element x : generators) {
    if (x >= g.order()) throw ValidationError("element " + std::to_string(x) + " out of range");
    if (member[x]) continue;
    gens.push_back(x);
    // re-close with the enlarged generator list
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (Element s : gens) {
        Element y = g.mul(elems[i], s);
        if (!member[y]) {
          member[y] = 1;
          elems.push_back(y);
        }
      }
    }
  }
  return normalize(std::move(elems));
}

inline Subgroup subgroup_generated(const FiniteGroup& g, const ElementSet& generators) {
  return Subgroup::from_elements(g, generated_elements(g, generators));
}

/// {a * b^-1 : a in A, b in B}
inline ElementSet difference_set(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  std::vector<char> hit(g.order(), 0);
  for (Element x : a)
    for (Element y : b) hit[g.mul(x, g.inv(y))] = 1;
  ElementSet out;
  for (Element x = 0; x < g.order(); ++x)
    if (hit[x]) out.push_back(x);
  return out;
}

/// Named subgroups used throughout the worked examples:
///   sl2_in_gl2, alternating_in_symmetric, evens (cyclic of even order),
///   klein_in_a4 ({e, (1,2)(3,4), (1,3)(2,4), (1,4)(2,3)}), prime_field,
///   trivial, whole.
inline Subgroup builtin_subgroup(const FiniteGroup& g, const std::string& name) {
  const auto& d = g.descriptor();
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw ValidationError("builtin subgroup '" + name + "' requires " + what);
  };
  ElementSet elems;
  if (name == "trivial") {
    elems = {g.identity()};
  } else if (name == "whole") {
    elems = g.all_elements();
  } else if (name == "sl2_in_gl2") {
    require(d.kind == "gl2", "a gl2 group");
    const unsigned p = d.params[0];
    auto mats = gl2_matrices(p);
    for (Element i = 0; i < mats.size(); ++i)
      if (detail::mat_det(mats[i], p) == 1) elems.push_back(i);
  } else if (name == "alternating_in_symmetric") {
    require(d.kind == "symmetric", "a symmetric group");
    for (Element i = 0; i < g.order(); ++i)
      if (detail::is_even_permutation(detail::unrank_permutation(i, d.params[0]))) elems.push_back(i);
  } else if (name == "evens") {
    require(d.kind == "cyclic" && d.params[0] % 2 == 0, "a cyclic group of even order");
    for (Element i = 0; i < g.order(); i += 2) elems.push_back(i);
  } else if (name == "klein_in_a4") {
    require(d.kind == "alternating" && d.params[0] == 4, "the alternating group A4");
    for (const char* label : {"()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"}) elems.push_back(*g.find_label(label));
  } else if (name == "prime_field") {
    require(d.kind == "field_additive", "a field_additive group");
    for (Element i = 0; i < d.params[0]; ++i) elems.push_back(i);
  } else {
    throw ValidationError("unknown builtin subgroup '" + name + "'");
  }
  return Subgroup::from_elements(g, std::move(elems));
}

}  // namespace pairgraph
