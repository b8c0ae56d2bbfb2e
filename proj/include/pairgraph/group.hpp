#pragma once

// Finite groups with elements as dense indices 0..m-1. The concrete structure
// (permutations, matrices, field elements) only lives in the constructors and
// in the element labels.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pairgraph/error.hpp"
#include "pairgraph/field.hpp"

namespace pairgraph {

using Element = std::uint32_t;
/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Element>;

inline ElementSet normalize(ElementSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool set_contains(const ElementSet& s, Element x) {
  return std::binary_search(s.begin(), s.end(), x);
}

/// Multiplication is tabulated up to this order and computed on demand above.
inline constexpr std::size_t kTableCap = 4096;
inline constexpr std::size_t kOrderCap = 20000;

/// How a group was constructed. Used for serialization and for the builtin
/// subgroups that need to know the concrete structure.
struct GroupDescriptor {
  std::string kind;
  std::vector<unsigned> params;
  std::vector<GroupDescriptor> factors;  // only for kind == "product"

  bool operator==(const GroupDescriptor&) const = default;
};

class FiniteGroup {
 public:
  using MulFn = std::function<Element(Element, Element)>;
  using InvFn = std::function<Element(Element)>;

  FiniteGroup(GroupDescriptor descriptor, std::size_t order, Element identity, MulFn mul, InvFn inv,
              std::vector<std::string> labels) {
    if (order == 0) throw ValidationError("group order must be positive");
    if (order > kOrderCap)
      throw SizeCapError("group order " + std::to_string(order) + " exceeds cap " +
                         std::to_string(kOrderCap));
    auto impl = std::make_shared<Impl>();
    impl->descriptor = std::move(descriptor);
    impl->order = order;
    impl->identity = identity;
    impl->labels = std::move(labels);
    impl->inv.resize(order);
    for (Element a = 0; a < order; ++a) impl->inv[a] = inv(a);
    if (order <= kTableCap) {
      impl->table.resize(order * order);
      for (Element a = 0; a < order; ++a)
        for (Element b = 0; b < order; ++b)
          impl->table[std::size_t(a) * order + b] = static_cast<std::uint16_t>(mul(a, b));
    } else {
      impl->mul = std::move(mul);
    }
    for (Element a = 0; a < order; ++a) impl->by_label.emplace(impl->labels[a], a);
    impl_ = std::move(impl);
  }

  std::size_t order() const { return impl_->order; }
  Element identity() const { return impl_->identity; }
  const GroupDescriptor& descriptor() const { return impl_->descriptor; }
  bool tabulated() const { return !impl_->table.empty(); }

  Element mul(Element a, Element b) const {
    if (!impl_->table.empty()) return impl_->table[std::size_t(a) * impl_->order + b];
    return impl_->mul(a, b);
  }
  Element inv(Element a) const { return impl_->inv[a]; }

  const std::string& label(Element a) const { return impl_->labels[a]; }
  const std::vector<std::string>& labels() const { return impl_->labels; }

  std::optional<Element> find_label(std::string_view text) const {
    auto it = impl_->by_label.find(std::string(text));
    if (it == impl_->by_label.end()) return std::nullopt;
    return it->second;
  }

  ElementSet all_elements() const {
    ElementSet out(order());
    std::iota(out.begin(), out.end(), Element{0});
    return out;
  }

  Element power(Element a, std::uint64_t e) const {
    Element r = identity();
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  std::size_t element_order(Element a) const {
    std::size_t n = 1;
    for (Element x = a; x != identity(); x = mul(x, a)) ++n;
    return n;
  }

  bool same_as(const FiniteGroup& other) const { return impl_ == other.impl_; }

 private:
  struct Impl {
    GroupDescriptor descriptor;
    std::size_t order = 0;
    Element identity = 0;
    std::vector<std::uint16_t> table;
    MulFn mul;
    std::vector<Element> inv;
    std::vector<std::string> labels;
    std::unordered_map<std::string, Element> by_label;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Result of an axiom check; `failure` names the first violated axiom.
struct AxiomReport {
  bool ok = true;
  std::string failure;
};

/// Exhaustive for order <= 64, otherwise `samples` random triples drawn from
/// a fixed seed.
inline AxiomReport check_group_axioms(const FiniteGroup& g, std::size_t samples = 10000,
                                      std::uint64_t seed = 0x5eed) {
  const auto m = static_cast<Element>(g.order());
  const Element e = g.identity();
  for (Element a = 0; a < m; ++a) {
    if (g.mul(e, a) != a || g.mul(a, e) != a) return {false, "identity fails at " + g.label(a)};
    if (g.mul(a, g.inv(a)) != e || g.mul(g.inv(a), a) != e) return {false, "inverse fails at " + g.label(a)};
    if (g.inv(g.inv(a)) != a) return {false, "inverse not an involution at " + g.label(a)};
  }
  auto assoc = [&](Element a, Element b, Element c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
  if (m <= 64) {
    for (Element a = 0; a < m; ++a)
      for (Element b = 0; b < m; ++b)
        for (Element c = 0; c < m; ++c)
          if (!assoc(a, b, c)) return {false, "associativity fails"};
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      Element a = rng() % m, b = rng() % m, c = rng() % m;
      if (!assoc(a, b, c)) return {false, "associativity fails"};
    }
  }
  return {};
}

namespace detail {

inline std::size_t factorial(unsigned n) {
  std::size_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Image list of the permutation with the given lexicographic rank.
inline std::vector<unsigned> unrank_permutation(std::size_t rank, unsigned n) {
  std::vector<unsigned> pool(n);
  std::iota(pool.begin(), pool.end(), 0u);
  std::vector<unsigned> out;
  out.reserve(n);
  for (unsigned i = n; i > 0; --i) {
    std::size_t f = factorial(i - 1);
    std::size_t idx = rank / f;
    rank %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

inline std::size_t rank_permutation(const std::vector<unsigned>& perm) {
  const auto n = static_cast<unsigned>(perm.size());
  std::size_t rank = 0;
  for (unsigned i = 0; i < n; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank += smaller * factorial(n - 1 - i);
  }
  return rank;
}

/// Cycle notation with 1-based points; the identity is "()".
inline std::string cycle_notation(const std::vector<unsigned>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (unsigned i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += "(";
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = perm[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

inline bool is_even_permutation(const std::vector<unsigned>& perm) {
  std::size_t transpositions = 0;
  std::vector<bool> seen(perm.size(), false);
  for (unsigned i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (unsigned j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

/// Product of permutations acting on the left factor first:
/// (a*b)(i) = b(a(i)).
inline std::vector<unsigned> compose(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  std::vector<unsigned> out(a.size());
  for (unsigned i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

inline std::vector<unsigned> invert(const std::vector<unsigned>& a) {
  std::vector<unsigned> out(a.size());
  for (unsigned i = 0; i < a.size(); ++i) out[a[i]] = i;
  return out;
}

/// A permutation group given by an explicit list of permutations (identity
/// first), ranked through the lexicographic rank of S_n.
inline FiniteGroup permutation_group(GroupDescriptor desc, unsigned n,
                                     std::vector<std::vector<unsigned>> perms) {
  const std::size_t nfact = factorial(n);
  auto index_of = std::make_shared<std::vector<Element>>(nfact, Element(-1));
  auto elems = std::make_shared<std::vector<std::vector<unsigned>>>(std::move(perms));
  for (Element i = 0; i < elems->size(); ++i) (*index_of)[rank_permutation((*elems)[i])] = i;
  std::vector<std::string> labels;
  labels.reserve(elems->size());
  for (const auto& p : *elems) labels.push_back(cycle_notation(p));
  auto mul = [elems, index_of](Element a, Element b) {
    return (*index_of)[rank_permutation(compose((*elems)[a], (*elems)[b]))];
  };
  auto inv = [elems, index_of](Element a) { return (*index_of)[rank_permutation(invert((*elems)[a]))]; };
  return FiniteGroup(std::move(desc), elems->size(), 0, mul, inv, std::move(labels));
}

inline std::size_t checked_product(std::size_t a, std::size_t b) {
  if (a != 0 && b > kOrderCap / a + 1) return kOrderCap + 1;
  return a * b;
}

}  // namespace detail

inline FiniteGroup make_cyclic(unsigned n) {
  if (n == 0) throw ValidationError("cyclic group order must be at least 1");
  if (n > kOrderCap) throw SizeCapError("cyclic group order exceeds cap");
  std::vector<std::string> labels;
  for (unsigned i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FiniteGroup({"cyclic", {n}, {}}, n, 0, [n](Element a, Element b) { return (a + b) % n; },
                     [n](Element a) { return (n - a) % n; }, std::move(labels));
}

/// Permutations in lexicographic order of their image lists; products act
/// left factor first, so (1,2)*(2,3) = (1,3,2).
inline FiniteGroup make_symmetric(unsigned n) {
  if (n == 0 || n > 8) throw ValidationError("symmetric group degree must be in [1, 8]");
  const std::size_t m = detail::factorial(n);
  if (m > kOrderCap) throw SizeCapError("symmetric group order " + std::to_string(m) + " exceeds cap");
  std::vector<std::vector<unsigned>> perms;
  for (std::size_t r = 0; r < m; ++r) perms.push_back(detail::unrank_permutation(r, n));
  return detail::permutation_group({"symmetric", {n}, {}}, n, std::move(perms));
}

inline FiniteGroup make_alternating(unsigned n) {
  if (n == 0 || n > 8) throw ValidationError("alternating group degree must be in [1, 8]");
  const std::size_t m = detail::factorial(n);
  if (m / 2 > kOrderCap && n > 1) throw SizeCapError("alternating group order exceeds cap");
  std::vector<std::vector<unsigned>> perms;
  for (std::size_t r = 0; r < m; ++r) {
    auto p = detail::unrank_permutation(r, n);
    if (detail::is_even_permutation(p)) perms.push_back(std::move(p));
  }
  return detail::permutation_group({"alternating", {n}, {}}, n, std::move(perms));
}

/// Order 2n: index i is r^i, index n+i is s r^i, with s r s = r^-1.
inline FiniteGroup make_dihedral(unsigned n) {
  if (n == 0) throw ValidationError("dihedral parameter must be at least 1");
  if (2ull * n > kOrderCap) throw SizeCapError("dihedral group order exceeds cap");
  std::vector<std::string> labels;
  for (unsigned i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : "r^" + std::to_string(i));
  for (unsigned i = 0; i < n; ++i) labels.push_back(i == 0 ? "s" : "s r^" + std::to_string(i));
  auto mul = [n](Element a, Element b) -> Element {
    // (s^x r^i)(s^y r^j) = s^(x+y) r^((-1)^y i + j)
    unsigned x = a / n, i = a % n, y = b / n, j = b % n;
    unsigned rot = y ? (n - i + j) % n : (i + j) % n;
    return ((x + y) % 2) * n + rot;
  };
  auto inv = [n](Element a) -> Element { return a < n ? (n - a) % n : a; };
  return FiniteGroup({"dihedral", {n}, {}}, 2 * n, 0, mul, inv, std::move(labels));
}

/// Element (a, b) has index a * |G2| + b.
inline FiniteGroup make_direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const std::size_t m2 = g2.order();
  const std::size_t m = detail::checked_product(g1.order(), m2);
  if (m > kOrderCap) throw SizeCapError("direct product order exceeds cap");
  std::vector<std::string> labels;
  for (Element a = 0; a < g1.order(); ++a)
    for (Element b = 0; b < m2; ++b) labels.push_back("(" + g1.label(a) + ", " + g2.label(b) + ")");
  auto mul = [g1, g2, m2](Element x, Element y) -> Element {
    return g1.mul(x / m2, y / m2) * m2 + g2.mul(x % m2, y % m2);
  };
  auto inv = [g1, g2, m2](Element x) -> Element { return g1.inv(x / m2) * m2 + g2.inv(x % m2); };
  GroupDescriptor d{"product", {}, {g1.descriptor(), g2.descriptor()}};
  return FiniteGroup(std::move(d), m, g1.identity() * m2 + g2.identity(), mul, inv, std::move(labels));
}

namespace detail {

struct Mat2 {
  unsigned a, b, c, d;
};

inline unsigned mat_code(const Mat2& x, unsigned p) { return ((x.a * p + x.b) * p + x.c) * p + x.d; }

inline unsigned mat_det(const Mat2& x, unsigned p) { return (x.a * x.d % p + p * p - x.b * x.c % p) % p; }

/// 2x2 matrices over F_p whose determinant passes `keep`, identity first and
/// the rest in lexicographic order of (a, b, c, d).
template <class Keep>
std::vector<Mat2> enumerate_matrices(unsigned p, Keep keep) {
  std::vector<Mat2> out{{1, 0, 0, 1}};
  for (unsigned a = 0; a < p; ++a)
    for (unsigned b = 0; b < p; ++b)
      for (unsigned c = 0; c < p; ++c)
        for (unsigned d = 0; d < p; ++d) {
          Mat2 m{a, b, c, d};
          if (a == 1 && b == 0 && c == 0 && d == 1) continue;
          if (keep(mat_det(m, p))) out.push_back(m);
        }
  return out;
}

inline FiniteGroup matrix_group(GroupDescriptor desc, unsigned p, std::vector<Mat2> mats) {
  auto elems = std::make_shared<std::vector<Mat2>>(std::move(mats));
  auto index_of = std::make_shared<std::vector<Element>>(std::size_t(p) * p * p * p, Element(-1));
  for (Element i = 0; i < elems->size(); ++i) (*index_of)[mat_code((*elems)[i], p)] = i;
  std::vector<std::string> labels;
  for (const auto& m : *elems)
    labels.push_back("[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" + std::to_string(m.c) + "," +
                     std::to_string(m.d) + "]]");
  auto mul = [elems, index_of, p](Element x, Element y) {
    const Mat2& u = (*elems)[x];
    const Mat2& v = (*elems)[y];
    Mat2 w{(u.a * v.a + u.b * v.c) % p, (u.a * v.b + u.b * v.d) % p, (u.c * v.a + u.d * v.c) % p,
           (u.c * v.b + u.d * v.d) % p};
    return (*index_of)[mat_code(w, p)];
  };
  auto inv = [elems, index_of, p](Element x) {
    const Mat2& u = (*elems)[x];
    unsigned det = mat_det(u, p);
    unsigned dinv = 1;
    while (det * dinv % p != 1) ++dinv;
    Mat2 w{u.d * dinv % p, (p - u.b) % p * dinv % p, (p - u.c) % p * dinv % p, u.a * dinv % p};
    return (*index_of)[mat_code(w, p)];
  };
  const std::size_t m = elems->size();
  return FiniteGroup(std::move(desc), m, 0, mul, inv, std::move(labels));
}

inline void check_matrix_prime(unsigned p) {
  if (!is_prime(p)) throw ValidationError("matrix group modulus " + std::to_string(p) + " is not prime");
  if (p > 13) throw SizeCapError("matrix group modulus must be at most 13");
}

}  // namespace detail

/// The matrices behind make_gl2(p) / make_sl2(p), in element-index order.
inline std::vector<detail::Mat2> gl2_matrices(unsigned p) {
  return detail::enumerate_matrices(p, [](unsigned det) { return det != 0; });
}

inline std::vector<detail::Mat2> sl2_matrices(unsigned p) {
  return detail::enumerate_matrices(p, [](unsigned det) { return det == 1; });
}

/// Labels are "[[a,b],[c,d]]"; the identity has index 0.
inline FiniteGroup make_gl2(unsigned p) {
  detail::check_matrix_prime(p);
  const std::size_t m = std::size_t(p * p - 1) * (p * p - p);
  if (m > kOrderCap) throw SizeCapError("GL2(" + std::to_string(p) + ") order " + std::to_string(m) + " exceeds cap");
  return detail::matrix_group({"gl2", {p}, {}}, p, gl2_matrices(p));
}

inline FiniteGroup make_sl2(unsigned p) {
  detail::check_matrix_prime(p);
  return detail::matrix_group({"sl2", {p}, {}}, p, sl2_matrices(p));
}

/// Additive group of F_{p^k}; index = base-p packing of the coefficient
/// vector, so the prime field is exactly the indices below p.
inline FiniteGroup make_field_additive(unsigned p, unsigned k) {
  ExtensionField field(p, k);
  std::vector<std::string> labels;
  for (Element x = 0; x < field.order(); ++x) labels.push_back(field.label(x));
  auto f = std::make_shared<ExtensionField>(field);
  return FiniteGroup({"field_additive", {p, k}, {}}, field.order(), 0,
                     [f](Element a, Element b) { return f->add(a, b); }, [f](Element a) { return f->neg(a); },
                     std::move(labels));
}

inline FiniteGroup make_group(const GroupDescriptor& d) {
  if (d.kind == "product") {
    if (d.factors.size() != 2) throw ValidationError("product group expects exactly two factors");
    return make_direct_product(make_group(d.factors[0]), make_group(d.factors[1]));
  }
  const std::size_t expected = d.kind == "field_additive" ? 2 : 1;
  if (d.params.size() != expected)
    throw ValidationError("group kind '" + d.kind + "' expects " + std::to_string(expected) + " parameter(s)");
  const unsigned a = d.params[0];
  if (d.kind == "cyclic") return make_cyclic(a);
  if (d.kind == "symmetric") return make_symmetric(a);
  if (d.kind == "alternating") return make_alternating(a);
  if (d.kind == "dihedral") return make_dihedral(a);
  if (d.kind == "gl2") return make_gl2(a);
  if (d.kind == "sl2") return make_sl2(a);
  if (d.kind == "field_additive") return make_field_additive(a, d.params[1]);
  throw ValidationError("unknown group kind '" + d.kind + "'");
}

/// {x : N(x) in values} inside a group built by make_field_additive.
inline ElementSet field_norm_preimage(const FiniteGroup& field_group, const ElementSet& values) {
  const auto& d = field_group.descriptor();
  if (d.kind != "field_additive") throw ValidationError("norm preimage needs a field_additive group");
  ExtensionField field(d.params[0], d.params[1]);
  for (Element v : values)
    if (v >= field.characteristic())
      throw ValidationError("norm value " + std::to_string(v) + " is outside the prime field");
  const ElementSet wanted = normalize(values);
  ElementSet out;
  for (Element x = 0; x < field.order(); ++x)
    if (set_contains(wanted, field.norm(x))) out.push_back(x);
  return out;
}

}  // namespace pairgraph
