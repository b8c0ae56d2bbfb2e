#pragma once

// Arithmetic in the finite field F_{p^k}, elements packed as base-p integers
// (coefficient of a^i is digit i). The additive group of the field is what
// make_field_additive exposes; multiplication here is only used for the norm.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pairgraph/error.hpp"

namespace pairgraph {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Conway polynomials for the small fields we ship, low-order coefficient
/// first, monic (last entry 1). Entries are checked for primitivity in tests.
inline std::optional<std::vector<unsigned>> conway_polynomial(unsigned p, unsigned k) {
  static const std::map<std::pair<unsigned, unsigned>, std::vector<unsigned>> table = {
      {{2, 1}, {1, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{2, 12}, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
      {{3, 1}, {1, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
      {{3, 7}, {1, 0, 2, 0, 0, 0, 0, 1}},
      {{5, 1}, {3, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{5, 4}, {2, 4, 4, 0, 1}},
      {{5, 5}, {3, 4, 0, 0, 0, 1}},
      {{7, 1}, {4, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
      {{7, 4}, {3, 4, 5, 0, 1}},
      {{11, 1}, {9, 1}},
      {{11, 2}, {2, 7, 1}},
      {{11, 3}, {9, 2, 0, 1}},
      {{13, 1}, {11, 1}},
      {{13, 2}, {2, 12, 1}},
      {{13, 3}, {11, 2, 0, 1}},
  };
  auto it = table.find({p, k});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

class ExtensionField {
 public:
  /// Uses the shipped Conway polynomial when available, otherwise the first
  /// primitive monic polynomial in base-p counting order of (c_0, ..., c_{k-1}).
  ExtensionField(unsigned p, unsigned k) : p_(p), k_(k) {
    if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw ValidationError("field degree must be at least 1");
    order_ = 1;
    for (unsigned i = 0; i < k; ++i) {
      order_ *= p;
      if (order_ > 4096) throw SizeCapError("field order p^k exceeds 4096");
    }
    if (auto c = conway_polynomial(p, k)) {
      modulus_ = *c;
    } else {
      modulus_ = first_primitive_polynomial();
    }
  }

  ExtensionField(unsigned p, std::vector<unsigned> modulus)
      : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
    order_ = 1;
    for (unsigned i = 0; i < k_; ++i) order_ *= p_;
  }

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t order() const { return order_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  std::vector<unsigned> digits(std::uint32_t x) const {
    std::vector<unsigned> d(k_);
    for (unsigned i = 0; i < k_; ++i) {
      d[i] = x % p_;
      x /= p_;
    }
    return d;
  }

  std::uint32_t from_digits(const std::vector<unsigned>& d) const {
    std::uint32_t x = 0;
    for (unsigned i = k_; i-- > 0;) x = x * p_ + d[i];
    return x;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return from_digits(da);
  }

  std::uint32_t neg(std::uint32_t a) const {
    auto d = digits(a);
    for (auto& c : d) c = (p_ - c) % p_;
    return from_digits(d);
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    std::vector<unsigned> prod(2 * k_, 0);
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // reduce by the monic modulus from the top
    for (unsigned deg = 2 * k_; deg-- > k_;) {
      unsigned c = prod[deg];
      if (c == 0) continue;
      prod[deg] = 0;
      for (unsigned i = 0; i < k_; ++i) {
        unsigned sub = (c * modulus_[i]) % p_;
        prod[deg - k_ + i] = (prod[deg - k_ + i] + p_ - sub) % p_;
      }
    }
    prod.resize(k_);
    return from_digits(prod);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = one();
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  std::uint32_t one() const { return 1; }

  /// Relative norm down to the prime field: x^((q-1)/(p-1)), and N(0) = 0.
  std::uint32_t norm(std::uint32_t x) const {
    if (x == 0) return 0;
    return pow(x, (order_ - 1) / (p_ - 1));
  }

  /// The class of the indeterminate `a` generates the multiplicative group.
  bool modulus_is_primitive() const {
    if (k_ == 1) {
      // F_p[x]/(x + c): x ≡ -c must be a primitive root
      std::uint32_t g = (p_ - modulus_[0] % p_) % p_;
      return is_primitive_root(g);
    }
    std::uint32_t x = p_;  // digits (0, 1, 0, ...)
    const std::uint64_t q1 = order_ - 1;
    if (pow(x, q1) != one()) return false;
    for (auto r : prime_factors(q1))
      if (pow(x, q1 / r) == one()) return false;
    return true;
  }

  std::string label(std::uint32_t x) const {
    if (x == 0) return "0";
    auto d = digits(x);
    std::string out;
    for (unsigned i = 0; i < k_; ++i) {
      if (d[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(d[i]);
      } else {
        if (d[i] != 1) out += std::to_string(d[i]);
        out += "a";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  bool is_primitive_root(std::uint32_t g) const {
    if (g == 0) return false;
    if (p_ == 2) return g == 1;
    auto powmod = [&](std::uint64_t b, std::uint64_t e) {
      std::uint64_t r = 1;
      b %= p_;
      while (e) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
      }
      return r;
    };
    for (auto r : prime_factors(p_ - 1))
      if (powmod(g, (p_ - 1) / r) == 1) return false;
    return true;
  }

  std::vector<unsigned> first_primitive_polynomial() const {
    for (std::uint32_t m = 0; m < order_; ++m) {
      std::vector<unsigned> coeffs(k_ + 1, 0);
      std::uint32_t t = m;
      for (unsigned i = 0; i < k_; ++i) {
        coeffs[i] = t % p_;
        t /= p_;
      }
      coeffs[k_] = 1;
      if (coeffs[0] == 0) continue;
      ExtensionField candidate(p_, coeffs);
      if (candidate.modulus_is_primitive()) return coeffs;
    }
    throw std::logic_error("no primitive polynomial found");
  }

  unsigned p_;
  unsigned k_;
  std::uint32_t order_ = 1;
  std::vector<unsigned> modulus_;
};

}  // namespace pairgraph
