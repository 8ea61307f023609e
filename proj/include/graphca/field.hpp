#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphca/error.hpp"

namespace graphca {

inline constexpr std::uint32_t max_field_order = 1024;

struct PrimePower {
  std::uint32_t prime = 0;
  std::uint32_t exponent = 0;
  std::uint32_t value() const {
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < exponent; ++i) q *= prime;
    return q;
  }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Standard-form factorisation g = p1^n1 * ... * pl^nl, primes ascending.
inline std::vector<PrimePower> factor_prime_powers(std::uint64_t g) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= g; ++p) {
    if (g % p != 0) continue;
    PrimePower pp{static_cast<std::uint32_t>(p), 0};
    while (g % p == 0) {
      g /= p;
      ++pp.exponent;
    }
    out.push_back(pp);
  }
  if (g > 1) out.push_back({static_cast<std::uint32_t>(g), 1});
  return out;
}

inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factor_prime_powers(q);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

namespace detail {

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over Z_p.
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
    trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of `index`.
inline Poly monic_from_index(std::uint32_t index, std::uint32_t degree, std::uint32_t p) {
  Poly f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = index % p;
    index /= p;
  }
  f[degree] = 1;
  return f;
}

inline std::uint32_t int_pow(std::uint32_t base, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace detail

/// Exhaustive check: no monic factor of degree 1..n/2 divides f.
inline bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= n; ++d) {
    const std::uint32_t count = detail::int_pow(p, d);
    for (std::uint32_t idx = 0; idx < count; ++idx)
      if (detail::poly_mod(f, detail::monic_from_index(idx, d, p), p).empty()) return false;
  }
  return true;
}

/// GF(p^n). Elements are integers 0..q-1 whose base-p digits are the
/// polynomial coefficients (lowest degree first), so for n = 1 this is
/// plain arithmetic mod p. For n > 1 the reduction polynomial is the
/// smallest monic irreducible of degree n when the lower coefficients
/// (c_{n-1}, ..., c_0) are compared lexicographically.
class FiniteField {
 public:
  using Element = std::uint32_t;

  explicit FiniteField(std::uint32_t q) {
    auto pp = as_prime_power(q);
    if (!pp) fail(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (q > max_field_order)
      fail(ErrorCode::SizeLimitExceeded,
           "field order " + std::to_string(q) + " exceeds " + std::to_string(max_field_order));
    p_ = pp->prime;
    n_ = pp->exponent;
    q_ = q;
    if (n_ == 1) {
      reduction_ = {0, 1};
    } else {
      const std::uint32_t count = detail::int_pow(p_, n_);
      for (std::uint32_t idx = 0; idx < count; ++idx) {
        auto f = detail::monic_from_index(idx, n_, p_);
        if (is_irreducible(f, p_)) {
          reduction_ = std::move(f);
          break;
        }
      }
    }
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return n_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& reduction_polynomial() const noexcept { return reduction_; }

  Element add(Element a, Element b) const {
    if (n_ == 1) return (a + b) % p_;
    Element out = 0, scale = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }

  Element neg(Element a) const {
    if (n_ == 1) return (p_ - a) % p_;
    Element out = 0, scale = 1;
    for (std::uint32_t i = 0; i < n_; ++i) {
      out += ((p_ - a % p_) % p_) * scale;
      a /= p_;
      scale *= p_;
    }
    return out;
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    if (n_ == 1) return static_cast<Element>((std::uint64_t{a} * b) % p_);
    const auto pa = to_poly(a), pb = to_poly(b);
    detail::Poly prod(2 * n_ - 1, 0);
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    return from_poly(detail::poly_mod(prod, reduction_, p_));
  }

  Element pow(Element a, std::uint32_t e) const {
    Element r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Element inv(Element a) const {
    if (a == 0) fail(ErrorCode::InvalidSymbol, "zero has no multiplicative inverse");
    return pow(a, q_ - 2);
  }

 private:
  detail::Poly to_poly(Element a) const {
    detail::Poly c(n_, 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  }

  Element from_poly(const detail::Poly& c) const {
    Element out = 0, scale = 1;
    for (std::uint32_t i = 0; i < c.size(); ++i) {
      out += c[i] * scale;
      scale *= p_;
    }
    return out;
  }

  std::uint32_t p_ = 0, n_ = 0, q_ = 0;
  std::vector<std::uint32_t> reduction_;
};

inline FiniteField build_field(std::uint32_t q) { return FiniteField(q); }

}  // namespace graphca
