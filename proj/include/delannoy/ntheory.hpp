#pragma once

// Exact and modular integer primitives: binomials, Pascal tables modulo
// prime powers, Legendre symbols, p-adic valuations and prime enumeration.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace delannoy {

// GMP word-sized entry points (mpz_*_ui) are used for 64-bit moduli.
static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));

/// Arbitrary-precision signed integer carrying every quantity in the library.
using ExactInt = mpz_class;

inline ExactInt parse_int(std::string_view text) {
  ExactInt value;
  if (text.empty() || value.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not a decimal integer: " + std::string(text));
  }
  return value;
}

inline std::string to_string(const ExactInt& value) { return value.get_str(10); }

/// a / b, throwing std::domain_error when b does not divide a.
inline ExactInt divide_exact(const ExactInt& a, const ExactInt& b) {
  if (b == 0) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw std::domain_error("inexact division: " + to_string(a) + " / " + to_string(b));
  }
  ExactInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline ExactInt pow(const ExactInt& base, unsigned long exponent) {
  ExactInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

// ---------------------------------------------------------------------------
// 64-bit modular helpers and primality

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Canonical representative of a modulo m, for any sign of a.
inline std::uint64_t mod_u64(const ExactInt& a, std::uint64_t m) {
  return mpz_fdiv_ui(a.get_mpz_t(), m);
}

}  // namespace detail

/// Deterministic Miller-Rabin, valid for every 64-bit input.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Primes in [lo, hi], ascending. Sieves when the range is small enough,
/// otherwise falls back to per-candidate Miller-Rabin.
inline std::vector<std::uint64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("primes_in_range: lo > hi");
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  const auto from = static_cast<std::uint64_t>(std::max<std::int64_t>(lo, 2));
  const auto to = static_cast<std::uint64_t>(hi);

  constexpr std::uint64_t kSieveLimit = 100'000'000;
  if (to <= kSieveLimit) {
    std::vector<bool> composite(to + 1, false);
    for (std::uint64_t i = 2; i * i <= to; ++i) {
      if (composite[i]) continue;
      for (std::uint64_t j = i * i; j <= to; j += i) composite[j] = true;
    }
    for (std::uint64_t i = from; i <= to; ++i) {
      if (!composite[i]) out.push_back(i);
    }
    return out;
  }
  for (std::uint64_t i = from;; ++i) {
    if (is_prime(i)) out.push_back(i);
    if (i == to) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Prime powers and residues

/// Modulus p^e with p prime and e in {1,2,3,4}; the modulus must fit in 64 bits.
class PrimePower {
 public:
  PrimePower(std::uint64_t p, unsigned e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("PrimePower: " + std::to_string(p) + " is not prime");
    if (e < 1 || e > 4) throw std::invalid_argument("PrimePower: exponent must be in 1..4");
    unsigned __int128 m = 1;
    for (unsigned i = 0; i < e; ++i) {
      m *= p;
      if (m > std::numeric_limits<std::uint64_t>::max()) {
        throw std::invalid_argument("PrimePower: modulus exceeds 64 bits");
      }
    }
    modulus_ = static_cast<std::uint64_t>(m);
  }

  std::uint64_t prime() const { return p_; }
  unsigned exponent() const { return e_; }
  std::uint64_t modulus() const { return modulus_; }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  std::uint64_t p_;
  unsigned e_;
  std::uint64_t modulus_;
};

/// Canonical representative in [0, p^e).
class Residue {
 public:
  Residue(std::uint64_t value, PrimePower modulus) : value_(value % modulus.modulus()), modulus_(modulus) {}

  static Residue reduce(const ExactInt& a, PrimePower modulus) {
    return Residue(detail::mod_u64(a, modulus.modulus()), modulus);
  }

  std::uint64_t value() const { return value_; }
  const PrimePower& modulus() const { return modulus_; }

  Residue operator+(const Residue& o) const {
    check_same(o);
    const std::uint64_t m = modulus_.modulus();
    std::uint64_t s = value_ + o.value_;
    if (s >= m || s < value_) s -= m;
    return {s, modulus_};
  }
  Residue operator-(const Residue& o) const {
    check_same(o);
    const std::uint64_t m = modulus_.modulus();
    return {value_ >= o.value_ ? value_ - o.value_ : m - (o.value_ - value_), modulus_};
  }
  Residue operator*(const Residue& o) const {
    check_same(o);
    return {detail::mul_mod(value_, o.value_, modulus_.modulus()), modulus_};
  }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  void check_same(const Residue& o) const {
    if (!(modulus_ == o.modulus_)) throw std::invalid_argument("Residue: modulus mismatch");
  }

  std::uint64_t value_;
  PrimePower modulus_;
};

// ---------------------------------------------------------------------------
// Binomial coefficients

/// C(n, k), zero when k < 0 or k > n.
inline ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  ExactInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

/// Pascal triangle for 0 <= c <= r <= N, either exact or modulo a prime power.
/// Built with the addition-only recurrence so no unit inversions are needed.
template <typename Entry>
class PascalTriangle {
 public:
  std::int64_t size() const { return rows_; }

  /// C(r, c); zero for c < 0, c > r. Requires 0 <= r <= size().
  const Entry& operator()(std::int64_t r, std::int64_t c) const {
    if (r < 0 || r > rows_) throw std::out_of_range("PascalTriangle: row out of range");
    if (c < 0 || c > r) return zero_;
    return data_[index(r, c)];
  }

 protected:
  PascalTriangle(std::int64_t n, Entry zero) : rows_(n), zero_(std::move(zero)) {
    if (n < 0) throw std::invalid_argument("PascalTriangle: N must be non-negative");
    data_.reserve(index(n + 1, 0));
  }
  static std::size_t index(std::int64_t r, std::int64_t c) {
    return static_cast<std::size_t>(r * (r + 1) / 2 + c);
  }

  std::int64_t rows_;
  Entry zero_;
  std::vector<Entry> data_;
};

class ExactBinomialTable : public PascalTriangle<ExactInt> {
 public:
  explicit ExactBinomialTable(std::int64_t n) : PascalTriangle(n, ExactInt(0)) {
    for (std::int64_t r = 0; r <= n; ++r) {
      for (std::int64_t c = 0; c <= r; ++c) {
        if (c == 0 || c == r) {
          data_.emplace_back(1);
        } else {
          data_.emplace_back(data_[index(r - 1, c - 1)] + data_[index(r - 1, c)]);
        }
      }
    }
  }
};

class ModularBinomialTable : public PascalTriangle<std::uint64_t> {
 public:
  ModularBinomialTable(std::int64_t n, PrimePower modulus) : PascalTriangle(n, 0), modulus_(modulus) {
    const std::uint64_t m = modulus.modulus();
    for (std::int64_t r = 0; r <= n; ++r) {
      for (std::int64_t c = 0; c <= r; ++c) {
        if (c == 0 || c == r) {
          data_.push_back(1 % m);
        } else {
          std::uint64_t s = data_[index(r - 1, c - 1)] + data_[index(r - 1, c)];
          if (s >= m) s -= m;
          data_.push_back(s);
        }
      }
    }
  }

  const PrimePower& modulus() const { return modulus_; }
  Residue residue(std::int64_t r, std::int64_t c) const { return {(*this)(r, c), modulus_}; }

 private:
  PrimePower modulus_;
};

// ---------------------------------------------------------------------------
// Legendre symbol and valuations

/// (a / p) by Euler's criterion; p must be an odd prime.
inline int legendre_symbol(const ExactInt& a, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("legendre_symbol: p must be an odd prime, got " + std::to_string(p));
  }
  const std::uint64_t r = detail::mod_u64(a, p);
  if (r == 0) return 0;
  return detail::pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// p-adic valuation; the valuation of zero is a distinct infinite value.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(); }
  static Valuation finite(std::uint64_t v) { return Valuation(v); }

  bool is_infinite() const { return !value_.has_value(); }
  std::uint64_t value() const {
    if (!value_) throw std::logic_error("Valuation: infinite");
    return *value_;
  }

  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return *a.value_ <=> *b.value_;
  }

  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return finite(*a.value_ + *b.value_);
  }

 private:
  Valuation() = default;
  explicit Valuation(std::uint64_t v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

inline Valuation padic_valuation(const ExactInt& a, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: " + std::to_string(p) + " is not prime");
  if (a == 0) return Valuation::infinite();
  ExactInt rest;
  const ExactInt prime(static_cast<unsigned long>(p));
  return Valuation::finite(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace delannoy
