#pragma once

// Brute-force reference computations for tests. Nothing here calls into the
// library's arithmetic paths (no mpz_bin_uiui, no recurrences, no tables).

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

/// Pascal triangle rows 0..n by repeated addition.
inline std::vector<std::vector<mpz_class>> pascal(std::int64_t n) {
  std::vector<std::vector<mpz_class>> rows;
  rows.push_back({1});
  for (std::int64_t r = 1; r <= n; ++r) {
    std::vector<mpz_class> row(static_cast<std::size_t>(r + 1));
    row[0] = 1;
    row[r] = 1;
    for (std::int64_t c = 1; c < r; ++c) row[c] = rows[r - 1][c - 1] + rows[r - 1][c];
    rows.push_back(std::move(row));
  }
  return rows;
}

class Binomials {
 public:
  explicit Binomials(std::int64_t n) : rows_(pascal(n)) {}
  mpz_class operator()(std::int64_t n, std::int64_t k) const {
    if (k < 0 || k > n) return 0;
    return rows_.at(static_cast<std::size_t>(n))[static_cast<std::size_t>(k)];
  }

 private:
  std::vector<std::vector<mpz_class>> rows_;
};

inline mpz_class ipow(const mpz_class& b, unsigned e) {
  mpz_class r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

/// D_n(x) straight from the defining sum with Pascal-table binomials.
inline mpz_class delannoy(const Binomials& c, std::int64_t n, const mpz_class& x) {
  mpz_class s = 0;
  for (std::int64_t k = 0; k <= n; ++k) s += c(n, k) * c(n + k, k) * ipow(x, static_cast<unsigned>(k));
  return s;
}

inline mpz_class power_sum(const Binomials& c, std::int64_t n, unsigned m, int sign, const mpz_class& x) {
  mpz_class s = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    mpz_class term = (2 * k + 1) * ipow(delannoy(c, k, x), m);
    s += (sign < 0 && (k & 1)) ? mpz_class(-term) : term;
  }
  return s;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Legendre symbol by enumerating the squares mod p.
inline int legendre(const mpz_class& a, std::uint64_t p) {
  mpz_class r = a % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  const std::uint64_t v = r.get_ui();
  if (v == 0) return 0;
  for (std::uint64_t t = 1; t < p; ++t) {
    if (t * t % p == v) return 1;
  }
  return -1;
}

/// Valuation by repeated division; -1 stands for infinity.
inline long valuation(mpz_class a, std::uint64_t p) {
  if (a == 0) return -1;
  long v = 0;
  while (a % static_cast<unsigned long>(p) == 0) {
    a /= static_cast<unsigned long>(p);
    ++v;
  }
  return v;
}

inline mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace oracle
