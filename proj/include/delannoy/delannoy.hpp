#pragma once

// Delannoy polynomials D_n(x) = sum_k C(n,k) C(n+k,k) x^k, central Delannoy
// numbers and the weighted power sums sum_{k<n} sign^k (2k+1) D_k(x)^m.

#include <delannoy/ntheory.hpp>
#include <delannoy/polynomial.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace delannoy {

enum class Sign : int { plus = 1, minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

inline Sign sign_from_int(int s) {
  if (s == 1) return Sign::plus;
  if (s == -1) return Sign::minus;
  throw std::invalid_argument("sign must be +1 or -1");
}

inline void require_nonnegative(std::int64_t n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be non-negative");
}

/// D_n(x) by the defining sum (reference method).
inline ExactInt delannoy_poly(std::int64_t n, const ExactInt& x) {
  require_nonnegative(n, "delannoy_poly");
  // Horner in x with coefficients C(n,k) C(n+k,k).
  ExactInt acc = 0;
  for (std::int64_t k = n; k >= 0; --k) {
    acc *= x;
    acc += binomial(n, k) * binomial(n + k, k);
  }
  return acc;
}

/// D_0(x), ..., D_{count-1}(x) via the Legendre three-term recurrence at 2x+1:
/// (k+1) D_{k+1} = (2k+1)(2x+1) D_k - k D_{k-1}. Each division is asserted exact.
inline std::vector<ExactInt> delannoy_sequence(std::int64_t count, const ExactInt& x) {
  require_nonnegative(count, "delannoy_sequence");
  std::vector<ExactInt> d;
  d.reserve(static_cast<std::size_t>(count));
  if (count > 0) d.emplace_back(1);
  if (count > 1) d.emplace_back(2 * x + 1);
  const ExactInt t = 2 * x + 1;
  for (std::int64_t k = 1; k + 1 < count; ++k) {
    ExactInt numer = ExactInt(2 * k + 1) * t * d[k] - ExactInt(k) * d[k - 1];
    d.push_back(divide_exact(numer, ExactInt(k + 1)));
  }
  return d;
}

/// D_n(x) via the recurrence (fast path).
inline ExactInt delannoy_poly_recurrence(std::int64_t n, const ExactInt& x) {
  require_nonnegative(n, "delannoy_poly_recurrence");
  return delannoy_sequence(n + 1, x).back();
}

/// D_n(x) mod p^e using the defining sum over a modular Pascal table.
inline Residue delannoy_poly_mod(std::int64_t n, const ExactInt& x, PrimePower pp) {
  require_nonnegative(n, "delannoy_poly_mod");
  const ModularBinomialTable table(2 * n, pp);
  const Residue xr = Residue::reduce(x, pp);
  Residue acc(0, pp);
  for (std::int64_t k = n; k >= 0; --k) {
    acc = acc * xr + table.residue(n, k) * table.residue(n + k, k);
  }
  return acc;
}

/// Central Delannoy number sum_k C(n+k,2k) C(2k,k).
inline ExactInt central_delannoy(std::int64_t n) {
  require_nonnegative(n, "central_delannoy");
  ExactInt s = 0;
  for (std::int64_t k = 0; k <= n; ++k) s += binomial(n + k, 2 * k) * binomial(2 * k, k);
  return s;
}

/// sum_{k=0}^{n-1} sign^k (2k+1) D_k(x)^m, exact. D_k(x) is produced by one
/// linear recurrence pass.
inline ExactInt power_sum(std::int64_t n, unsigned m, Sign sign, const ExactInt& x) {
  if (n < 1) throw std::invalid_argument("power_sum: n must be positive");
  if (m < 1) throw std::invalid_argument("power_sum: m must be positive");
  const std::vector<ExactInt> d = delannoy_sequence(n, x);
  ExactInt total = 0;
  ExactInt term;
  for (std::int64_t k = 0; k < n; ++k) {
    mpz_pow_ui(term.get_mpz_t(), d[k].get_mpz_t(), m);
    term *= 2 * k + 1;
    if (sign == Sign::minus && (k & 1) != 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

/// Termwise power sum modulo p^e. Agrees with power_sum reduced; it never
/// divides, so it cannot stand in for checks that divide by p first.
inline Residue power_sum_mod(std::int64_t n, unsigned m, Sign sign, const ExactInt& x, PrimePower pp) {
  if (n < 1) throw std::invalid_argument("power_sum_mod: n must be positive");
  const ModularBinomialTable table(2 * (n - 1), pp);
  const Residue xr = Residue::reduce(x, pp);
  Residue total(0, pp);
  for (std::int64_t k = 0; k < n; ++k) {
    Residue dk(0, pp);
    for (std::int64_t j = k; j >= 0; --j) dk = dk * xr + table.residue(k, j) * table.residue(k + j, j);
    Residue term(1, pp);
    for (unsigned i = 0; i < m; ++i) term = term * dk;
    term = term * Residue(static_cast<std::uint64_t>(2 * k + 1), pp);
    total = (sign == Sign::minus && (k & 1) != 0) ? total - term : total + term;
  }
  return total;
}

/// sum_k C(n,k) C(n+k,k) C(2k,k) x^k (x+1)^k, which equals D_n(x)^2.
inline ExactInt square_formula_rhs(std::int64_t n, const ExactInt& x) {
  require_nonnegative(n, "square_formula_rhs");
  const ExactInt base = x * (x + 1);
  ExactInt s = 0;
  ExactInt power = 1;
  for (std::int64_t k = 0; k <= n; ++k) {
    s += binomial(n, k) * binomial(n + k, k) * binomial(2 * k, k) * power;
    power *= base;
  }
  return s;
}

/// D_n(x) as a polynomial in x.
inline IntPolynomial delannoy_polynomial(std::int64_t n) {
  require_nonnegative(n, "delannoy_polynomial");
  std::vector<ExactInt> c;
  c.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k) c.push_back(binomial(n, k) * binomial(n + k, k));
  return IntPolynomial(std::move(c));
}

}  // namespace delannoy
