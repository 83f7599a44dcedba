#pragma once

// Exact verification of the binomial and polynomial identities behind the
// weighted Delannoy power sums.

#include <delannoy/delannoy.hpp>
#include <delannoy/parallel.hpp>
#include <delannoy/ntheory.hpp>
#include <delannoy/polynomial.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iterator>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

namespace delannoy {

enum class IdentityId {
  sum1,            // (1/n) sum (2k+1) D_k^3 as a triple sum
  sum2,            // same for D_k^4
  sum11,           // alternating (-1)^(n-k-1) variant, cubes
  sum12,           // alternating variant, fourth powers
  from_gz,         // product expansion of C(l,i)C(l+i,i)C(l,j)C(l+j,j)
  triangle_plus,   // sum (2l+1) C(l,k) C(l+k,k) = n C(n,k+1) C(n+k,k)
  triangle_minus,  // signed variant = n C(n-1,k) C(n+k,k)
  chu,
  dnx_square,
  zeil,
  zeil_rec_lhs,
  zeil_rec_rhs,
};

inline std::string_view to_string(IdentityId id) {
  constexpr std::array<std::string_view, 12> names = {
      "sum1", "sum2",  "sum11",      "sum12", "from_gz",      "triangle_plus",
      "triangle_minus", "chu", "dnx_square", "zeil", "zeil_rec_lhs", "zeil_rec_rhs"};
  return names.at(static_cast<std::size_t>(id));
}

/// Parameters of a verdict; unused fields stay empty.
struct IdentityParams {
  std::optional<std::int64_t> n, m, sign, l, i, j, k;

  auto key() const { return std::tie(n, m, sign, l, i, j, k); }
  friend bool operator==(const IdentityParams& a, const IdentityParams& b) { return a.key() == b.key(); }
  friend bool operator<(const IdentityParams& a, const IdentityParams& b) { return a.key() < b.key(); }
};

using IdentitySide = std::variant<ExactInt, IntPolynomial>;

inline std::string side_str(const IdentitySide& s) {
  if (const auto* v = std::get_if<ExactInt>(&s)) return v->get_str();
  return std::get<IntPolynomial>(s).str();
}

struct IdentityVerdict {
  IdentityId id;
  IdentityParams params;
  IdentitySide lhs;
  IdentitySide rhs;
  bool holds;
  std::string note;  // set when the check failed for a structural reason
  double elapsed_ms = 0.0;

  friend bool operator<(const IdentityVerdict& a, const IdentityVerdict& b) {
    return std::tie(a.id, a.params) < std::tie(b.id, b.params);
  }
};

inline IdentityVerdict make_verdict(IdentityId id, IdentityParams params, IdentitySide lhs, IdentitySide rhs) {
  const bool holds = lhs == rhs;
  return {id, params, std::move(lhs), std::move(rhs), holds, {}};
}

// ---------------------------------------------------------------------------
// Triple-sum right-hand sides

namespace detail {

enum class OuterFactor { theorem12, lemma41 };

/// sum_{i,j<n} sum_{k<=i} A(j+k) C(i+j,i) C(j,i-k) C(j+k,k) C(2i,i) [C(2j,j)] * P_{i,j}(x)
/// with A(t) = C(n,t+1)C(n+t,t) or C(n-1,t)C(n+t,t), and P_{i,j} = x^{i+j}(x+1)^i
/// for cubes or (x^2+x)^{i+j} for fourth powers.
inline IntPolynomial triple_sum(std::int64_t n, unsigned m, OuterFactor outer) {
  if (n < 1) throw std::invalid_argument("triple sum: n must be positive");
  if (m != 3 && m != 4) throw std::invalid_argument("triple sum: m must be 3 or 4");
  const ExactBinomialTable c(3 * n);
  PowerCache x_plus_one(IntPolynomial{1, 1});
  PowerCache x2_plus_x(IntPolynomial{0, 1, 1});

  IntPolynomial total;
  ExactInt inner;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      // The polynomial factor does not depend on k, so the k-sum is scalar.
      inner = 0;
      for (std::int64_t k = 0; k <= i; ++k) {
        const std::int64_t t = j + k;
        const ExactInt& a = outer == OuterFactor::theorem12 ? c(n, t + 1) : c(n - 1, t);
        inner += a * c(n + t, t) * c(i + j, i) * c(j, i - k) * c(j + k, k);
      }
      inner *= c(2 * i, i);
      if (m == 4) inner *= c(2 * j, j);
      if (inner == 0) continue;
      if (m == 3) {
        total.add_scaled(x_plus_one[static_cast<std::size_t>(i)], inner, static_cast<std::size_t>(i + j));
      } else {
        total.add_scaled(x2_plus_x[static_cast<std::size_t>(i + j)], inner, 0);
      }
    }
  }
  return total;
}

}  // namespace detail

/// Integer-coefficient formula for (1/n) sum_{k<n} (2k+1) D_k(x)^m, m in {3,4}.
inline IntPolynomial rhs_theorem12(std::int64_t n, unsigned m) {
  return detail::triple_sum(n, m, detail::OuterFactor::theorem12);
}

/// Same for the alternating sum (1/n) sum_{k<n} (-1)^(n-k-1) (2k+1) D_k(x)^m.
inline IntPolynomial rhs_lemma41(std::int64_t n, unsigned m) {
  return detail::triple_sum(n, m, detail::OuterFactor::lemma41);
}

/// sum_{k<n} w_k (2k+1) D_k(x)^m as a polynomial, w_k = 1 for plus and
/// (-1)^(n-k-1) for minus.
inline IntPolynomial weighted_power_sum_polynomial(std::int64_t n, unsigned m, Sign sign) {
  IntPolynomial total;
  for (std::int64_t k = 0; k < n; ++k) {
    const IntPolynomial term = pow(delannoy_polynomial(k), m);
    const bool negative = sign == Sign::minus && ((n - k - 1) & 1) != 0;
    total.add_scaled(term, ExactInt(negative ? -(2 * k + 1) : 2 * k + 1), 0);
  }
  return total;
}

inline IdentityId power_sum_identity_id(unsigned m, Sign sign) {
  if (m == 3) return sign == Sign::plus ? IdentityId::sum1 : IdentityId::sum11;
  if (m == 4) return sign == Sign::plus ? IdentityId::sum2 : IdentityId::sum12;
  throw std::invalid_argument("power sum identity: m must be 3 or 4");
}

/// Compares (1/n) * weighted power sum with its triple-sum formula at the
/// coefficient level. A non-exact division by n is reported as a failure.
inline IdentityVerdict verify_power_sum_identity(std::int64_t n, unsigned m, Sign sign) {
  if (n < 1) throw std::invalid_argument("verify_power_sum_identity: n must be positive");
  const IdentityId id = power_sum_identity_id(m, sign);
  const IdentityParams params{.n = n, .m = m, .sign = to_int(sign)};
  IntPolynomial rhs = sign == Sign::plus ? rhs_theorem12(n, m) : rhs_lemma41(n, m);
  const IntPolynomial sum = weighted_power_sum_polynomial(n, m, sign);
  std::optional<IntPolynomial> lhs = sum.divide_exact(ExactInt(n));
  if (!lhs) {
    return {id, params, sum, std::move(rhs), false, "power sum not divisible by n"};
  }
  return make_verdict(id, params, std::move(*lhs), std::move(rhs));
}

// ---------------------------------------------------------------------------
// Helper identities

inline IdentityVerdict check_product_expansion(std::int64_t l, std::int64_t i, std::int64_t j) {
  if (l < 0 || i < 0 || j < 0 || i > l || j > l) {
    throw std::invalid_argument("check_product_expansion: need 0 <= i, j <= l");
  }
  const ExactInt lhs = binomial(l, i) * binomial(l + i, i) * binomial(l, j) * binomial(l + j, j);
  ExactInt rhs = 0;
  for (std::int64_t k = 0; k <= i; ++k) {
    rhs += binomial(i + j, i) * binomial(j, i - k) * binomial(j + k, k) * binomial(l, j + k) *
           binomial(l + j + k, j + k);
  }
  return make_verdict(IdentityId::from_gz, {.l = l, .i = i, .j = j}, lhs, rhs);
}

inline IdentityVerdict check_weighted_triangle_sum(std::int64_t n, std::int64_t k, Sign sign) {
  if (n < 1 || k < 0 || k > n - 1) throw std::invalid_argument("check_weighted_triangle_sum: need 0 <= k <= n-1");
  ExactInt lhs = 0;
  for (std::int64_t l = k; l < n; ++l) {
    ExactInt term = ExactInt(2 * l + 1) * binomial(l, k) * binomial(l + k, k);
    if (sign == Sign::minus && ((n - l - 1) & 1) != 0) term = -term;
    lhs += term;
  }
  const ExactInt rhs = sign == Sign::plus ? ExactInt(n) * binomial(n, k + 1) * binomial(n + k, k)
                                          : ExactInt(n) * binomial(n - 1, k) * binomial(n + k, k);
  const IdentityId id = sign == Sign::plus ? IdentityId::triangle_plus : IdentityId::triangle_minus;
  return make_verdict(id, {.n = n, .sign = to_int(sign), .k = k}, lhs, rhs);
}

/// sum_{k<=i} (-1)^k C(j,i-k) C(j+k,k) = (-1)^i
inline IdentityVerdict check_chu_vandermonde(std::int64_t i, std::int64_t j) {
  if (i < 0 || j < 0) throw std::invalid_argument("check_chu_vandermonde: i, j must be non-negative");
  ExactInt lhs = 0;
  for (std::int64_t k = 0; k <= i; ++k) {
    const ExactInt term = binomial(j, i - k) * binomial(j + k, k);
    if (k & 1) {
      lhs -= term;
    } else {
      lhs += term;
    }
  }
  return make_verdict(IdentityId::chu, {.i = i, .j = j}, lhs, ExactInt((i & 1) ? -1 : 1));
}

inline IdentityVerdict check_square_formula_poly(std::int64_t n) {
  require_nonnegative(n, "check_square_formula_poly");
  const IntPolynomial d = delannoy_polynomial(n);
  PowerCache x2_plus_x(IntPolynomial{0, 1, 1});
  IntPolynomial rhs;
  for (std::int64_t k = 0; k <= n; ++k) {
    rhs.add_scaled(x2_plus_x[static_cast<std::size_t>(k)], binomial(n, k) * binomial(n + k, k) * binomial(2 * k, k), 0);
  }
  return make_verdict(IdentityId::dnx_square, {.n = n}, d * d, std::move(rhs));
}

// ---------------------------------------------------------------------------
// sum_k C(n,k) C(2k,k) C(2n-2k,n-k) = sum_k C(2k,k)^2 C(k,n-k) (-4)^(n-k)

inline ExactInt zeil_lhs(std::int64_t n) {
  require_nonnegative(n, "zeil_lhs");
  ExactInt s = 0;
  for (std::int64_t k = 0; k <= n; ++k) s += binomial(n, k) * binomial(2 * k, k) * binomial(2 * n - 2 * k, n - k);
  return s;
}

inline ExactInt zeil_rhs(std::int64_t n) {
  require_nonnegative(n, "zeil_rhs");
  ExactInt s = 0;
  // C(k, n-k) vanishes for k < n/2.
  for (std::int64_t k = (n + 1) / 2; k <= n; ++k) {
    const ExactInt c = binomial(2 * k, k);
    ExactInt term = c * c * binomial(k, n - k);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * (n - k)));
    if ((n - k) & 1) {
      s -= term;
    } else {
      s += term;
    }
  }
  return s;
}

inline IdentityVerdict check_zeil(std::int64_t n) {
  return make_verdict(IdentityId::zeil, {.n = n}, zeil_lhs(n), zeil_rhs(n));
}

enum class ZeilSide { lhs, rhs };

/// Residual (n+2)^2 S(n+2) - 4(3n^2+9n+7) S(n+1) + 32(n+1)^2 S(n).
inline ExactInt zeil_recurrence_residual(const ExactInt& s0, const ExactInt& s1, const ExactInt& s2, std::int64_t n) {
  return ExactInt((n + 2) * (n + 2)) * s2 - ExactInt(4 * (3 * n * n + 9 * n + 7)) * s1 + ExactInt(32 * (n + 1) * (n + 1)) * s0;
}

inline bool check_zeil_recurrence(ZeilSide side, std::int64_t n) {
  require_nonnegative(n, "check_zeil_recurrence");
  auto s = [side](std::int64_t t) { return side == ZeilSide::lhs ? zeil_lhs(t) : zeil_rhs(t); };
  return zeil_recurrence_residual(s(n), s(n + 1), s(n + 2), n) == 0;
}

inline IdentityVerdict zeil_recurrence_verdict(ZeilSide side, std::int64_t n) {
  auto s = [side](std::int64_t t) { return side == ZeilSide::lhs ? zeil_lhs(t) : zeil_rhs(t); };
  return make_verdict(side == ZeilSide::lhs ? IdentityId::zeil_rec_lhs : IdentityId::zeil_rec_rhs, {.n = n},
                      zeil_recurrence_residual(s(n), s(n + 1), s(n + 2), n), ExactInt(0));
}

// ---------------------------------------------------------------------------
// Whole suite

/// Upper bounds for each identity family; zeil also bounds the recurrence
/// checks at zeil_n - 2.
struct IdentityBounds {
  std::int64_t power_sum_n = 40;
  std::int64_t product_l = 12;
  std::int64_t triangle_n = 30;
  std::int64_t chu_ij = 20;
  std::int64_t square_n = 60;
  std::int64_t zeil_n = 500;

  static IdentityBounds uniform(std::int64_t n) { return {n, n, n, n, n, n}; }
};

/// Every identity verdict within the bounds, sorted by (id, params).
inline std::vector<IdentityVerdict> run_identity_suite(const IdentityBounds& b, unsigned jobs) {
  using Task = std::function<std::vector<IdentityVerdict>()>;
  std::vector<Task> tasks;
  auto one = [&tasks](auto f) { tasks.push_back([f] { return std::vector<IdentityVerdict>{f()}; }); };

  // Largest power-sum cases first so the pool stays busy.
  for (std::int64_t n = b.power_sum_n; n >= 1; --n) {
    for (unsigned m : {3U, 4U}) {
      for (Sign s : {Sign::plus, Sign::minus}) one([=] { return verify_power_sum_identity(n, m, s); });
    }
  }
  for (std::int64_t l = 0; l <= b.product_l; ++l) {
    tasks.push_back([l] {
      std::vector<IdentityVerdict> out;
      for (std::int64_t i = 0; i <= l; ++i)
        for (std::int64_t j = 0; j <= l; ++j) out.push_back(check_product_expansion(l, i, j));
      return out;
    });
  }
  for (std::int64_t n = 1; n <= b.triangle_n; ++n) {
    tasks.push_back([n] {
      std::vector<IdentityVerdict> out;
      for (std::int64_t k = 0; k < n; ++k) {
        out.push_back(check_weighted_triangle_sum(n, k, Sign::plus));
        out.push_back(check_weighted_triangle_sum(n, k, Sign::minus));
      }
      return out;
    });
  }
  tasks.push_back([chu = b.chu_ij] {
    std::vector<IdentityVerdict> out;
    for (std::int64_t i = 0; i <= chu; ++i)
      for (std::int64_t j = 0; j <= chu; ++j) out.push_back(check_chu_vandermonde(i, j));
    return out;
  });
  for (std::int64_t n = 0; n <= b.square_n; ++n) one([n] { return check_square_formula_poly(n); });
  if (b.zeil_n >= 0) {
    tasks.push_back([zn = b.zeil_n] {
      std::vector<ExactInt> lhs, rhs;
      std::vector<IdentityVerdict> out;
      for (std::int64_t n = 0; n <= zn; ++n) {
        lhs.push_back(zeil_lhs(n));
        rhs.push_back(zeil_rhs(n));
        out.push_back(make_verdict(IdentityId::zeil, {.n = n}, lhs.back(), rhs.back()));
      }
      for (std::int64_t n = 0; n + 2 <= zn; ++n) {
        out.push_back(make_verdict(IdentityId::zeil_rec_lhs, {.n = n},
                                   zeil_recurrence_residual(lhs[n], lhs[n + 1], lhs[n + 2], n), ExactInt(0)));
        out.push_back(make_verdict(IdentityId::zeil_rec_rhs, {.n = n},
                                   zeil_recurrence_residual(rhs[n], rhs[n + 1], rhs[n + 2], n), ExactInt(0)));
      }
      return out;
    });
  }

  auto batches = parallel_map(tasks.size(), jobs, [&tasks](std::size_t t) {
    const auto start = std::chrono::steady_clock::now();
    auto out = tasks[t]();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (auto& v : out) v.elapsed_ms = ms / static_cast<double>(out.size());
    return out;
  });
  std::vector<IdentityVerdict> all;
  for (auto& batch : batches) std::move(batch.begin(), batch.end(), std::back_inserter(all));
  std::stable_sort(all.begin(), all.end());
  return all;
}

}  // namespace delannoy
