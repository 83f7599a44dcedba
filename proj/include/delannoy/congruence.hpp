#pragma once

// Congruence checks for the weighted Delannoy power sums and grid campaigns
// over (n, m, p, x).

#include <delannoy/delannoy.hpp>
#include <delannoy/ntheory.hpp>
#include <delannoy/parallel.hpp>

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace delannoy {

enum class CheckId {
  divisibility_eq1,
  thm13_cubic,
  thm13_quartic,
  thm14_alt_cubic,
  thm14_alt_quartic,
  sun_tauraso,
  intro_mod_p4,
  intro_mod_n2,
  conj_sun_last,
  conj_guo_last,
  conj52,
};

inline constexpr std::array<std::string_view, 11> kCheckNames = {
    "divisibility_eq1", "thm13_cubic",  "thm13_quartic", "thm14_alt_cubic", "thm14_alt_quartic", "sun_tauraso",
    "intro_mod_p4",     "intro_mod_n2", "conj_sun_last", "conj_guo_last",   "conj52"};

inline std::string_view to_string(CheckId id) { return kCheckNames.at(static_cast<std::size_t>(id)); }

inline CheckId check_id_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kCheckNames.size(); ++i) {
    if (kCheckNames[i] == name) return static_cast<CheckId>(i);
  }
  throw std::invalid_argument("unknown check id: " + std::string(name));
}

/// Open conjectures: a failing record is a discovery, not a bug.
inline bool is_conjecture(CheckId id) {
  return id == CheckId::conj_sun_last || id == CheckId::conj_guo_last || id == CheckId::conj52;
}

struct CheckParams {
  std::optional<std::int64_t> n;
  std::optional<unsigned> m;
  std::optional<std::uint64_t> p;
  std::optional<unsigned> e;
  std::optional<ExactInt> x;
  std::optional<int> sign;
};

struct CheckRecord {
  CheckId id = CheckId::divisibility_eq1;
  CheckParams params;
  std::optional<ExactInt> lhs_residue;
  std::optional<ExactInt> rhs_residue;
  std::optional<Valuation> lhs_valuation;
  std::optional<Valuation> bound;
  std::optional<bool> holds;  // empty iff skipped
  bool skipped = false;
  std::string skip_reason;
  // Full-precision sides, kept only for failing records.
  std::optional<std::string> lhs_exact;
  std::optional<std::string> rhs_exact;
  double elapsed_ms = 0.0;

  bool failed() const { return holds.has_value() && !*holds; }
};

namespace detail {

inline CheckRecord skipped_record(CheckId id, CheckParams params, std::string reason) {
  CheckRecord r;
  r.id = id;
  r.params = std::move(params);
  r.skipped = true;
  r.skip_reason = std::move(reason);
  return r;
}

/// lhs and rhs compared modulo p^e.
inline CheckRecord modular_record(CheckId id, CheckParams params, const ExactInt& lhs, const ExactInt& rhs,
                                  PrimePower pp) {
  CheckRecord r;
  r.id = id;
  params.p = pp.prime();
  params.e = pp.exponent();
  r.params = std::move(params);
  const Residue l = Residue::reduce(lhs, pp);
  const Residue rr = Residue::reduce(rhs, pp);
  r.lhs_residue = ExactInt(l.value());
  r.rhs_residue = ExactInt(rr.value());
  r.holds = l == rr;
  if (!*r.holds) {
    r.lhs_exact = to_string(lhs);
    r.rhs_exact = to_string(rhs);
  }
  return r;
}

/// Divisibility of `value` by `modulus` (not necessarily a prime power).
inline CheckRecord divisibility_record(CheckId id, CheckParams params, const ExactInt& value, const ExactInt& modulus) {
  CheckRecord r;
  r.id = id;
  r.params = std::move(params);
  ExactInt rem;
  mpz_fdiv_r(rem.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  r.lhs_residue = rem;
  r.rhs_residue = ExactInt(0);
  r.holds = rem == 0;
  if (!*r.holds) {
    r.lhs_exact = to_string(value);
    r.rhs_exact = "0";
  }
  return r;
}

inline void require_odd_prime(std::uint64_t p, const char* what) {
  if (p == 2 || !is_prime(p)) throw std::invalid_argument(std::string(what) + ": p must be an odd prime");
}

inline bool divides_x_x_plus_1(std::uint64_t p, const ExactInt& x) {
  const std::uint64_t r = mod_u64(x, p);
  return r == 0 || r == p - 1;
}

inline constexpr std::string_view kReasonXX1 = "hypothesis violated: p divides x(x+1)";
inline constexpr std::string_view kReasonOdd = "hypothesis violated: p must be odd";
inline constexpr std::string_view kReasonGt3 = "hypothesis violated: p must be greater than 3";

}  // namespace detail

/// p * sum_{k<=(p-1)/2} (-1)^k C(2k,k)^2 (x^2+x)^k (2x+1)^(2k)
inline ExactInt alt_quartic_rhs(std::uint64_t p, const ExactInt& x) {
  const ExactInt t = x * (x + 1);
  const ExactInt u = (2 * x + 1) * (2 * x + 1);
  const ExactInt base = t * u;
  ExactInt sum = 0;
  ExactInt power = 1;
  const auto half = static_cast<std::int64_t>((p - 1) / 2);
  for (std::int64_t k = 0; k <= half; ++k) {
    const ExactInt c = binomial(2 * k, k);
    const ExactInt term = c * c * power;
    if (k & 1) {
      sum -= term;
    } else {
      sum += term;
    }
    power *= base;
  }
  return ExactInt(static_cast<unsigned long>(p)) * sum;
}

// ---------------------------------------------------------------------------
// Single-cell checks

/// n | sum_{k<n} (2k+1) D_k(x)^m
inline CheckRecord check_divisibility_eq1(std::int64_t n, unsigned m, const ExactInt& x) {
  if (n < 1 || m < 1) throw std::invalid_argument("check_divisibility_eq1: n and m must be positive");
  return detail::divisibility_record(CheckId::divisibility_eq1, {.n = n, .m = m, .x = x, .sign = 1},
                                     power_sum(n, m, Sign::plus, x), ExactInt(n));
}

inline CheckRecord check_thm13_cubic(std::uint64_t p, const ExactInt& x) {
  detail::require_odd_prime(p, "check_thm13");
  CheckParams params{.n = static_cast<std::int64_t>(p), .m = 3, .x = x, .sign = 1};
  if (detail::divides_x_x_plus_1(p, x)) {
    params.p = p;
    params.e = 2;
    return detail::skipped_record(CheckId::thm13_cubic, std::move(params), std::string(detail::kReasonXX1));
  }
  const auto n = static_cast<std::int64_t>(p);
  const ExactInt rhs = ExactInt(n) * legendre_symbol(-4 * x - 3, p);
  return detail::modular_record(CheckId::thm13_cubic, std::move(params), power_sum(n, 3, Sign::plus, x), rhs,
                                PrimePower(p, 2));
}

inline CheckRecord check_thm13_quartic(std::uint64_t p, const ExactInt& x) {
  detail::require_odd_prime(p, "check_thm13");
  CheckParams params{.n = static_cast<std::int64_t>(p), .m = 4, .x = x, .sign = 1};
  if (detail::divides_x_x_plus_1(p, x)) {
    params.p = p;
    params.e = 2;
    return detail::skipped_record(CheckId::thm13_quartic, std::move(params), std::string(detail::kReasonXX1));
  }
  const auto n = static_cast<std::int64_t>(p);
  return detail::modular_record(CheckId::thm13_quartic, std::move(params), power_sum(n, 4, Sign::plus, x), ExactInt(n),
                                PrimePower(p, 2));
}

/// Cubic and quartic supercongruences modulo p^2 for the plain power sums.
inline std::pair<CheckRecord, CheckRecord> check_thm13(std::uint64_t p, const ExactInt& x) {
  return {check_thm13_cubic(p, x), check_thm13_quartic(p, x)};
}

inline CheckRecord check_thm14_alt_cubic(std::uint64_t p, const ExactInt& x) {
  detail::require_odd_prime(p, "check_thm14");
  CheckParams params{.n = static_cast<std::int64_t>(p), .m = 3, .x = x, .sign = -1};
  if (detail::divides_x_x_plus_1(p, x)) {
    params.p = p;
    params.e = 2;
    return detail::skipped_record(CheckId::thm14_alt_cubic, std::move(params), std::string(detail::kReasonXX1));
  }
  const auto n = static_cast<std::int64_t>(p);
  const ExactInt rhs = ExactInt(n) * legendre_symbol(4 * x + 1, p);
  return detail::modular_record(CheckId::thm14_alt_cubic, std::move(params), power_sum(n, 3, Sign::minus, x), rhs,
                                PrimePower(p, 2));
}

inline CheckRecord check_thm14_alt_quartic(std::uint64_t p, const ExactInt& x) {
  detail::require_odd_prime(p, "check_thm14");
  const auto n = static_cast<std::int64_t>(p);
  return detail::modular_record(CheckId::thm14_alt_quartic, {.n = n, .m = 4, .x = x, .sign = -1},
                                power_sum(n, 4, Sign::minus, x), alt_quartic_rhs(p, x), PrimePower(p, 2));
}

/// Alternating cubic and quartic congruences modulo p^2.
inline std::pair<CheckRecord, CheckRecord> check_thm14(std::uint64_t p, const ExactInt& x) {
  return {check_thm14_alt_cubic(p, x), check_thm14_alt_quartic(p, x)};
}

/// sum_{k<p} C(2k,k) x^k == (1-4x / p) mod p
inline CheckRecord check_sun_tauraso(std::uint64_t p, const ExactInt& x) {
  detail::require_odd_prime(p, "check_sun_tauraso");
  ExactInt lhs = 0;
  ExactInt power = 1;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(p); ++k) {
    lhs += binomial(2 * k, k) * power;
    power *= x;
  }
  return detail::modular_record(CheckId::sun_tauraso, {.x = x}, lhs, ExactInt(legendre_symbol(1 - 4 * x, p)),
                                PrimePower(p, 1));
}

/// sum_{k<p} (2k+1) D_k == p + 2pq - pq^2 mod p^4 with q = 2^(p-1) - 1, p > 3.
inline CheckRecord check_intro_congruences(std::uint64_t p) {
  if (p <= 3 || !is_prime(p)) throw std::invalid_argument("check_intro_congruences: p must be a prime > 3");
  const auto n = static_cast<std::int64_t>(p);
  const ExactInt pp(n);
  const ExactInt q = pow(ExactInt(2), p - 1) - 1;
  const ExactInt rhs = pp + 2 * pp * q - pp * q * q;
  return detail::modular_record(CheckId::intro_mod_p4, {.n = n, .m = 1, .x = ExactInt(1), .sign = 1},
                                power_sum(n, 1, Sign::plus, 1), rhs, PrimePower(p, 4));
}

/// n^2 | sum_{k<n} (2k+1) D_k^2
inline CheckRecord check_intro_mod_n2(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("check_intro_mod_n2: n must be positive");
  return detail::divisibility_record(CheckId::intro_mod_n2, {.n = n, .m = 2, .x = ExactInt(1), .sign = 1},
                                     power_sum(n, 2, Sign::plus, 1), ExactInt(n) * n);
}

namespace detail {

/// nu_p((1/n) sum sign^k (2k+1) D_k(x)^3) >= min(nu_p(n), nu_p(linear)).
/// The quotient must be an integer; a remainder throws std::domain_error.
inline CheckRecord valuation_record(CheckId id, Sign sign, std::int64_t n, std::uint64_t p, const ExactInt& x,
                                    const ExactInt& linear) {
  if (n < 1) throw std::invalid_argument("valuation check: n must be positive");
  if (!is_prime(p)) throw std::invalid_argument("valuation check: p must be prime");
  const ExactInt quotient = divide_exact(power_sum(n, 3, sign, x), ExactInt(n));
  CheckRecord r;
  r.id = id;
  r.params = {.n = n, .m = 3, .p = p, .x = x, .sign = to_int(sign)};
  r.lhs_valuation = padic_valuation(quotient, p);
  r.bound = std::min(padic_valuation(ExactInt(n), p), padic_valuation(linear, p));
  r.holds = *r.lhs_valuation >= *r.bound;
  if (!*r.holds) {
    r.lhs_exact = to_string(quotient);
    r.rhs_exact = r.bound->str();
  }
  return r;
}

}  // namespace detail

inline CheckRecord check_conj_sun_last(std::int64_t n, std::uint64_t p, const ExactInt& x) {
  return detail::valuation_record(CheckId::conj_sun_last, Sign::minus, n, p, x, 4 * x + 1);
}

inline CheckRecord check_conj_guo_last(std::int64_t n, std::uint64_t p, const ExactInt& x) {
  return detail::valuation_record(CheckId::conj_guo_last, Sign::plus, n, p, x, 4 * x + 3);
}

/// The alternating quartic congruence lifted to p^e (conjectured for e = 3).
inline CheckRecord check_conj52(std::uint64_t p, const ExactInt& x, unsigned e = 3) {
  detail::require_odd_prime(p, "check_conj52");
  const auto n = static_cast<std::int64_t>(p);
  return detail::modular_record(CheckId::conj52, {.n = n, .m = 4, .x = x, .sign = -1}, power_sum(n, 4, Sign::minus, x),
                                alt_quartic_rhs(p, x), PrimePower(p, e));
}

// ---------------------------------------------------------------------------
// Campaigns

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

struct CampaignSpec {
  CheckId check = CheckId::divisibility_eq1;
  std::optional<IntRange> n_range;
  std::vector<unsigned> m_set;
  std::optional<IntRange> prime_range;
  std::optional<IntRange> x_range;
  bool x_over_residues = false;  // x in [0, p-1] for each prime
  unsigned exponent = 3;         // conj52 modulus exponent
  unsigned jobs = 1;
};

struct CampaignSummary {
  std::size_t checked = 0;
  std::size_t held = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t theorem_failures = 0;
  std::size_t counterexamples = 0;

  void add(const CheckRecord& r) {
    ++checked;
    if (r.skipped) {
      ++skipped;
    } else if (*r.holds) {
      ++held;
    } else {
      ++failed;
      ++(is_conjecture(r.id) ? counterexamples : theorem_failures);
    }
  }
};

inline CampaignSummary summarize(const std::vector<CheckRecord>& records) {
  CampaignSummary s;
  for (const auto& r : records) s.add(r);
  return s;
}

/// Canonical order (check_id, p, n, x, m).
inline bool canonical_less(const CheckRecord& a, const CheckRecord& b) {
  return std::tie(a.id, a.params.p, a.params.n, a.params.x, a.params.m) <
         std::tie(b.id, b.params.p, b.params.n, b.params.x, b.params.m);
}

namespace detail {

struct Cell {
  std::uint64_t p = 0;
  std::int64_t n = 0;
  std::int64_t x = 0;
  unsigned m = 0;
};

inline void require_range(const std::optional<IntRange>& r, const char* name) {
  if (!r) throw std::invalid_argument(std::string("campaign: missing ") + name);
  if (r->lo > r->hi) throw std::invalid_argument(std::string("campaign: empty ") + name);
}

inline std::vector<std::uint64_t> campaign_primes(const CampaignSpec& spec) {
  require_range(spec.prime_range, "prime range");
  auto primes = primes_in_range(spec.prime_range->lo, spec.prime_range->hi);
  if (primes.empty()) throw std::invalid_argument("campaign: prime range contains no primes");
  return primes;
}

inline std::vector<Cell> campaign_cells(const CampaignSpec& spec) {
  std::vector<Cell> cells;
  auto xs_for = [&](std::uint64_t p) -> IntRange {
    if (spec.x_over_residues) return {0, static_cast<std::int64_t>(p) - 1};
    return *spec.x_range;
  };
  switch (spec.check) {
    case CheckId::divisibility_eq1: {
      require_range(spec.n_range, "n range");
      require_range(spec.x_range, "x range");
      if (spec.n_range->lo < 1) throw std::invalid_argument("campaign: n must be positive");
      if (spec.m_set.empty()) throw std::invalid_argument("campaign: empty m set");
      for (unsigned m : spec.m_set) {
        if (m < 1) throw std::invalid_argument("campaign: m must be positive");
      }
      for (std::int64_t n = spec.n_range->lo; n <= spec.n_range->hi; ++n)
        for (std::int64_t x = spec.x_range->lo; x <= spec.x_range->hi; ++x)
          for (unsigned m : spec.m_set) cells.push_back({0, n, x, m});
      break;
    }
    case CheckId::intro_mod_n2:
      require_range(spec.n_range, "n range");
      if (spec.n_range->lo < 1) throw std::invalid_argument("campaign: n must be positive");
      for (std::int64_t n = spec.n_range->lo; n <= spec.n_range->hi; ++n) cells.push_back({0, n, 1, 2});
      break;
    case CheckId::intro_mod_p4:
      for (std::uint64_t p : campaign_primes(spec)) cells.push_back({p, 0, 1, 1});
      break;
    case CheckId::conj_sun_last:
    case CheckId::conj_guo_last: {
      require_range(spec.n_range, "n range");
      require_range(spec.x_range, "x range");
      if (spec.n_range->lo < 1) throw std::invalid_argument("campaign: n must be positive");
      const auto primes = campaign_primes(spec);
      for (std::uint64_t p : primes)
        for (std::int64_t n = spec.n_range->lo; n <= spec.n_range->hi; ++n)
          for (std::int64_t x = spec.x_range->lo; x <= spec.x_range->hi; ++x) cells.push_back({p, n, x, 3});
      break;
    }
    default: {
      if (!spec.x_over_residues) require_range(spec.x_range, "x range");
      if (spec.check == CheckId::conj52 && (spec.exponent < 1 || spec.exponent > 4)) {
        throw std::invalid_argument("campaign: exponent must be in 1..4");
      }
      for (std::uint64_t p : campaign_primes(spec)) {
        const IntRange xs = xs_for(p);
        for (std::int64_t x = xs.lo; x <= xs.hi; ++x) cells.push_back({p, 0, x, 0});
      }
      break;
    }
  }
  return cells;
}

inline CheckRecord evaluate_cell(const CampaignSpec& spec, const Cell& c) {
  const ExactInt x(c.x);
  const bool odd_prime_check = spec.check != CheckId::divisibility_eq1 && spec.check != CheckId::intro_mod_n2 &&
                               spec.check != CheckId::intro_mod_p4 && spec.check != CheckId::conj_sun_last &&
                               spec.check != CheckId::conj_guo_last;
  if (odd_prime_check && c.p == 2) {
    return skipped_record(spec.check, {.n = 2, .p = 2, .x = x}, std::string(kReasonOdd));
  }
  switch (spec.check) {
    case CheckId::divisibility_eq1: return check_divisibility_eq1(c.n, c.m, x);
    case CheckId::thm13_cubic: return check_thm13_cubic(c.p, x);
    case CheckId::thm13_quartic: return check_thm13_quartic(c.p, x);
    case CheckId::thm14_alt_cubic: return check_thm14_alt_cubic(c.p, x);
    case CheckId::thm14_alt_quartic: return check_thm14_alt_quartic(c.p, x);
    case CheckId::sun_tauraso: return check_sun_tauraso(c.p, x);
    case CheckId::intro_mod_p4:
      if (c.p <= 3) {
        return skipped_record(spec.check, {.n = static_cast<std::int64_t>(c.p), .p = c.p}, std::string(kReasonGt3));
      }
      return check_intro_congruences(c.p);
    case CheckId::intro_mod_n2: return check_intro_mod_n2(c.n);
    case CheckId::conj_sun_last: return check_conj_sun_last(c.n, c.p, x);
    case CheckId::conj_guo_last: return check_conj_guo_last(c.n, c.p, x);
    case CheckId::conj52: return check_conj52(c.p, x, spec.exponent);
  }
  throw std::logic_error("unhandled check id");
}

}  // namespace detail

/// One record per grid cell in canonical order. Invalid specs are rejected
/// before any cell is evaluated.
inline std::vector<CheckRecord> run_campaign(const CampaignSpec& spec) {
  const std::vector<detail::Cell> cells = detail::campaign_cells(spec);
  auto records = parallel_map(cells.size(), spec.jobs, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    CheckRecord r = detail::evaluate_cell(spec, cells[i]);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  });
  std::stable_sort(records.begin(), records.end(), canonical_less);
  return records;
}

}  // namespace delannoy
