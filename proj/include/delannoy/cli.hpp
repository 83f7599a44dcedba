#pragma once

// Command-line front end: argument parsing, campaign planning and report
// emission. Exit codes: 0 clean, 1 proven-result failure, 2 usage error,
// 3 conjecture counterexample, 4 I/O failure.

#include <delannoy/congruence.hpp>
#include <delannoy/identities.hpp>
#include <delannoy/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace delannoy::cli {

enum class Command { identities, theorems, conjectures, divisibility, all };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int theorem_failure = 1;
inline constexpr int usage = 2;
inline constexpr int counterexample = 3;
inline constexpr int io = 4;
}  // namespace exit_code

struct CliInvocation {
  Command command = Command::all;
  std::optional<std::int64_t> max_n;
  std::optional<std::vector<unsigned>> m_set;
  std::optional<std::int64_t> p_max;
  std::optional<IntRange> x_range;
  std::optional<unsigned> e;
  ReportFormat format = ReportFormat::jsonl;
  std::optional<std::string> out_path;
  unsigned jobs = 1;
  bool timing = true;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown for --help; carries the text to print.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "lo:hi" with lo <= hi; either end may be negative.
inline IntRange parse_range(const std::string& text) {
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw UsageError("range must be lo:hi, got '" + text + "'");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo_text = text.substr(0, colon);
    const std::string hi_text = text.substr(colon + 1);
    IntRange r{std::stoll(lo_text, &used_lo), std::stoll(hi_text, &used_hi)};
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument("trailing");
    if (r.lo > r.hi) throw UsageError("range lower bound exceeds upper bound: '" + text + "'");
    return r;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("range must be lo:hi, got '" + text + "'");
  }
}

/// Comma-separated positive integers; an item may be a lo:hi span.
inline std::vector<unsigned> parse_m_set(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    IntRange r;
    if (item.find(':') != std::string::npos) {
      r = parse_range(item);
    } else {
      try {
        std::size_t used = 0;
        r.lo = r.hi = std::stoll(item, &used);
        if (used != item.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw UsageError("m-set entries must be positive integers, got '" + item + "'");
      }
    }
    if (r.lo < 1) throw UsageError("m-set entries must be positive");
    for (std::int64_t m = r.lo; m <= r.hi; ++m) out.push_back(static_cast<unsigned>(m));
  }
  if (out.empty()) throw UsageError("m-set is empty");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline CliInvocation parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Delannoy polynomial identity and congruence checker", "delannoy"};
  app.require_subcommand(1);

  CliInvocation inv;
  std::optional<std::string> x_range_text, m_set_text;
  std::string format = "jsonl";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-n", inv.max_n, "Upper bound on n for n-indexed families");
    sub->add_option("--m-set", m_set_text, "Powers m, e.g. 1,2,3 or 1:6");
    sub->add_option("--p-max", inv.p_max, "Largest prime scanned");
    sub->add_option("--x-range", x_range_text, "Argument range lo:hi");
    sub->add_option("--e", inv.e, "Modulus exponent for the p^e conjecture scan");
    sub->add_option("--format", format, "jsonl or csv");
    sub->add_option("--out", inv.out_path, "Write the report here instead of stdout");
    sub->add_option("--jobs", inv.jobs, "Worker threads");
    sub->add_flag("--no-timing", [&inv](std::int64_t) { inv.timing = false; }, "Emit null elapsed_ms");
  };
  const std::vector<std::pair<const char*, Command>> commands = {
      {"identities", Command::identities},
      {"theorems", Command::theorems},
      {"conjectures", Command::conjectures},
      {"divisibility", Command::divisibility},
      {"all", Command::all},
  };
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    sub->callback([&inv, cmd = cmd] { inv.command = cmd; });
  }

  // CLI11 wants argv order reversed when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (x_range_text) inv.x_range = parse_range(*x_range_text);
  if (m_set_text) inv.m_set = parse_m_set(*m_set_text);
  if (inv.p_max && *inv.p_max < 3) throw UsageError("--p-max must be at least 3");
  if (inv.max_n && *inv.max_n < 1) throw UsageError("--max-n must be positive");
  if (inv.e && (*inv.e < 1 || *inv.e > 4)) throw UsageError("--e must be in 1..4");
  if (inv.jobs < 1) throw UsageError("--jobs must be at least 1");
  if (format == "jsonl") {
    inv.format = ReportFormat::jsonl;
  } else if (format == "csv") {
    inv.format = ReportFormat::csv;
  } else {
    throw UsageError("--format must be jsonl or csv");
  }
  return inv;
}

inline CliInvocation parse_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_args(args);
}

/// Identity bounds and campaigns selected by an invocation. Flags override
/// the matching dimension of every family; otherwise each family keeps its
/// default grid.
struct Plan {
  std::optional<IdentityBounds> identities;
  std::vector<CampaignSpec> campaigns;
};

inline Plan make_plan(const CliInvocation& inv) {
  Plan plan;
  const bool all = inv.command == Command::all;
  auto primes_to = [&](std::int64_t lo, std::int64_t fallback) { return IntRange{lo, inv.p_max.value_or(fallback)}; };
  auto n_to = [&](std::int64_t fallback) { return IntRange{1, inv.max_n.value_or(fallback)}; };
  auto xs = [&](std::int64_t lo, std::int64_t hi) { return inv.x_range.value_or(IntRange{lo, hi}); };

  if (all || inv.command == Command::identities) {
    plan.identities = inv.max_n ? IdentityBounds::uniform(*inv.max_n) : IdentityBounds{};
  }
  if (all || inv.command == Command::divisibility) {
    CampaignSpec s{.check = CheckId::divisibility_eq1, .n_range = n_to(100), .x_range = xs(-10, 10)};
    s.m_set = inv.m_set.value_or(std::vector<unsigned>{1, 2, 3, 4, 5, 6});
    plan.campaigns.push_back(s);
  }
  if (all || inv.command == Command::theorems) {
    for (CheckId id : {CheckId::thm13_cubic, CheckId::thm13_quartic, CheckId::thm14_alt_cubic,
                       CheckId::thm14_alt_quartic}) {
      plan.campaigns.push_back({.check = id, .prime_range = primes_to(3, 499), .x_range = xs(-20, 20)});
    }
    plan.campaigns.push_back(
        {.check = CheckId::sun_tauraso, .prime_range = primes_to(3, 499), .x_over_residues = true});
    plan.campaigns.push_back({.check = CheckId::intro_mod_p4, .prime_range = primes_to(5, 97)});
    plan.campaigns.push_back({.check = CheckId::intro_mod_n2, .n_range = n_to(200)});
  }
  if (all || inv.command == Command::conjectures) {
    for (CheckId id : {CheckId::conj_sun_last, CheckId::conj_guo_last}) {
      plan.campaigns.push_back(
          {.check = id, .n_range = n_to(60), .prime_range = primes_to(2, 31), .x_range = xs(-10, 10)});
    }
    plan.campaigns.push_back({.check = CheckId::conj52,
                              .prime_range = primes_to(3, 199),
                              .x_range = xs(-10, 10),
                              .exponent = inv.e.value_or(3)});
  }
  for (auto& c : plan.campaigns) c.jobs = inv.jobs;
  // Canonical report order is by check id.
  std::stable_sort(plan.campaigns.begin(), plan.campaigns.end(),
                   [](const CampaignSpec& a, const CampaignSpec& b) { return a.check < b.check; });
  return plan;
}

/// Runs the plan, streaming lines to `out`. Returns the process exit code.
inline int execute(const CliInvocation& inv, std::ostream& out, std::ostream& err = std::cerr) {
  try {
    const Plan plan = make_plan(inv);
    // Reject malformed grids before doing any work.
    for (const auto& c : plan.campaigns) (void)detail::campaign_cells(c);

    ReportWriter writer(out, inv.format, inv.timing);
    if (plan.identities) {
      for (const auto& v : run_identity_suite(*plan.identities, inv.jobs)) writer.write(v);
    }
    for (const auto& spec : plan.campaigns) {
      for (const auto& r : run_campaign(spec)) writer.write(r);
    }
    writer.write_summary();

    const auto& s = writer.summary();
    if (s.theorem_failures > 0) {
      err << "delannoy: " << s.theorem_failures << " proven-result check(s) failed\n";
      return exit_code::theorem_failure;
    }
    if (s.counterexamples > 0) {
      err << "delannoy: " << s.counterexamples << " conjecture counterexample(s) found\n";
      return exit_code::counterexample;
    }
    return exit_code::ok;
  } catch (const IoError& e) {
    err << "delannoy: " << e.what() << '\n';
    return exit_code::io;
  } catch (const std::invalid_argument& e) {
    err << "delannoy: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::domain_error& e) {
    // Inexact division where an exact quotient is proven to exist.
    err << "delannoy: hard failure: " << e.what() << '\n';
    return exit_code::theorem_failure;
  }
}

/// Entry point used by the executable.
inline int run(int argc, const char* const* argv) {
  CliInvocation inv;
  try {
    inv = parse_args(argc, argv);
  } catch (const HelpRequested& h) {
    std::cout << h.what();
    return exit_code::ok;
  } catch (const UsageError& e) {
    std::cerr << "delannoy: usage error: " << e.what() << '\n';
    return exit_code::usage;
  }
  if (!inv.out_path) return execute(inv, std::cout);
  std::ofstream file(*inv.out_path);
  if (!file) {
    std::cerr << "delannoy: cannot open " << *inv.out_path << '\n';
    return exit_code::io;
  }
  return execute(inv, file);
}

}  // namespace delannoy::cli
