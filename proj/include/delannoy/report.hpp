#pragma once

// Flat report lines for check records and identity verdicts, written as
// JSONL or CSV. Big integers are always decimal strings.

#include <delannoy/congruence.hpp>
#include <delannoy/identities.hpp>

#include <json.hpp>

#include <array>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace delannoy {

enum class ReportFormat { jsonl, csv };

struct ReportLine {
  std::string check_id;
  std::optional<std::int64_t> n, m, p, e;
  std::optional<std::string> x;
  std::optional<std::int64_t> sign, l, i, j, k;
  std::optional<std::string> lhs_residue, rhs_residue, lhs_valuation, bound;
  std::optional<bool> holds;
  bool skipped = false;
  std::optional<std::string> skip_reason;
  std::optional<std::string> lhs_exact, rhs_exact;
  double elapsed_ms = 0.0;
};

inline constexpr std::array<std::string_view, 21> kReportKeys = {
    "check_id",    "n",           "m",             "p",     "e",     "x",       "sign",
    "l",           "i",           "j",             "k",     "lhs_residue", "rhs_residue", "lhs_valuation",
    "bound",       "holds",       "skipped",       "skip_reason", "lhs_exact", "rhs_exact", "elapsed_ms"};

inline ReportLine to_report_line(const CheckRecord& r) {
  ReportLine line;
  line.check_id = std::string(to_string(r.id));
  line.n = r.params.n;
  if (r.params.m) line.m = *r.params.m;
  if (r.params.p) line.p = static_cast<std::int64_t>(*r.params.p);
  if (r.params.e) line.e = *r.params.e;
  if (r.params.x) line.x = to_string(*r.params.x);
  line.sign = r.params.sign;
  if (r.lhs_residue) line.lhs_residue = to_string(*r.lhs_residue);
  if (r.rhs_residue) line.rhs_residue = to_string(*r.rhs_residue);
  if (r.lhs_valuation) line.lhs_valuation = r.lhs_valuation->str();
  if (r.bound) line.bound = r.bound->str();
  line.holds = r.holds;
  line.skipped = r.skipped;
  if (r.skipped) line.skip_reason = r.skip_reason;
  line.lhs_exact = r.lhs_exact;
  line.rhs_exact = r.rhs_exact;
  line.elapsed_ms = r.elapsed_ms;
  return line;
}

inline ReportLine to_report_line(const IdentityVerdict& v) {
  ReportLine line;
  line.check_id = std::string(to_string(v.id));
  line.n = v.params.n;
  line.m = v.params.m;
  line.sign = v.params.sign;
  line.l = v.params.l;
  line.i = v.params.i;
  line.j = v.params.j;
  line.k = v.params.k;
  line.holds = v.holds;
  if (!v.holds) {
    line.lhs_exact = side_str(v.lhs);
    line.rhs_exact = side_str(v.rhs);
  }
  line.elapsed_ms = v.elapsed_ms;
  return line;
}

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Serializes lines to one sink and keeps the running totals for the
/// closing summary line.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, ReportFormat format, bool timing) : out_(out), format_(format), timing_(timing) {
    if (format_ == ReportFormat::csv) {
      for (std::size_t c = 0; c < kReportKeys.size(); ++c) out_ << (c ? "," : "") << kReportKeys[c];
      out_ << '\n';
      check_stream();
    }
  }

  void write(const ReportLine& line) {
    ++summary_.checked;
    if (line.skipped) {
      ++summary_.skipped;
    } else if (line.holds.value_or(false)) {
      ++summary_.held;
    } else {
      ++summary_.failed;
    }
    if (format_ == ReportFormat::jsonl) {
      out_ << to_json(line).dump() << '\n';
    } else {
      out_ << to_csv(line) << '\n';
    }
    check_stream();
  }

  void write(const CheckRecord& r) {
    if (r.failed()) ++(is_conjecture(r.id) ? summary_.counterexamples : summary_.theorem_failures);
    write(to_report_line(r));
  }

  void write(const IdentityVerdict& v) {
    if (!v.holds) ++summary_.theorem_failures;
    write(to_report_line(v));
  }

  void write_summary() {
    if (format_ == ReportFormat::jsonl) {
      nlohmann::ordered_json j;
      j["summary"] = true;
      j["checked"] = summary_.checked;
      j["held"] = summary_.held;
      j["failed"] = summary_.failed;
      j["skipped"] = summary_.skipped;
      j["counterexamples"] = summary_.counterexamples;
      out_ << j.dump() << '\n';
    } else {
      out_ << "#summary,checked=" << summary_.checked << ",held=" << summary_.held << ",failed=" << summary_.failed
           << ",skipped=" << summary_.skipped << ",counterexamples=" << summary_.counterexamples << '\n';
    }
    out_.flush();
    check_stream();
  }

  const CampaignSummary& summary() const { return summary_; }

  nlohmann::ordered_json to_json(const ReportLine& line) const {
    nlohmann::ordered_json j;
    auto put = [&j](std::string_view key, const auto& opt) {
      if (opt) {
        j[std::string(key)] = *opt;
      } else {
        j[std::string(key)] = nullptr;
      }
    };
    j["check_id"] = line.check_id;
    put("n", line.n);
    put("m", line.m);
    put("p", line.p);
    put("e", line.e);
    put("x", line.x);
    put("sign", line.sign);
    put("l", line.l);
    put("i", line.i);
    put("j", line.j);
    put("k", line.k);
    put("lhs_residue", line.lhs_residue);
    put("rhs_residue", line.rhs_residue);
    put("lhs_valuation", line.lhs_valuation);
    put("bound", line.bound);
    put("holds", line.holds);
    j["skipped"] = line.skipped;
    put("skip_reason", line.skip_reason);
    put("lhs_exact", line.lhs_exact);
    put("rhs_exact", line.rhs_exact);
    if (timing_) {
      j["elapsed_ms"] = line.elapsed_ms;
    } else {
      j["elapsed_ms"] = nullptr;
    }
    return j;
  }

  std::string to_csv(const ReportLine& line) const {
    std::string row = csv_field(line.check_id);
    auto num = [&row](const std::optional<std::int64_t>& v) { row += ',' + (v ? std::to_string(*v) : std::string()); };
    auto str = [&row](const std::optional<std::string>& v) { row += ',' + (v ? csv_field(*v) : std::string()); };
    num(line.n);
    num(line.m);
    num(line.p);
    num(line.e);
    str(line.x);
    num(line.sign);
    num(line.l);
    num(line.i);
    num(line.j);
    num(line.k);
    str(line.lhs_residue);
    str(line.rhs_residue);
    str(line.lhs_valuation);
    str(line.bound);
    row += ',' + (line.holds ? std::string(*line.holds ? "true" : "false") : std::string());
    row += line.skipped ? ",true" : ",false";
    str(line.skip_reason);
    str(line.lhs_exact);
    str(line.rhs_exact);
    row += ',';
    if (timing_) row += nlohmann::json(line.elapsed_ms).dump();
    return row;
  }

  static std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + '"';
  }

 private:
  void check_stream() {
    if (!out_) throw IoError("report: write failed");
  }

  std::ostream& out_;
  ReportFormat format_;
  bool timing_;
  CampaignSummary summary_;
};

}  // namespace delannoy
