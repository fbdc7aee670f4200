#pragma once
// Batch verification and reporting: parameter sweeps computing exact counts
// and discrepancies, ratioed against envelopes, with fast-vs-brute
// cross-checks. Emits a CSV row file plus a structured key=value report.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parab/rational.hpp"

namespace parab::harness {

// Hard failure: a proven bound or an exact cross-check was violated.
// Distinguished from usage errors so the CLI can exit 1 vs 2.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class AFilter { all, primes, squares };
enum class BRule { equal_a, fixed, multiple };

struct SweepConfig {
  std::uint64_t a_start = 3;
  std::uint64_t a_end = 1000;
  std::uint64_t a_step = 1;
  AFilter a_filter = AFilter::all;
  BRule b_rule = BRule::equal_a;
  std::uint64_t b_value = 1;  // the N of fixed:N or the K of multiple:K
  std::vector<Rational> deltas;
  std::vector<std::string> theorems;  // tokens: 1 2 3 4 korolev pv fejer gauss_closed
  std::uint64_t seed = 1;
  unsigned workers = 1;
  double threshold = 10.0;  // soft cap on O-bound ratios
};

// Line-oriented "key = value" text; unknown keys are errors.
SweepConfig parse_config_text(std::string_view text);
SweepConfig parse_config_file(const std::string& path);
void validate(const SweepConfig& cfg);

struct DiscrepancyRecord {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::optional<Rational> delta;
  Rational measured;  // exact rational or integer
  double envelope = 0.0;
  double ratio = 0.0;  // |measured| / envelope
  std::string method;  // "brute" or "fast"
  bool method_agreement = true;
};

struct ReportSummary {
  std::size_t record_count = 0;
  double max_ratio = 0.0;
  std::uint64_t argmax_a = 0;
  std::uint64_t argmax_b = 0;
  std::optional<Rational> argmax_delta;
  std::string runtime_seconds = "0.000000";  // kept as text so round-trips are exact
  // operation-specific extras (e.g. korolev max, GRH ratio), in emit order
  std::vector<std::pair<std::string, std::string>> extras;
};

struct Report {
  std::string operation;
  SweepConfig config;
  std::vector<DiscrepancyRecord> rows;
  ReportSummary summary;
};

// measured = frac_discrepancy(a, b) against the theorem-1 envelope;
// floor_sum_fast cross-checked against floor_sum_brute (full below a = 2000,
// seeded 1% subsample above)
Report sweep_theorem1(const SweepConfig& cfg);

// measured = A(a, b, delta) - 2 delta b (exact rational) against the shared
// envelope; count_near fast/brute cross-checked on the same subsample rule
Report sweep_theorem2(const SweepConfig& cfg);

// measured = A(a, a, delta) against the theorem-3 envelope; theorem-4 ratio
// maxima are carried in the summary extras
Report sweep_theorem3(const SweepConfig& cfg);

// Closed-vs-brute complete-sum agreement, the Korolev strict bound over
// coprime h with 32 seeded b samples plus b = a, and the incomplete-sum
// envelope ratio. Aborts on any closed/brute mismatch or Korolev ratio >= 1.
// cfg.theorems may narrow the checks to {"gauss_closed"} or {"korolev"}.
Report verify_gauss(const SweepConfig& cfg);

// Partial-sum scan N <= 3q for every implemented non-principal character
// with a1 in the configured range; aborts if any Polya-Vinogradov ratio
// exceeds 1. GRH-form ratios are recorded, never asserted.
Report verify_pv(const SweepConfig& cfg);

// For each delta: H = floor(1/(2 delta)); grid scan asserting
// F_H >= 4/pi^2 - 1e-12 on |t| <= delta and F_H >= 0 everywhere.
Report verify_fejer(const SweepConfig& cfg);

// Serialization. CSV columns, in order:
//   a,b,delta_num,delta_den,measured_num,measured_den,envelope,ratio,method,agreement
std::string to_csv(const Report& report);
std::string to_structured(const Report& report);
Report parse_report(std::string_view structured_text, std::string_view csv_text);
std::string summary_text(const Report& report);

int run_cli(int argc, const char* const* argv);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parab::harness
