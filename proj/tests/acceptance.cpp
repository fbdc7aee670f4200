// Acceptance suite: one checked criterion per function, each printing a
// single PASS/FAIL line. Run all with no arguments or a single criterion by
// number (1-12). Exit code 0 iff every executed criterion passed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "parab/arith.hpp"
#include "parab/bounds.hpp"
#include "parab/expsums.hpp"
#include "parab/harness.hpp"
#include "parab/kernels.hpp"
#include "parab/lattice.hpp"
#include "parab/prng.hpp"
#include "parab/rational.hpp"

using namespace parab;
using u64 = std::uint64_t;
using i64 = std::int64_t;

namespace {

unsigned workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 2 : hw;
}

struct Outcome {
  bool pass;
  std::string detail;
};

// 1. closed-form Gauss sums match brute force for a <= 2000, all h
Outcome c1_gauss_closed() {
  harness::SweepConfig cfg;
  cfg.a_start = 1;
  cfg.a_end = 2000;
  cfg.theorems = {"gauss_closed"};
  cfg.workers = workers();
  auto report = harness::verify_gauss(cfg);  // throws on any mismatch
  std::string err = "?";
  for (const auto& [k, v] : report.summary.extras) {
    if (k == "closed_max_abs_err") err = v;
  }
  return {true, "max |closed - brute| = " + err + " over a <= 2000, all h"};
}

// 2. Korolev: |S(h,a,b)| < 3.9071 sqrt(a), strict, zero violations
Outcome c2_korolev() {
  harness::SweepConfig cfg;
  cfg.a_start = 1;
  cfg.a_end = 1500;
  cfg.theorems = {"korolev"};
  cfg.seed = 1;
  cfg.workers = workers();
  auto report = harness::verify_gauss(cfg);  // throws on any ratio >= 1
  std::string ratio = "?", arg = "?";
  for (const auto& [k, v] : report.summary.extras) {
    if (k == "korolev_max_ratio") ratio = v;
    if (k == "korolev_argmax") arg = v;
  }
  return {true, "max |S|/(3.9071 sqrt(a)) = " + ratio + " at " + arg};
}

// 3. Polya-Vinogradov: partial sums never exceed sqrt(q) log q
Outcome c3_polya_vinogradov() {
  harness::SweepConfig cfg;
  cfg.a_start = 1;
  cfg.a_end = 2000;
  cfg.workers = workers();
  auto report = harness::verify_pv(cfg);  // throws on any ratio > 1
  std::string ratio = "?", chars = "?";
  for (const auto& [k, v] : report.summary.extras) {
    if (k == "pv_max_ratio") ratio = v;
    if (k == "characters_checked") chars = v;
  }
  return {true, chars + " characters, max ratio " + ratio};
}

// 4. Fejer kernel floor 4/pi^2 on ||t|| <= delta
Outcome c4_fejer() {
  harness::SweepConfig cfg;
  cfg.deltas = {Rational(1, 4), Rational(1, 10), Rational(1, 20), Rational(1, 100)};
  auto report = harness::verify_fejer(cfg);  // throws below 4/pi^2 - 1e-12
  std::string ratio = "?";
  for (const auto& [k, v] : report.summary.extras) {
    if (k == "min_ratio") ratio = v;
  }
  return {true, "grid min / (4/pi^2) = " + ratio + " over four deltas"};
}

// 5. fast and brute counting paths agree everywhere they are both run
Outcome c5_oracle_equivalence() {
  SplitMix64 g(20260810);
  for (int i = 0; i < 10000; ++i) {
    u64 a = 1 + g.below(5000);
    u64 b = 1 + g.below(10 * a);
    Rational delta;
    switch (g.below(7)) {
      case 0: delta = Rational(0); break;
      case 1: delta = Rational(1, static_cast<i64>(a) * static_cast<i64>(a)); break;
      case 2: delta = Rational(1, 2 * static_cast<i64>(a)); break;
      case 3: delta = Rational(1, static_cast<i64>(a) == 2 ? 3 : static_cast<i64>(a)); break;
      case 4: delta = Rational(1, 100); break;
      case 5: delta = Rational(1, 10); break;
      default: delta = Rational(49, 100); break;
    }
    if (delta >= Rational(1, 2)) delta = Rational(0);  // 1/a with a <= 2
    lattice::CountQuery q{a, b, delta};
    auto fast = lattice::count_near_fast(q);
    auto brute = lattice::count_near_brute(q);
    if (fast.count != brute.count) {
      return {false, "count mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                         " delta=" + delta.to_string()};
    }
  }
  for (u64 a = 1; a <= 2000; ++a) {
    for (u64 b : {a / 2, a, 7 * a + 3}) {
      if (b == 0) continue;
      if (lattice::floor_sum_fast(a, b) != lattice::floor_sum_brute(a, b)) {
        return {false, "floor sum mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b)};
      }
    }
  }
  return {true, "10^4 seeded near-count queries and 3 x 2000 floor sums, zero mismatches"};
}

// 6. exactly r = square_split(a).r points on the curve, and they satisfy it
Outcome c6_on_curve() {
  for (u64 a = 1; a <= 10000; ++a) {
    u64 r = arith::square_split(a).r;
    auto res = lattice::count_near({a, a, Rational(0)});
    if (res.count != r) {
      return {false, "count_near(a,a,0) != r at a=" + std::to_string(a)};
    }
    auto pts = lattice::on_curve_points(a);
    if (pts.size() != r) return {false, "on_curve_points size != r at a=" + std::to_string(a)};
    for (auto [x, y] : pts) {
      if (static_cast<unsigned __int128>(x) * x != static_cast<unsigned __int128>(a) * y ||
          x < 1 || x > a) {
        return {false, "bad on-curve point at a=" + std::to_string(a)};
      }
    }
  }
  return {true, "count_near(a,a,0) = r and a*y = x^2 for all a <= 10^4"};
}

// 7. delta below 1/a collapses to the on-curve count
Outcome c7_collapse() {
  SplitMix64 g(715);
  for (int i = 0; i < 1000; ++i) {
    u64 a = 1 + g.below(5000);
    u64 b = 1 + g.below(10 * a);
    auto tiny = lattice::count_near({a, b, Rational(1, static_cast<i64>(a) + 1)});
    auto zero = lattice::count_near({a, b, Rational(0)});
    if (tiny.count != zero.count) {
      return {false, "collapse failed at a=" + std::to_string(a) + " b=" + std::to_string(b)};
    }
  }
  return {true, "A(a,b,1/(a+1)) = A(a,b,0) on 10^3 seeded pairs"};
}

// 8. theorem-1 discrepancy ratio stays under the soft threshold 10
Outcome c8_theorem1_ratio() {
  harness::SweepConfig cfg;
  cfg.a_start = 3;
  cfg.a_end = 10000;
  cfg.theorems = {"1"};
  cfg.workers = workers();
  auto report = harness::sweep_theorem1(cfg);
  bool ok = std::isfinite(report.summary.max_ratio) && report.summary.max_ratio <= 10.0;
  return {ok, "max |discrepancy|/envelope = " + std::to_string(report.summary.max_ratio) +
                  " at a=" + std::to_string(report.summary.argmax_a)};
}

// 9. theorem-2 ratio on the same grid with delta in {1/100, 1/10}
Outcome c9_theorem2_ratio() {
  harness::SweepConfig cfg;
  cfg.a_start = 3;
  cfg.a_end = 10000;
  cfg.deltas = {Rational(1, 100), Rational(1, 10)};
  cfg.theorems = {"2"};
  cfg.workers = workers();
  auto report = harness::sweep_theorem2(cfg);
  bool ok = std::isfinite(report.summary.max_ratio) && report.summary.max_ratio <= 10.0;
  std::string arg_delta =
      report.summary.argmax_delta ? report.summary.argmax_delta->to_string() : "-";
  return {ok, "max |A - 2 delta b|/envelope = " + std::to_string(report.summary.max_ratio) +
                  " at a=" + std::to_string(report.summary.argmax_a) + " delta=" + arg_delta};
}

// 10. theorem-3 ratio, including the per-a delta = 1/a column and the exact
// on-curve comparison A(a,a,0) <= sigma(r)
Outcome c10_theorem3_ratio() {
  harness::SweepConfig cfg;
  cfg.a_start = 3;
  cfg.a_end = 10000;
  cfg.deltas = {Rational(0), Rational(1, 100), Rational(1, 10)};
  cfg.theorems = {"3"};
  cfg.workers = workers();
  auto report = harness::sweep_theorem3(cfg);
  if (!std::isfinite(report.summary.max_ratio) || report.summary.max_ratio > 10.0) {
    return {false, "sweep max ratio " + std::to_string(report.summary.max_ratio)};
  }
  double inv_a_max = 0.0;
  for (u64 a = 3; a <= 10000; ++a) {
    Rational inv_a(1, static_cast<i64>(a));
    double ratio = static_cast<double>(lattice::count_near({a, a, inv_a}).count) /
                   bounds::envelope_theorem3(a, inv_a).value;
    inv_a_max = std::max(inv_a_max, ratio);
    if (ratio > 10.0) return {false, "delta=1/a ratio " + std::to_string(ratio) + " at a=" + std::to_string(a)};
    u64 on_curve = lattice::count_near({a, a, Rational(0)}).count;
    if (on_curve > arith::sigma(arith::square_split(a).r)) {
      return {false, "A(a,a,0) > sigma(r) at a=" + std::to_string(a)};
    }
  }
  return {true, "sweep max " + std::to_string(report.summary.max_ratio) + ", delta=1/a max " +
                    std::to_string(inv_a_max) + ", A(a,a,0) <= sigma(r) throughout"};
}

// 11. the exact rational identity behind theorem 1
Outcome c11_exact_identity() {
  for (u64 a = 1; a <= 300; ++a) {
    for (u64 b = 1; b <= 300; ++b) {
      unsigned __int128 p = static_cast<unsigned __int128>(b) * (b + 1) * (2 * b + 1) / 6;
      Rational smooth =
          Rational(static_cast<i64>(p), static_cast<i64>(a)) - Rational(static_cast<i64>(b), 2);
      Rational lhs = Rational(static_cast<i64>(lattice::floor_sum_brute(a, b))) - smooth;
      if (!(lhs == lattice::frac_discrepancy(a, b))) {
        return {false, "identity failed at a=" + std::to_string(a) + " b=" + std::to_string(b)};
      }
    }
  }
  return {true, "floor_sum - smooth term = frac_discrepancy exactly for all a, b <= 300"};
}

// 12. byte-identical sweep output, multi-worker
Outcome c12_determinism() {
  harness::SweepConfig cfg;
  cfg.a_start = 3;
  cfg.a_end = 1500;
  cfg.deltas = {Rational(0), Rational(1, 10)};
  cfg.theorems = {"1", "3"};
  cfg.seed = 2026;
  cfg.workers = 4;
  auto t1a = harness::to_csv(harness::sweep_theorem1(cfg));
  auto t1b = harness::to_csv(harness::sweep_theorem1(cfg));
  if (t1a != t1b) return {false, "theorem1 CSV differs between runs"};
  auto t3a = harness::to_csv(harness::sweep_theorem3(cfg));
  auto t3b = harness::to_csv(harness::sweep_theorem3(cfg));
  if (t3a != t3b) return {false, "theorem3 CSV differs between runs"};
  cfg.workers = 1;
  if (harness::to_csv(harness::sweep_theorem1(cfg)) != t1a) {
    return {false, "worker count changed theorem1 CSV"};
  }
  return {true, "two workers=4 runs and a workers=1 run emit identical CSV bytes"};
}

struct Criterion {
  int number;
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "gauss-closed-form", c1_gauss_closed},
    {2, "korolev-constant", c2_korolev},
    {3, "polya-vinogradov", c3_polya_vinogradov},
    {4, "fejer-floor", c4_fejer},
    {5, "oracle-equivalence", c5_oracle_equivalence},
    {6, "on-curve-structure", c6_on_curve},
    {7, "collapse-below-1/a", c7_collapse},
    {8, "theorem1-ratio", c8_theorem1_ratio},
    {9, "theorem2-ratio", c9_theorem2_ratio},
    {10, "theorem3-ratio", c10_theorem3_ratio},
    {11, "exact-identity", c11_exact_identity},
    {12, "determinism", c12_determinism},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 12) {
      std::fprintf(stderr, "usage: acceptance [1-12]\n");
      return 2;
    }
  }
  std::printf("kernel backend: %s\n", kernels::name(kernels::active()));
  bool all_pass = true;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.number != only) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, "exception"};
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] C%02d %-20s %s (%.1f s)\n", outcome.pass ? "PASS" : "FAIL", c.number,
                c.name, outcome.detail.c_str(), secs);
    std::fflush(stdout);
    all_pass = all_pass && outcome.pass;
  }
  return all_pass ? 0 : 1;
}
