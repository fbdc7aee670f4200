#include "parab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "parab/arith.hpp"
#include "parab/bounds.hpp"
#include "parab/expsums.hpp"
#include "parab/kernels.hpp"
#include "parab/lattice.hpp"
#include "parab/prng.hpp"

#include <CLI11.hpp>

namespace parab::harness {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// ---------------------------------------------------------------------------
// small formatting helpers
// ---------------------------------------------------------------------------

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_u64(u64 v) { return std::to_string(v); }

std::string fmt_complex(std::complex<double> z) {
  double re = z.real() == 0.0 ? 0.0 : z.real();
  double im = z.imag() == 0.0 ? 0.0 : z.imag();
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", re, im);
  return buf;
}

// real-valued measurements are reported as fixed 10^-9 rationals
Rational fixed_rational(double x) {
  if (std::abs(x) > 9.0e9) throw std::overflow_error("fixed_rational: value too large");
  return Rational(static_cast<i64>(std::llround(x * 1e9)), 1'000'000'000);
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    std::string item = trim(s.substr(pos, comma - pos));
    if (!item.empty()) out.push_back(std::move(item));
    pos = comma + 1;
  }
  return out;
}

u64 parse_u64(const std::string& s, const std::string& what) {
  u64 v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw std::invalid_argument("bad unsigned integer for " + what + ": '" + s + "'");
  }
  return v;
}

i64 parse_i64(const std::string& s, const std::string& what) {
  i64 v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw std::invalid_argument("bad integer for " + what + ": '" + s + "'");
  }
  return v;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("bad number for " + what + ": '" + s + "'");
  }
}

const std::vector<std::string> kTheoremTokens = {"1",  "2",  "3",     "4",
                                                 "korolev", "pv", "fejer", "gauss_closed"};

// ---------------------------------------------------------------------------
// worker pool: index-slotted results keep emission order canonical no matter
// how threads interleave
// ---------------------------------------------------------------------------

void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  unsigned w = static_cast<unsigned>(std::min<std::size_t>(workers == 0 ? 1 : workers, n));
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> bail{false};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto body = [&] {
    while (!bail.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= n) break;
      try {
        fn(i);
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
        }
        bail.store(true, std::memory_order_relaxed);
        break;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (unsigned t = 0; t < w; ++t) threads.emplace_back(body);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::string seconds() const {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", s);
    return buf;
  }
};

// ---------------------------------------------------------------------------
// grid construction
// ---------------------------------------------------------------------------

std::vector<u64> a_values(const SweepConfig& cfg) {
  std::vector<u64> out;
  for (u64 a = cfg.a_start;; a += cfg.a_step) {
    if (a > cfg.a_end) break;
    bool keep = true;
    if (cfg.a_filter == AFilter::primes) keep = arith::is_prime(a);
    if (cfg.a_filter == AFilter::squares) keep = arith::is_square(a);
    if (keep) out.push_back(a);
    if (cfg.a_end - a < cfg.a_step) break;  // guards wraparound
  }
  return out;
}

u64 b_for(const SweepConfig& cfg, u64 a) {
  switch (cfg.b_rule) {
    case BRule::equal_a:
      return a;
    case BRule::fixed:
      return cfg.b_value;
    case BRule::multiple: {
      unsigned __int128 b = static_cast<unsigned __int128>(cfg.b_value) * a;
      if (b > std::numeric_limits<u64>::max()) throw std::overflow_error("b_rule multiple overflows");
      return static_cast<u64>(b);
    }
  }
  throw std::logic_error("bad b_rule");
}

std::vector<Rational> sorted_deltas(const SweepConfig& cfg) {
  auto ds = cfg.deltas;
  std::sort(ds.begin(), ds.end());
  return ds;
}

// full fast/brute cross-check below a = 2000, seeded 1% subsample above
bool should_cross_check(u64 seed, u64 a, std::size_t index) {
  if (a < 2000) return true;
  SplitMix64 g(mix_seed(seed, static_cast<u64>(index)));
  return g.below(100) == 0;
}

void finalize_summary(Report& report, const Timer& timer) {
  auto& s = report.summary;
  s.record_count = report.rows.size();
  s.max_ratio = 0.0;
  s.argmax_a = 0;
  s.argmax_b = 0;
  s.argmax_delta.reset();
  for (const auto& row : report.rows) {
    if (row.ratio > s.max_ratio) {
      s.max_ratio = row.ratio;
      s.argmax_a = row.a;
      s.argmax_b = row.b;
      s.argmax_delta = row.delta;
    }
  }
  s.runtime_seconds = timer.seconds();
}

void push_extra(Report& r, const std::string& key, const std::string& value) {
  r.summary.extras.emplace_back(key, value);
}

}  // namespace

// ---------------------------------------------------------------------------
// config parsing
// ---------------------------------------------------------------------------

void validate(const SweepConfig& cfg) {
  if (cfg.a_start == 0 || cfg.a_end < cfg.a_start) {
    throw std::invalid_argument("config: a range is empty");
  }
  if (cfg.a_step == 0) throw std::invalid_argument("config: a_step must be >= 1");
  if (cfg.workers == 0) throw std::invalid_argument("config: workers must be >= 1");
  if ((cfg.b_rule == BRule::fixed || cfg.b_rule == BRule::multiple) && cfg.b_value == 0) {
    throw std::invalid_argument("config: b_rule parameter must be >= 1");
  }
  if (!(cfg.threshold > 0.0)) throw std::invalid_argument("config: threshold must be positive");
  for (const auto& d : cfg.deltas) {
    if (d < Rational(0) || !(d < Rational(1, 2))) {
      throw std::invalid_argument("config: every delta must lie in [0, 1/2)");
    }
  }
  for (const auto& t : cfg.theorems) {
    if (std::find(kTheoremTokens.begin(), kTheoremTokens.end(), t) == kTheoremTokens.end()) {
      throw std::invalid_argument("config: unknown theorem token '" + t + "'");
    }
  }
}

SweepConfig parse_config_text(std::string_view text) {
  SweepConfig cfg;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    }
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));

    if (key == "a_start") {
      cfg.a_start = parse_u64(value, key);
    } else if (key == "a_end") {
      cfg.a_end = parse_u64(value, key);
    } else if (key == "a_step") {
      cfg.a_step = parse_u64(value, key);
    } else if (key == "a_filter") {
      if (value == "all") cfg.a_filter = AFilter::all;
      else if (value == "primes") cfg.a_filter = AFilter::primes;
      else if (value == "squares") cfg.a_filter = AFilter::squares;
      else throw std::invalid_argument("config: bad a_filter '" + value + "'");
    } else if (key == "b_rule") {
      if (value == "equal_a") {
        cfg.b_rule = BRule::equal_a;
      } else if (value.starts_with("fixed:")) {
        cfg.b_rule = BRule::fixed;
        cfg.b_value = parse_u64(value.substr(6), "b_rule fixed");
      } else if (value.starts_with("multiple:")) {
        cfg.b_rule = BRule::multiple;
        cfg.b_value = parse_u64(value.substr(9), "b_rule multiple");
      } else {
        throw std::invalid_argument("config: bad b_rule '" + value + "'");
      }
    } else if (key == "delta") {
      cfg.deltas.clear();
      if (value != "-") {
        for (const auto& item : split_list(value)) cfg.deltas.push_back(Rational::parse(item));
      }
    } else if (key == "theorems") {
      cfg.theorems.clear();
      if (value != "-") cfg.theorems = split_list(value);
    } else if (key == "seed") {
      cfg.seed = parse_u64(value, key);
    } else if (key == "workers") {
      cfg.workers = static_cast<unsigned>(parse_u64(value, key));
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    if (pos > text.size()) break;
  }
  validate(cfg);
  return cfg;
}

SweepConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

// ---------------------------------------------------------------------------
// theorem sweeps
// ---------------------------------------------------------------------------

Report sweep_theorem1(const SweepConfig& cfg) {
  validate(cfg);
  Timer timer;
  struct Item {
    u64 a, b;
  };
  std::vector<Item> items;
  u64 skipped = 0;
  for (u64 a : a_values(cfg)) {
    if (a < 3) {  // envelope domain: log log a must be positive
      ++skipped;
      continue;
    }
    items.push_back({a, b_for(cfg, a)});
  }
  Report report;
  report.operation = "theorem1";
  report.config = cfg;
  report.rows.resize(items.size());
  parallel_for(items.size(), cfg.workers, [&](std::size_t i) {
    const auto [a, b] = items[i];
    DiscrepancyRecord rec;
    rec.a = a;
    rec.b = b;
    rec.measured = lattice::frac_discrepancy(a, b);
    rec.envelope = bounds::envelope_theorem1(a, b).value;
    rec.ratio = std::abs(rec.measured.to_double()) / rec.envelope;
    rec.method = "fast";
    if (should_cross_check(cfg.seed, a, i)) {
      u64 fast = lattice::floor_sum_fast(a, b);
      u64 brute = lattice::floor_sum_brute(a, b);
      if (fast != brute) {
        throw VerificationError("floor_sum fast/brute mismatch at a=" + fmt_u64(a) +
                                " b=" + fmt_u64(b) + ": fast=" + fmt_u64(fast) +
                                " brute=" + fmt_u64(brute));
      }
    }
    rec.method_agreement = true;
    report.rows[i] = std::move(rec);
  });
  finalize_summary(report, timer);
  push_extra(report, "skipped_below_domain", fmt_u64(skipped));
  return report;
}

Report sweep_theorem2(const SweepConfig& cfg) {
  validate(cfg);
  if (cfg.deltas.empty()) throw std::invalid_argument("theorem2 sweep needs a delta list");
  Timer timer;
  struct Item {
    u64 a, b;
    Rational delta;
  };
  std::vector<Item> items;
  u64 skipped = 0;
  auto deltas = sorted_deltas(cfg);
  for (u64 a : a_values(cfg)) {
    if (a < 3) {
      ++skipped;
      continue;
    }
    u64 b = b_for(cfg, a);
    for (const auto& d : deltas) items.push_back({a, b, d});
  }
  Report report;
  report.operation = "theorem2";
  report.config = cfg;
  report.rows.resize(items.size());
  parallel_for(items.size(), cfg.workers, [&](std::size_t i) {
    const auto& [a, b, delta] = items[i];
    lattice::CountQuery q{a, b, delta};
    auto res = lattice::count_near(q);
    DiscrepancyRecord rec;
    rec.a = a;
    rec.b = b;
    rec.delta = delta;
    rec.measured = Rational(static_cast<i64>(res.count)) -
                   Rational(2) * delta * Rational(static_cast<i64>(b));
    rec.envelope = bounds::envelope_theorem2(a, b).value;
    rec.ratio = std::abs(rec.measured.to_double()) / rec.envelope;
    rec.method = res.method == lattice::CountMethod::fast ? "fast" : "brute";
    if (should_cross_check(cfg.seed, a, i)) {
      auto other = res.method == lattice::CountMethod::fast ? lattice::count_near_brute(q)
                                                            : lattice::count_near_fast(q);
      if (other.count != res.count) {
        throw VerificationError("count_near fast/brute mismatch at a=" + fmt_u64(a) +
                                " b=" + fmt_u64(b) + " delta=" + delta.to_string() + ": " +
                                fmt_u64(res.count) + " vs " + fmt_u64(other.count));
      }
    }
    rec.method_agreement = true;
    report.rows[i] = std::move(rec);
  });
  finalize_summary(report, timer);
  push_extra(report, "skipped_below_domain", fmt_u64(skipped));
  return report;
}

Report sweep_theorem3(const SweepConfig& cfg) {
  validate(cfg);
  if (cfg.deltas.empty()) throw std::invalid_argument("theorem3 sweep needs a delta list");
  Timer timer;
  struct Item {
    u64 a;
    Rational delta;
  };
  std::vector<Item> items;
  u64 skipped = 0;
  auto deltas = sorted_deltas(cfg);
  for (u64 a : a_values(cfg)) {
    if (a < 2) {
      ++skipped;
      continue;
    }
    for (const auto& d : deltas) items.push_back({a, d});
  }
  Report report;
  report.operation = "theorem3";
  report.config = cfg;
  report.rows.resize(items.size());
  std::vector<double> t4_ratios(items.size(), 0.0);
  parallel_for(items.size(), cfg.workers, [&](std::size_t i) {
    const auto& [a, delta] = items[i];
    lattice::CountQuery q{a, a, delta};  // A(a, delta) = A(a, a, delta)
    auto res = lattice::count_near(q);
    DiscrepancyRecord rec;
    rec.a = a;
    rec.b = a;
    rec.delta = delta;
    rec.measured = Rational(static_cast<i64>(res.count));
    rec.envelope = bounds::envelope_theorem3(a, delta).value;
    rec.ratio = rec.measured.to_double() / rec.envelope;
    rec.method = res.method == lattice::CountMethod::fast ? "fast" : "brute";
    t4_ratios[i] = res.count / bounds::envelope_theorem4(a, delta).value;
    if (should_cross_check(cfg.seed, a, i)) {
      auto other = res.method == lattice::CountMethod::fast ? lattice::count_near_brute(q)
                                                            : lattice::count_near_fast(q);
      if (other.count != res.count) {
        throw VerificationError("count_near fast/brute mismatch at a=" + fmt_u64(a) +
                                " delta=" + delta.to_string() + ": " + fmt_u64(res.count) +
                                " vs " + fmt_u64(other.count));
      }
    }
    rec.method_agreement = true;
    report.rows[i] = std::move(rec);
  });
  finalize_summary(report, timer);
  double t4_max = 0.0;
  u64 t4_a = 0;
  std::string t4_delta = "-";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (t4_ratios[i] > t4_max) {
      t4_max = t4_ratios[i];
      t4_a = items[i].a;
      t4_delta = items[i].delta.to_string();
    }
  }
  push_extra(report, "skipped_below_domain", fmt_u64(skipped));
  push_extra(report, "theorem4_max_ratio", fmt_double(t4_max));
  push_extra(report, "theorem4_argmax_a", fmt_u64(t4_a));
  push_extra(report, "theorem4_argmax_delta", t4_delta);
  return report;
}

// ---------------------------------------------------------------------------
// verification suites
// ---------------------------------------------------------------------------

Report verify_gauss(const SweepConfig& cfg) {
  validate(cfg);
  Timer timer;
  bool want_closed = std::find(cfg.theorems.begin(), cfg.theorems.end(), "gauss_closed") !=
                     cfg.theorems.end();
  bool want_korolev =
      std::find(cfg.theorems.begin(), cfg.theorems.end(), "korolev") != cfg.theorems.end();
  if (!want_closed && !want_korolev) want_closed = want_korolev = true;

  auto avs = a_values(cfg);
  struct Side {
    double closed_err = 0.0;
    u64 closed_h = 0;
    double kor_ratio = 0.0;
    double kor_mag = 0.0;
    u64 kor_h = 0, kor_b = 0;
    double inc_ratio = 0.0;
    u64 inc_h = 0, inc_b = 0;
  };
  Report report;
  report.operation = "gauss";
  report.config = cfg;
  report.rows.resize(avs.size());
  std::vector<Side> sides(avs.size());

  parallel_for(avs.size(), cfg.workers, [&](std::size_t i) {
    const u64 a = avs[i];
    kernels::UnitTable table(a);
    Side side;
    const double tol = 1e-6 * (1.0 + std::sqrt(static_cast<double>(a)));

    if (want_closed) {
      for (u64 h = 0; h < a; ++h) {
        auto closed = expsums::complete_gauss_closed(static_cast<i64>(h), a).to_complex();
        auto brute = expsums::complete_gauss_brute(table, static_cast<i64>(h));
        double err = std::abs(closed - brute);
        if (err >= tol) {
          throw VerificationError("closed-form Gauss sum mismatch at h=" + fmt_u64(h) +
                                  " a=" + fmt_u64(a) + ": |closed-brute|=" + fmt_double(err) +
                                  " tol=" + fmt_double(tol));
        }
        if (err > side.closed_err) {
          side.closed_err = err;
          side.closed_h = h;
        }
      }
    }

    if (want_korolev) {
      const double kor_env = bounds::envelope_korolev(a).value;
      std::vector<u64> cps(33);
      std::vector<std::complex<double>> sums(33);
      for (u64 h = 1; h < a; ++h) {
        if (std::gcd(h, a) != 1) continue;
        SplitMix64 g(mix_seed(mix_seed(cfg.seed, a), h));
        for (int k = 0; k < 32; ++k) cps[k] = 1 + g.below(a);
        cps[32] = a;
        std::sort(cps.begin(), cps.end());
        kernels::gauss_prefix_sums(table, h, cps, sums);
        for (std::size_t k = 0; k < cps.size(); ++k) {
          double mag = std::abs(sums[k]);
          double ratio = mag / kor_env;
          if (ratio >= 1.0) {
            throw VerificationError("Korolev bound violated at a=" + fmt_u64(a) +
                                    " h=" + fmt_u64(h) + " b=" + fmt_u64(cps[k]) +
                                    ": |S|=" + fmt_double(mag) + " >= " + fmt_double(kor_env));
          }
          if (ratio > side.kor_ratio) {
            side.kor_ratio = ratio;
            side.kor_mag = mag;
            side.kor_h = h;
            side.kor_b = cps[k];
          }
          double inc = mag / bounds::envelope_incomplete(static_cast<i64>(h), a, cps[k]).value;
          if (inc > side.inc_ratio) {
            side.inc_ratio = inc;
            side.inc_h = h;
            side.inc_b = cps[k];
          }
        }
      }
      // a few non-coprime h to exercise the gcd structure of the envelope
      if (a > 1) {
        SplitMix64 g(mix_seed(cfg.seed ^ 0x5eedULL, a));
        for (u64 d : arith::divisors(arith::factor(a))) {
          if (d == 1 || d == a) continue;
          u64 h = d * (1 + g.below(a / d - 1));
          for (int k = 0; k < 32; ++k) cps[k] = 1 + g.below(a);
          cps[32] = a;
          std::sort(cps.begin(), cps.end());
          kernels::gauss_prefix_sums(table, h % a, cps, sums);
          for (std::size_t k = 0; k < cps.size(); ++k) {
            double mag = std::abs(sums[k]);
            double inc = mag / bounds::envelope_incomplete(static_cast<i64>(h), a, cps[k]).value;
            if (inc > side.inc_ratio) {
              side.inc_ratio = inc;
              side.inc_h = h;
              side.inc_b = cps[k];
            }
          }
        }
      }
    }

    DiscrepancyRecord rec;
    rec.a = a;
    rec.b = a;
    if (want_korolev) {
      rec.measured = fixed_rational(side.kor_mag);
      rec.envelope = bounds::envelope_korolev(a).value;
      rec.ratio = side.kor_ratio;
    } else {
      rec.measured = fixed_rational(side.closed_err);
      rec.envelope = tol;
      rec.ratio = side.closed_err / tol;
    }
    rec.method = "brute";
    rec.method_agreement = true;
    report.rows[i] = std::move(rec);
    sides[i] = side;
  });

  finalize_summary(report, timer);
  Side best_closed, best_kor, best_inc;
  u64 a_closed = 0, a_kor = 0, a_inc = 0;
  for (std::size_t i = 0; i < avs.size(); ++i) {
    if (sides[i].closed_err > best_closed.closed_err) {
      best_closed = sides[i];
      a_closed = avs[i];
    }
    if (sides[i].kor_ratio > best_kor.kor_ratio) {
      best_kor = sides[i];
      a_kor = avs[i];
    }
    if (sides[i].inc_ratio > best_inc.inc_ratio) {
      best_inc = sides[i];
      a_inc = avs[i];
    }
  }
  push_extra(report, "checks", want_closed && want_korolev ? "gauss_closed,korolev"
                               : want_closed               ? "gauss_closed"
                                                           : "korolev");
  if (want_closed) {
    push_extra(report, "closed_max_abs_err", fmt_double(best_closed.closed_err));
    push_extra(report, "closed_argmax", "a=" + fmt_u64(a_closed) + ";h=" + fmt_u64(best_closed.closed_h));
  }
  if (want_korolev) {
    push_extra(report, "korolev_max_ratio", fmt_double(best_kor.kor_ratio));
    push_extra(report, "korolev_argmax",
               "a=" + fmt_u64(a_kor) + ";h=" + fmt_u64(best_kor.kor_h) + ";b=" + fmt_u64(best_kor.kor_b));
    push_extra(report, "incomplete_max_ratio", fmt_double(best_inc.inc_ratio));
    push_extra(report, "incomplete_argmax",
               "a=" + fmt_u64(a_inc) + ";h=" + fmt_u64(best_inc.inc_h) + ";b=" + fmt_u64(best_inc.inc_b));
  }
  return report;
}

Report verify_pv(const SweepConfig& cfg) {
  validate(cfg);
  Timer timer;
  auto avs = a_values(cfg);
  struct Side {
    u64 max_abs = 0;
    u64 q = 0;
    double pv_ratio = -1.0;
    double grh_ratio = 0.0;
    u64 skipped_principal = 0;
    u64 chars = 0;
  };
  Report report;
  report.operation = "pv";
  report.config = cfg;
  report.rows.resize(avs.size());
  std::vector<Side> sides(avs.size());
  std::vector<bool> has_row(avs.size(), false);

  parallel_for(avs.size(), cfg.workers, [&](std::size_t i) {
    const u64 a1 = avs[i];
    std::vector<expsums::CharacterSpec> specs;
    if (a1 % 2 == 1) {
      specs.push_back(expsums::CharacterSpec::jacobi_top(a1));
    } else {
      specs.push_back(expsums::CharacterSpec::bottom_chi0(a1));
      specs.push_back(expsums::CharacterSpec::bottom_chi1(a1));
    }
    Side side;
    for (const auto& spec : specs) {
      const u64 q = spec.modulus_bound;
      std::vector<int> vals(q);
      i64 period_sum = 0;
      bool principal = true;  // real character: principal iff never -1
      for (u64 n = 1; n <= q; ++n) {
        vals[n % q] = expsums::chi_eval(spec, static_cast<i64>(n));
        period_sum += vals[n % q];
        if (vals[n % q] == -1) principal = false;
      }
      if (principal) {
        ++side.skipped_principal;
        continue;
      }
      ++side.chars;
      if (period_sum != 0) {
        throw VerificationError("character period sum nonzero for a1=" + fmt_u64(a1) +
                                " q=" + fmt_u64(q) + ": " + std::to_string(period_sum));
      }
      const double pv_env = bounds::envelope_pv(q).value;
      const double grh_env = bounds::envelope_grh(q).value;
      i64 running = 0;
      u64 max_abs = 0;
      std::vector<i64> prefix(3 * q + 1, 0);
      for (u64 n = 1; n <= 3 * q; ++n) {
        running += vals[n % q];
        prefix[n] = running;
        u64 mag = static_cast<u64>(running < 0 ? -running : running);
        if (mag > max_abs) max_abs = mag;
      }
      // spot-check the scan against the reference partial-sum operation
      SplitMix64 g(mix_seed(cfg.seed, a1));
      for (int k = 0; k < 2; ++k) {
        u64 n = 1 + g.below(q);
        if (expsums::char_partial_sum(spec, 0, n) != prefix[n]) {
          throw VerificationError("partial-sum scan mismatch at a1=" + fmt_u64(a1) +
                                  " N=" + fmt_u64(n));
        }
      }
      double pv_ratio = static_cast<double>(max_abs) / pv_env;
      if (pv_ratio > 1.0) {
        throw VerificationError("Polya-Vinogradov bound violated for a1=" + fmt_u64(a1) +
                                " q=" + fmt_u64(q) + ": max |sum|=" + fmt_u64(max_abs) +
                                " > " + fmt_double(pv_env));
      }
      if (pv_ratio > side.pv_ratio) {
        side.pv_ratio = pv_ratio;
        side.max_abs = max_abs;
        side.q = q;
        side.grh_ratio = static_cast<double>(max_abs) / grh_env;
      }
    }
    sides[i] = side;
    if (side.chars > 0) {
      DiscrepancyRecord rec;
      rec.a = a1;
      rec.b = side.q;
      rec.measured = Rational(static_cast<i64>(side.max_abs));
      rec.envelope = bounds::envelope_pv(side.q).value;
      rec.ratio = side.pv_ratio;
      rec.method = "brute";
      rec.method_agreement = true;
      report.rows[i] = std::move(rec);
      has_row[i] = true;
    }
  });

  // drop rows for a1 whose characters were all principal
  std::vector<DiscrepancyRecord> rows;
  rows.reserve(report.rows.size());
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    if (has_row[i]) rows.push_back(std::move(report.rows[i]));
  }
  report.rows = std::move(rows);

  finalize_summary(report, timer);
  double pv_max = 0.0, grh_max = 0.0;
  u64 pv_a = 0, pv_q = 0, skipped = 0, chars = 0;
  for (std::size_t i = 0; i < avs.size(); ++i) {
    skipped += sides[i].skipped_principal;
    chars += sides[i].chars;
    if (sides[i].pv_ratio > pv_max) {
      pv_max = sides[i].pv_ratio;
      pv_a = avs[i];
      pv_q = sides[i].q;
    }
    if (sides[i].grh_ratio > grh_max) grh_max = sides[i].grh_ratio;
  }
  push_extra(report, "characters_checked", fmt_u64(chars));
  push_extra(report, "principal_skipped", fmt_u64(skipped));
  push_extra(report, "pv_max_ratio", fmt_double(pv_max));
  push_extra(report, "pv_argmax", "a1=" + fmt_u64(pv_a) + ";q=" + fmt_u64(pv_q));
  push_extra(report, "grh_max_ratio", fmt_double(grh_max));
  return report;
}

Report verify_fejer(const SweepConfig& cfg) {
  validate(cfg);
  Timer timer;
  std::vector<Rational> deltas = cfg.deltas;
  if (deltas.empty()) {
    deltas = {Rational(1, 4), Rational(1, 10), Rational(1, 20), Rational(1, 100)};
  }
  constexpr std::size_t kGridPoints = 10'000;
  Report report;
  report.operation = "fejer";
  report.config = cfg;
  u64 skipped_zero = 0;
  double global_min = std::numeric_limits<double>::infinity();
  for (const auto& delta : deltas) {
    if (delta.is_zero()) {
      ++skipped_zero;  // H would be infinite; nothing to check
      continue;
    }
    const u64 H = static_cast<u64>(delta.den()) / (2 * static_cast<u64>(delta.num()));
    const double dd = delta.to_double();
    double min_near = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < kGridPoints; ++k) {
      double t = -dd + 2.0 * dd * static_cast<double>(k) / static_cast<double>(kGridPoints - 1);
      double v = bounds::fejer(H, t);
      min_near = std::min(min_near, v);
    }
    if (min_near < bounds::kFejerFloor - 1e-12) {
      throw VerificationError("Fejer lower bound violated for delta=" + delta.to_string() +
                              " H=" + fmt_u64(H) + ": min=" + fmt_double(min_near));
    }
    for (std::size_t k = 0; k < kGridPoints; ++k) {
      double t = static_cast<double>(k) / static_cast<double>(kGridPoints);
      double v = bounds::fejer(H, t);
      global_min = std::min(global_min, v);
      if (v < 0.0) {
        throw VerificationError("Fejer kernel negative at t=" + fmt_double(t));
      }
    }
    DiscrepancyRecord rec;
    rec.a = H;
    rec.b = kGridPoints;
    rec.delta = delta;
    rec.measured = fixed_rational(min_near);
    rec.envelope = bounds::kFejerFloor;
    rec.ratio = min_near / bounds::kFejerFloor;
    rec.method = "brute";
    rec.method_agreement = true;
    report.rows.push_back(std::move(rec));
  }
  finalize_summary(report, timer);
  double min_ratio = std::numeric_limits<double>::infinity();
  std::string argmin = "-";
  for (const auto& row : report.rows) {
    if (row.ratio < min_ratio) {
      min_ratio = row.ratio;
      argmin = row.delta ? row.delta->to_string() : "-";
    }
  }
  if (report.rows.empty()) min_ratio = 0.0;
  push_extra(report, "skipped_zero_delta", fmt_u64(skipped_zero));
  push_extra(report, "min_ratio", fmt_double(min_ratio));
  push_extra(report, "min_ratio_delta", argmin);
  push_extra(report, "positivity_grid_min", fmt_double(report.rows.empty() ? 0.0 : global_min));
  return report;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

namespace {

std::string a_filter_name(AFilter f) {
  switch (f) {
    case AFilter::all:
      return "all";
    case AFilter::primes:
      return "primes";
    case AFilter::squares:
      return "squares";
  }
  return "all";
}

std::string b_rule_name(const SweepConfig& cfg) {
  switch (cfg.b_rule) {
    case BRule::equal_a:
      return "equal_a";
    case BRule::fixed:
      return "fixed:" + fmt_u64(cfg.b_value);
    case BRule::multiple:
      return "multiple:" + fmt_u64(cfg.b_value);
  }
  return "equal_a";
}

std::string join_list(const std::vector<std::string>& items) {
  if (items.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    out += items[i];
  }
  return out;
}

std::string delta_list(const std::vector<Rational>& ds) {
  std::vector<std::string> items;
  items.reserve(ds.size());
  for (const auto& d : ds) items.push_back(d.to_string());
  return join_list(items);
}

constexpr const char* kCsvHeader =
    "a,b,delta_num,delta_den,measured_num,measured_den,envelope,ratio,method,agreement";

}  // namespace

std::string to_csv(const Report& report) {
  std::string out = kCsvHeader;
  out += '\n';
  char buf[256];
  for (const auto& r : report.rows) {
    i64 dn = 0, dd = 0;  // delta_den = 0 marks "no delta for this operation"
    if (r.delta) {
      dn = r.delta->num();
      dd = r.delta->den();
    }
    std::snprintf(buf, sizeof buf, "%llu,%llu,%lld,%lld,%lld,%lld,%.12g,%.12g,%s,%s\n",
                  static_cast<unsigned long long>(r.a), static_cast<unsigned long long>(r.b),
                  static_cast<long long>(dn), static_cast<long long>(dd),
                  static_cast<long long>(r.measured.num()),
                  static_cast<long long>(r.measured.den()), r.envelope, r.ratio,
                  r.method.c_str(), r.method_agreement ? "true" : "false");
    out += buf;
  }
  return out;
}

std::string to_structured(const Report& report) {
  std::string out = "parab-report-v1\n";
  auto line = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
  line("operation", report.operation);
  const auto& c = report.config;
  line("config.a_start", fmt_u64(c.a_start));
  line("config.a_end", fmt_u64(c.a_end));
  line("config.a_step", fmt_u64(c.a_step));
  line("config.a_filter", a_filter_name(c.a_filter));
  line("config.b_rule", b_rule_name(c));
  line("config.delta", delta_list(c.deltas));
  line("config.theorems", join_list(c.theorems));
  line("config.seed", fmt_u64(c.seed));
  line("config.workers", std::to_string(c.workers));
  line("config.threshold", fmt_double(c.threshold));
  const auto& s = report.summary;
  line("summary.record_count", std::to_string(s.record_count));
  line("summary.max_ratio", fmt_double(s.max_ratio));
  line("summary.argmax_a", fmt_u64(s.argmax_a));
  line("summary.argmax_b", fmt_u64(s.argmax_b));
  line("summary.argmax_delta", s.argmax_delta ? s.argmax_delta->to_string() : "-");
  line("summary.runtime_seconds", s.runtime_seconds);
  for (const auto& [k, v] : s.extras) line("extra." + k, v);
  return out;
}

Report parse_report(std::string_view structured_text, std::string_view csv_text) {
  Report report;
  std::size_t pos = 0;
  bool first = true;
  while (pos < structured_text.size()) {
    std::size_t nl = structured_text.find('\n', pos);
    if (nl == std::string_view::npos) nl = structured_text.size();
    std::string line = trim(structured_text.substr(pos, nl - pos));
    pos = nl + 1;
    if (line.empty()) continue;
    if (first) {
      if (line != "parab-report-v1") throw std::invalid_argument("report: bad magic line");
      first = false;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("report: expected key = value");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    auto& c = report.config;
    auto& s = report.summary;
    if (key == "operation") report.operation = value;
    else if (key == "config.a_start") c.a_start = parse_u64(value, key);
    else if (key == "config.a_end") c.a_end = parse_u64(value, key);
    else if (key == "config.a_step") c.a_step = parse_u64(value, key);
    else if (key == "config.a_filter") {
      c.a_filter = value == "primes"    ? AFilter::primes
                   : value == "squares" ? AFilter::squares
                                        : AFilter::all;
    } else if (key == "config.b_rule") {
      if (value == "equal_a") c.b_rule = BRule::equal_a;
      else if (value.starts_with("fixed:")) {
        c.b_rule = BRule::fixed;
        c.b_value = parse_u64(value.substr(6), key);
      } else if (value.starts_with("multiple:")) {
        c.b_rule = BRule::multiple;
        c.b_value = parse_u64(value.substr(9), key);
      } else {
        throw std::invalid_argument("report: bad b_rule");
      }
    } else if (key == "config.delta") {
      c.deltas.clear();
      if (value != "-") {
        for (const auto& item : split_list(value)) c.deltas.push_back(Rational::parse(item));
      }
    } else if (key == "config.theorems") {
      c.theorems.clear();
      if (value != "-") c.theorems = split_list(value);
    } else if (key == "config.seed") c.seed = parse_u64(value, key);
    else if (key == "config.workers") c.workers = static_cast<unsigned>(parse_u64(value, key));
    else if (key == "config.threshold") c.threshold = parse_double(value, key);
    else if (key == "summary.record_count") s.record_count = parse_u64(value, key);
    else if (key == "summary.max_ratio") s.max_ratio = parse_double(value, key);
    else if (key == "summary.argmax_a") s.argmax_a = parse_u64(value, key);
    else if (key == "summary.argmax_b") s.argmax_b = parse_u64(value, key);
    else if (key == "summary.argmax_delta") {
      if (value == "-") s.argmax_delta.reset();
      else s.argmax_delta = Rational::parse(value);
    } else if (key == "summary.runtime_seconds") s.runtime_seconds = value;
    else if (key.starts_with("extra.")) s.extras.emplace_back(key.substr(6), value);
    else throw std::invalid_argument("report: unknown key '" + key + "'");
  }

  if (!csv_text.empty()) {
    std::size_t cpos = 0;
    bool header = true;
    while (cpos < csv_text.size()) {
      std::size_t nl = csv_text.find('\n', cpos);
      if (nl == std::string_view::npos) nl = csv_text.size();
      std::string line = trim(csv_text.substr(cpos, nl - cpos));
      cpos = nl + 1;
      if (line.empty()) continue;
      if (header) {
        if (line != kCsvHeader) throw std::invalid_argument("csv: bad header row");
        header = false;
        continue;
      }
      auto fields = split_list(line);
      if (fields.size() != 10) throw std::invalid_argument("csv: expected 10 fields");
      DiscrepancyRecord r;
      r.a = parse_u64(fields[0], "a");
      r.b = parse_u64(fields[1], "b");
      i64 dn = parse_i64(fields[2], "delta_num");
      i64 dd = parse_i64(fields[3], "delta_den");
      if (dd != 0) r.delta = Rational(dn, dd);
      r.measured = Rational(parse_i64(fields[4], "measured_num"), parse_i64(fields[5], "measured_den"));
      r.envelope = parse_double(fields[6], "envelope");
      r.ratio = parse_double(fields[7], "ratio");
      r.method = fields[8];
      if (fields[9] != "true" && fields[9] != "false") {
        throw std::invalid_argument("csv: bad agreement token");
      }
      r.method_agreement = fields[9] == "true";
      report.rows.push_back(std::move(r));
    }
  }
  return report;
}

std::string summary_text(const Report& report) {
  std::string out;
  out += "operation: " + report.operation + "\n";
  out += "records: " + std::to_string(report.summary.record_count) + "\n";
  out += "max ratio: " + fmt_double(report.summary.max_ratio) + " at a=" +
         fmt_u64(report.summary.argmax_a) + " b=" + fmt_u64(report.summary.argmax_b);
  if (report.summary.argmax_delta) out += " delta=" + report.summary.argmax_delta->to_string();
  out += "\n";
  out += "runtime: " + report.summary.runtime_seconds + " s\n";
  for (const auto& [k, v] : report.summary.extras) out += "  " + k + " = " + v + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// CLI
// ---------------------------------------------------------------------------

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write file: " + path);
  f << text;
}

struct ReportSink {
  std::string out_base;
  std::string format;
  std::ostream& out;

  // returns true when the report's soft threshold was respected
  void emit(const Report& report) const {
    if (!out_base.empty()) {
      write_file(out_base + "_" + report.operation + ".csv", to_csv(report));
      write_file(out_base + "_" + report.operation + ".report", to_structured(report));
    }
    if (format == "csv" && out_base.empty()) {
      out << to_csv(report);
    } else {
      out << summary_text(report);
    }
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"lattice points near dilated parabolas: exact counts, Gauss sums, bound checks"};
  app.set_help_flag("--help", "print help");  // frees "h" for the gauss positional
  app.require_subcommand(1);

  unsigned workers = 0;
  double threshold = 0.0;
  std::string out_base;
  std::string format = "structured";
  app.add_option("--workers", workers, "worker threads for sweeps and suites");
  app.add_option("--threshold", threshold, "soft cap on O-bound ratios (default 10)");
  app.add_option("--out", out_base, "output base path (writes BASE_<op>.csv and BASE_<op>.report)");
  app.add_option("--format", format, "stdout format when --out is absent")
      ->check(CLI::IsMember({"csv", "structured"}));

  auto* cmd_under = app.add_subcommand("count-under", "sum of floor(x^2/a) over x <= b");
  u64 cu_a = 0, cu_b = 0;
  bool cu_brute = false;
  cmd_under->add_option("a", cu_a, "dilation factor")->required();
  cmd_under->add_option("b", cu_b, "range bound")->required();
  cmd_under->add_flag("--brute", cu_brute, "force the direct-division path");

  auto* cmd_near = app.add_subcommand("count-near", "A(a,b,delta): x <= b with ||x^2/a|| <= delta");
  u64 cn_a = 0, cn_b = 0;
  std::string cn_delta;
  bool cn_brute = false, cn_fast = false;
  cmd_near->add_option("a", cn_a, "dilation factor")->required();
  cmd_near->add_option("b", cn_b, "range bound")->required();
  cmd_near->add_option("delta", cn_delta, "closeness threshold, e.g. 1/10 or 0.1")->required();
  cmd_near->add_flag("--brute", cn_brute, "force the residue-scan path");
  cmd_near->add_flag("--fast", cn_fast, "force the modular-root path");

  auto* cmd_gauss = app.add_subcommand("gauss", "quadratic Gauss sum S(h,a) or S(h,a,b)");
  i64 g_h = 0;
  u64 g_a = 0, g_b = 0;
  cmd_gauss->add_option("h", g_h, "numerator")->required();
  cmd_gauss->add_option("a", g_a, "modulus")->required();
  auto* g_b_opt = cmd_gauss->add_option("b", g_b, "range bound (incomplete sum)");

  auto* cmd_roots = app.add_subcommand("roots", "solutions of x^2 = j (mod a)");
  i64 r_j = 0;
  u64 r_a = 0;
  cmd_roots->add_option("j", r_j, "target residue")->required();
  cmd_roots->add_option("a", r_a, "modulus")->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite;
  u64 v_amin = 1, v_amax = 500, v_seed = 1;
  std::string v_deltas;
  cmd_verify->add_option("--suite", v_suite, "gauss | pv | fejer")
      ->required()
      ->check(CLI::IsMember({"gauss", "pv", "fejer"}));
  cmd_verify->add_option("--a-min", v_amin, "start of the modulus range");
  cmd_verify->add_option("--a-max", v_amax, "end of the modulus range");
  cmd_verify->add_option("--seed", v_seed, "seed for sampled sub-grids");
  cmd_verify->add_option("--delta", v_deltas, "comma-separated deltas (fejer suite)");

  auto* cmd_sweep = app.add_subcommand("sweep", "run the sweeps selected by a config file");
  std::string s_config;
  cmd_sweep->add_option("--config", s_config, "key = value config file")->required();

  auto* cmd_report = app.add_subcommand("report", "reprint a stored report");
  std::string rp_in;
  bool rp_summary = false;
  cmd_report->add_option("--in", rp_in, "structured report path")->required();
  cmd_report->add_flag("--summary", rp_summary, "print the summary block");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  ReportSink sink{out_base, format, out};

  try {
    if (*cmd_under) {
      out << (cu_brute ? lattice::floor_sum_brute(cu_a, cu_b) : lattice::floor_sum_fast(cu_a, cu_b))
          << "\n";
      return 0;
    }
    if (*cmd_near) {
      if (cn_brute && cn_fast) {
        err << "usage error: --brute and --fast are mutually exclusive\n";
        return 2;
      }
      lattice::CountQuery q{cn_a, cn_b, Rational::parse(cn_delta)};
      auto res = cn_brute   ? lattice::count_near_brute(q)
                 : cn_fast  ? lattice::count_near_fast(q)
                            : lattice::count_near(q);
      out << res.count << "\n";
      return 0;
    }
    if (*cmd_gauss) {
      if (g_b_opt->count() > 0) {
        auto value = expsums::incomplete_gauss(g_h, g_a, g_b);
        auto env = bounds::envelope_incomplete(g_h, g_a, g_b);
        out << "S(" << g_h << "," << g_a << "," << g_b << ") = " << fmt_complex(value) << "\n";
        out << "|S| = " << fmt_double(std::abs(value)) << "  envelope = " << fmt_double(env.value)
            << "\n";
      } else {
        auto closed = expsums::complete_gauss_closed(g_h, g_a);
        auto brute = expsums::complete_gauss_brute(g_h, g_a);
        out << "closed: " << closed.to_string() << " = " << fmt_complex(closed.to_complex())
            << "\n";
        out << "brute:  " << fmt_complex(brute) << "\n";
      }
      return 0;
    }
    if (*cmd_roots) {
      auto roots = lattice::roots_mod(r_j, r_a);
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i > 0) out << ' ';
        out << roots[i];
      }
      out << "\n";
      return 0;
    }
    if (*cmd_verify) {
      SweepConfig cfg;
      cfg.a_start = v_amin;
      cfg.a_end = v_amax;
      cfg.seed = v_seed;
      cfg.workers = workers == 0 ? 1 : workers;
      if (threshold > 0.0) cfg.threshold = threshold;
      if (!v_deltas.empty()) {
        for (const auto& item : split_list(v_deltas)) cfg.deltas.push_back(Rational::parse(item));
      }
      Report report = v_suite == "gauss" ? verify_gauss(cfg)
                      : v_suite == "pv"  ? verify_pv(cfg)
                                         : verify_fejer(cfg);
      sink.emit(report);
      out << "verify " << v_suite << ": PASS\n";
      return 0;
    }
    if (*cmd_sweep) {
      SweepConfig cfg = parse_config_file(s_config);
      if (workers != 0) cfg.workers = workers;
      if (threshold > 0.0) cfg.threshold = threshold;
      if (cfg.theorems.empty()) {
        err << "usage error: config selects no theorems\n";
        return 2;
      }
      bool soft_fail = false;
      auto has = [&](const char* t) {
        return std::find(cfg.theorems.begin(), cfg.theorems.end(), t) != cfg.theorems.end();
      };
      std::vector<Report> reports;
      if (has("1")) reports.push_back(sweep_theorem1(cfg));
      if (has("2")) reports.push_back(sweep_theorem2(cfg));
      if (has("3") || has("4")) reports.push_back(sweep_theorem3(cfg));
      if (has("korolev") || has("gauss_closed")) reports.push_back(verify_gauss(cfg));
      if (has("pv")) reports.push_back(verify_pv(cfg));
      if (has("fejer")) reports.push_back(verify_fejer(cfg));
      for (const auto& report : reports) {
        sink.emit(report);
        bool theorem_op = report.operation.starts_with("theorem");
        if (theorem_op && report.summary.max_ratio > cfg.threshold) {
          err << "soft threshold exceeded in " << report.operation << ": "
              << fmt_double(report.summary.max_ratio) << " > " << fmt_double(cfg.threshold)
              << "\n";
          soft_fail = true;
        }
      }
      return soft_fail ? 1 : 0;
    }
    if (*cmd_report) {
      std::ifstream in(rp_in);
      if (!in) {
        err << "usage error: cannot open " << rp_in << "\n";
        return 2;
      }
      std::stringstream ss;
      ss << in.rdbuf();
      Report report = parse_report(ss.str(), "");
      out << summary_text(report);
      return 0;
    }
  } catch (const VerificationError& e) {
    err << "FAIL: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run_cli(int argc, const char* const* argv) { return run_cli(argc, argv, std::cout, std::cerr); }

}  // namespace parab::harness
