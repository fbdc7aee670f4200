#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "parab/harness.hpp"

using namespace parab;
using namespace parab::harness;

namespace {

SweepConfig small_config() {
  SweepConfig cfg;
  cfg.a_start = 3;
  cfg.a_end = 120;
  cfg.deltas = {Rational(0), Rational(1, 10)};
  cfg.theorems = {"1", "3"};
  cfg.seed = 7;
  cfg.workers = 4;
  return cfg;
}

int cli(std::initializer_list<const char*> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::vector<const char*> argv{"parab"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

}  // namespace

TEST_SUITE_BEGIN("harness");

TEST_CASE("config parsing accepts the documented keys") {
  auto cfg = parse_config_text(
      "# comment\n"
      "a_start = 5\n"
      "a_end = 50\n"
      "a_step = 3\n"
      "a_filter = primes\n"
      "b_rule = multiple:4\n"
      "delta = 0, 1/10, 0.25\n"
      "theorems = 2, pv\n"
      "seed = 99\n"
      "workers = 2\n");
  CHECK(cfg.a_start == 5);
  CHECK(cfg.a_end == 50);
  CHECK(cfg.a_step == 3);
  CHECK(cfg.a_filter == AFilter::primes);
  CHECK(cfg.b_rule == BRule::multiple);
  CHECK(cfg.b_value == 4);
  REQUIRE(cfg.deltas.size() == 3);
  CHECK(cfg.deltas[2] == Rational(1, 4));
  CHECK(cfg.theorems == std::vector<std::string>{"2", "pv"});
  CHECK(cfg.seed == 99);
  CHECK(cfg.workers == 2);
}

TEST_CASE("config parsing rejects unknown keys and bad values") {
  CHECK_THROWS_AS(parse_config_text("a_start = 1\nnot_a_key = 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("delta = 1/2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("a_start = 10\na_end = 5\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("theorems = 7\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("b_rule = sometimes\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("a_step = 0\n"), std::invalid_argument);
}

TEST_CASE("sweeps are deterministic under workers, byte for byte") {
  auto cfg = small_config();
  auto r1 = sweep_theorem1(cfg);
  auto r2 = sweep_theorem1(cfg);
  CHECK(to_csv(r1) == to_csv(r2));
  auto t3a = sweep_theorem3(cfg);
  auto t3b = sweep_theorem3(cfg);
  CHECK(to_csv(t3a) == to_csv(t3b));
  cfg.workers = 1;
  auto serial = sweep_theorem1(cfg);
  CHECK(to_csv(serial) == to_csv(r1));  // worker count cannot change rows
}

TEST_CASE("summary is recomputable from rows") {
  auto report = sweep_theorem2(small_config());
  CHECK(report.summary.record_count == report.rows.size());
  double max_ratio = 0.0;
  std::uint64_t argmax_a = 0;
  for (const auto& row : report.rows) {
    CHECK(row.method_agreement);
    CHECK(row.envelope > 0.0);
    CHECK(row.ratio == doctest::Approx(std::abs(row.measured.to_double()) / row.envelope));
    if (row.ratio > max_ratio) {
      max_ratio = row.ratio;
      argmax_a = row.a;
    }
  }
  CHECK(report.summary.max_ratio == max_ratio);
  CHECK(report.summary.argmax_a == argmax_a);
}

TEST_CASE("rows follow the canonical (a, b, delta) order") {
  auto report = sweep_theorem3(small_config());
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const auto& p = report.rows[i - 1];
    const auto& c = report.rows[i];
    bool ordered = p.a < c.a || (p.a == c.a && *p.delta < *c.delta);
    REQUIRE(ordered);
  }
}

TEST_CASE("theorem sweeps agree with spot values") {
  SweepConfig cfg;
  cfg.a_start = 5;
  cfg.a_end = 5;
  cfg.deltas = {Rational(1, 10)};
  cfg.theorems = {"1", "2"};
  auto t1 = sweep_theorem1(cfg);
  REQUIRE(t1.rows.size() == 1);
  CHECK(t1.rows[0].measured == Rational(1, 2));  // frac_discrepancy(5, 5)
  auto t2 = sweep_theorem2(cfg);
  REQUIRE(t2.rows.size() == 1);
  CHECK(t2.rows[0].measured == Rational(0));  // A(5,5,1/10) - 2*(1/10)*5 = 1 - 1

  SweepConfig c3;
  c3.a_start = 4;
  c3.a_end = 4;
  c3.deltas = {Rational(0)};
  auto t3 = sweep_theorem3(c3);
  REQUIRE(t3.rows.size() == 1);
  CHECK(t3.rows[0].measured == Rational(2));
  CHECK(t3.rows[0].envelope == doctest::Approx(3.0));
  CHECK(t3.rows[0].ratio == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("csv serialization round-trips byte for byte") {
  auto report = sweep_theorem3(small_config());
  std::string csv = to_csv(report);
  std::string structured = to_structured(report);
  CHECK(csv.starts_with(
      "a,b,delta_num,delta_den,measured_num,measured_den,envelope,ratio,method,agreement\n"));
  Report parsed = parse_report(structured, csv);
  CHECK(to_csv(parsed) == csv);
  CHECK(to_structured(parsed) == structured);
  CHECK(parsed.operation == report.operation);
  CHECK(parsed.rows.size() == report.rows.size());
  CHECK(parsed.summary.runtime_seconds == report.summary.runtime_seconds);
}

TEST_CASE("delta-free rows use the 0/0 marker and parse back to nullopt") {
  auto report = sweep_theorem1(small_config());
  std::string csv = to_csv(report);
  auto second_line = csv.substr(csv.find('\n') + 1, csv.find('\n', csv.find('\n') + 1));
  CHECK(second_line.find(",0,0,") != std::string::npos);
  Report parsed = parse_report(to_structured(report), csv);
  REQUIRE(!parsed.rows.empty());
  CHECK(!parsed.rows[0].delta.has_value());
}

TEST_CASE("verification suites run green on small grids") {
  SweepConfig cfg;
  cfg.a_start = 1;
  cfg.a_end = 60;
  cfg.workers = 2;
  auto gauss = verify_gauss(cfg);
  CHECK(gauss.operation == "gauss");
  CHECK(gauss.rows.size() == 60);
  CHECK(gauss.summary.max_ratio < 1.0);

  auto pv = verify_pv(cfg);
  CHECK(pv.summary.max_ratio <= 1.0);
  bool saw_pv_extra = false;
  for (const auto& [k, v] : pv.summary.extras) saw_pv_extra |= k == "pv_max_ratio";
  CHECK(saw_pv_extra);

  SweepConfig fj;
  fj.deltas = {Rational(1, 4), Rational(49, 100)};
  auto fejer = verify_fejer(fj);
  CHECK(fejer.rows.size() == 2);
  CHECK(fejer.rows[1].a == 1);  // H = floor(1/(2*0.49)) = 1
  for (const auto& row : fejer.rows) CHECK(row.ratio >= 1.0);
}

TEST_CASE("korolev strict bound holds out to a = 3000") {
  SweepConfig cfg;
  cfg.a_start = 1501;  // the acceptance suite covers [1, 1500]
  cfg.a_end = 3000;
  cfg.theorems = {"korolev"};
  cfg.workers = 2;
  auto report = verify_gauss(cfg);  // throws on any |S| >= 3.9071 sqrt(a)
  CHECK(report.summary.max_ratio < 1.0);
}

TEST_CASE("cli: point queries print bare values") {
  std::string out;
  CHECK(cli({"count-under", "2", "3"}, &out) == 0);
  CHECK(out == "6\n");
  CHECK(cli({"count-under", "--brute", "5", "12"}, &out) == 0);
  CHECK(out == "125\n");
  CHECK(cli({"count-near", "4", "4", "0"}, &out) == 0);
  CHECK(out == "2\n");
  CHECK(cli({"count-near", "5", "5", "0.1"}, &out) == 0);
  CHECK(out == "1\n");
  CHECK(cli({"roots", "1", "8"}, &out) == 0);
  CHECK(out == "1 3 5 7\n");
  CHECK(cli({"gauss", "1", "4"}, &out) == 0);
  CHECK(out.find("closed: (1+i)*sqrt(4) = 2+2i") != std::string::npos);
  CHECK(out.find("brute:  2+2i") != std::string::npos);
}

TEST_CASE("cli: usage and abort exit codes") {
  std::string out, err;
  CHECK(cli({"count-under", "2"}, &out, &err) == 2);           // missing positional
  CHECK(cli({"count-near", "4", "4", "1/2"}, &out, &err) == 2);  // delta out of range
  CHECK(cli({"nonsense"}, &out, &err) == 2);
  CHECK(cli({"count-near", "--brute", "--fast", "4", "4", "0"}, &out, &err) == 2);
  CHECK(cli({"verify", "--suite", "bogus"}, &out, &err) == 2);
}

TEST_CASE("cli: sweep writes byte-identical files across runs") {
  std::string dir = "cli_sweep_test";
  std::string cfg_path = dir + ".cfg";
  {
    std::ofstream f(cfg_path);
    f << "a_start = 3\na_end = 60\ndelta = 0,1/10\ntheorems = 1,3\nseed = 11\nworkers = 3\n";
  }
  std::string out, err;
  std::string out_x = dir + "_x", out_y = dir + "_y";
  REQUIRE(cli({"--out", out_x.c_str(), "sweep", "--config", cfg_path.c_str()}, &out, &err) == 0);
  REQUIRE(cli({"--out", out_y.c_str(), "sweep", "--config", cfg_path.c_str()}, &out, &err) == 0);
  for (const char* op : {"theorem1", "theorem3"}) {
    std::ifstream fx(dir + "_x_" + op + ".csv"), fy(dir + "_y_" + op + ".csv");
    REQUIRE(fx.good());
    REQUIRE(fy.good());
    std::stringstream sx, sy;
    sx << fx.rdbuf();
    sy << fy.rdbuf();
    CHECK(sx.str() == sy.str());
    CHECK(!sx.str().empty());
  }
  // summary reprint from the stored report
  std::string report_path = dir + "_x_theorem1.report";
  CHECK(cli({"report", "--in", report_path.c_str(), "--summary"}, &out, &err) == 0);
  CHECK(out.find("operation: theorem1") != std::string::npos);
  for (const char* op : {"theorem1", "theorem3"}) {
    for (const char* base : {"_x_", "_y_"}) {
      std::remove((dir + base + op + ".csv").c_str());
      std::remove((dir + base + op + ".report").c_str());
    }
  }
  std::remove(cfg_path.c_str());
}

TEST_CASE("cli: verify suite emits a report file") {
  std::string out, err;
  REQUIRE(cli({"--workers", "2", "--out", "cli_verify_test", "verify", "--suite", "fejer"}, &out,
              &err) == 0);
  CHECK(out.find("verify fejer: PASS") != std::string::npos);
  std::ifstream f("cli_verify_test_fejer.report");
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  Report parsed = parse_report(ss.str(), "");
  CHECK(parsed.operation == "fejer");
  std::remove("cli_verify_test_fejer.csv");
  std::remove("cli_verify_test_fejer.report");
}

TEST_SUITE_END();
