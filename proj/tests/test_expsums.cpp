#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "parab/arith.hpp"
#include "parab/expsums.hpp"
#include "parab/prng.hpp"

using namespace parab;
using namespace parab::expsums;
using std::complex;
using u64 = std::uint64_t;
using i64 = std::int64_t;

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TEST_SUITE_BEGIN("expsums");

TEST_CASE("e_frac quarter turns") {
  CHECK(std::abs(e_frac(0, 5) - complex<double>(1, 0)) < 1e-15);
  CHECK(std::abs(e_frac(1, 2) - complex<double>(-1, 0)) < 1e-15);
  CHECK(std::abs(e_frac(1, 4) - complex<double>(0, 1)) < 1e-15);
  CHECK(std::abs(e_frac(-1, 4) - complex<double>(0, -1)) < 1e-15);
  CHECK(std::abs(e_frac(9, 4) - e_frac(1, 4)) < 1e-15);
  CHECK_THROWS_AS(e_frac(1, 0), std::invalid_argument);
}

TEST_CASE("incomplete Gauss sums, hand values") {
  CHECK(std::abs(incomplete_gauss(0, 7, 5) - complex<double>(5, 0)) < 1e-12);
  CHECK(std::abs(incomplete_gauss(1, 4, 4) - complex<double>(2, 2)) < 1e-12);
  CHECK(std::abs(incomplete_gauss(1, 2, 2) - complex<double>(0, 0)) < 1e-12);
}

TEST_CASE("complete Gauss sums, hand values") {
  CHECK(std::abs(complete_gauss_brute(1, 1) - complex<double>(1, 0)) < 1e-12);
  CHECK(std::abs(complete_gauss_brute(1, 3) - complex<double>(0, kSqrt3)) < 1e-12);
  CHECK(std::abs(complete_gauss_brute(2, 4)) < 1e-12);
}

TEST_CASE("closed form cases") {
  auto v13 = complete_gauss_closed(1, 3);
  CHECK(v13.multiplier == 1);
  CHECK(v13.radicand == 3);
  CHECK(v13.unit_re == 0);
  CHECK(v13.unit_im == 1);
  CHECK(v13.to_string() == "i*sqrt(3)");

  auto v14 = complete_gauss_closed(1, 4);
  CHECK(v14.multiplier == 1);
  CHECK(v14.radicand == 4);
  CHECK(v14.unit_re == 1);
  CHECK(v14.unit_im == 1);
  CHECK(v14.to_string() == "(1+i)*sqrt(4)");

  auto v12 = complete_gauss_closed(1, 2);
  CHECK(v12.multiplier == 1);
  CHECK(v12.radicand == 2);
  CHECK(v12.is_zero());
  CHECK(v12.to_string() == "0");

  auto v05 = complete_gauss_closed(0, 5);
  CHECK(v05.multiplier == 5);
  CHECK(v05.radicand == 1);
  CHECK(v05.unit_re == 1);
  CHECK(std::abs(v05.to_complex() - complex<double>(5, 0)) < 1e-15);

  auto v24 = complete_gauss_closed(2, 4);  // reduces to 2*S(1,2) = 0
  CHECK(v24.multiplier == 2);
  CHECK(v24.radicand == 2);
  CHECK(v24.is_zero());
}

TEST_CASE("closed form matches brute force for all a <= 300") {
  for (u64 a = 1; a <= 300; ++a) {
    kernels::UnitTable table(a);
    double tol = 1e-6 * (1.0 + std::sqrt(static_cast<double>(a)));
    for (u64 h = 0; h < a; ++h) {
      auto closed = complete_gauss_closed(static_cast<i64>(h), a).to_complex();
      auto brute = complete_gauss_brute(table, static_cast<i64>(h));
      CAPTURE(a);
      CAPTURE(h);
      REQUIRE(std::abs(closed - brute) < tol);
    }
  }
}

TEST_CASE("gcd reduction identity for the brute sums, a <= 500") {
  for (u64 a = 1; a <= 500; ++a) {
    kernels::UnitTable table(a);
    double tol = 1e-6 * (1.0 + std::sqrt(static_cast<double>(a)));
    for (u64 h = 1; h < a; ++h) {
      u64 g = std::gcd(h, a);
      if (g == 1) continue;
      auto lhs = complete_gauss_brute(table, static_cast<i64>(h));
      auto rhs = static_cast<double>(g) * complete_gauss_brute(static_cast<i64>(h / g), a / g);
      CAPTURE(a);
      CAPTURE(h);
      REQUIRE(std::abs(lhs - rhs) < tol);
    }
  }
}

TEST_CASE("negative h reduces mod a") {
  CHECK(std::abs(complete_gauss_brute(-1, 5) - complete_gauss_brute(4, 5)) < 1e-12);
  auto c1 = complete_gauss_closed(-1, 5);
  auto c2 = complete_gauss_closed(4, 5);
  CHECK(c1.multiplier == c2.multiplier);
  CHECK(c1.unit_re == c2.unit_re);
  CHECK(c1.unit_im == c2.unit_im);
}

TEST_CASE("epsilon units") {
  CHECK(epsilon(1) == Unit4{1, 0});
  CHECK(epsilon(3) == Unit4{0, 1});
  CHECK(epsilon(5) == Unit4{1, 0});
  CHECK(epsilon_inv(3) == Unit4{0, -1});
  CHECK_THROWS_AS(epsilon(4), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_inv(0), std::invalid_argument);
}

TEST_CASE("epsilon inverse decomposition holds for all odd m <= 10^4") {
  CHECK(epsilon_inv_decomposition_check(1));
  CHECK(epsilon_inv_decomposition_check(3));
  CHECK(epsilon_inv_decomposition_check(7));
  for (u64 m = 1; m <= 10000; m += 2) REQUIRE(epsilon_inv_decomposition_check(m));
  CHECK_THROWS_AS(epsilon_inv_decomposition_check(2), std::invalid_argument);
}

TEST_CASE("character construction validates parity") {
  CHECK_THROWS_AS(CharacterSpec::jacobi_top(4), std::invalid_argument);
  CHECK_THROWS_AS(CharacterSpec::bottom_chi0(3), std::invalid_argument);
  CHECK_THROWS_AS(CharacterSpec::bottom_chi1(3), std::invalid_argument);
  CHECK(CharacterSpec::jacobi_top(3).modulus_bound == 3);
  CHECK(CharacterSpec::bottom_chi0(6).modulus_bound == 24);
}

TEST_CASE("chi_eval examples") {
  auto top3 = CharacterSpec::jacobi_top(3);
  CHECK(chi_eval(top3, 1) == 1);
  CHECK(chi_eval(top3, 2) == -1);
  CHECK(chi_eval(top3, 3) == 0);
  auto bc1 = CharacterSpec::bottom_chi1(2);
  CHECK(chi_eval(bc1, 4) == 0);
  CHECK(chi_eval(bc1, 1) == 1);
  // parity mismatch on a hand-built spec is an error
  CharacterSpec bad{CharKind::bottom_chi0, 3, 12};
  CHECK_THROWS_AS(chi_eval(bad, 1), std::invalid_argument);
  CharacterSpec bad_top{CharKind::jacobi_top, 4, 4};
  CHECK_THROWS_AS(chi_eval(bad_top, 1), std::invalid_argument);
}

TEST_CASE("characters are periodic and completely multiplicative") {
  SplitMix64 g(5);
  std::vector<CharacterSpec> specs{CharacterSpec::jacobi_top(15), CharacterSpec::jacobi_top(21),
                                   CharacterSpec::bottom_chi0(6), CharacterSpec::bottom_chi1(6),
                                   CharacterSpec::bottom_chi0(12), CharacterSpec::bottom_chi1(10)};
  for (const auto& spec : specs) {
    i64 period = static_cast<i64>(spec.modulus_bound);
    for (int i = 0; i < 200; ++i) {
      i64 n = static_cast<i64>(g.below(10000)) - 5000;
      i64 m = static_cast<i64>(g.below(1000));
      CHECK(chi_eval(spec, n) == chi_eval(spec, n + period));
      CHECK(chi_eval(spec, n * m) == chi_eval(spec, n) * chi_eval(spec, m));
    }
  }
}

TEST_CASE("principality detection") {
  CHECK(is_principal(CharacterSpec::jacobi_top(1)));
  CHECK(is_principal(CharacterSpec::jacobi_top(9)));    // (n|9) = (n|3)^2
  CHECK(!is_principal(CharacterSpec::jacobi_top(3)));
  CHECK(is_principal(CharacterSpec::bottom_chi0(4)));   // (4|n) = 1 on odd n
  CHECK(!is_principal(CharacterSpec::bottom_chi1(4)));  // reduces to chi1
  CHECK(!is_principal(CharacterSpec::bottom_chi0(2)));
}

TEST_CASE("char_partial_sum examples") {
  auto top3 = CharacterSpec::jacobi_top(3);
  CHECK(char_partial_sum(top3, 0, 3) == 0);
  CHECK(char_partial_sum(top3, 0, 1) == 1);
  CHECK(char_partial_sum(CharacterSpec::jacobi_top(5), 0, 2) == 0);
  CHECK(char_partial_sum(top3, 4, 2) == -1);  // chi(5) + chi(6) = -1 + 0
  CHECK_THROWS_AS(char_partial_sum(top3, 0, 0), std::invalid_argument);
}

TEST_CASE("full-period character sums vanish for non-principal specs") {
  for (u64 a1 = 2; a1 <= 60; ++a1) {
    std::vector<CharacterSpec> specs;
    if (a1 % 2 == 1) {
      specs.push_back(CharacterSpec::jacobi_top(a1));
    } else {
      specs.push_back(CharacterSpec::bottom_chi0(a1));
      specs.push_back(CharacterSpec::bottom_chi1(a1));
    }
    for (const auto& spec : specs) {
      if (is_principal(spec)) continue;
      CHECK(char_partial_sum(spec, 0, spec.modulus_bound) == 0);
    }
  }
}

TEST_CASE("gauss_partial_sum examples") {
  CHECK(std::abs(gauss_partial_sum(1, 1) - complex<double>(1, 0)) < 1e-12);
  CHECK(std::abs(gauss_partial_sum(2, 3)) < 1e-12);  // (2|3) = -1 flips the unit
  CHECK(std::abs(gauss_partial_sum(1, 4) - complex<double>(2, 2)) < 1e-12);
}

TEST_CASE("partial-sum dichotomy: N sqrt(a1) for squares, a1 log a1 otherwise") {
  // empirical constants; spot-checked against gauss_partial_sum below
  const double cap = 5.0;
  for (u64 a1 = 1; a1 <= 400; ++a1) {
    bool square = arith::is_square(a1);
    complex<double> running = 0.0;
    SplitMix64 g(mix_seed(31, a1));
    for (u64 n = 1; n <= 3 * a1; ++n) {
      if (std::gcd(n, a1) == 1) {
        running += complete_gauss_closed(static_cast<i64>(n), a1).to_complex();
      }
      double bound = square
                         ? cap * static_cast<double>(n) * std::sqrt(static_cast<double>(a1))
                         : cap * static_cast<double>(a1) * std::log(static_cast<double>(a1));
      CAPTURE(a1);
      CAPTURE(n);
      REQUIRE(std::abs(running) <= bound);
      if (g.below(3 * a1) == 0) {
        CHECK(std::abs(running - gauss_partial_sum(n, a1)) < 1e-9 * (1.0 + std::abs(running)));
      }
    }
  }
}

TEST_SUITE_END();
