#include "parab/expsums.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "parab/arith.hpp"

namespace parab::expsums {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

u64 reduce_mod(i64 v, u64 m) {
  i64 r = v % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  return static_cast<u64>(r);
}

Unit4 unit_mul(Unit4 x, Unit4 y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

Unit4 unit_scale(Unit4 x, int s) { return {x.re * s, x.im * s}; }

}  // namespace

std::complex<double> e_frac(i64 numerator, u64 denominator) {
  if (denominator == 0) throw std::invalid_argument("e_frac: zero denominator");
  u64 k = reduce_mod(numerator, denominator);
  double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) / static_cast<double>(denominator));
  return {std::cos(angle), std::sin(angle)};
}

std::complex<double> incomplete_gauss(const kernels::UnitTable& table, i64 h, u64 b) {
  return kernels::gauss_sum(table, reduce_mod(h, table.modulus), b);
}

std::complex<double> incomplete_gauss(i64 h, u64 a, u64 b) {
  if (a == 0) throw std::invalid_argument("incomplete_gauss: a must be positive");
  if (a <= kernels::kUnitTableCap) {
    kernels::UnitTable table(a);
    return incomplete_gauss(table, h, b);
  }
  // above the table cap: direct per-term evaluation on the same index walk
  u64 hm = reduce_mod(h, a);
  u64 idx = static_cast<u64>(static_cast<u128>(hm) * (static_cast<u128>(1 % a) * (1 % a) % a) % a);
  u64 ginc = static_cast<u64>(static_cast<u128>(hm) * (3 % a) % a);
  u64 step = static_cast<u64>((2 * static_cast<u128>(hm)) % a);
  double re = 0.0, im = 0.0;
  for (u64 x = 1; x <= b; ++x) {
    double angle = 2.0 * std::numbers::pi * (static_cast<double>(idx) / static_cast<double>(a));
    re += std::cos(angle);
    im += std::sin(angle);
    idx += ginc;
    if (idx >= a) idx -= a;
    ginc += step;
    if (ginc >= a) ginc -= a;
  }
  return {re, im};
}

std::complex<double> complete_gauss_brute(const kernels::UnitTable& table, i64 h) {
  return incomplete_gauss(table, h, table.modulus);
}

std::complex<double> complete_gauss_brute(i64 h, u64 a) { return incomplete_gauss(h, a, a); }

std::complex<double> AlgebraicGaussValue::to_complex() const {
  double scale = static_cast<double>(multiplier) * std::sqrt(static_cast<double>(radicand));
  return {unit_re * scale, unit_im * scale};
}

std::string AlgebraicGaussValue::to_string() const {
  if (is_zero()) return "0";
  auto unit_str = [&]() -> std::string {
    if (unit_im == 0) return unit_re == 1 ? "1" : "-1";
    if (unit_re == 0) return unit_im == 1 ? "i" : "-i";
    std::string s = unit_re == 1 ? "(1" : "(-1";
    s += unit_im == 1 ? "+i)" : "-i)";
    return s;
  };
  std::string out;
  if (multiplier != 1) out = std::to_string(multiplier);
  std::string u = unit_str();
  if (u != "1") {
    if (!out.empty()) out += "*";
    out += u;
  }
  if (radicand != 1) {
    if (!out.empty()) out += "*";
    out += "sqrt(" + std::to_string(radicand) + ")";
  }
  return out.empty() ? "1" : out;
}

AlgebraicGaussValue complete_gauss_closed(i64 h, u64 a) {
  if (a == 0) throw std::invalid_argument("complete_gauss_closed: a must be positive");
  u64 hm = reduce_mod(h, a);
  if (hm == 0) {
    // S(0, a) = a; rendered with d = a, a' = 1
    return {a, 1, 1, 0};
  }
  u64 d = arith::gcd(hm, a);
  u64 h1 = hm / d;
  u64 a1 = a / d;

  if (a1 % 4 == 2) {
    return {d, a1, 0, 0};
  }
  if (a1 % 2 == 1) {
    int j = arith::jacobi(static_cast<i64>(h1), a1);
    Unit4 u = unit_scale(epsilon(a1), j);
    return {d, a1, u.re, u.im};
  }
  // 4 | a1, and h1 is odd because gcd(h1, a1) = 1
  int j = arith::jacobi(static_cast<i64>(a1 % h1), h1);
  Unit4 u = unit_scale(unit_mul({1, 1}, epsilon_inv(h1)), j);
  return {d, a1, u.re, u.im};
}

Unit4 epsilon(u64 m) {
  if (m % 2 == 0) throw std::invalid_argument("epsilon: m must be odd");
  return m % 4 == 1 ? Unit4{1, 0} : Unit4{0, 1};
}

Unit4 epsilon_inv(u64 m) {
  if (m % 2 == 0) throw std::invalid_argument("epsilon_inv: m must be odd");
  return m % 4 == 1 ? Unit4{1, 0} : Unit4{0, -1};
}

int chi0_mod4(i64 n) { return n % 2 == 0 ? 0 : 1; }

int chi1_mod4(i64 n) {
  switch (reduce_mod(n, 4)) {
    case 1:
      return 1;
    case 3:
      return -1;
    default:
      return 0;
  }
}

bool epsilon_inv_decomposition_check(u64 m) {
  Unit4 lhs = epsilon_inv(m);
  // 2 * ((1-i)/2 chi0 + (1+i)/2 chi1) = (chi0 + chi1) + i (chi1 - chi0)
  int c0 = chi0_mod4(static_cast<i64>(m % 4));
  int c1 = chi1_mod4(static_cast<i64>(m % 4));
  return 2 * lhs.re == c0 + c1 && 2 * lhs.im == c1 - c0;
}

CharacterSpec CharacterSpec::jacobi_top(u64 a1) {
  if (a1 == 0 || a1 % 2 == 0) {
    throw std::invalid_argument("CharacterSpec::jacobi_top: a1 must be odd");
  }
  return {CharKind::jacobi_top, a1, a1};
}

CharacterSpec CharacterSpec::bottom_chi0(u64 a1) {
  if (a1 == 0 || a1 % 2 == 1) {
    throw std::invalid_argument("CharacterSpec::bottom_chi0: a1 must be even");
  }
  return {CharKind::bottom_chi0, a1, 4 * a1};
}

CharacterSpec CharacterSpec::bottom_chi1(u64 a1) {
  if (a1 == 0 || a1 % 2 == 1) {
    throw std::invalid_argument("CharacterSpec::bottom_chi1: a1 must be even");
  }
  return {CharKind::bottom_chi1, a1, 4 * a1};
}

int chi_eval(const CharacterSpec& spec, i64 n) {
  switch (spec.kind) {
    case CharKind::jacobi_top:
      return arith::jacobi(n, spec.a1);  // jacobi itself rejects even a1
    case CharKind::bottom_chi0:
    case CharKind::bottom_chi1: {
      if (spec.a1 % 2 == 1) {
        throw std::invalid_argument("chi_eval: even-case kinds require even a1");
      }
      // (a1 | n) as a function of odd n is periodic mod 4*a1; even n is
      // annihilated by the mod-4 factor
      u64 m = reduce_mod(n, spec.modulus_bound);
      if (m % 2 == 0) return 0;
      int bottom = arith::jacobi(static_cast<i64>(spec.a1 % m), m);
      if (spec.kind == CharKind::bottom_chi0) return bottom;
      return chi1_mod4(static_cast<i64>(m)) * bottom;
    }
  }
  throw std::logic_error("chi_eval: bad kind");
}

bool is_principal(const CharacterSpec& spec) {
  for (u64 n = 1; n <= spec.modulus_bound; ++n) {
    if (chi_eval(spec, static_cast<i64>(n)) == -1) return false;
  }
  return true;
}

i64 char_partial_sum(const CharacterSpec& spec, u64 M, u64 N) {
  if (N == 0) throw std::invalid_argument("char_partial_sum: N must be positive");
  i64 total = 0;
  for (u64 n = M + 1; n <= M + N; ++n) total += chi_eval(spec, static_cast<i64>(n));
  return total;
}

std::complex<double> gauss_partial_sum(u64 N, u64 a1) {
  if (N == 0 || a1 == 0) throw std::invalid_argument("gauss_partial_sum: N, a1 must be positive");
  std::complex<double> total = 0.0;
  for (u64 h1 = 1; h1 <= N; ++h1) {
    if (std::gcd(h1, a1) != 1) continue;
    total += complete_gauss_closed(static_cast<i64>(h1), a1).to_complex();
  }
  return total;
}

}  // namespace parab::expsums
