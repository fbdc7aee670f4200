#pragma once
// Exponential and character sums: incomplete/complete quadratic Gauss sums
// (brute-force complex and exact closed form), the epsilon_m units, and the
// Jacobi-symbol characters with their partial sums.

#include <complex>
#include <cstdint>
#include <string>

#include "parab/kernels.hpp"

namespace parab::expsums {

// e(x) = exp(2*pi*i*x) at x = numerator/denominator, reduced mod 1 first
std::complex<double> e_frac(std::int64_t numerator, std::uint64_t denominator);

// S(h, a, b) = sum over x in [1, b] of e(h x^2 / a)
std::complex<double> incomplete_gauss(std::int64_t h, std::uint64_t a, std::uint64_t b);
std::complex<double> incomplete_gauss(const kernels::UnitTable& table, std::int64_t h,
                                      std::uint64_t b);

// S(h, a) = S(h, a, a)
std::complex<double> complete_gauss_brute(std::int64_t h, std::uint64_t a);
std::complex<double> complete_gauss_brute(const kernels::UnitTable& table, std::int64_t h);

// Exact value multiplier * (unit_re + i*unit_im) * sqrt(radicand).
// The unit is one of 0, +-1, +-i, +-1+-i; it is 0 exactly when the reduced
// modulus is congruent to 2 mod 4.
struct AlgebraicGaussValue {
  std::uint64_t multiplier;  // the gcd factor d = (h, a)
  std::uint64_t radicand;    // reduced modulus a' = a / d
  int unit_re;
  int unit_im;

  std::complex<double> to_complex() const;
  std::string to_string() const;  // e.g. "2*(1+i)*sqrt(5)"
  bool is_zero() const { return unit_re == 0 && unit_im == 0; }
};

// Closed form of the complete sum S(h, a) via gcd reduction and the
// odd / 2 mod 4 / 0 mod 4 case split. h = 0 uses the convention d = a,
// a' = 1, value a.
AlgebraicGaussValue complete_gauss_closed(std::int64_t h, std::uint64_t a);

// Fourth root of unity as an exact integer pair (re, im).
struct Unit4 {
  int re;
  int im;
  bool operator==(const Unit4&) const = default;
};

// epsilon_m = 1 when m = 1 mod 4, i when m = 3 mod 4; m must be odd
Unit4 epsilon(std::uint64_t m);
Unit4 epsilon_inv(std::uint64_t m);

// checks epsilon_m^{-1} = (1-i)/2 * chi0(m) + (1+i)/2 * chi1(m) exactly
bool epsilon_inv_decomposition_check(std::uint64_t m);

// principal / quadratic characters modulo 4
int chi0_mod4(std::int64_t n);
int chi1_mod4(std::int64_t n);

enum class CharKind {
  jacobi_top,    // n -> (n | a1), a1 odd
  bottom_chi0,   // n -> chi0(n) * (a1 | n), a1 even
  bottom_chi1,   // n -> chi1(n) * (a1 | n), a1 even
};

struct CharacterSpec {
  CharKind kind;
  std::uint64_t a1;
  std::uint64_t modulus_bound;  // a1 for jacobi_top, 4*a1 for the even kinds

  static CharacterSpec jacobi_top(std::uint64_t a1);   // throws if a1 even
  static CharacterSpec bottom_chi0(std::uint64_t a1);  // throws if a1 odd
  static CharacterSpec bottom_chi1(std::uint64_t a1);  // throws if a1 odd
};

// character value in {-1, 0, 1}; periodic with period modulus_bound
int chi_eval(const CharacterSpec& spec, std::int64_t n);

// true iff the character is 1 on every residue coprime to its modulus
// (determined by scanning one full period)
bool is_principal(const CharacterSpec& spec);

// sum over M < n <= M + N of chi(n), exact
std::int64_t char_partial_sum(const CharacterSpec& spec, std::uint64_t M, std::uint64_t N);

// sum over h1 <= N with (h1, a1) = 1 of the closed-form S(h1, a1)
std::complex<double> gauss_partial_sum(std::uint64_t N, std::uint64_t a1);

}  // namespace parab::expsums
