#pragma once
// Counting functions for the dilated parabola y = x^2/a: lattice points
// under the curve (floor sums), points near it (A(a,b,delta)), exact
// fractional-part discrepancies, and the residue-based fast counting path
// through modular square roots.

#include <cstdint>
#include <vector>

#include "parab/arith.hpp"
#include "parab/rational.hpp"

namespace parab::lattice {

// delta is an exact rational in [0, 1/2) so J = floor(delta * a) carries no
// rounding ambiguity; the membership test x^2 mod a <= J (or >= a - J) is
// pure integer arithmetic.
struct CountQuery {
  std::uint64_t a;
  std::uint64_t b;
  Rational delta;
};

enum class CountMethod { brute, fast };

struct CountResult {
  std::uint64_t count;
  CountMethod method;
  std::uint64_t j_used;
};

// floor(delta * a); validates a >= 1 and 0 <= delta < 1/2
std::uint64_t delta_to_j(const Rational& delta, std::uint64_t a);

// sum over x in [1, b] of floor(x^2 / a), by direct division
std::uint64_t floor_sum_brute(std::uint64_t a, std::uint64_t b);

// same value via (P(b) - R(a,b)) / a with P(b) = b(b+1)(2b+1)/6 and
// R(a,b) = sum of x^2 mod a, folded over the length-a period
std::uint64_t floor_sum_fast(std::uint64_t a, std::uint64_t b);

// exact value of sum over x in [1, b] of (1/2 - {x^2/a}) = b/2 - R(a,b)/a
Rational frac_discrepancy(std::uint64_t a, std::uint64_t b);

CountResult count_near_brute(const CountQuery& q);
CountResult count_near_fast(const CountQuery& q);
// cost-model dispatch between the two
CountResult count_near(const CountQuery& q);

// Solutions of x^2 = j (mod a), handled per prime power (Tonelli-Shanks plus
// Hensel lifting; direct case split at p = 2) and recombined by CRT.
// Factor a once, then query many j.
class RootSolver {
 public:
  explicit RootSolver(std::uint64_t a);
  explicit RootSolver(const arith::Factorization& f);

  // all x in [0, a) with x^2 = j (mod a); sorted ascending
  std::vector<std::uint64_t> roots(std::int64_t j) const;

  std::uint64_t modulus() const { return modulus_; }

 private:
  std::uint64_t modulus_;
  std::vector<std::uint64_t> prime_powers_;  // p^k per factor
  std::vector<std::uint64_t> primes_;
  std::vector<unsigned> exponents_;
};

std::vector<std::uint64_t> roots_mod(std::int64_t j, std::uint64_t a);

struct LatticePoint {
  std::uint64_t x, y;
  bool operator==(const LatticePoint&) const = default;
};

// the r points (r*s*l, s*l^2), l = 1..r, lying exactly on y = x^2/a
std::vector<LatticePoint> on_curve_points(std::uint64_t a);

// Prefix sums of x^2 mod a over one period, for repeated floor-sum /
// discrepancy queries against a fixed a. Allocation is capped; above the
// cap callers fall back to streaming accumulation (floor_sum_fast does so
// automatically).
inline constexpr std::uint64_t kPeriodTableCap = 100'000'000;  // entries

class PeriodTable {
 public:
  explicit PeriodTable(std::uint64_t a);  // throws std::length_error above cap
  std::uint64_t modulus() const { return a_; }
  unsigned __int128 period_total() const { return prefix_.back(); }
  // sum of x^2 mod a over x in [1, m], m <= a
  unsigned __int128 prefix(std::uint64_t m) const { return prefix_[m]; }
  // R(a, b) for arbitrary b
  unsigned __int128 residue_sum(std::uint64_t b) const;

 private:
  std::uint64_t a_;
  std::vector<std::uint64_t> prefix_;  // sums fit: a <= cap implies total <= a^2 < 2^64
};

}  // namespace parab::lattice
