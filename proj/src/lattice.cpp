#include "parab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "parab/kernels.hpp"

namespace parab::lattice {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

u64 narrow_u64(u128 v, const char* what) {
  if (v > std::numeric_limits<u64>::max()) {
    throw std::overflow_error(std::string(what) + ": result exceeds 64 bits");
  }
  return static_cast<u64>(v);
}

void check_ab(u64 a, u64 b, const char* what) {
  if (a == 0 || b == 0) {
    throw std::invalid_argument(std::string(what) + ": a and b must be positive");
  }
}

// b(b+1)(2b+1)/6, the exact sum of squares up to b
u128 square_pyramid(u64 b) {
  u128 t = static_cast<u128>(b) * (b + 1) / 2;
  return t * (2 * static_cast<u128>(b) + 1) / 3;
}

// R(a, b) = sum over x in [1, b] of x^2 mod a, folded over the period
u128 residue_sum_folded(u64 a, u64 b) {
  if (b < a) return kernels::residue_sum(a, 1, b);
  if (a <= kPeriodTableCap) {
    PeriodTable table(a);
    return table.residue_sum(b);
  }
  u128 period_total = kernels::residue_sum(a, 1, a);
  return (b / a) * period_total + kernels::residue_sum(a, 1, b % a);
}

// x^2 = j (mod p^k) for an odd prime p; q = p^k, 0 <= j < q
std::vector<u64> roots_odd_prime_power(u64 p, unsigned k, u64 j);
std::vector<u64> roots_two_power(unsigned k, u64 j);

u64 pow_u64(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

// Tonelli-Shanks square root of u mod odd prime p; requires (u|p) = 1
u64 sqrt_mod_prime(u64 u, u64 p) {
  using arith::mulmod;
  using arith::powmod;
  u %= p;
  if (p % 4 == 3) return powmod(u, (p + 1) / 4, p);
  u64 q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (arith::jacobi(static_cast<i64>(z), p) != -1) ++z;
  u64 m = s;
  u64 c = powmod(z, q, p);
  u64 t = powmod(u, q, p);
  u64 r = powmod(u, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    u64 bexp = m - i - 1;
    u64 bb = c;
    for (u64 e = 0; e < bexp; ++e) bb = mulmod(bb, bb, p);
    m = i;
    c = mulmod(bb, bb, p);
    t = mulmod(t, c, p);
    r = mulmod(r, bb, p);
  }
  return r;
}

std::vector<u64> roots_odd_prime_power(u64 p, unsigned k, u64 j) {
  if (j == 0) {
    // x must vanish to order ceil(k/2)
    u64 step = pow_u64(p, (k + 1) / 2);
    u64 count = pow_u64(p, k / 2);
    std::vector<u64> out;
    out.reserve(count);
    for (u64 t = 0; t < count; ++t) out.push_back(t * step);
    return out;
  }
  unsigned v = 0;
  u64 u = j;
  while (u % p == 0) {
    u /= p;
    ++v;
  }
  if (v % 2 == 1) return {};
  unsigned m = k - v;
  u64 pm = pow_u64(p, m);

  if (arith::jacobi(static_cast<i64>(u % p), p) != 1) return {};
  u64 y = sqrt_mod_prime(u, p);
  // Hensel: lift y through p^2, ..., p^m one power at a time
  u64 cur = p;
  for (unsigned i = 1; i < m; ++i) {
    u64 next = cur * p;
    u64 y2 = arith::mulmod(y, y, next);
    u64 diff = (u % next + next - y2) % next;  // u - y^2 mod p^{i+1}
    u64 d = diff / cur;                        // exact: y^2 = u mod p^i
    u64 c = arith::mulmod(d % p, arith::invmod((2 * (y % p)) % p, p), p);
    y += c * cur;
    cur = next;
  }
  u64 y2 = pm - y % pm;
  std::vector<u64> base{y % pm, y2 % pm};
  if (base[0] == base[1]) base.pop_back();

  u64 half = pow_u64(p, v / 2);
  std::vector<u64> out;
  out.reserve(base.size() * half);
  for (u64 z : base) {
    for (u64 t = 0; t < half; ++t) out.push_back(half * (z + t * pm));
  }
  return out;
}

std::vector<u64> roots_two_power(unsigned k, u64 j) {
  if (j == 0) {
    u64 step = pow_u64(2, (k + 1) / 2);
    u64 count = pow_u64(2, k / 2);
    std::vector<u64> out;
    out.reserve(count);
    for (u64 t = 0; t < count; ++t) out.push_back(t * step);
    return out;
  }
  unsigned v = 0;
  u64 u = j;
  while (u % 2 == 0) {
    u /= 2;
    ++v;
  }
  if (v % 2 == 1) return {};
  unsigned m = k - v;
  u64 pm = u64{1} << m;

  std::vector<u64> base;
  if (m == 1) {
    base = {1};
  } else if (m == 2) {
    if (u % 4 != 1) return {};
    base = {1, 3};
  } else {
    if (u % 8 != 1) return {};
    u64 z = 1;
    for (unsigned i = 3; i < m; ++i) {
      u64 mod_next = u64{1} << (i + 1);
      u64 z2 = (static_cast<u128>(z) * z) % mod_next;
      if (z2 != u % mod_next) z += u64{1} << (i - 1);
    }
    u64 half_pm = pm >> 1;
    base = {z, pm - z, (z + half_pm) % pm, (pm - z + half_pm) % pm};
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
  }

  u64 half = u64{1} << (v / 2);
  std::vector<u64> out;
  out.reserve(base.size() * half);
  for (u64 z : base) {
    for (u64 t = 0; t < half; ++t) out.push_back(half * (z + t * pm));
  }

  return out;
}

u64 crt_pair(u64 x, u64 mx, u64 y, u64 my) {
  // combined residue mod mx*my; moduli coprime
  u64 diff = (y + my - x % my) % my;
  u64 t = arith::mulmod(diff, arith::invmod(mx % my, my), my);
  return x + mx * t;
}

}  // namespace

u64 delta_to_j(const Rational& delta, u64 a) {
  if (a == 0) throw std::invalid_argument("delta_to_j: a must be positive");
  if (delta < Rational(0) || !(delta < Rational(1, 2))) {
    throw std::invalid_argument("delta must lie in [0, 1/2)");
  }
  return static_cast<u64>(delta.floor_mul(a));
}

u64 floor_sum_brute(u64 a, u64 b) {
  check_ab(a, b, "floor_sum_brute");
  u128 total = 0;
  for (u64 x = 1; x <= b; ++x) {
    total += static_cast<u128>(x) * x / a;
  }
  return narrow_u64(total, "floor_sum_brute");
}

u64 floor_sum_fast(u64 a, u64 b) {
  check_ab(a, b, "floor_sum_fast");
  u128 p = square_pyramid(b);
  u128 r = residue_sum_folded(a, b);
  return narrow_u64((p - r) / a, "floor_sum_fast");
}

Rational frac_discrepancy(u64 a, u64 b) {
  check_ab(a, b, "frac_discrepancy");
  u128 r = residue_sum_folded(a, b);
  if (r > static_cast<u128>(std::numeric_limits<i64>::max())) {
    throw std::overflow_error("frac_discrepancy: residue sum exceeds 63 bits");
  }
  if (b > static_cast<u64>(std::numeric_limits<i64>::max()) ||
      a > static_cast<u64>(std::numeric_limits<i64>::max())) {
    throw std::overflow_error("frac_discrepancy: inputs exceed 63 bits");
  }
  return Rational(static_cast<i64>(b), 2) - Rational(static_cast<i64>(r), static_cast<i64>(a));
}

CountResult count_near_brute(const CountQuery& q) {
  check_ab(q.a, q.b, "count_near");
  u64 j = delta_to_j(q.delta, q.a);
  u64 count = kernels::residue_near_count(q.a, j, 1, q.b);
  return {count, CountMethod::brute, j};
}

CountResult count_near_fast(const CountQuery& q) {
  check_ab(q.a, q.b, "count_near");
  u64 j = delta_to_j(q.delta, q.a);
  if (2 * j + 1 >= q.a) {
    return {q.b, CountMethod::fast, j};  // every residue class qualifies
  }
  RootSolver solver(q.a);
  u64 total = 0;
  for (i64 dj = -static_cast<i64>(j); dj <= static_cast<i64>(j); ++dj) {
    for (u64 root : solver.roots(dj)) {
      u64 rep = root == 0 ? q.a : root;  // count x >= 1 in the class
      if (rep <= q.b) total += (q.b - rep) / q.a + 1;
    }
  }
  return {total, CountMethod::fast, j};
}

CountResult count_near(const CountQuery& q) {
  check_ab(q.a, q.b, "count_near");
  u64 j = delta_to_j(q.delta, q.a);
  u64 classes = 2 * j + 1;
  if (classes >= q.a) return count_near_fast(q);
  if (classes > q.b) return count_near_brute(q);
  double log_a = std::log2(static_cast<double>(q.a)) + 1.0;
  double fast_cost =
      static_cast<double>(classes) * static_cast<double>(arith::divisor_count(q.a)) * log_a;
  if (fast_cost < static_cast<double>(q.b)) return count_near_fast(q);
  return count_near_brute(q);
}

RootSolver::RootSolver(u64 a) : RootSolver(arith::factor(a)) {}

RootSolver::RootSolver(const arith::Factorization& f) : modulus_(f.n) {
  for (const auto& pp : f.factors) {
    primes_.push_back(pp.prime);
    exponents_.push_back(pp.exponent);
    prime_powers_.push_back(pow_u64(pp.prime, pp.exponent));
  }
}

std::vector<u64> RootSolver::roots(i64 j) const {
  u64 a = modulus_;
  if (a == 1) return {0};
  i64 jr = j % static_cast<i64>(a);
  if (jr < 0) jr += static_cast<i64>(a);
  u64 jm = static_cast<u64>(jr);

  std::vector<u64> acc{0};
  u64 m_acc = 1;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    u64 q = prime_powers_[i];
    std::vector<u64> part = primes_[i] == 2
                                ? roots_two_power(exponents_[i], jm % q)
                                : roots_odd_prime_power(primes_[i], exponents_[i], jm % q);
    if (part.empty()) return {};
    std::vector<u64> next;
    next.reserve(acc.size() * part.size());
    for (u64 x : acc) {
      for (u64 y : part) next.push_back(crt_pair(x, m_acc, y, q));
    }
    acc = std::move(next);
    m_acc *= q;
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

std::vector<u64> roots_mod(i64 j, u64 a) {
  if (a == 0) throw std::invalid_argument("roots_mod: a must be positive");
  return RootSolver(a).roots(j);
}

std::vector<LatticePoint> on_curve_points(u64 a) {
  auto split = arith::square_split(a);
  std::vector<LatticePoint> pts;
  pts.reserve(split.r);
  for (u64 l = 1; l <= split.r; ++l) {
    pts.push_back({split.r * split.s * l, split.s * l * l});
  }
  return pts;
}

PeriodTable::PeriodTable(u64 a) : a_(a) {
  if (a == 0) throw std::invalid_argument("PeriodTable: a must be positive");
  if (a > kPeriodTableCap) throw std::length_error("PeriodTable: a exceeds the table cap");
  prefix_.resize(a + 1);
  prefix_[0] = 0;
  u64 r = 1 % a;
  u64 inc = 3 % a;
  for (u64 x = 1; x <= a; ++x) {
    prefix_[x] = prefix_[x - 1] + r;
    r += inc;
    if (r >= a) r -= a;
    inc += 2;
    if (inc >= a) inc -= a;
  }
}

u128 PeriodTable::residue_sum(u64 b) const {
  return (static_cast<u128>(b) / a_) * period_total() + prefix(b % a_);
}

}  // namespace parab::lattice
