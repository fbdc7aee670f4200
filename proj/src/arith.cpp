#include "parab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace parab::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

// x + y mod m without overflow (x, y < m)
u64 addmod(u64 x, u64 y, u64 m) {
  u64 s = x + y;
  if (s < x || s >= m) s -= m;
  return s;
}

// f(x) = x^2 + c mod n, the rho iteration map
u64 rho_step(u64 x, u64 c, u64 n) { return addmod(mulmod(x, x, n), c % n, n); }

// Brent's cycle-finding variant; n odd composite, not a prime power issue
// here since callers re-test primality of both halves. Deterministic: the
// start point and increment sequence are fixed.
u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    u64 power = 1, lam = 0, saved_y = 2;
    // batch gcd every 128 steps
    u64 q = 1;
    int batch = 0;
    while (d == 1) {
      if (power == lam) {
        x = y;
        power *= 2;
        lam = 0;
        saved_y = y;
      }
      y = rho_step(y, c, n);
      ++lam;
      u64 diff = x > y ? x - y : y - x;
      if (diff == 0) {
        d = n;  // cycle collapsed; retry with next c
        break;
      }
      q = mulmod(q, diff, n);
      if (++batch == 128 || power == lam) {
        batch = 0;
        d = std::gcd(q, n);
        if (d != 1) {
          if (d != n) return d;
          // backtrack one-by-one from the saved position
          u64 z = saved_y;
          while (true) {
            z = rho_step(z, c, n);
            u64 dd = std::gcd(x > z ? x - z : z - x, n);
            if (dd == n || dd == 0) break;  // this c failed
            if (dd != 1) return dd;
          }
          d = n;
          break;
        }
      }
    }
    // d == n: try the next polynomial constant
  }
}

void factor_recursive(u64 n, std::vector<u64>& primes_out) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes_out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_recursive(d, primes_out);
  factor_recursive(n / d, primes_out);
}

}  // namespace

u64 mulmod(u64 x, u64 y, u64 m) {
  return static_cast<u64>(static_cast<u128>(x) * y % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 invmod(u64 x, u64 m) {
  // extended Euclid on (x mod m, m)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(x % m);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("invmod: arguments not coprime");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<u64>(t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // deterministic Miller-Rabin base set for 64-bit inputs
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1 && witness; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

Factorization factor(u64 n) {
  if (n == 0) throw std::invalid_argument("factor: n must be positive");
  Factorization f;
  f.n = n;
  u64 m = n;
  auto extract = [&](u64 p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
  };
  extract(2);
  extract(3);
  for (u64 d = 5; d <= kTrialLimit && d * d <= m; d += 6) {
    extract(d);
    extract(d + 2);
  }
  if (m > 1) {
    // trial division covered every p <= 10^6, so any cofactor below 10^12
    // is prime
    if (m <= kTrialLimit * kTrialLimit || is_prime(m)) {
      f.factors.push_back({m, 1});
    } else {
      std::vector<u64> primes;
      factor_recursive(m, primes);
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.factors.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
      }
    }
  }
  std::sort(f.factors.begin(), f.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return f;
}

u64 gcd(u64 m, u64 n) {
  if (m == 0 && n == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  return std::gcd(m, n);
}

int jacobi(std::int64_t h, u64 m) {
  if (m == 0 || m % 2 == 0) throw std::invalid_argument("jacobi: modulus must be odd and positive");
  u64 a = static_cast<u64>(((h % static_cast<std::int64_t>(m)) + static_cast<std::int64_t>(m)) %
                           static_cast<std::int64_t>(m));
  u64 n = m;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      u64 r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

u64 divisor_count(const Factorization& f) {
  u64 count = 1;
  for (const auto& pp : f.factors) count *= pp.exponent + 1;
  return count;
}

u64 divisor_count(u64 n) { return divisor_count(factor(n)); }

u64 sigma(const Factorization& f) {
  u128 total = 1;
  for (const auto& pp : f.factors) {
    u128 term = 1, power = 1;
    for (unsigned i = 0; i < pp.exponent; ++i) {
      power *= pp.prime;
      term += power;
    }
    total *= term;
    if (total > std::numeric_limits<u64>::max()) {
      throw std::overflow_error("sigma: divisor sum exceeds 64 bits");
    }
  }
  return static_cast<u64>(total);
}

u64 sigma(u64 n) { return sigma(factor(n)); }

double sigma_half_inv(u64 n) {
  auto divs = divisors(factor(n));
  double total = 0.0;
  for (u64 d : divs) total += 1.0 / std::sqrt(static_cast<double>(d));
  return total;
}

SquareSplit square_split(const Factorization& f) {
  u64 r = 1, s = 1;
  for (const auto& pp : f.factors) {
    for (unsigned i = 0; i < pp.exponent / 2; ++i) r *= pp.prime;
    if (pp.exponent % 2 == 1) s *= pp.prime;
  }
  return {f.n, r, s};
}

SquareSplit square_split(u64 a) { return square_split(factor(a)); }

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> divs{1};
  for (const auto& pp : f.factors) {
    std::size_t base = divs.size();
    u64 power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool is_square(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return static_cast<u128>(r) * r == n;
}

}  // namespace parab::arith
