#pragma once
// Integer substrate: factorization, gcd, Jacobi symbols, divisor functions,
// and the square split a = r^2 * s with s squarefree.

#include <cstdint>
#include <vector>

namespace parab::arith {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  bool operator==(const PrimePower&) const = default;
};

// Primes strictly increasing, exponents >= 1; n == 1 has an empty list.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;
};

// a = r^2 * s with s squarefree; r is the largest integer with r^2 | a.
struct SquareSplit {
  std::uint64_t a, r, s;
};

bool is_prime(std::uint64_t n);

// Trial division to 10^6, then Pollard-Brent rho on remaining cofactors.
// Throws std::invalid_argument on n == 0.
Factorization factor(std::uint64_t n);

// Throws std::invalid_argument on gcd(0, 0).
std::uint64_t gcd(std::uint64_t m, std::uint64_t n);

// Jacobi symbol (h|m) for odd m >= 1; h is reduced mod m first, so the
// symbol is periodic in h with period m. Throws on even or zero m.
int jacobi(std::int64_t h, std::uint64_t m);

std::uint64_t divisor_count(const Factorization& f);
std::uint64_t divisor_count(std::uint64_t n);
std::uint64_t sigma(const Factorization& f);
std::uint64_t sigma(std::uint64_t n);

// sum over d | n of d^(-1/2), accumulated over divisors in ascending order
double sigma_half_inv(std::uint64_t n);

SquareSplit square_split(const Factorization& f);
SquareSplit square_split(std::uint64_t a);

// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(const Factorization& f);

bool is_square(std::uint64_t n);

// Modular helpers (m >= 1); used by root-finding and the Gauss-sum code.
std::uint64_t mulmod(std::uint64_t x, std::uint64_t y, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t invmod(std::uint64_t x, std::uint64_t m);  // requires gcd(x, m) = 1

}  // namespace parab::arith
