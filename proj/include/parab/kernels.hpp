#pragma once
// Hot inner loops, written twice: a scalar reference version and an AVX2
// variant selected at runtime. The residue kernels are pure integer work and
// the two backends agree bit-for-bit; the Gauss-sum kernels accumulate
// doubles and the backends may differ only in summation order.
//
// All kernels walk x^2 mod a incrementally: with inc(x) = (2x+1) mod a,
// (x+1)^2 = x^2 + inc(x) (mod a), and inc itself steps by 2 mod a, so the
// whole loop is adds and conditional subtracts. Requires a < 2^62 so that
// r + inc < 2a stays inside the signed-compare range the SIMD lanes use.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace parab::kernels {

enum class Backend { scalar, avx2 };

bool available(Backend b);
// Chosen once per process: AVX2 when the CPU has it, else scalar.
// Environment PARAB_KERNELS=scalar|avx2|auto overrides.
Backend active();
void force(Backend b);  // throws std::invalid_argument if unavailable
const char* name(Backend b);

// sum of (x^2 mod a) over x in [x0, x1]; 0 when x0 > x1
unsigned __int128 residue_sum(std::uint64_t a, std::uint64_t x0, std::uint64_t x1);
unsigned __int128 residue_sum_with(Backend b, std::uint64_t a, std::uint64_t x0,
                                   std::uint64_t x1);

// count of x in [x0, x1] with x^2 mod a <= j_bound or x^2 mod a >= a - j_bound
std::uint64_t residue_near_count(std::uint64_t a, std::uint64_t j_bound,
                                 std::uint64_t x0, std::uint64_t x1);
std::uint64_t residue_near_count_with(Backend b, std::uint64_t a, std::uint64_t j_bound,
                                      std::uint64_t x0, std::uint64_t x1);

// Memory guard for the unit-circle tables (16 bytes per entry).
inline constexpr std::uint64_t kUnitTableCap = 100'000'000;

// e(k/a) = exp(2*pi*i*k/a) for k in [0, a); built once per modulus and shared
// across every h against that modulus.
struct UnitTable {
  std::uint64_t modulus;
  std::vector<double> re, im;
  explicit UnitTable(std::uint64_t a);
};

// sum over x in [1, b] of e(h x^2 / a); h must already be reduced to [0, a)
std::complex<double> gauss_sum(const UnitTable& t, std::uint64_t h, std::uint64_t b);
std::complex<double> gauss_sum_with(Backend bk, const UnitTable& t, std::uint64_t h,
                                    std::uint64_t b);

// partial sums at each checkpoint b (checkpoints ascending, >= 1);
// out[i] = sum over x in [1, checkpoints[i]]
void gauss_prefix_sums(const UnitTable& t, std::uint64_t h,
                       std::span<const std::uint64_t> checkpoints,
                       std::span<std::complex<double>> out);
void gauss_prefix_sums_with(Backend bk, const UnitTable& t, std::uint64_t h,
                            std::span<const std::uint64_t> checkpoints,
                            std::span<std::complex<double>> out);

}  // namespace parab::kernels
