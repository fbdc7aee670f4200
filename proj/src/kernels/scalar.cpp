// Scalar reference kernels. These define the semantics; the AVX2 variants
// must match them (bit-for-bit for the integer kernels).

#include <limits>
#include <stdexcept>

#include "kernels_impl.hpp"

namespace parab::kernels::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 sq_mod(u64 x, u64 a) { return static_cast<u64>(static_cast<u128>(x % a) * (x % a) % a); }

}  // namespace

void check_modulus(u64 a) {
  if (a == 0) throw std::invalid_argument("kernel: modulus must be positive");
  if (a >= kModulusCap) throw std::invalid_argument("kernel: modulus must be below 2^62");
}

// Walks r = x^2 mod a with inc = (2x+1) mod a; r + inc < 2a, so one
// conditional subtract keeps everything reduced.
unsigned __int128 residue_sum_scalar(u64 a, u64 x0, u64 x1) {
  check_modulus(a);
  if (x0 > x1 || a == 1) return 0;
  u128 total = 0;
  u64 r = sq_mod(x0, a);
  u64 inc = (2 * (x0 % a) + 1) % a;
  const u64 chunk_cap = std::numeric_limits<u64>::max() / a;
  u64 x = x0;
  while (x <= x1) {
    u64 steps = x1 - x + 1;
    if (steps > chunk_cap) steps = chunk_cap;
    u64 sum = 0;
    for (u64 i = 0; i < steps; ++i) {
      sum += r;
      r += inc;
      if (r >= a) r -= a;
      inc += 2;
      if (inc >= a) inc -= a;
    }
    total += sum;
    if (x1 - x < steps) break;
    x += steps;
  }
  return total;
}

u64 residue_near_count_scalar(u64 a, u64 j_bound, u64 x0, u64 x1) {
  check_modulus(a);
  if (x0 > x1) return 0;
  if (j_bound >= a) return x1 - x0 + 1;
  if (a == 1) return x1 - x0 + 1;  // every square is 0 mod 1
  const u64 hi = a - j_bound;     // count r <= j_bound or r >= hi
  u64 count = 0;
  u64 r = sq_mod(x0, a);
  u64 inc = (2 * (x0 % a) + 1) % a;
  for (u64 x = x0;; ++x) {
    if (r <= j_bound || r >= hi) ++count;
    if (x == x1) break;
    r += inc;
    if (r >= a) r -= a;
    inc += 2;
    if (inc >= a) inc -= a;
  }
  return count;
}

// idx = h x^2 mod a advances by ginc = h(2x+1) mod a, which itself advances
// by 2h mod a.
void gauss_accumulate_scalar(const UnitTable& t, u64 h, u64 x0, u64 x1,
                             double& re_acc, double& im_acc) {
  const u64 a = t.modulus;
  if (x0 > x1) return;
  if (a == 1) {
    re_acc += static_cast<double>(x1 - x0 + 1);
    return;
  }
  u64 idx = static_cast<u64>(static_cast<u128>(h) * sq_mod(x0, a) % a);
  u64 ginc = static_cast<u64>(static_cast<u128>(h) * ((2 * (x0 % a) + 1) % a) % a);
  const u64 step = (2 * (h % a)) % a;
  double re = 0.0, im = 0.0;
  for (u64 x = x0;; ++x) {
    re += t.re[idx];
    im += t.im[idx];
    if (x == x1) break;
    idx += ginc;
    if (idx >= a) idx -= a;
    ginc += step;
    if (ginc >= a) ginc -= a;
  }
  re_acc += re;
  im_acc += im;
}

}  // namespace parab::kernels::detail
