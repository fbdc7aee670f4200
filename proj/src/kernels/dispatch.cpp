// Runtime backend selection and the public kernel entry points.

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace parab::kernels {

namespace {

bool cpu_has_avx2() {
#if PARAB_BUILD_AVX2
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend detect() {
  Backend chosen = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
  if (const char* env = std::getenv("PARAB_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) chosen = Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) chosen = Backend::avx2;
    // "auto" or anything else keeps the detected default
  }
  return chosen;
}

Backend& active_slot() {
  static Backend b = detect();
  return b;
}

}  // namespace

bool available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return cpu_has_avx2();
  }
  return false;
}

Backend active() { return active_slot(); }

void force(Backend b) {
  if (!available(b)) {
    throw std::invalid_argument(std::string("kernel backend unavailable: ") + name(b));
  }
  active_slot() = b;
}

const char* name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

unsigned __int128 residue_sum_with(Backend b, std::uint64_t a, std::uint64_t x0,
                                   std::uint64_t x1) {
#if PARAB_BUILD_AVX2
  if (b == Backend::avx2) return detail::residue_sum_avx2(a, x0, x1);
#endif
  (void)b;
  return detail::residue_sum_scalar(a, x0, x1);
}

unsigned __int128 residue_sum(std::uint64_t a, std::uint64_t x0, std::uint64_t x1) {
  return residue_sum_with(active(), a, x0, x1);
}

std::uint64_t residue_near_count_with(Backend b, std::uint64_t a, std::uint64_t j_bound,
                                      std::uint64_t x0, std::uint64_t x1) {
#if PARAB_BUILD_AVX2
  if (b == Backend::avx2) return detail::residue_near_count_avx2(a, j_bound, x0, x1);
#endif
  (void)b;
  return detail::residue_near_count_scalar(a, j_bound, x0, x1);
}

std::uint64_t residue_near_count(std::uint64_t a, std::uint64_t j_bound, std::uint64_t x0,
                                 std::uint64_t x1) {
  return residue_near_count_with(active(), a, j_bound, x0, x1);
}

UnitTable::UnitTable(std::uint64_t a) : modulus(a) {
  detail::check_modulus(a);
  if (a > kUnitTableCap) {
    throw std::length_error("UnitTable: modulus exceeds the table cap");
  }
  re.resize(a);
  im.resize(a);
  const double scale = 2.0 * std::numbers::pi / static_cast<double>(a);
  for (std::uint64_t k = 0; k < a; ++k) {
    double angle = scale * static_cast<double>(k);
    re[k] = std::cos(angle);
    im[k] = std::sin(angle);
  }
}

namespace {

void accumulate_with(Backend bk, const UnitTable& t, std::uint64_t h, std::uint64_t x0,
                     std::uint64_t x1, double& re, double& im) {
#if PARAB_BUILD_AVX2
  if (bk == Backend::avx2) {
    detail::gauss_accumulate_avx2(t, h, x0, x1, re, im);
    return;
  }
#endif
  (void)bk;
  detail::gauss_accumulate_scalar(t, h, x0, x1, re, im);
}

}  // namespace

void gauss_prefix_sums_with(Backend bk, const UnitTable& t, std::uint64_t h,
                            std::span<const std::uint64_t> checkpoints,
                            std::span<std::complex<double>> out) {
  if (out.size() != checkpoints.size()) {
    throw std::invalid_argument("gauss_prefix_sums: output size mismatch");
  }
  if (h >= t.modulus) throw std::invalid_argument("gauss_prefix_sums: h must be reduced mod a");
  double re = 0.0, im = 0.0;
  std::uint64_t x = 1;
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    std::uint64_t b = checkpoints[i];
    if (i > 0 && b < checkpoints[i - 1]) {
      throw std::invalid_argument("gauss_prefix_sums: checkpoints must be ascending");
    }
    if (b >= x) {
      accumulate_with(bk, t, h, x, b, re, im);
      x = b + 1;
    }
    out[i] = {re, im};
  }
}

void gauss_prefix_sums(const UnitTable& t, std::uint64_t h,
                       std::span<const std::uint64_t> checkpoints,
                       std::span<std::complex<double>> out) {
  gauss_prefix_sums_with(active(), t, h, checkpoints, out);
}

std::complex<double> gauss_sum_with(Backend bk, const UnitTable& t, std::uint64_t h,
                                    std::uint64_t b) {
  double re = 0.0, im = 0.0;
  if (h >= t.modulus) throw std::invalid_argument("gauss_sum: h must be reduced mod a");
  accumulate_with(bk, t, h, 1, b, re, im);
  return {re, im};
}

std::complex<double> gauss_sum(const UnitTable& t, std::uint64_t h, std::uint64_t b) {
  return gauss_sum_with(active(), t, h, b);
}

}  // namespace parab::kernels
