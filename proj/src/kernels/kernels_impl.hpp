#pragma once
// Per-backend kernel entry points. The dispatcher in dispatch.cpp is the
// only caller outside the equivalence tests.

#include "parab/kernels.hpp"

namespace parab::kernels::detail {

unsigned __int128 residue_sum_scalar(std::uint64_t a, std::uint64_t x0, std::uint64_t x1);
std::uint64_t residue_near_count_scalar(std::uint64_t a, std::uint64_t j_bound,
                                        std::uint64_t x0, std::uint64_t x1);
// appends sum over x in [x0, x1] of e(h x^2 / a) to (re_acc, im_acc)
void gauss_accumulate_scalar(const UnitTable& t, std::uint64_t h, std::uint64_t x0,
                             std::uint64_t x1, double& re_acc, double& im_acc);

#if PARAB_BUILD_AVX2
unsigned __int128 residue_sum_avx2(std::uint64_t a, std::uint64_t x0, std::uint64_t x1);
std::uint64_t residue_near_count_avx2(std::uint64_t a, std::uint64_t j_bound,
                                      std::uint64_t x0, std::uint64_t x1);
void gauss_accumulate_avx2(const UnitTable& t, std::uint64_t h, std::uint64_t x0,
                           std::uint64_t x1, double& re_acc, double& im_acc);
#endif

// shared argument checks
void check_modulus(std::uint64_t a);

inline constexpr std::uint64_t kModulusCap = 1ULL << 62;

}  // namespace parab::kernels::detail
