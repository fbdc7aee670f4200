#pragma once
// The Fejer kernel and the theoretical envelope functions measured
// quantities are ratioed against. Envelopes realize each bound's right-hand
// side with the O-constant set to 1 and o(1) terms set to 0; natural logs
// throughout.

#include <cstdint>
#include <numbers>

#include "parab/rational.hpp"

namespace parab::bounds {

inline constexpr double kKorolevConstant = 3.9071;
inline constexpr double kFejerFloor = 4.0 / (std::numbers::pi * std::numbers::pi);

struct EnvelopeInputs {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t q = 0;
  double delta = 0.0;
  double eps = 0.0;
};

struct EnvelopeValue {
  double value;
  const char* formula_id;
  EnvelopeInputs inputs;
};

// F_H(t) = sum over |h| <= H of (H-|h|)/H^2 * e(ht), evaluated through the
// closed form (sin(pi H t) / (H sin(pi t)))^2; the removable singularity at
// integer t is filled with the limit value 1. Always >= 0.
double fejer(std::uint64_t H, double t);

// sqrt(a) log a + b a^{-1/2} exp(2 sqrt(log a)/log log a); requires a >= 3
EnvelopeValue envelope_theorem1(std::uint64_t a, std::uint64_t b);
// identical expression (the two theorems share the error envelope)
EnvelopeValue envelope_theorem2(std::uint64_t a, std::uint64_t b);

// delta * a * log(a) * d(a) + sigma(r); requires a >= 2
EnvelopeValue envelope_theorem3(std::uint64_t a, const Rational& delta);
// as theorem 3 with log a replaced by log log 3a
EnvelopeValue envelope_theorem4(std::uint64_t a, const Rational& delta);

// 3.9071 sqrt(a)
EnvelopeValue envelope_korolev(std::uint64_t a);

// (b/sqrt(a)) sqrt((a,h)) + sqrt(a/(a,h))
EnvelopeValue envelope_incomplete(std::int64_t h, std::uint64_t a, std::uint64_t b);

// sqrt(q) log q; requires q >= 2 (log 1 = 0 is vacuous)
EnvelopeValue envelope_pv(std::uint64_t q);

// sqrt(q) log log 3q
EnvelopeValue envelope_grh(std::uint64_t q);

// sqrt(a) exp((sqrt(2)-eps) sqrt(log a)/log log a); requires a >= 3 and
// 0 < eps < sqrt(2). Illustrative only: contextualizes observed maxima,
// never asserted as a lower bound.
EnvelopeValue envelope_omega(std::uint64_t a, double eps);

}  // namespace parab::bounds
