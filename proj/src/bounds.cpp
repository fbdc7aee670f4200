#include "parab/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "parab/arith.hpp"

namespace parab::bounds {

namespace {

using u64 = std::uint64_t;

void check_delta(const Rational& delta) {
  if (delta < Rational(0) || !(delta < Rational(1, 2))) {
    throw std::invalid_argument("envelope: delta must lie in [0, 1/2)");
  }
}

// the shared error term of the two asymptotic formulas, o(1) set to 0
double shared_error_term(u64 a, u64 b) {
  double la = std::log(static_cast<double>(a));
  double lla = std::log(la);
  double sa = std::sqrt(static_cast<double>(a));
  return sa * la + static_cast<double>(b) / sa * std::exp(2.0 * std::sqrt(la) / lla);
}

}  // namespace

double fejer(u64 H, double t) {
  if (H == 0) throw std::invalid_argument("fejer: H must be positive");
  double u = t - std::nearbyint(t);
  if (std::abs(u) < 1e-9) return 1.0;  // removable singularity, limit value
  double ht = static_cast<double>(H) * t;
  double w = ht - std::nearbyint(ht);
  double sn = std::sin(std::numbers::pi * w);
  double sd = static_cast<double>(H) * std::sin(std::numbers::pi * u);
  double q = sn / sd;
  return q * q;
}

EnvelopeValue envelope_theorem1(u64 a, u64 b) {
  if (a < 3) throw std::invalid_argument("envelope_theorem1: requires a >= 3");
  if (b == 0) throw std::invalid_argument("envelope_theorem1: requires b >= 1");
  return {shared_error_term(a, b), "theorem1", {.a = a, .b = b}};
}

EnvelopeValue envelope_theorem2(u64 a, u64 b) {
  if (a < 3) throw std::invalid_argument("envelope_theorem2: requires a >= 3");
  if (b == 0) throw std::invalid_argument("envelope_theorem2: requires b >= 1");
  return {shared_error_term(a, b), "theorem2", {.a = a, .b = b}};
}

EnvelopeValue envelope_theorem3(u64 a, const Rational& delta) {
  if (a < 2) throw std::invalid_argument("envelope_theorem3: requires a >= 2");
  check_delta(delta);
  auto f = arith::factor(a);
  double main_term = delta.to_double() * static_cast<double>(a) *
                     std::log(static_cast<double>(a)) *
                     static_cast<double>(arith::divisor_count(f));
  double on_curve = static_cast<double>(arith::sigma(arith::square_split(f).r));
  return {main_term + on_curve, "theorem3", {.a = a, .delta = delta.to_double()}};
}

EnvelopeValue envelope_theorem4(u64 a, const Rational& delta) {
  if (a < 2) throw std::invalid_argument("envelope_theorem4: requires a >= 2");
  check_delta(delta);
  auto f = arith::factor(a);
  double main_term = delta.to_double() * static_cast<double>(a) *
                     std::log(std::log(3.0 * static_cast<double>(a))) *
                     static_cast<double>(arith::divisor_count(f));
  double on_curve = static_cast<double>(arith::sigma(arith::square_split(f).r));
  return {main_term + on_curve, "theorem4", {.a = a, .delta = delta.to_double()}};
}

EnvelopeValue envelope_korolev(u64 a) {
  if (a == 0) throw std::invalid_argument("envelope_korolev: requires a >= 1");
  return {kKorolevConstant * std::sqrt(static_cast<double>(a)), "korolev", {.a = a}};
}

EnvelopeValue envelope_incomplete(std::int64_t h, u64 a, u64 b) {
  if (a == 0 || b == 0) throw std::invalid_argument("envelope_incomplete: requires a, b >= 1");
  u64 habs = h < 0 ? static_cast<u64>(-(h + 1)) + 1 : static_cast<u64>(h);
  u64 g = habs == 0 ? a : arith::gcd(a, habs);
  double sa = std::sqrt(static_cast<double>(a));
  double value = static_cast<double>(b) / sa * std::sqrt(static_cast<double>(g)) +
                 std::sqrt(static_cast<double>(a / g));
  return {value, "incomplete", {.a = a, .b = b, .q = g}};
}

EnvelopeValue envelope_pv(u64 q) {
  if (q < 2) throw std::invalid_argument("envelope_pv: requires q >= 2 (log 1 is vacuous)");
  double sq = std::sqrt(static_cast<double>(q));
  return {sq * std::log(static_cast<double>(q)), "pv", {.q = q}};
}

EnvelopeValue envelope_grh(u64 q) {
  if (q == 0) throw std::invalid_argument("envelope_grh: requires q >= 1");
  double sq = std::sqrt(static_cast<double>(q));
  return {sq * std::log(std::log(3.0 * static_cast<double>(q))), "grh", {.q = q}};
}

EnvelopeValue envelope_omega(u64 a, double eps) {
  if (a < 3) throw std::invalid_argument("envelope_omega: requires a >= 3");
  if (!(eps > 0.0) || !(eps < std::numbers::sqrt2)) {
    throw std::invalid_argument("envelope_omega: eps must lie in (0, sqrt 2)");
  }
  double la = std::log(static_cast<double>(a));
  double value = std::sqrt(static_cast<double>(a)) *
                 std::exp((std::numbers::sqrt2 - eps) * std::sqrt(la) / std::log(la));
  return {value, "omega", {.a = a, .eps = eps}};
}

}  // namespace parab::bounds
