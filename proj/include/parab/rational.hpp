#pragma once
// Exact rational arithmetic on 64-bit components with 128-bit intermediates.
// Values are always stored in lowest terms with a positive denominator.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parab {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "p/q", a bare integer "n", or a decimal such as "0.01"
  // (d fractional digits become denominator 10^d -- never a binary float).
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;  // "p" when integral, else "p/q"

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;

  std::strong_ordering operator<=>(const Rational& o) const;
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

  // floor(this * k); exact, 128-bit internally
  std::int64_t floor_mul(std::uint64_t k) const;

  Rational abs() const { return num_ < 0 ? -*this : *this; }

 private:
  static Rational make_reduced(__int128 num, __int128 den);
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace parab
