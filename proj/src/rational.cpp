#include "parab/rational.hpp"

#include <charconv>
#include <limits>

namespace parab {

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("Rational: component exceeds 64 bits after reduction");
  }
  return static_cast<std::int64_t>(v);
}

std::int64_t parse_digits(std::string_view s, const char* what) {
  std::int64_t value = 0;
  if (s.empty() || s.size() > 18) {
    throw std::invalid_argument(std::string("Rational::parse: bad ") + what);
  }
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument(std::string("Rational::parse: bad ") + what);
  }
  return value;
}

}  // namespace

Rational Rational::make_reduced(__int128 num, __int128 den) {
  if (den == 0) {
    throw std::invalid_argument("Rational: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    return Rational();
  }
  __int128 g = gcd128(num, den);
  Rational r;
  r.num_ = narrow(num / g);
  r.den_ = narrow(den / g);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = make_reduced(num, den);
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) {
    throw std::invalid_argument("Rational::parse: empty value");
  }

  Rational r;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_digits(s.substr(0, slash), "numerator");
    std::int64_t den = parse_digits(s.substr(slash + 1), "denominator");
    if (den == 0) {
      throw std::invalid_argument("Rational::parse: zero denominator");
    }
    r = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (frac_part.empty()) {
      throw std::invalid_argument("Rational::parse: trailing decimal point");
    }
    std::int64_t ip = int_part.empty() ? 0 : parse_digits(int_part, "integer part");
    std::int64_t fp = parse_digits(frac_part, "fractional part");
    __int128 den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    r = make_reduced(static_cast<__int128>(ip) * den + fp, den);
  } else {
    r = Rational(parse_digits(s, "integer"));
  }
  return negative ? -r : r;
}

std::string Rational::to_string() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-static_cast<__int128>(num_));
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return make_reduced(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                      static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make_reduced(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                      static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make_reduced(static_cast<__int128>(num_) * o.num_,
                      static_cast<__int128>(den_) * o.den_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  __int128 lhs = static_cast<__int128>(num_) * o.den_;
  __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t Rational::floor_mul(std::uint64_t k) const {
  __int128 p = static_cast<__int128>(num_) * static_cast<__int128>(k);
  __int128 q = p / den_;
  if (p % den_ != 0 && p < 0) --q;
  return narrow(q);
}

}  // namespace parab
