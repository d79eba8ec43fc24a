#pragma once

// Exact rational scalar used for all cube geometry.  Coordinates that appear
// in this project have denominators of the form 2^b * 3^a (dyadic scales and
// third-shifts) times small fixed factors from dilation ratios, so an int64
// numerator/denominator pair with __int128 intermediates is plenty; anything
// that would leave the representable range throws instead of silently
// degrading to floating point.

#include <twt/errors.hpp>

#include <cstdint>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>

namespace twt {

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n) {}
  Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

  // 2^j for |j| <= 62.
  static Rational pow2(int j) {
    if (j < -62 || j > 62) throw scale_error("pow2 exponent out of range: " + std::to_string(j));
    return j >= 0 ? Rational(std::int64_t(1) << j) : Rational(1, std::int64_t(1) << -j);
  }

  // Accepts "p", "p/q", optional leading sign.  Exact inverse of str().
  static Rational parse(std::string_view s);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
  }
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    return (num_ % den_ != 0 && num_ > 0) ? q + 1 : q;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator-(const Rational& a) { return make_reduced(-static_cast<I128>(a.num_), a.den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make_reduced(static_cast<I128>(a.num_) * b.den_ + static_cast<I128>(b.num_) * a.den_,
                        static_cast<I128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make_reduced(static_cast<I128>(a.num_) * b.den_ - static_cast<I128>(b.num_) * a.den_,
                        static_cast<I128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make_reduced(static_cast<I128>(a.num_) * b.num_, static_cast<I128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw overflow_error("rational division by zero");
    return make_reduced(static_cast<I128>(a.num_) * b.den_, static_cast<I128>(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  // Values are kept normalized, so field-wise equality is exact equality.
  friend bool operator==(const Rational& a, const Rational& b) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    I128 lhs = static_cast<I128>(a.num_) * b.den_;
    I128 rhs = static_cast<I128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
         : lhs > rhs ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
  }

 private:
  using I128 = __int128;

  void assign(std::int64_t n, std::int64_t d) {
    if (d == 0) throw overflow_error("rational with zero denominator");
    *this = make_reduced(static_cast<I128>(n), static_cast<I128>(d));
  }

  static Rational make_reduced(I128 n, I128 d) {
    if (d < 0) { n = -n; d = -d; }
    I128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    constexpr I128 lo = -static_cast<I128>(INT64_MAX), hi = static_cast<I128>(INT64_MAX);
    if (n < lo || n > hi || d > hi) throw overflow_error("rational out of int64 range after reduction");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static I128 gcd128(I128 a, I128 b) {
    while (b != 0) { I128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline Rational Rational::parse(std::string_view s) {
  auto bad = [&] { throw parse_error("bad rational literal: '" + std::string(s) + "'"); };
  std::size_t i = 0;
  auto read_int = [&]() -> std::int64_t {
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    if (i >= s.size() || s[i] < '0' || s[i] > '9') bad();
    std::int64_t v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      if (v > (INT64_MAX - 9) / 10) throw overflow_error("rational literal too large");
      v = v * 10 + (s[i++] - '0');
    }
    return neg ? -v : v;
  };
  std::int64_t n = read_int(), d = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    d = read_int();
  }
  if (i != s.size()) bad();
  return Rational(n, d);
}

}  // namespace twt
