#pragma once

// Exact rational scalar used throughout the library.
//
// Values are kept in lowest terms with a positive denominator; zero is 0/1.
// Serialization is "p/q", or "p" when the denominator is 1.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace nadic {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)

  Rational(const Integer& value) : q_(value) {}  // NOLINT(implicit)

  // Throws std::domain_error when den == 0.
  Rational(const Integer& num, const Integer& den);

  // Accepts "p", "p/q", "-p/q" (surrounding whitespace ignored).
  // Throws std::invalid_argument on malformed input or zero denominator.
  static Rational parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Integer floor() const;
  Integer ceil() const;
  // Nearest integer, ties rounded down.
  Integer round() const;
  // x - floor(x), in [0, 1).
  Rational frac() const;
  // Representative in [0, modulus); modulus must be positive.
  Rational mod(const Rational& modulus) const;
  Rational abs() const;

  double to_double() const { return q_.get_d(); }
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// base^exponent for any sign of exponent; base must be nonzero when exponent < 0.
Rational power(const Rational& base, long exponent);
Integer ipow(long base, unsigned long exponent);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// Distance to the nearest integer.
Rational dist_to_integer(const Rational& x);

using Point = std::vector<Rational>;

std::string to_string(const Point& p);

}  // namespace nadic
