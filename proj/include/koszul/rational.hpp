#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace koszul {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. The wrapper exists so that every
/// arithmetic result is materialized (no expression templates leaking into
/// `auto`) and so that the textual form is the project-wide "p/q" / "p".
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p" or "p/q". Throws ParseError on anything else,
  /// including a zero denominator.
  static Rational parse(std::string_view text);

  std::string str() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  mpq_class const& raw() const { return value_; }

  Rational inverse() const;

  Rational& operator+=(Rational const& o) { value_ += o.value_; return *this; }
  Rational& operator-=(Rational const& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(Rational const& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(Rational const& o);

  friend Rational operator+(Rational a, Rational const& b) { return a += b; }
  friend Rational operator-(Rational a, Rational const& b) { return a -= b; }
  friend Rational operator*(Rational a, Rational const& b) { return a *= b; }
  friend Rational operator/(Rational a, Rational const& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(Rational const& a, Rational const& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(Rational const& a, Rational const& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, Rational const& r);

}  // namespace koszul
