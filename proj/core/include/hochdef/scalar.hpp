#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hochdef {

// Exact rational number. GMP keeps it canonical: denominator > 0 and
// gcd(|numerator|, denominator) = 1.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long numerator, long denominator);
  explicit Scalar(mpq_class value);

  // Accepts "7", "-7", "3/4", "-3/4" (optional surrounding whitespace).
  static Scalar parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  Scalar inverse() const;
  std::string to_string() const;

  Scalar& operator+=(const Scalar& other) {
    value_ += other.value_;
    return *this;
  }
  Scalar& operator-=(const Scalar& other) {
    value_ -= other.value_;
    return *this;
  }
  Scalar& operator*=(const Scalar& other) {
    value_ *= other.value_;
    return *this;
  }
  Scalar& operator/=(const Scalar& other);

  Scalar operator-() const { return Scalar(mpq_class(-value_)); }

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Binomial coefficient C(top, bottom) for integer top (possibly negative) and bottom >= 0,
// with C(top, bottom) = 0 when 0 <= top < bottom.
Scalar binomial(long top, long bottom);

}  // namespace hochdef
