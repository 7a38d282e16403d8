#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace smg {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Payoffs, outside options, epsilons and grid steps all use it.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT: implicit from integers is intended
  Rational(long long num, long long den);
  explicit Rational(mpq_class q);

  /// Accepts "p", "p/q", and finite decimals such as "-1.25".
  static Rational parse(std::string_view text);

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const;
  double to_double() const { return value_.get_d(); }

  int sign() const { return sgn(value_); }
  bool is_integer() const;
  Rational abs() const;
  Rational floor() const;
  Rational ceil() const;

  const mpq_class& raw() const { return value_; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational median(const Rational& a, const Rational& b, const Rational& c);

/// A value that may be minus infinity (nullopt). Used for unbounded outside
/// options and the forfeit value of a competition.
using LowerBound = std::optional<Rational>;

/// a > b where either side may be minus infinity.
bool greater(const LowerBound& a, const LowerBound& b);
std::string to_string(const LowerBound& b);

}  // namespace smg
