#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pwc/error.hpp"

namespace pwc {

/// An exact real number: either a rational p/q or an element a + b*sqrt(d) of
/// a real quadratic field with square-free d >= 2.
///
/// Values are always normalized: rationals are in lowest terms with a positive
/// denominator, and a quadratic element whose irrational coefficient is zero
/// collapses to the rational form.  Rationals mix freely with any quadratic
/// field; two quadratic values over different radicands are incompatible and
/// every binary operation on them throws ErrorKind::incompatible_field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT: integers convert implicitly
  Scalar(int value) : a_(value) {}   // NOLINT
  explicit Scalar(mpq_class value);

  static Scalar rational(long num, long den);
  static Scalar rational(const mpz_class& num, const mpz_class& den);
  /// a + b*sqrt(d); d must be square-free and >= 2.
  static Scalar quadratic(mpq_class a, mpq_class b, long d);
  /// Parses "n", "p/q" or "a+b*sqrt(d)" (see str()).
  static Scalar parse(std::string_view text);

  bool is_rational() const noexcept { return d_ == 0; }
  /// 0 for rationals.
  long radicand() const noexcept { return d_; }
  const mpq_class& rational_part() const noexcept { return a_; }
  const mpq_class& irrational_coeff() const noexcept { return b_; }

  int sign() const;
  bool is_zero() const noexcept { return d_ == 0 && sgn(a_) == 0; }
  bool is_integer() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

  /// Largest integer <= *this, found exactly (integer square roots, no floats).
  mpz_class floor_integer() const;
  Scalar floor() const { return Scalar(mpq_class(floor_integer())); }
  /// x - floor(x), always in [0, 1).
  Scalar frac() const;

  /// Lossy; for plotting and reports only.
  double to_double() const;
  long double to_long_double() const;

  /// Canonical text: "n", "p/q", or "a+b*sqrt(d)" with a and b rational
  /// (b may carry its own sign, e.g. "1/2+-1/2*sqrt(5)").
  std::string str() const;

  std::size_t hash() const noexcept;

 private:
  void normalize();
  long common_radicand(const Scalar& rhs) const;

  mpq_class a_{0};
  mpq_class b_{0};
  long d_ = 0;
};

/// Shorthand for compare(): negative, zero or positive like lhs - rhs.
std::strong_ordering compare(const Scalar& lhs, const Scalar& rhs);

inline Scalar frac(const Scalar& x) { return x.frac(); }

Scalar pow(const Scalar& base, unsigned exponent);
Scalar abs(const Scalar& x);
inline const Scalar& min(const Scalar& x, const Scalar& y) { return y < x ? y : x; }
inline const Scalar& max(const Scalar& x, const Scalar& y) { return x < y ? y : x; }

std::ostream& operator<<(std::ostream& os, const Scalar& x);

bool is_square_free(long d);

struct ScalarHash {
  std::size_t operator()(const Scalar& x) const noexcept { return x.hash(); }
};

}  // namespace pwc

template <>
struct std::hash<pwc::Scalar> {
  std::size_t operator()(const pwc::Scalar& x) const noexcept { return x.hash(); }
};
