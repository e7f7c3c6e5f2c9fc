#pragma once

/**
 * @file approx.hpp
 * @brief Midpoint-radius enclosures over MPFR.
 *
 * An ApproxReal is a ball: an MPFR midpoint at a fixed working precision
 * plus a double radius that is always rounded upward. Every operation
 * returns a ball that contains the exact result of applying the operation
 * to any pair of points from the input balls. Exact MPFR operations
 * (ternary value 0) add no rounding term, so values that are exactly
 * representable stay at radius zero.
 */

#include <iosfwd>
#include <string>

#include <mpfr.h>

#include "trigsum/exact.hpp"

namespace trigsum {

/// Working precision in bits.
struct Precision {
  long bits = 128;

  friend bool operator==(Precision, Precision) = default;
};

inline constexpr Precision kDefaultPrecision{128};
inline constexpr long kMinPrecisionBits = 53;

class ApproxReal {
 public:
  /// Exact zero.
  explicit ApproxReal(Precision prec = kDefaultPrecision);
  explicit ApproxReal(long v, Precision prec = kDefaultPrecision);
  explicit ApproxReal(const Rational& v, Precision prec = kDefaultPrecision);
  /// Rounds `mid` to `prec` and widens `radius` by the rounding error.
  ApproxReal(mpfr_srcptr mid, double radius, Precision prec);

  ApproxReal(const ApproxReal& o);
  ApproxReal(ApproxReal&& o) noexcept;
  ApproxReal& operator=(const ApproxReal& o);
  ApproxReal& operator=(ApproxReal&& o) noexcept;
  ~ApproxReal();

  mpfr_srcptr mid() const { return mid_; }
  double bound() const { return rad_; }
  Precision precision() const { return Precision{static_cast<long>(mpfr_get_prec(mid_))}; }

  double to_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
  /// Upper bound on |x| over the ball.
  double mag_upper() const;
  /// Lower bound on |x| over the ball (0 when the ball touches zero).
  double mag_lower() const;

  bool is_exact() const { return rad_ == 0.0; }
  bool contains(const Rational& x) const;
  bool contains_zero() const;

  /// 30 significant digits by default, scientific notation, no bound.
  std::string mid_string(int digits = 30) const;
  /// The radius rounded up to three significant digits.
  std::string bound_string() const;
  /// "<mid>±<radius>".
  std::string to_string(int digits = 30) const;

  ApproxReal& operator+=(const ApproxReal& o);
  ApproxReal& operator-=(const ApproxReal& o);
  ApproxReal& operator*=(const ApproxReal& o);
  /// Throws PoleError when the divisor ball contains zero.
  ApproxReal& operator/=(const ApproxReal& o);

  ApproxReal operator-() const;
  friend ApproxReal operator+(ApproxReal a, const ApproxReal& b) { return a += b; }
  friend ApproxReal operator-(ApproxReal a, const ApproxReal& b) { return a -= b; }
  friend ApproxReal operator*(ApproxReal a, const ApproxReal& b) { return a *= b; }
  friend ApproxReal operator/(ApproxReal a, const ApproxReal& b) { return a /= b; }

 private:
  void add_rounding(int ternary);

  mpfr_t mid_;
  double rad_ = 0.0;
};

/// x^e for e >= 0 by square-and-multiply; x^0 is exactly 1.
ApproxReal pow(const ApproxReal& x, long e);
ApproxReal abs(const ApproxReal& x);

std::ostream& operator<<(std::ostream& os, const ApproxReal& x);

/// Validates a precision request; throws DomainError below kMinPrecisionBits.
Precision checked_precision(long bits);

namespace detail {
/// Radius helpers: IEEE result nudged one ulp toward +infinity.
double add_up(double a, double b);
double mul_up(double a, double b);
double div_up(double a, double b);
}  // namespace detail

}  // namespace trigsum
