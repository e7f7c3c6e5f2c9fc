#include "trigsum/approx.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <utility>

#include "trigsum/errors.hpp"

namespace trigsum {

namespace detail {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double add_up(double a, double b) {
  if (a == 0.0) return b;
  if (b == 0.0) return a;
  return std::nextafter(a + b, kInf);
}
double mul_up(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return std::nextafter(a * b, kInf);
}
double div_up(double a, double b) {
  if (a == 0.0) return 0.0;
  return std::nextafter(a / b, kInf);
}

}  // namespace detail

namespace {

using detail::add_up;
using detail::mul_up;

std::string take_mpfr_string(char* raw) {
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

double abs_up(mpfr_srcptr x) { return std::fabs(mpfr_get_d(x, MPFR_RNDA)); }
double abs_down(mpfr_srcptr x) { return std::fabs(mpfr_get_d(x, MPFR_RNDZ)); }

}  // namespace

ApproxReal::ApproxReal(Precision prec) {
  mpfr_init2(mid_, prec.bits);
  mpfr_set_zero(mid_, 1);
}

ApproxReal::ApproxReal(long v, Precision prec) {
  mpfr_init2(mid_, prec.bits);
  add_rounding(mpfr_set_si(mid_, v, MPFR_RNDN));
}

ApproxReal::ApproxReal(const Rational& v, Precision prec) {
  mpfr_init2(mid_, prec.bits);
  add_rounding(mpfr_set_q(mid_, v.raw().get_mpq_t(), MPFR_RNDN));
}

ApproxReal::ApproxReal(mpfr_srcptr mid, double radius, Precision prec) : rad_(radius) {
  mpfr_init2(mid_, prec.bits);
  add_rounding(mpfr_set(mid_, mid, MPFR_RNDN));
}

ApproxReal::ApproxReal(const ApproxReal& o) : rad_(o.rad_) {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
}

// A moved-from ball keeps a null limb pointer; only destruction and
// assignment are valid on it afterwards.
ApproxReal::ApproxReal(ApproxReal&& o) noexcept : rad_(o.rad_) {
  mid_[0] = o.mid_[0];
  o.mid_->_mpfr_d = nullptr;
}

ApproxReal& ApproxReal::operator=(const ApproxReal& o) {
  if (this == &o) return *this;
  if (mid_->_mpfr_d == nullptr) {
    mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  } else {
    mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
  }
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  rad_ = o.rad_;
  return *this;
}

ApproxReal& ApproxReal::operator=(ApproxReal&& o) noexcept {
  std::swap(mid_[0], o.mid_[0]);
  std::swap(rad_, o.rad_);
  return *this;
}

ApproxReal::~ApproxReal() {
  if (mid_->_mpfr_d != nullptr) mpfr_clear(mid_);
}

void ApproxReal::add_rounding(int ternary) {
  if (ternary == 0) return;
  // Round-to-nearest error is at most half an ulp; charge a full one.
  const double ulp = std::ldexp(1.0, static_cast<int>(mpfr_get_exp(mid_) - mpfr_get_prec(mid_)));
  rad_ = add_up(rad_, ulp);
}

double ApproxReal::mag_upper() const { return add_up(abs_up(mid_), rad_); }

double ApproxReal::mag_lower() const {
  const double m = abs_down(mid_);
  if (m <= rad_) return 0.0;
  return std::nextafter(m - rad_, 0.0);
}

bool ApproxReal::contains_zero() const { return mpfr_zero_p(mid_) || abs_down(mid_) <= rad_; }

bool ApproxReal::contains(const Rational& x) const {
  mpfr_t diff;
  mpfr_init2(diff, mpfr_get_prec(mid_) + 64);
  // Rounding away from zero can only overstate the distance.
  mpfr_sub_q(diff, mid_, x.raw().get_mpq_t(), MPFR_RNDA);
  mpfr_abs(diff, diff, MPFR_RNDA);
  const bool inside = mpfr_cmp_d(diff, rad_) <= 0;
  mpfr_clear(diff);
  return inside;
}

std::string ApproxReal::mid_string(int digits) const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*Re", digits - 1, mid_) < 0) std::abort();
  return take_mpfr_string(raw);
}

std::string ApproxReal::bound_string() const {
  mpfr_t r;
  mpfr_init2(r, 53);
  mpfr_set_d(r, rad_, MPFR_RNDU);
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.2RUe", r) < 0) std::abort();
  mpfr_clear(r);
  return take_mpfr_string(raw);
}

std::string ApproxReal::to_string(int digits) const {
  return mid_string(digits) + "±" + bound_string();
}

ApproxReal& ApproxReal::operator+=(const ApproxReal& o) {
  rad_ = add_up(rad_, o.rad_);
  add_rounding(mpfr_add(mid_, mid_, o.mid_, MPFR_RNDN));
  return *this;
}

ApproxReal& ApproxReal::operator-=(const ApproxReal& o) {
  rad_ = add_up(rad_, o.rad_);
  add_rounding(mpfr_sub(mid_, mid_, o.mid_, MPFR_RNDN));
  return *this;
}

ApproxReal& ApproxReal::operator*=(const ApproxReal& o) {
  double rad = 0.0;
  if (rad_ != 0.0 || o.rad_ != 0.0) {
    const double a = abs_up(mid_);
    const double b = abs_up(o.mid_);
    rad = add_up(add_up(mul_up(a, o.rad_), mul_up(b, rad_)), mul_up(rad_, o.rad_));
  }
  rad_ = rad;
  add_rounding(mpfr_mul(mid_, mid_, o.mid_, MPFR_RNDN));
  return *this;
}

ApproxReal& ApproxReal::operator/=(const ApproxReal& o) {
  if (o.contains_zero()) throw PoleError("division by an enclosure containing zero");
  double rad = 0.0;
  if (rad_ != 0.0 || o.rad_ != 0.0) {
    const double a = abs_up(mid_);
    const double b_up = abs_up(o.mid_);
    const double b_lo = abs_down(o.mid_);
    const double num = add_up(mul_up(a, o.rad_), mul_up(b_up, rad_));
    const double gap = std::nextafter(b_lo - o.rad_, 0.0);
    const double den = std::nextafter(b_lo * gap, 0.0);
    rad = detail::div_up(num, den);
  }
  rad_ = rad;
  add_rounding(mpfr_div(mid_, mid_, o.mid_, MPFR_RNDN));
  return *this;
}

ApproxReal ApproxReal::operator-() const {
  ApproxReal out(*this);
  mpfr_neg(out.mid_, out.mid_, MPFR_RNDN);
  return out;
}

ApproxReal pow(const ApproxReal& x, long e) {
  if (e < 0) throw DomainError("pow: negative exponent");
  ApproxReal result(1, x.precision());
  ApproxReal base(x);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

ApproxReal abs(const ApproxReal& x) { return mpfr_sgn(x.mid()) < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const ApproxReal& x) { return os << x.to_string(); }

Precision checked_precision(long bits) {
  if (bits < kMinPrecisionBits) {
    throw DomainError("precision must be at least " + std::to_string(kMinPrecisionBits) + " bits");
  }
  if (bits > (1L << 20)) throw DomainError("precision above 2^20 bits is not supported");
  return Precision{bits};
}

}  // namespace trigsum
