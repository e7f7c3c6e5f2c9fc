#include "trigsum/trig.hpp"

#include <cmath>
#include <string>

#include "pi_table.hpp"
#include "trigsum/errors.hpp"

namespace trigsum {

namespace detail {

std::pair<ApproxReal, ApproxReal> sin_cos_pi_octant(const Integer& num, const Integer& den,
                                                    Precision prec) {
  if (num == 0) return {ApproxReal(0, prec), ApproxReal(1, prec)};

  const long work = prec.bits + 16;
  mpfr_t t, s, c;
  mpfr_inits2(work, t, s, c, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(t, MPFR_RNDN);
  mpfr_mul_z(t, t, num.get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(t, t, den.get_mpz_t(), MPFR_RNDN);
  mpfr_sin_cos(s, c, t, MPFR_RNDN);

  // The argument carries three roundings, so |dt| < 3.01 * 2^-work * t.
  // On [0, pi/4] that moves sin by at most 3.4 * 2^-work * sin t and cos
  // by at most 2.4 * 2^-work; the final sin_cos rounding adds 2^-work
  // relative. 2^(3 - work) relative covers both.
  const auto slack = [work](mpfr_srcptr v) {
    return std::ldexp(std::fabs(mpfr_get_d(v, MPFR_RNDA)), static_cast<int>(3 - work));
  };
  ApproxReal sin_v(s, slack(s), prec);
  ApproxReal cos_v(c, slack(c), prec);
  mpfr_clears(t, s, c, static_cast<mpfr_ptr>(nullptr));

  if (6 * num == den) sin_v = ApproxReal(Rational(1, 2), prec);
  return {std::move(sin_v), std::move(cos_v)};
}

PiFractionTable::PiFractionTable(std::int64_t b, Precision prec)
    : b_(b), prec_(prec), values_(static_cast<std::size_t>(b) + 1) {
  if (b < 1) throw DomainError("table denominator must be positive");
}

SignedRef PiFractionTable::half_angle(std::int64_t c) {
  const std::int64_t period = 4 * b_;
  c = mod_floor(c, period);
  int sign = 1;
  if (c >= 2 * b_) {
    c -= 2 * b_;
    sign = -1;
  }
  if (c > b_) c = 2 * b_ - c;
  return SignedRef{&entry(c), sign, c == 0};
}

const ApproxReal& PiFractionTable::entry(std::int64_t i) {
  auto& slot = values_[static_cast<std::size_t>(i)];
  if (slot) return *slot;
  // sin(pi i/(2b)) and sin(pi (b-i)/(2b)) = cos(pi i/(2b)) share one call.
  const std::int64_t j = (2 * i <= b_) ? i : b_ - i;
  auto [s, c] = sin_cos_pi_octant(Integer(static_cast<long>(j)),
                                  Integer(static_cast<long>(2 * b_)), prec_);
  values_[static_cast<std::size_t>(j)] = std::move(s);
  values_[static_cast<std::size_t>(b_ - j)] = std::move(c);
  return *slot;
}

}  // namespace detail

namespace {

using detail::PiFractionTable;
using detail::SignedRef;

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 30;

void check_modulus(std::int64_t p) {
  if (p < 2) throw DomainError("modulus p must be at least 2, got " + std::to_string(p));
  if (p > kMaxModulus) throw DomainError("modulus p above 2^30 is not supported");
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return gcd(Integer(static_cast<long>(a)), Integer(static_cast<long>(b))).get_si();
}

// Folds factor^e into the numerator or denominator of a summand.
void apply_power(ApproxReal& num, ApproxReal& den, int& sign, const SignedRef& f, std::int64_t e,
                 bool reciprocal) {
  if (e == 0) return;
  const bool into_den = (e > 0) == reciprocal;
  const std::int64_t mag = e < 0 ? -e : e;
  if (into_den && f.is_zero) throw PoleError("summand has a zero denominator");
  if (f.sign < 0 && (mag & 1)) sign = -sign;
  ApproxReal& target = into_den ? den : num;
  if (mag == 1) {
    target *= *f.magnitude;
  } else {
    target *= pow(*f.magnitude, static_cast<long>(mag));
  }
}

void accumulate(ApproxReal& acc, ApproxReal num, const ApproxReal& den, int sign) {
  if (!(den.is_exact() && mpfr_cmp_ui(den.mid(), 1) == 0)) num /= den;
  if (sign < 0) {
    acc -= num;
  } else {
    acc += num;
  }
}

}  // namespace

ApproxReal sin_pi_rational(const Integer& a, const Integer& b, Precision prec) {
  if (b <= 0) throw DomainError("sin_pi_rational: denominator must be positive");
  Integer r;
  const Integer two_b = 2 * b;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), two_b.get_mpz_t());
  bool negate = false;
  if (r >= b) {
    r -= b;
    negate = true;
  }
  if (2 * r > b) r = b - r;
  // Now sin(pi r / b) with r / b in [0, 1/2].
  ApproxReal out = (4 * r <= b) ? detail::sin_cos_pi_octant(r, b, prec).first
                                : detail::sin_cos_pi_octant(Integer(b - 2 * r), two_b, prec).second;
  return negate ? -out : out;
}

ApproxReal cos_pi_rational(const Integer& a, const Integer& b, Precision prec) {
  if (b <= 0) throw DomainError("cos_pi_rational: denominator must be positive");
  return sin_pi_rational(Integer(b - 2 * a), Integer(2 * b), prec);
}

SumSpec reduce_spec(const SumSpec& spec) {
  check_modulus(spec.p);
  SumSpec out = spec;
  out.q = mod_floor(spec.q, 2 * spec.p);
  out.r = mod_floor(spec.r, 2 * spec.p);
  return out;
}

bool parity_forces_zero(const SumSpec& spec) {
  const std::int64_t rn = mod_floor(spec.r, 2) * mod_floor(spec.n, 2);
  const std::int64_t qm = mod_floor(spec.q + 1, 2) * mod_floor(spec.m, 2);
  return ((rn + qm) & 1) == 1;
}

ApproxReal eval_sum_general(const SumSpec& spec, Precision prec) {
  const SumSpec s = reduce_spec(spec);
  const std::int64_t p = s.p;
  if (s.m > 0 && gcd64(p, s.q) != 1) {
    throw PoleError("csc(pi k q / p) has a pole: gcd(p, q) = " + std::to_string(gcd64(p, s.q)));
  }
  PiFractionTable table(p, prec);
  ApproxReal acc(prec);
  for (std::int64_t k = 1; k < p; ++k) {
    ApproxReal num(1, prec);
    ApproxReal den(1, prec);
    int sign = 1;
    if (s.n != 0) apply_power(num, den, sign, table.cos_pi(k * s.r % (2 * p)), s.n, false);
    if (s.m != 0) apply_power(num, den, sign, table.sin_pi(k * s.q % (2 * p)), s.m, true);
    if (s.l != 0) apply_power(num, den, sign, table.sin_pi(k), s.l, true);
    accumulate(acc, std::move(num), den, sign);
  }
  return acc;
}

ApproxReal eval_cot_product_sum(std::int64_t p, std::int64_t q, Precision prec) {
  check_modulus(p);
  if (gcd64(p, q) != 1) throw PoleError("cot(pi k q / p) has a pole: gcd(p, q) != 1");
  const std::int64_t qr = mod_floor(q, 2 * p);
  PiFractionTable table(p, prec);
  ApproxReal acc(prec);
  for (std::int64_t k = 1; k < p; ++k) {
    const std::int64_t kq = k * qr % (2 * p);
    ApproxReal num(1, prec);
    ApproxReal den(1, prec);
    int sign = 1;
    apply_power(num, den, sign, table.cos_pi(kq), 1, false);
    apply_power(num, den, sign, table.cos_pi(k), 1, false);
    apply_power(num, den, sign, table.sin_pi(kq), 1, true);
    apply_power(num, den, sign, table.sin_pi(k), 1, true);
    accumulate(acc, std::move(num), den, sign);
  }
  return acc;
}

std::string_view to_string(PowerKind kind) {
  switch (kind) {
    case PowerKind::cosecant: return "cosecant";
    case PowerKind::secant: return "secant";
    case PowerKind::sine_power: return "sine-power";
  }
  return "?";
}

std::string_view to_string(SumRange range) {
  switch (range) {
    case SumRange::from_k1: return "from_k1";
    case SumRange::from_k0: return "from_k0";
    case SumRange::half_range: return "half_range";
  }
  return "?";
}

std::int64_t half_range_order(std::int64_t p) { return (p % 2 == 1) ? (p - 1) / 2 : (p - 2) / 2; }

ApproxReal eval_power_sum(std::int64_t p, std::int64_t m, PowerKind kind, SumRange range,
                          Precision prec) {
  check_modulus(p);
  if (m < 1) throw DomainError("power sum exponent m must be at least 1");
  std::int64_t first = 1;
  std::int64_t last = p - 1;
  if (range == SumRange::from_k0) first = 0;
  if (range == SumRange::half_range) last = half_range_order(p);

  if (kind == PowerKind::cosecant && first == 0) {
    throw PoleError("csc(0) is a pole; the cosecant sum cannot start at k = 0");
  }
  if (kind == PowerKind::secant && p % 2 == 0 && first <= p / 2 && p / 2 <= last) {
    throw PoleError("sec(pi/2) is a pole; secant sums need odd p");
  }

  PiFractionTable table(p, prec);
  ApproxReal acc(prec);
  for (std::int64_t k = first; k <= last; ++k) {
    ApproxReal num(1, prec);
    ApproxReal den(1, prec);
    int sign = 1;
    switch (kind) {
      case PowerKind::cosecant:
        apply_power(num, den, sign, table.sin_pi(k), 2 * m, true);
        break;
      case PowerKind::secant:
        apply_power(num, den, sign, table.cos_pi(k), -2 * m, false);
        break;
      case PowerKind::sine_power:
        apply_power(num, den, sign, table.sin_pi(k), 2 * m, false);
        break;
    }
    accumulate(acc, std::move(num), den, sign);
  }
  return acc;
}

}  // namespace trigsum
