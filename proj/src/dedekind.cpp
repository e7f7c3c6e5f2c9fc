#include "trigsum/dedekind.hpp"

#include <stdexcept>

#include "trigsum/errors.hpp"

namespace trigsum {

namespace {

void require_coprime(const Integer& q, const Integer& p) {
  if (p < 1) throw DomainError("dedekind sum needs p >= 1, got p = " + p.get_str());
  if (gcd(p, q) != 1) {
    throw DomainError("dedekind sum needs gcd(p, q) = 1, got p = " + p.get_str() +
                      ", q = " + q.get_str());
  }
}

void require_q_one_mod_p(const Integer& p, const Integer& q) {
  if (p < 1) throw DomainError("closed form needs p >= 1");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  if (r != (p == 1 ? 0 : 1)) {
    throw DomainError("closed form needs q = 1 (mod p), got p = " + p.get_str() +
                      ", q = " + q.get_str());
  }
}

}  // namespace

Rational dedekind_def(const Integer& q, const Integer& p) {
  require_coprime(q, p);
  Rational by_sawtooth;
  Rational by_frac = Rational(Integer(1 - p), Integer(4));
  for (Integer k = 1; k < p; ++k) {
    const Rational x(Integer(k * q), p);
    const Rational y(k, p);
    by_sawtooth += sawtooth(x) * sawtooth(y);
    by_frac += frac(x) * frac(y);
  }
  if (by_sawtooth != by_frac) {
    throw std::logic_error("dedekind_def: sawtooth and fractional-part forms disagree at p = " +
                           p.get_str() + ", q = " + q.get_str());
  }
  return by_sawtooth;
}

Rational dedekind_fast(const Integer& q_in, const Integer& p_in) {
  require_coprime(q_in, p_in);
  // Invariant: s(q_in, p_in) = acc + sign * s(q, p).
  Rational acc;
  int sign = 1;
  Integer p = p_in;
  Integer q;
  mpz_fdiv_r(q.get_mpz_t(), q_in.get_mpz_t(), p.get_mpz_t());
  while (p > 1) {
    if (2 * q > p) {
      q = p - q;
      sign = -sign;
    }
    // s(q, p) = reciprocity_rhs(p, q) - s(p, q), and s(p, q) = s(p mod q, q).
    const Rational step = reciprocity_rhs(p, q);
    acc += sign > 0 ? step : -step;
    sign = -sign;
    Integer next_q;
    mpz_fdiv_r(next_q.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    p = q;
    q = next_q;
  }
  return acc;
}

Rational dedekind_closed_q1(const Integer& p, const Integer& q) {
  require_q_one_mod_p(p, q);
  return Rational(Integer((p - 1) * (p - 2)), Integer(12 * p));
}

Rational dedekind_closed_pq(const Integer& p, const Integer& q) {
  require_q_one_mod_p(p, q);
  if (q < 1) throw DomainError("closed form needs q >= 1");
  const Rational pr(p);
  const Rational qr(q);
  return Rational(1, 12) * ((qr - 2) / pr + pr / qr + Rational(1) / (pr * qr) - pr);
}

Rational reciprocity_rhs(const Integer& p, const Integer& q) {
  const Rational pr(p);
  const Rational qr(q);
  return Rational(-1, 4) + Rational(1, 12) * (qr / pr + pr / qr + Rational(1) / (pr * qr));
}

}  // namespace trigsum
