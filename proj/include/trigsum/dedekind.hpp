#pragma once

// Dedekind sums s(q, p) = sum_{k=1}^{p-1} ((k q / p)) ((k / p)).

#include "trigsum/exact.hpp"

namespace trigsum {

/// s(q, p) straight from the sawtooth definition. The fractional-part
/// form (1 - p)/4 + sum {kq/p}{k/p} is evaluated alongside and must
/// agree exactly (std::logic_error otherwise). Requires p >= 1 and
/// gcd(p, q) = 1; s(q, 1) = 0.
Rational dedekind_def(const Integer& q, const Integer& p);

/// Same value in O(log p) steps: reduce q mod p, reflect q -> p - q when
/// q > p/2 (s is odd in q), then swap with the reciprocity law.
Rational dedekind_fast(const Integer& q, const Integer& p);

/// (p-1)(p-2) / (12 p), the value of s(q, p) when q = 1 (mod p).
Rational dedekind_closed_q1(const Integer& p, const Integer& q);

/// (1/12) ((q-2)/p + p/q + 1/(pq) - p), the value of s(p, q) when
/// q = 1 (mod p) and q >= 1.
Rational dedekind_closed_pq(const Integer& p, const Integer& q);

/// Right-hand side of the reciprocity law:
/// -1/4 + (1/12)(q/p + p/q + 1/(pq)).
Rational reciprocity_rhs(const Integer& p, const Integer& q);

}  // namespace trigsum
