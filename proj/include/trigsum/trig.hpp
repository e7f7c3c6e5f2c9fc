#pragma once

/**
 * @file trig.hpp
 * @brief Enclosures of finite trigonometric sums over k = 1..p-1.
 *
 * Every angle handled here is pi times an exact rational. Arguments are
 * reduced modulo 2 in integer arithmetic before any floating-point work,
 * so the error of a term does not depend on how large k*q or k*r gets.
 */

#include <cstdint>
#include <string_view>

#include "trigsum/approx.hpp"
#include "trigsum/exact.hpp"

namespace trigsum {

/// Parameters of
///   sum_{k=1}^{p-1} cos^n(pi k r / p) csc^m(pi k q / p) csc^l(pi k / p).
/// Negative exponents are allowed and mean the reciprocal function.
struct SumSpec {
  std::int64_t n = 1;
  std::int64_t m = 1;
  std::int64_t l = 1;
  std::int64_t p = 2;
  std::int64_t q = 1;
  std::int64_t r = 0;

  friend bool operator==(const SumSpec&, const SumSpec&) = default;
};

/// sin(pi a / b), b > 0. Exact for the rational values 0, +-1/2, +-1;
/// otherwise within one ulp of the true value.
ApproxReal sin_pi_rational(const Integer& a, const Integer& b, Precision prec = kDefaultPrecision);
/// cos(pi a / b), b > 0, same contract as sin_pi_rational.
ApproxReal cos_pi_rational(const Integer& a, const Integer& b, Precision prec = kDefaultPrecision);

/// Replaces q and r by their residues in [0, 2p). The summand is
/// 2p-periodic in both, so the sum is unchanged.
SumSpec reduce_spec(const SumSpec& spec);

/// Whether r*n + (q+1)*m is odd, in which case the k <-> p-k symmetry
/// forces the sum to vanish.
bool parity_forces_zero(const SumSpec& spec);

/// Enclosure of the general sum. Throws PoleError when a summand has a
/// zero denominator (m > 0 with gcd(p, q) > 1, or n < 0 with a vanishing
/// cosine) and DomainError when p < 2.
ApproxReal eval_sum_general(const SumSpec& spec, Precision prec = kDefaultPrecision);

/// sum_{k=1}^{p-1} cot(pi k q / p) cot(pi k / p). Requires gcd(p, q) = 1.
ApproxReal eval_cot_product_sum(std::int64_t p, std::int64_t q, Precision prec = kDefaultPrecision);

enum class PowerKind { cosecant, secant, sine_power };
enum class SumRange { from_k1, from_k0, half_range };

std::string_view to_string(PowerKind kind);
std::string_view to_string(SumRange range);

/// Upper limit of the half range: (p-1)/2 for odd p, (p-2)/2 for even p.
std::int64_t half_range_order(std::int64_t p);

/// Brute-force sum of csc^{2m}, sec^{2m} or sin^{2m} at pi k / p over the
/// requested k range. Throws PoleError if the range meets a pole
/// (k = 0 for cosecant, k = p/2 for secant).
ApproxReal eval_power_sum(std::int64_t p, std::int64_t m, PowerKind kind, SumRange range,
                          Precision prec = kDefaultPrecision);

}  // namespace trigsum
