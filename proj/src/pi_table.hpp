#pragma once

// Internal: cached sin/cos values at rational multiples of pi with a
// fixed denominator.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "trigsum/approx.hpp"
#include "trigsum/exact.hpp"

namespace trigsum::detail {

/// sin(pi x) and cos(pi x) for x = num/den in [0, 1/4].
std::pair<ApproxReal, ApproxReal> sin_cos_pi_octant(const Integer& num, const Integer& den,
                                                    Precision prec);

/// A nonnegative cached magnitude with the sign it carries at the query
/// angle.
struct SignedRef {
  const ApproxReal* magnitude;
  int sign;
  bool is_zero;
};

/// Lazily filled table of sin(pi i / (2b)) for i in [0, b]. Every sine
/// and cosine of pi a / b folds onto one entry, and each fill produces
/// the complementary entry b - i for free.
class PiFractionTable {
 public:
  PiFractionTable(std::int64_t b, Precision prec);

  /// sin(pi a / b).
  SignedRef sin_pi(std::int64_t a) { return half_angle(2 * mod_floor(a, 2 * b_)); }
  /// cos(pi a / b).
  SignedRef cos_pi(std::int64_t a) { return half_angle(b_ - 2 * mod_floor(a, 2 * b_)); }

  std::int64_t denominator() const { return b_; }

 private:
  /// sin(pi c / (2b)) for any integer c.
  SignedRef half_angle(std::int64_t c);
  const ApproxReal& entry(std::int64_t i);

  std::int64_t b_;
  Precision prec_;
  std::vector<std::optional<ApproxReal>> values_;
};

}  // namespace trigsum::detail
