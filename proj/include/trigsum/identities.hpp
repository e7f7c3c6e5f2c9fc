#pragma once

/**
 * @file identities.hpp
 * @brief Registry of printed identities and their mechanical adjudication.
 *
 * Each Identity pairs a left-hand and a right-hand evaluator with a domain
 * predicate and a sweep enumerator. Evaluators return either an exact
 * Rational or an ApproxReal enclosure. An Identity may carry a corrected
 * right-hand side; the as-printed form is never altered and the
 * correction gets its own verdict.
 *
 * Classification of a single point:
 *   exact vs exact     PASS iff lhs == rhs, FAIL otherwise.
 *   otherwise          residual r = |lhs - rhs| as an enclosure,
 *                      scale s = max(1, |lhs|, |rhs|);
 *                      PASS iff sup r <= 1e-8 s (and, when one side is an
 *                      exact Rational, the other side's ball contains it),
 *                      FAIL iff inf r >= 1e-3 s, INCONCLUSIVE otherwise.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "trigsum/approx.hpp"
#include "trigsum/exact.hpp"

namespace trigsum {

using Value = std::variant<Rational, ApproxReal>;

bool is_exact(const Value& v);
/// "n/d" for exact values, "<30 digits>±<bound>" for enclosures.
std::string render(const Value& v);

/// Named integer parameters in a fixed per-identity order.
class ParamPoint {
 public:
  ParamPoint() = default;
  ParamPoint(std::initializer_list<std::pair<std::string, std::int64_t>> entries)
      : entries_(entries) {}

  std::int64_t at(const std::string& name) const;
  bool has(const std::string& name) const;
  void set(const std::string& name, std::int64_t value);
  const std::vector<std::pair<std::string, std::int64_t>>& entries() const { return entries_; }
  /// "p=3;q=1"
  std::string to_string() const;

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
  friend auto operator<=>(const ParamPoint&, const ParamPoint&) = default;

 private:
  std::vector<std::pair<std::string, std::int64_t>> entries_;
};

enum class Exactness { exact, approximate };
enum class Status { pass, fail, inconclusive };

std::string_view to_string(Status s);
std::string_view to_string(Exactness e);

/// Dedekind-level identities only involve s(q, p); trigonometric-level
/// ones need finite-sum enclosures and are swept over a smaller range.
enum class Level { dedekind, trigonometric };

using Evaluator = std::function<Value(const ParamPoint&, Precision)>;

/// One reading of an identity's left-hand side (used where the printed
/// summation range is ambiguous).
struct Reading {
  std::string name;
  Evaluator lhs;
};

struct Identity {
  std::string id;
  /// Human label and the statement in ASCII notation.
  std::string title;
  std::string statement;
  std::vector<std::string> param_names;
  Level level = Level::trigonometric;
  Exactness exactness = Exactness::approximate;
  std::function<bool(const ParamPoint&)> in_domain;
  /// All domain points with every modulus <= p_max.
  std::function<std::vector<ParamPoint>(std::int64_t p_max)> enumerate;
  Evaluator lhs;
  Evaluator rhs;
  std::optional<Evaluator> corrected_rhs;
  std::string corrected_statement;
  /// When non-empty, lhs is ignored and each reading is tried in turn.
  std::vector<Reading> readings;
};

struct CorrectedOutcome {
  Value rhs;
  Value residual;
  Value scale;
  Status status;
};

struct Verdict {
  std::string identity;
  ParamPoint params;
  Value lhs;
  Value rhs;
  Value residual;
  Value scale;
  Status status = Status::inconclusive;
  std::optional<CorrectedOutcome> corrected;
  /// Name of the left-hand reading that matched, for ambiguous-range
  /// identities.
  std::optional<std::string> reading;
};

struct IdentitySummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inconclusive = 0;
  std::size_t corrected_pass = 0;
  std::size_t corrected_fail = 0;
  std::size_t corrected_inconclusive = 0;
  /// Set when every verdict of an ambiguous-range identity matched the
  /// same reading.
  std::optional<std::string> consistent_reading;
};

/// Natural ordering on identity ids: EQ4 < EQ10 < EQ12 < EQ12bis < PARITY.
bool id_less(const std::string& a, const std::string& b);

struct IdLess {
  bool operator()(const std::string& a, const std::string& b) const { return id_less(a, b); }
};

struct VerificationReport {
  std::vector<Verdict> verdicts;
  std::map<std::string, IdentitySummary, IdLess> summary;
  /// Identities with at least one FAIL verdict, in id order.
  std::vector<std::string> errata;
};

/// Classification thresholds relative to scale.
inline constexpr double kPassThreshold = 1e-8;
inline constexpr double kFailThreshold = 1e-3;

const std::vector<Identity>& builtin_catalog();
/// Throws DomainError for an unknown id.
const Identity& find_identity(const std::string& id);

/// Evaluates both sides at one point. Throws DomainError when the point
/// is outside the identity's domain.
Verdict verify_one(const Identity& identity, const ParamPoint& params,
                   Precision prec = kDefaultPrecision);

/// Verdict for every enumerated point of each identity, sorted by id and
/// then parameters. An empty id list means the whole catalog.
VerificationReport sweep(const std::vector<std::string>& ids, std::int64_t p_max,
                         Precision prec = kDefaultPrecision);

/// Ids of the identities that carry a corrected right-hand side.
std::vector<std::string> corrected_ids();

/// Sweeps every identity with a corrected form (Dedekind-level ones up to
/// p_max, trigonometric ones up to min(p_max, 40)) and reports the
/// corrected verdicts in the status field. Requires p_max >= 10.
VerificationReport corrected_candidates_validation(std::int64_t p_max,
                                                   Precision prec = kDefaultPrecision);

/// Whether every verdict's corrected outcome is PASS.
bool all_corrected_pass(const VerificationReport& report);

/// Rebuilds summary counts and the errata list from the verdicts.
void summarize(VerificationReport& report);

}  // namespace trigsum
