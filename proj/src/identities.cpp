#include "trigsum/identities.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "trigsum/dedekind.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/trig.hpp"

namespace trigsum {

// ---------------------------------------------------------------------------
// Values and parameters

bool is_exact(const Value& v) { return std::holds_alternative<Rational>(v); }

std::string render(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->to_string();
  return std::get<ApproxReal>(v).to_string();
}

std::int64_t ParamPoint::at(const std::string& name) const {
  for (const auto& [k, v] : entries_) {
    if (k == name) return v;
  }
  throw DomainError("missing parameter '" + name + "'");
}

bool ParamPoint::has(const std::string& name) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.first == name; });
}

void ParamPoint::set(const std::string& name, std::int64_t value) {
  for (auto& [k, v] : entries_) {
    if (k == name) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(name, value);
}

std::string ParamPoint::to_string() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    if (!out.empty()) out += ';';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string_view to_string(Exactness e) {
  return e == Exactness::exact ? "exact" : "approximate";
}

bool id_less(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ei = i;
      std::size_t ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      const auto na = std::stoll(a.substr(i, ei - i));
      const auto nb = std::stoll(b.substr(j, ej - j));
      if (na != nb) return na < nb;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return (a.size() - i) < (b.size() - j);
}

// ---------------------------------------------------------------------------
// Comparison

namespace {

struct Comparison {
  Value residual;
  Value scale;
  Status status;
};

ApproxReal to_ball(const Value& v, Precision prec) {
  if (const auto* r = std::get_if<Rational>(&v)) return ApproxReal(*r, prec);
  return std::get<ApproxReal>(v);
}

Comparison compare(const Value& lhs, const Value& rhs, Precision prec) {
  if (is_exact(lhs) && is_exact(rhs)) {
    const auto& l = std::get<Rational>(lhs);
    const auto& r = std::get<Rational>(rhs);
    Rational residual = abs(l - r);
    Rational scale = std::max({Rational(1), abs(l), abs(r)});
    const Status st = residual.is_zero() ? Status::pass : Status::fail;
    return {std::move(residual), std::move(scale), st};
  }

  const ApproxReal l = to_ball(lhs, prec);
  const ApproxReal r = to_ball(rhs, prec);
  ApproxReal residual = abs(l - r);

  ApproxReal scale(1, prec);
  for (const ApproxReal* side : {&l, &r}) {
    if (mpfr_cmpabs(side->mid(), scale.mid()) > 0) scale = abs(*side);
  }
  const double s = scale.to_double();

  bool enclosed = true;
  if (is_exact(lhs)) enclosed = r.contains(std::get<Rational>(lhs));
  if (is_exact(rhs)) enclosed = l.contains(std::get<Rational>(rhs));

  Status st = Status::inconclusive;
  if (residual.mag_upper() <= kPassThreshold * s && enclosed) {
    st = Status::pass;
  } else if (residual.mag_lower() >= kFailThreshold * s) {
    st = Status::fail;
  }
  return {std::move(residual), std::move(scale), st};
}

// ---------------------------------------------------------------------------
// Shared evaluators

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }
Rational rat(std::int64_t v) { return Rational(static_cast<long>(v)); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return gcd(big(a), big(b)).get_si(); }

Rational s_def(std::int64_t q, std::int64_t p) { return dedekind_def(big(q), big(p)); }

ApproxReal general_sum(std::int64_t n, std::int64_t m, std::int64_t l, std::int64_t p,
                       std::int64_t q, std::int64_t r, Precision prec) {
  return eval_sum_general(SumSpec{n, m, l, p, q, r}, prec);
}

// S(p, q, q+1) + S(p, q, q-1), the combination that equals 8p s(q, p).
ApproxReal shifted_pair(std::int64_t p, std::int64_t q, Precision prec) {
  return general_sum(1, 1, 1, p, q, q + 1, prec) + general_sum(1, 1, 1, p, q, q - 1, prec);
}

ApproxReal scaled(std::int64_t c, const ApproxReal& x) { return ApproxReal(c, x.precision()) * x; }

Rational two_thirds_sum_of_squares(std::int64_t p, std::int64_t q) {
  return Rational(2, 3) * (rat(p) * rat(p) + rat(q) * rat(q) + Rational(1));
}

// 2^{1-2m} p (C(2m-1, m-1) + sum_{n=1}^{floor(m/p)} (-1)^{pn} C(2m, m - pn)).
Rational sine_power_closed_form(std::int64_t p, std::int64_t m) {
  Integer inner = binomial(big(2 * m - 1), big(m - 1));
  if (m >= p) {
    for (std::int64_t n = 1; n <= m / p; ++n) {
      const Integer term = binomial(big(2 * m), big(m - p * n));
      if ((p * n) % 2 == 0) {
        inner += term;
      } else {
        inner -= term;
      }
    }
  }
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * m - 1));
  return Rational(Integer(big(p) * inner), two_pow);
}

// p sum_{k=1}^{2m-1} (-1)^{m+k} C(m-1+kp, 2m-1) sum_{j=k}^{2m-1} C(2m, j+1).
Rational secant_closed_form(std::int64_t p, std::int64_t m) {
  Integer total = 0;
  for (std::int64_t k = 1; k <= 2 * m - 1; ++k) {
    Integer tail = 0;
    for (std::int64_t j = k; j <= 2 * m - 1; ++j) tail += binomial(big(2 * m), big(j + 1));
    const Integer term = binomial(big(m - 1 + k * p), big(2 * m - 1)) * tail;
    if ((m + k) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return Rational(Integer(big(p) * total));
}

// ---------------------------------------------------------------------------
// Domain enumerators

using Points = std::vector<ParamPoint>;

// p in [2, p_max], q in [q_min, p), gcd(p, q) = 1.
Points coprime_below(std::int64_t p_max, std::int64_t q_min) {
  Points out;
  for (std::int64_t p = 2; p <= p_max; ++p) {
    for (std::int64_t q = q_min; q < p; ++q) {
      if (gcd64(p, q) == 1) out.push_back({{"p", p}, {"q", q}});
    }
  }
  return out;
}

// p in [p_min, p_max], q in [q_min, p_max], gcd(p, q) = 1.
Points coprime_square(std::int64_t p_min, std::int64_t q_min, std::int64_t p_max) {
  Points out;
  for (std::int64_t p = p_min; p <= p_max; ++p) {
    for (std::int64_t q = q_min; q <= p_max; ++q) {
      if (gcd64(p, q) == 1) out.push_back({{"p", p}, {"q", q}});
    }
  }
  return out;
}

// q in {p+1, 2p+1, 3p+1} for each p in [2, p_max].
Points q_one_mod_p(std::int64_t p_max) {
  Points out;
  for (std::int64_t p = 2; p <= p_max; ++p) {
    for (std::int64_t t = 1; t <= 3; ++t) out.push_back({{"p", p}, {"q", t * p + 1}});
  }
  return out;
}

Points odd_moduli(std::int64_t p_max) {
  Points out;
  for (std::int64_t p = 3; p <= p_max; p += 2) out.push_back({{"p", p}});
  return out;
}

bool coprime_pair(const ParamPoint& x, std::int64_t p_min, std::int64_t q_min) {
  const auto p = x.at("p");
  const auto q = x.at("q");
  return p >= p_min && q >= q_min && gcd64(p, q) == 1;
}

bool q_below_p(const ParamPoint& x, std::int64_t q_min) {
  return coprime_pair(x, 2, q_min) && x.at("q") < x.at("p");
}

bool q_one_mod_p_domain(const ParamPoint& x, std::int64_t q_min) {
  const auto p = x.at("p");
  const auto q = x.at("q");
  return p >= 2 && q >= q_min && mod_floor(q, p) == 1;
}

bool odd_modulus(const ParamPoint& x) {
  const auto p = x.at("p");
  return p >= 3 && p % 2 == 1;
}

constexpr std::int64_t kSinePowerMaxM = 25;
constexpr std::int64_t kSecantMaxM = 4;

// ---------------------------------------------------------------------------
// Catalog

std::vector<Identity> make_catalog() {
  std::vector<Identity> c;

  c.push_back(Identity{
      .id = "EQ4",
      .title = "Complement reciprocity for s(p, p-q)",
      .statement = "s(p,p-q) = s(q,p) + 1/4 + (-6p^3+6p^2q+2p^2+q^2-2pq+1)/(12p(p-q))",
      .param_names = {"p", "q"},
      .level = Level::dedekind,
      .exactness = Exactness::exact,
      .in_domain = [](const ParamPoint& x) { return q_below_p(x, 1); },
      .enumerate = [](std::int64_t pm) { return coprime_below(pm, 1); },
      .lhs = [](const ParamPoint& x, Precision) -> Value {
        return s_def(x.at("p"), x.at("p") - x.at("q"));
      },
      .rhs = [](const ParamPoint& x, Precision) -> Value {
        const auto p = x.at("p");
        const auto q = x.at("q");
        const Rational pr = rat(p);
        const Rational qr = rat(q);
        const Rational poly = Rational(-6) * pr * pr * pr + Rational(6) * pr * pr * qr +
                              Rational(2) * pr * pr + qr * qr - Rational(2) * pr * qr + Rational(1);
        return s_def(q, p) + Rational(1, 4) + poly / (Rational(12) * pr * rat(p - q));
      },
      .corrected_rhs = [](const ParamPoint& x, Precision) -> Value {
        const auto p = x.at("p");
        const auto q = x.at("q");
        const Rational pr = rat(p);
        const Rational d = rat(p - q);
        return s_def(q, p) - Rational(1, 4) +
               Rational(1, 12) * (pr / d + d / pr + Rational(1) / (pr * d));
      },
      .corrected_statement = "s(p,p-q) = s(q,p) - 1/4 + (1/12)(p/(p-q) + (p-q)/p + 1/(p(p-q)))",
  });

  c.push_back(Identity{
      .id = "EQ5",
      .title = "Dedekind sum as a cotangent product sum",
      .statement = "s(q,p) = (1/(4p)) sum_{k=1}^{p-1} cot(pi k q/p) cot(pi k/p)",
      .param_names = {"p", "q"},
      .level = Level::trigonometric,
      .in_domain = [](const ParamPoint& x) { return coprime_pair(x, 2, 1); },
      .enumerate = [](std::int64_t pm) { return coprime_square(2, 1, pm); },
      .lhs = [](const ParamPoint& x, Precision) -> Value { return s_def(x.at("q"), x.at("p")); },
      .rhs = [](const ParamPoint& x, Precision prec) -> Value {
        const auto p = x.at("p");
        return eval_cot_product_sum(p, x.at("q"), prec) / ApproxReal(4 * p, prec);
      },
  });

  c.push_back(Identity{
      .id = "EQ6",
      .title = "Reciprocity for the shifted cosecant sums",
      .statement = "q[S(p,q,q+1)+S(p,q,q-1)] + p[S(q,p,p+1)+S(q,p,p-1)] = -2pq + (2/3)(p^2+q^2+1)",
      .param_names = {"p", "q"},
      .level = Level::trigonometric,
      .in_domain = [](const ParamPoint& x) { return coprime_pair(x, 2, 2); },
      .enumerate = [](std::int64_t pm) { return coprime_square(2, 2, pm); },
      .lhs = [](const ParamPoint& x, Precision prec) -> Value {
        const auto p = x.at("p");
        const auto q = x.at("q");
        return scaled(q, shifted_pair(p, q, prec)) + scaled(p, shifted_pair(q, p, prec));
      },
      .rhs = [](const ParamPoint& x, Precision) -> Value {
        const auto p = x.at("p");
        const auto q = x.at("q");
        return Rational(-2) * rat(p) * rat(q) + two_thirds_sum_of_squares(p, q);
      },
  });

  c.push_back(Identity{
      .id = "EQ7",
      .title = "Reciprocity against the complementary sums",
      .statement = "p[S(q,p,p+1)+S(q,p,p-1)] - q[S(p,p-q,p-q+1)+S(p,p-q,p-q-1)] = 2pq - 4p^2q + (2/3)(p^2+q^2+1)",
      .param_names = {"p", "q"},
      .level = Level::trigonometric,
      .in_domain = [](const ParamPoint& x) { return q_below_p(x, 2); },
      .enumerate = [](std::int64_t pm) { return coprime_below(pm, 2); },
      .lhs = [](const ParamPoint& x, Precision prec) -> Value {
        const auto p = x.at("p");
        const auto q = x.at("q");
        return scaled(p, shifted_pair(q, p, prec)) - scaled(q, shifted_pair(p, p - q, prec));
      },
      .rhs = [](const ParamPoint& x, Precision) -> Value {
        const Rational p = rat(x.at("p"));
        const Rational q = rat(x.at("q"));
        return Rational(2) * p * q - Rational(4) * p * p * q +
               two_thirds_sum_of_squares(x.at("p"), x.at("q"));
      },
      .corrected_rhs = [](const ParamPoint& x, Precision) -> Value {
        const auto p = x.at("p");
        const auto q = x.at("q");
        return Rational(-2) * rat(p) * rat(q) + two_thirds_sum_of_squares(p, q);
      },
      .corrected_statement = "p[S(q,p,p+1)+S(q,p,p-1)] - q[S(p,p-q,p-q+1)+S(p,p-q,p-q-1)] = -2pq + (2/3)(p^2+q^2+1)",
  });

  c.push_back(Identity{
      .id = "EQ8",
      .title = "Sum of the four shifted sums",
      .statement = "S(p,q,q+1)+S(p,q,q-1)+S(p,p-q,p-q+1)+S(p,p-q,p-q-1) = 4pq(p-1)",
      .param_names = {"p", "q"},
      .level = Level::trigonometric,
      .in_domain = [](const ParamPoint& x) { return q_below_p(x, 1); },
      .enumerate = [](std::int64_t pm) { return coprime_below(pm, 1); },
      .lhs = [](const ParamPoint& x, Precision prec) -> Value {
        const auto p = x.at("p");
        const auto q = x.at("q");
        return shifted_pair(p, q, prec) + shifted_pair(p, p - q, prec);
      },
      .rhs = [](const ParamPoint& x, Precision) -> Value {
        const auto p = x.at("p");
        return Rational(4) * rat(p) * rat(x.at("q")) * rat(p - 1);
      },
      .corrected_rhs = [](const ParamPoint&, Precision) -> Value { return Rational(0); },
      .corrected_statement = "S(p,q,q+1)+S(p,q,q-1)+S(p,p-q,p-q+1)+S(p,p-q,p-q-1) = 0",
  });

  c.push_back(Identity{
      .id = "EQ9",
      .title = "Shifted sums with modulus q = 1 (mod p)",
      .statement = "S(q,p,p+1)+S(q,p,p-1) = (2/3)(q + p^2/q + 1/q - p^2 - 2)",
      .param_names = {"p", "q"},
      .level = Level::trigonometric,
      .in_domain = [](const ParamPoint& x) { return q_one_mod_p_domain(x, 2); },
      .enumerate = q_one_mod_p,
      .lhs = [](const ParamPoint& x, Precision prec) -> Value {
        return shifted_pair(x.at("q"), x.at("p"), prec);
      },
      .rhs = [](const ParamPoint& x, Precision) -> Value {
        const Rational p = rat(x.at("p"));
        const Rational q = rat(x.at("q"));
        return Rational(2, 3) * (q + p * p / q + Rational(1) / q - p * p - Rational(2));
      },
      .corrected_rhs = [](const ParamPoint& x, Precision) -> Value {
        const Rational p = rat(x.at("p"));
        const Rational q = rat(x.at("q"));
        return Rational(2, 3) * (q - Rational(1)) * (q - Rational(1) - p * p) / p;
      },
      .corrected_statement = "S(q,p,p+1)+S(q,p,p-1) = (2/3)(q-1)(q-1-p^2)/p",
  });

  c.push_back(Identity{
      .id = "EQ10",
      .title = "Sum of squared cosecants",
      .statement = "sum_{k=1}^{p-1} csc^2(pi k/p) = (p^2-1)/3",
      .param_names = {"p"},
      .level = Level::trigonometric,
      .in_domain = [](const ParamPoint& x) { return x.at("p") >= 2; },
      .enumerate =
          [](std::int64_t pm) {
            Points out;
            for (std::int64_t p = 2; p <= pm; ++p) out.push_back({{"p", p}});
            return out;
          },
      .lhs = [](const ParamPoint& x, Precision prec) -> Value {
        return eval_power_sum(x.at("p"), 1, PowerKind::cosecant, SumRange::from_k1, prec);
      },
      .rhs = [](const ParamPoint& x, Precision) -> Value {
        const Rational p = rat(x.at("p"));
        return (p * p - Rational(1)) / Rational(3);
      },
  });

  c.push_back(Identity{
      .id = "EQ11",
      .title = "Cotangent product as a cosine sum",
      .statement = "cot(q b) cot(b) = [cos((q+1) b) + cos((q-1) b)] / (2 sin(q b) sin(b)), b = pi k/p",
      .param_names = {"p", "q", "k"},
      .level = Level::trigonometric,
      .in_domain =
          [](const ParamPoint& x) {
            const auto p = x.at("p");
            const auto q = x.at("q");
            const auto k = x.at("k");
            return p >= 1 && mod_floor(k, p) != 0 && mod_floor(k * q, p) != 0;
          },
      .enumerate =
          [](std::int64_t pm) {
            Points out;
            for (const auto& pq : coprime_below(pm, 1)) {
              out.push_back({{"p", pq.at("p")}, {"q", pq.at("q")}, {"k", 1}});
            }
            return out;
          },
      .lhs = [](const ParamPoint& x, Precision prec) -> Value {
        const Integer p = big(x.at("p"));
        const Integer k = big(x.at("k"));
        const Integer kq = big(x.at("k") * x.at("q"));
        return cos_pi_rational(kq, p, prec) * cos_pi_rational(k, p, prec) /
               (sin_pi_rational(kq, p, prec) * sin_pi_rational(k, p, prec));
      },
      .rhs = [](const ParamPoint& x, Precision prec) -> Value {
        const auto q = x.at("q");
        const auto k = x.at("k");
        const Integer p = big(x.at("p"));
        const ApproxReal top = cos_pi_rational(big(k * (q + 1)), p, prec) +
                               cos_pi_rational(big(k * (q - 1)), p, prec);
        return top / (ApproxReal(2, prec) * sin_pi_rational(big(k * q), p, prec) *
                      sin_pi_rational(big(k), p, prec));
      },
  });

  c.push_back(Identity{
      .id = "EQ12",
      .title = "Cotangent product sum as half the shifted sums",
      .statement = "sum_{k=1}^{p-1} cot(pi k q/p) cot(pi k/p) = (1/2)[S(p,q,q+1)+S(p,q,q-1)]",
      .param_names = {"p", "q"},
      .level = Level::trigonometric,
      .in_domain = [](const ParamPoint& x) { return coprime_pair(x, 2, 1); },
      .enumerate = [](std::int64_t pm) { return coprime_square(2, 1, pm); },
      .lhs = [](const ParamPoint& x, Precision prec) -> Value {
        return eval_cot_product_sum(x.at("p"), x.at("q"), prec);
      },
      .rhs = [](const ParamPoint& x, Precision prec) -> Value {
        return shifted_pair(x.at("p"), x.at("q"), prec) / ApproxReal(2, prec);
      },
  });

  c.push_back(Identity{
      .id = "EQ12bis",
      .title = "Dedekind sum from the shifted sums",
      .statement = "s(q,p) = (1/(8p))[S(p,q,q+1)+S(p,q,q-1)]",
      .param_names = {"p", "q"},
      .level = Level::trigonometric,
      .in_domain = [](const ParamPoint& x) { return coprime_pair(x, 2, 1); },
      .enumerate = [](std::int64_t pm) { return coprime_square(2, 1, pm); },
      .lhs = [](const ParamPoint& x, Precision) -> Value { return s_def(x.at("q"), x.at("p")); },
      .rhs = [](const ParamPoint& x, Precision prec) -> Value {
        const auto p = x.at("p");
        return shifted_pair(p, x.at("q"), prec) / ApproxReal(8 * p, prec);
      },
  });

  c.push_back(Identity{
      .id = "EQ13",
      .title = "Closed form of s(q, p) for q = 1 (mod p)",
      .statement = "s(q,p) = (p-1)(p-2)/(12p)",
      .param_names = {"p", "q"},
      .level = Level::dedekind,
      .exactness = Exactness::exact,
      .in_domain = [](const ParamPoint& x) { return q_one_mod_p_domain(x, 1); },
      .enumerate = q_one_mod_p,
      .lhs = [](const ParamPoint& x, Precision) -> Value { return s_def(x.at("q"), x.at("p")); },
      .rhs = [](const ParamPoint& x, Precision) -> Value {
        return dedekind_closed_q1(big(x.at("p")), big(x.at("q")));
      },
  });

  c.push_back(Identity{
      .id = "EQ14",
      .title = "Closed form of s(p, q) for q = 1 (mod p)",
      .statement = "s(p,q) = (1/12)((q-2)/p + p/q + 1/(pq) - p)",
      .param_names = {"p", "q"},
      .level = Level::dedekind,
      .exactness = Exactness::exact,
      .in_domain = [](const ParamPoint& x) { return q_one_mod_p_domain(x, 1); },
      .enumerate = q_one_mod_p,
      .lhs = [](const ParamPoint& x, Precision) -> Value { return s_def(x.at("p"), x.at("q")); },
      .rhs = [](const ParamPoint& x, Precision) -> Value {
        return dedekind_closed_pq(big(x.at("p")), big(x.at("q")));
      },
  });

  c.push_back(Identity{
      .id = "EQ15",
      .title = "Cubic-cosine sum with q = 2",
      .statement = "2 S_{3,1,1}(p,2,1) - S_{1,1,1}(p,2,1) = p^2/6 - p + 5/2",
      .param_names = {"p"},
      .level = Level::trigonometric,
      .in_domain = odd_modulus,
      .enumerate = odd_moduli,
      .lhs = [](const ParamPoint& x, Precision prec) -> Value {
        const auto p = x.at("p");
        return scaled(2, general_sum(3, 1, 1, p, 2, 1, prec)) - general_sum(1, 1, 1, p, 2, 1, prec);
      },
      .rhs = [](const ParamPoint& x, Precision) -> Value {
        const Rational p = rat(x.at("p"));
        return p * p / Rational(6) - p + Rational(5, 2);
      },
      .corrected_rhs = [](const ParamPoint& x, Precision) -> Value {
        const Rational p = rat(x.at("p"));
        return p * p / Rational(6) - p + Rational(5, 6);
      },
      .corrected_statement = "2 S_{3,1,1}(p,2,1) - S_{1,1,1}(p,2,1) = p^2/6 - p + 5/6",
  });

  c.push_back(Identity{
      .id = "EQ16",
      .title = "Complement of a Dedekind sum",
      .statement = "s(p-q,p) = (p-1)/2 - s(q,p)",
      .param_names = {"p", "q"},
      .level = Level::dedekind,
      .exactness = Exactness::exact,
      .in_domain = [](const ParamPoint& x) { return q_below_p(x, 1); },
      .enumerate = [](std::int64_t pm) { return coprime_below(pm, 1); },
      .lhs = [](const ParamPoint& x, Precision) -> Value {
        return s_def(x.at("p") - x.at("q"), x.at("p"));
      },
      .rhs = [](const ParamPoint& x, Precision) -> Value {
        const auto p = x.at("p");
        return Rational(static_cast<long>(p - 1), 2) - s_def(x.at("q"), p);
      },
      .corrected_rhs = [](const ParamPoint& x, Precision) -> Value {
        return -s_def(x.at("q"), x.at("p"));
      },
      .corrected_statement = "s(p-q,p) = -s(q,p)",
  });

  c.push_back(Identity{
      .id = "EQ17",
      .title = "Dedekind reciprocity",
      .statement = "s(q,p) + s(p,q) = -1/4 + (1/12)(q/p + p/q + 1/(pq))",
      .param_names = {"p", "q"},
      .level = Level::dedekind,
      .exactness = Exactness::exact,
      .in_domain = [](const ParamPoint& x) { return coprime_pair(x, 1, 1); },
      .enumerate = [](std::int64_t pm) { return coprime_square(1, 1, pm); },
      .lhs = [](const ParamPoint& x, Precision) -> Value {
        const auto p = x.at("p");
        const auto q = x.at("q");
        return s_def(q, p) + s_def(p, q);
      },
      .rhs = [](const ParamPoint& x, Precision) -> Value {
        return reciprocity_rhs(big(x.at("p")), big(x.at("q")));
      },
  });

  c.push_back(Identity{
      .id = "PARITY",
      .title = "Vanishing of the general sum for odd r n + (q+1) m",
      .statement = "S_{n,m,l}(p,q,r) = 0 when r n + (q+1) m is odd",
      .param_names = {"n", "m", "l", "p", "q", "r"},
      .level = Level::trigonometric,
      .in_domain =
          [](const ParamPoint& x) {
            const SumSpec s{x.at("n"), x.at("m"), x.at("l"), x.at("p"), x.at("q"), x.at("r")};
            return s.p >= 2 && s.n >= 0 && (s.m <= 0 || gcd64(s.p, s.q) == 1) &&
                   parity_forces_zero(s);
          },
      .enumerate =
          [](std::int64_t pm) {
            Points out;
            for (const auto& pq : coprime_below(pm, 1)) {
              const auto p = pq.at("p");
              const auto q = pq.at("q");
              out.push_back({{"n", 1}, {"m", 1}, {"l", 1}, {"p", p}, {"q", q}, {"r", q}});
              out.push_back({{"n", 3}, {"m", 1}, {"l", 2}, {"p", p}, {"q", q}, {"r", q + 2}});
            }
            return out;
          },
      .lhs = [](const ParamPoint& x, Precision prec) -> Value {
        return general_sum(x.at("n"), x.at("m"), x.at("l"), x.at("p"), x.at("q"), x.at("r"), prec);
      },
      .rhs = [](const ParamPoint&, Precision) -> Value { return Rational(0); },
  });

  c.push_back(Identity{
      .id = "SECANT",
      .title = "Even powers of the secant",
      .statement = "sum sec^{2m}(pi k/p) = p sum_{k=1}^{2m-1} (-1)^{m+k} C(m-1+kp, 2m-1) sum_{j=k}^{2m-1} C(2m, j+1)",
      .param_names = {"p", "m"},
      .level = Level::trigonometric,
      .in_domain = [](const ParamPoint& x) { return odd_modulus(x) && x.at("m") >= 1; },
      .enumerate =
          [](std::int64_t pm) {
            Points out;
            for (std::int64_t p = 3; p <= pm; p += 2) {
              for (std::int64_t m = 1; m <= kSecantMaxM; ++m) out.push_back({{"p", p}, {"m", m}});
            }
            return out;
          },
      .lhs = nullptr,
      .rhs = [](const ParamPoint& x, Precision) -> Value {
        return secant_closed_form(x.at("p"), x.at("m"));
      },
      .readings =
          {
              Reading{"from_k1",
                      [](const ParamPoint& x, Precision prec) -> Value {
                        return eval_power_sum(x.at("p"), x.at("m"), PowerKind::secant,
                                              SumRange::from_k1, prec);
                      }},
              Reading{"from_k0",
                      [](const ParamPoint& x, Precision prec) -> Value {
                        return eval_power_sum(x.at("p"), x.at("m"), PowerKind::secant,
                                              SumRange::from_k0, prec);
                      }},
          },
  });

  c.push_back(Identity{
      .id = "SINEPOW",
      .title = "Even powers of the sine over a full period",
      .statement = "sum_{k=0}^{p-1} sin^{2m}(pi k/p) = 2^{1-2m} p (C(2m-1,m-1) + [m>=p] sum_{n=1}^{floor(m/p)} (-1)^{pn} C(2m, m-pn))",
      .param_names = {"p", "m"},
      .level = Level::trigonometric,
      .in_domain = [](const ParamPoint& x) { return x.at("p") >= 2 && x.at("m") >= 1; },
      .enumerate =
          [](std::int64_t pm) {
            Points out;
            for (std::int64_t p = 2; p <= pm; ++p) {
              for (std::int64_t m = 1; m <= kSinePowerMaxM; ++m) out.push_back({{"p", p}, {"m", m}});
            }
            return out;
          },
      .lhs = [](const ParamPoint& x, Precision prec) -> Value {
        return eval_power_sum(x.at("p"), x.at("m"), PowerKind::sine_power, SumRange::from_k0, prec);
      },
      .rhs = [](const ParamPoint& x, Precision) -> Value {
        return sine_power_closed_form(x.at("p"), x.at("m"));
      },
  });

  c.push_back(Identity{
      .id = "CLOSING",
      .title = "Cosines at half-integer shifts of an odd modulus",
      .statement = "cos(pi (p+1)/2) + cos(pi (p-1)/2) = 0, p odd",
      .param_names = {"p"},
      .level = Level::trigonometric,
      .in_domain = [](const ParamPoint& x) { return x.at("p") >= 1 && x.at("p") % 2 == 1; },
      .enumerate = odd_moduli,
      .lhs = [](const ParamPoint& x, Precision prec) -> Value {
        const auto p = x.at("p");
        return cos_pi_rational(big(p + 1), 2, prec) + cos_pi_rational(big(p - 1), 2, prec);
      },
      .rhs = [](const ParamPoint&, Precision) -> Value { return Rational(0); },
  });

  return c;
}

Verdict corrected_as_primary(Verdict v) {
  if (v.corrected) {
    v.rhs = std::move(v.corrected->rhs);
    v.residual = std::move(v.corrected->residual);
    v.scale = std::move(v.corrected->scale);
    v.status = v.corrected->status;
    v.corrected.reset();
  }
  return v;
}

void sort_verdicts(std::vector<Verdict>& verdicts) {
  std::stable_sort(verdicts.begin(), verdicts.end(), [](const Verdict& a, const Verdict& b) {
    if (a.identity != b.identity) return id_less(a.identity, b.identity);
    return a.params < b.params;
  });
}

}  // namespace

const std::vector<Identity>& builtin_catalog() {
  static const std::vector<Identity> catalog = make_catalog();
  return catalog;
}

const Identity& find_identity(const std::string& id) {
  for (const auto& identity : builtin_catalog()) {
    if (identity.id == id) return identity;
  }
  throw DomainError("unknown identity '" + id + "'");
}

Verdict verify_one(const Identity& identity, const ParamPoint& params, Precision prec) {
  for (const auto& name : identity.param_names) {
    if (!params.has(name)) {
      throw DomainError(identity.id + " needs parameter '" + name + "'");
    }
  }
  // Canonical parameter order for the report.
  ParamPoint ordered;
  for (const auto& name : identity.param_names) ordered.set(name, params.at(name));
  if (!identity.in_domain(ordered)) {
    throw DomainError(identity.id + " is not defined at " + ordered.to_string());
  }

  Value rhs = identity.rhs(ordered, prec);
  std::optional<Value> lhs;
  std::optional<Comparison> cmp;
  std::optional<std::string> reading;

  if (identity.readings.empty()) {
    lhs = identity.lhs(ordered, prec);
    cmp = compare(*lhs, rhs, prec);
  } else {
    std::size_t matches = 0;
    for (const auto& r : identity.readings) {
      Value value = r.lhs(ordered, prec);
      Comparison c = compare(value, rhs, prec);
      const bool hit = c.status == Status::pass;
      if (hit) ++matches;
      if (!lhs || (hit && matches == 1)) {
        lhs = std::move(value);
        cmp = std::move(c);
        if (hit) reading = r.name;
      }
    }
    if (matches > 1) {
      cmp->status = Status::inconclusive;
      reading.reset();
    }
  }

  Verdict v{
      .identity = identity.id,
      .params = ordered,
      .lhs = std::move(*lhs),
      .rhs = std::move(rhs),
      .residual = std::move(cmp->residual),
      .scale = std::move(cmp->scale),
      .status = cmp->status,
      .corrected = std::nullopt,
      .reading = std::move(reading),
  };

  if (identity.corrected_rhs) {
    Value fixed = (*identity.corrected_rhs)(ordered, prec);
    Comparison c = compare(v.lhs, fixed, prec);
    v.corrected = CorrectedOutcome{std::move(fixed), std::move(c.residual), std::move(c.scale),
                                   c.status};
  }
  return v;
}

void summarize(VerificationReport& report) {
  report.summary.clear();
  report.errata.clear();
  std::map<std::string, std::set<std::string>> readings;
  std::map<std::string, bool> unmatched;
  for (const auto& v : report.verdicts) {
    auto& s = report.summary[v.identity];
    switch (v.status) {
      case Status::pass: ++s.pass; break;
      case Status::fail: ++s.fail; break;
      case Status::inconclusive: ++s.inconclusive; break;
    }
    if (v.corrected) {
      switch (v.corrected->status) {
        case Status::pass: ++s.corrected_pass; break;
        case Status::fail: ++s.corrected_fail; break;
        case Status::inconclusive: ++s.corrected_inconclusive; break;
      }
    }
    if (v.reading) {
      readings[v.identity].insert(*v.reading);
    } else {
      unmatched[v.identity] = true;
    }
  }
  for (auto& [id, s] : report.summary) {
    const auto it = readings.find(id);
    if (it != readings.end() && it->second.size() == 1 && !unmatched[id]) {
      s.consistent_reading = *it->second.begin();
    }
    if (s.fail > 0) report.errata.push_back(id);
  }
  std::sort(report.errata.begin(), report.errata.end(), id_less);
}

VerificationReport sweep(const std::vector<std::string>& ids, std::int64_t p_max, Precision prec) {
  if (p_max < 2) throw DomainError("sweep needs p_max >= 2");
  std::vector<const Identity*> selected;
  if (ids.empty()) {
    for (const auto& identity : builtin_catalog()) selected.push_back(&identity);
  } else {
    for (const auto& id : ids) selected.push_back(&find_identity(id));
  }

  VerificationReport report;
  for (const Identity* identity : selected) {
    for (const auto& point : identity->enumerate(p_max)) {
      report.verdicts.push_back(verify_one(*identity, point, prec));
    }
  }
  sort_verdicts(report.verdicts);
  summarize(report);
  return report;
}

std::vector<std::string> corrected_ids() {
  std::vector<std::string> out;
  for (const auto& identity : builtin_catalog()) {
    if (identity.corrected_rhs) out.push_back(identity.id);
  }
  std::sort(out.begin(), out.end(), id_less);
  return out;
}

VerificationReport corrected_candidates_validation(std::int64_t p_max, Precision prec) {
  if (p_max < 10) throw DomainError("corrected-candidate validation needs p_max >= 10");
  constexpr std::int64_t kTrigCap = 40;
  VerificationReport report;
  for (const auto& id : corrected_ids()) {
    const Identity& identity = find_identity(id);
    const std::int64_t limit =
        identity.level == Level::dedekind ? p_max : std::min(p_max, kTrigCap);
    for (const auto& point : identity.enumerate(limit)) {
      report.verdicts.push_back(corrected_as_primary(verify_one(identity, point, prec)));
    }
  }
  sort_verdicts(report.verdicts);
  summarize(report);
  return report;
}

bool all_corrected_pass(const VerificationReport& report) {
  return std::all_of(report.verdicts.begin(), report.verdicts.end(), [](const Verdict& v) {
    return !v.corrected || v.corrected->status == Status::pass;
  });
}

}  // namespace trigsum
