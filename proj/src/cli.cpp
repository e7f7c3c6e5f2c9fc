#include "trigsum/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trigsum/dedekind.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/identities.hpp"
#include "trigsum/report.hpp"
#include "trigsum/trig.hpp"

namespace trigsum::cli {

namespace {

struct Options {
  long precision = kDefaultPrecision.bits;
  std::string format = "text";
  std::string output;

  // eval
  std::string sum = "general";
  std::string kind = "cosecant";
  std::string range = "from_k1";
  std::int64_t n = 1;
  std::int64_t m = 1;
  std::int64_t l = 1;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> r;

  // dedekind
  std::string method = "fast";

  // verify / sweep
  std::string id;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> n_opt;
  std::optional<std::int64_t> m_opt;
  std::optional<std::int64_t> l_opt;
  std::string ids = "all";
  std::int64_t p_max = 30;
  std::string errata_path;
};

long default_precision() {
  const char* env = std::getenv(kPrecisionEnv);
  if (env == nullptr || *env == '\0') return kDefaultPrecision.bits;
  try {
    std::size_t used = 0;
    const long bits = std::stol(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return bits;
  } catch (const std::exception&) {
    throw DomainError(std::string(kPrecisionEnv) + " is not an integer: '" + env + "'");
  }
}

void emit(const Options& o, const std::string& bytes, std::ostream& out) {
  std::string text = bytes;
  if (text.empty() || text.back() != '\n') text += '\n';
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
}

std::int64_t require(const std::optional<std::int64_t>& v, const char* name) {
  if (!v) throw DomainError(std::string("missing required option --") + name);
  return *v;
}

PowerKind parse_kind(const std::string& s) {
  if (s == "cosecant") return PowerKind::cosecant;
  if (s == "secant") return PowerKind::secant;
  if (s == "sine-power") return PowerKind::sine_power;
  throw DomainError("unknown kind '" + s + "'");
}

SumRange parse_range(const std::string& s) {
  if (s == "from_k1") return SumRange::from_k1;
  if (s == "from_k0") return SumRange::from_k0;
  if (s == "half_range") return SumRange::half_range;
  throw DomainError("unknown range '" + s + "'");
}

int do_eval(const Options& o, Precision prec, std::ostream& out) {
  const std::int64_t p = require(o.p, "p");
  ApproxReal value(prec);
  nlohmann::ordered_json spec;
  if (o.sum == "general") {
    const SumSpec s{o.n, o.m, o.l, p, o.q.value_or(1), o.r.value_or(0)};
    value = eval_sum_general(s, prec);
    spec = {{"n", s.n}, {"m", s.m}, {"l", s.l}, {"p", s.p}, {"q", s.q}, {"r", s.r}};
  } else if (o.sum == "cot") {
    const std::int64_t q = o.q.value_or(1);
    value = eval_cot_product_sum(p, q, prec);
    spec = {{"p", p}, {"q", q}};
  } else if (o.sum == "power") {
    const PowerKind kind = parse_kind(o.kind);
    const SumRange range = parse_range(o.range);
    value = eval_power_sum(p, o.m, kind, range, prec);
    spec = {{"p", p}, {"m", o.m}, {"kind", to_string(kind)}, {"range", to_string(range)}};
  } else {
    throw DomainError("unknown sum '" + o.sum + "' (expected general, cot or power)");
  }

  const std::string bound = value.bound_string();
  switch (parse_format(o.format)) {
    case ReportFormat::json: {
      nlohmann::ordered_json doc;
      doc["sum"] = o.sum;
      doc["spec"] = spec;
      doc["precision"] = prec.bits;
      doc["value"] = value.mid_string();
      doc["bound"] = bound;
      emit(o, doc.dump(2), out);
      break;
    }
    case ReportFormat::csv: {
      std::string keys;
      std::string vals;
      for (const auto& [k, v] : spec.items()) {
        keys += k + ",";
        vals += (v.is_string() ? v.get<std::string>() : v.dump()) + ",";
      }
      emit(o, keys + "value,bound\n" + vals + value.mid_string() + "," + bound, out);
      break;
    }
    case ReportFormat::text: {
      std::string args;
      for (const auto& [k, v] : spec.items()) {
        if (!args.empty()) args += ", ";
        args += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
      }
      emit(o, o.sum + "(" + args + ") = " + value.mid_string() + " ± " + bound, out);
      break;
    }
  }
  return kExitOk;
}

int do_dedekind(const Options& o, std::ostream& out) {
  const Integer q(static_cast<long>(require(o.q, "q")));
  const Integer p(static_cast<long>(require(o.p, "p")));
  Rational value;
  if (o.method == "fast") {
    value = dedekind_fast(q, p);
  } else if (o.method == "def") {
    value = dedekind_def(q, p);
  } else {
    throw DomainError("unknown method '" + o.method + "' (expected fast or def)");
  }
  switch (parse_format(o.format)) {
    case ReportFormat::json: {
      nlohmann::ordered_json doc{{"q", q.get_si()}, {"p", p.get_si()}, {"method", o.method},
                                 {"value", value.to_string()}};
      emit(o, doc.dump(2), out);
      break;
    }
    case ReportFormat::csv:
      emit(o, "q,p,method,value\n" + q.get_str() + "," + p.get_str() + "," + o.method + "," +
                  value.to_string(),
           out);
      break;
    case ReportFormat::text:
      emit(o, value.to_string(), out);
      break;
  }
  return kExitOk;
}

std::set<std::string> known_errata(const Options& o) {
  return load_known_errata(o.errata_path.empty() ? default_errata_path()
                                                 : std::filesystem::path(o.errata_path));
}

// FAIL or INCONCLUSIVE outside the known-errata set, or any corrected
// candidate that does not pass.
std::vector<std::string> unexpected(const VerificationReport& report,
                                    const std::set<std::string>& errata) {
  std::vector<std::string> out;
  for (const auto& [id, s] : report.summary) {
    const bool bad = (s.fail > 0 && !errata.contains(id)) || s.inconclusive > 0 ||
                     s.corrected_fail > 0 || s.corrected_inconclusive > 0;
    if (bad) out.push_back(id);
  }
  return out;
}

void strip_corrected(VerificationReport& report) {
  for (auto& v : report.verdicts) v.corrected.reset();
  summarize(report);
}

int finish_report(const Options& o, VerificationReport& report, std::ostream& out,
                  std::ostream& err) {
  const auto errata = known_errata(o);
  const auto bad = unexpected(report, errata);
  emit(o, emit_report(report, parse_format(o.format)), out);

  // The text table already carries this block when it goes to stdout.
  if (o.format != "text" || !o.output.empty()) {
    err << "errata:";
    for (const auto& id : report.errata) err << ' ' << id;
    err << '\n';
    for (const auto& [id, s] : report.summary) {
      if (s.consistent_reading) err << id << " matches reading " << *s.consistent_reading << '\n';
    }
  }
  for (const auto& id : errata) {
    const auto it = report.summary.find(id);
    if (it != report.summary.end() && it->second.fail == 0) {
      err << "note: known erratum " << id << " did not fail on this domain\n";
    }
  }
  if (!bad.empty()) {
    err << "unexpected:";
    for (const auto& id : bad) err << ' ' << id;
    err << '\n';
    return kExitUnexpectedFail;
  }
  return kExitOk;
}

int do_verify(const Options& o, Precision prec, std::ostream& out, std::ostream& err) {
  if (o.id.empty()) throw DomainError("missing required option --id");
  const Identity& identity = find_identity(o.id);
  ParamPoint params;
  const std::vector<std::pair<const char*, std::optional<std::int64_t>>> given = {
      {"n", o.n_opt}, {"m", o.m_opt}, {"l", o.l_opt}, {"p", o.p},
      {"q", o.q},     {"r", o.r},     {"k", o.k}};
  for (const auto& [name, value] : given) {
    if (value) params.set(name, *value);
  }
  VerificationReport report;
  report.verdicts.push_back(verify_one(identity, params, prec));
  summarize(report);
  return finish_report(o, report, out, err);
}

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  if (text == "all") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw DomainError("--ids is empty");
  return out;
}

int do_sweep(const Options& o, Precision prec, std::ostream& out, std::ostream& err) {
  if (o.p_max < 2) throw DomainError("--pmax must be at least 2");
  VerificationReport report = sweep(split_ids(o.ids), o.p_max, prec);

  // Corrected candidates stay out of the report until they pass their
  // validation sweep.
  const bool has_corrected = std::any_of(report.verdicts.begin(), report.verdicts.end(),
                                         [](const Verdict& v) { return v.corrected.has_value(); });
  if (has_corrected) {
    const auto gate = corrected_candidates_validation(std::max<std::int64_t>(10, o.p_max), prec);
    if (!gate.errata.empty() || !all_corrected_pass(report)) {
      err << "warning: corrected candidates failed validation; omitting them from the report\n";
      strip_corrected(report);
      finish_report(o, report, out, err);
      return kExitUnexpectedFail;
    }
  }
  return finish_report(o, report, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite trigonometric sums, Dedekind sums and identity verification", "trigsum"};
  app.require_subcommand(1);

  try {
    o.precision = default_precision();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--precision", o.precision, "Working precision in bits (>= 53)");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output,-o", o.output, "Write to this file instead of standard output");
  };

  auto* eval = app.add_subcommand("eval", "Enclose a finite trigonometric sum");
  common(eval);
  eval->add_option("--sum", o.sum, "general | cot | power")
      ->check(CLI::IsMember({"general", "cot", "power"}));
  eval->add_option("--n", o.n, "Cosine exponent");
  eval->add_option("--m", o.m, "Exponent of csc(pi k q/p), or power-sum order");
  eval->add_option("--l", o.l, "Exponent of csc(pi k/p)");
  eval->add_option("--p", o.p, "Modulus")->required();
  eval->add_option("--q", o.q, "Multiplier (default 1)");
  eval->add_option("--r", o.r, "Cosine multiplier (default 0)");
  eval->add_option("--kind", o.kind, "Power sum kind")
      ->check(CLI::IsMember({"cosecant", "secant", "sine-power"}));
  eval->add_option("--range", o.range, "Power sum range")
      ->check(CLI::IsMember({"from_k1", "from_k0", "half_range"}));

  auto* ded = app.add_subcommand("dedekind", "Exact Dedekind sum s(q, p)");
  common(ded);
  ded->add_option("--q", o.q, "q")->required();
  ded->add_option("--p", o.p, "p")->required();
  ded->add_option("--method", o.method, "fast | def")->check(CLI::IsMember({"fast", "def"}));

  auto* verify = app.add_subcommand("verify", "Check one identity at one parameter point");
  common(verify);
  verify->add_option("--id", o.id, "Identity id, e.g. EQ16")->required();
  verify->add_option("--p", o.p, "p");
  verify->add_option("--q", o.q, "q");
  verify->add_option("--r", o.r, "r");
  verify->add_option("--n", o.n_opt, "n");
  verify->add_option("--m", o.m_opt, "m");
  verify->add_option("--l", o.l_opt, "l");
  verify->add_option("--k", o.k, "k");
  verify->add_option("--errata", o.errata_path, "Known-errata list");

  auto* sw = app.add_subcommand("sweep", "Check identities over their domains");
  common(sw);
  sw->add_option("--ids", o.ids, "Comma-separated ids or 'all'");
  sw->add_option("--pmax", o.p_max, "Largest modulus");
  sw->add_option("--errata", o.errata_path, "Known-errata list");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    const Precision prec = checked_precision(o.precision);
    if (eval->parsed()) return do_eval(o, prec, out);
    if (ded->parsed()) return do_dedekind(o, out);
    if (verify->parsed()) return do_verify(o, prec, out, err);
    return do_sweep(o, prec, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace trigsum::cli
