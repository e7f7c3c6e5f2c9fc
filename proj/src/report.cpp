#include "trigsum/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "trigsum/errors.hpp"

namespace trigsum {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kCsvHeader =
    "identity,params,lhs,rhs,residual,scale,status,corrected_rhs,corrected_residual,"
    "corrected_status,reading";

std::string params_string(const std::vector<std::pair<std::string, std::int64_t>>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string emit_json(const std::vector<VerdictRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : records) {
    ordered_json obj;
    obj["identity"] = r.identity;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    obj["params"] = std::move(params);
    obj["lhs"] = r.lhs;
    obj["rhs"] = r.rhs;
    obj["residual"] = r.residual;
    obj["scale"] = r.scale;
    obj["status"] = r.status;
    if (r.corrected_status) {
      obj["corrected_rhs"] = *r.corrected_rhs;
      obj["corrected_residual"] = *r.corrected_residual;
      obj["corrected_status"] = *r.corrected_status;
    }
    if (r.reading) obj["reading"] = *r.reading;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2);
}

std::string emit_csv(const std::vector<VerdictRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.identity << ',' << params_string(r.params) << ',' << r.lhs << ',' << r.rhs << ','
        << r.residual << ',' << r.scale << ',' << r.status << ',' << r.corrected_rhs.value_or("")
        << ',' << r.corrected_residual.value_or("") << ',' << r.corrected_status.value_or("")
        << ',' << r.reading.value_or("") << '\n';
  }
  return out.str();
}

std::string emit_text(const VerificationReport& report, const std::vector<VerdictRecord>& records) {
  std::size_t id_w = 8;
  std::size_t par_w = 6;
  for (const auto& r : records) {
    id_w = std::max(id_w, r.identity.size());
    par_w = std::max(par_w, params_string(r.params).size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(id_w)) << "identity" << "  "
      << std::setw(static_cast<int>(par_w)) << "params" << "  " << std::setw(12) << "status"
      << "  " << std::setw(12) << "corrected" << "  lhs | rhs\n";
  for (const auto& r : records) {
    std::string corrected = r.corrected_status.value_or("-");
    if (r.reading) corrected = "reading " + *r.reading;
    out << std::left << std::setw(static_cast<int>(id_w)) << r.identity << "  "
        << std::setw(static_cast<int>(par_w)) << params_string(r.params) << "  " << std::setw(12)
        << r.status << "  " << std::setw(12) << corrected << "  " << r.lhs << " | " << r.rhs
        << '\n';
  }
  out << '\n' << "summary\n";
  for (const auto& [id, s] : report.summary) {
    out << "  " << std::left << std::setw(static_cast<int>(id_w)) << id << "  pass " << s.pass
        << "  fail " << s.fail << "  inconclusive " << s.inconclusive;
    if (s.corrected_pass + s.corrected_fail + s.corrected_inconclusive > 0) {
      out << "  corrected pass " << s.corrected_pass << " fail " << s.corrected_fail
          << " inconclusive " << s.corrected_inconclusive;
    }
    if (s.consistent_reading) out << "  reading " << *s.consistent_reading;
    out << '\n';
  }
  out << "errata:";
  for (const auto& id : report.errata) out << ' ' << id;
  out << '\n';
  return out.str();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw DomainError("unknown format '" + name + "' (expected text, json or csv)");
}

VerdictRecord to_record(const Verdict& v) {
  VerdictRecord r{
      .identity = v.identity,
      .params = v.params.entries(),
      .lhs = render(v.lhs),
      .rhs = render(v.rhs),
      .residual = render(v.residual),
      .scale = render(v.scale),
      .status = std::string(to_string(v.status)),
      .corrected_rhs = std::nullopt,
      .corrected_residual = std::nullopt,
      .corrected_status = std::nullopt,
      .reading = v.reading,
  };
  if (v.corrected) {
    r.corrected_rhs = render(v.corrected->rhs);
    r.corrected_residual = render(v.corrected->residual);
    r.corrected_status = std::string(to_string(v.corrected->status));
  }
  return r;
}

std::vector<VerdictRecord> to_records(const VerificationReport& report) {
  std::vector<VerdictRecord> out;
  out.reserve(report.verdicts.size());
  for (const auto& v : report.verdicts) out.push_back(to_record(v));
  return out;
}

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  const auto records = to_records(report);
  switch (format) {
    case ReportFormat::json: return emit_json(records);
    case ReportFormat::csv: return emit_csv(records);
    case ReportFormat::text: return emit_text(report, records);
  }
  return {};
}

std::vector<VerdictRecord> parse_json_report(const std::string& text) {
  const auto doc = ordered_json::parse(text);
  if (!doc.is_array()) throw DomainError("report JSON must be an array");
  std::vector<VerdictRecord> out;
  for (const auto& obj : doc) {
    VerdictRecord r;
    r.identity = obj.at("identity").get<std::string>();
    for (const auto& [k, v] : obj.at("params").items()) r.params.emplace_back(k, v.get<std::int64_t>());
    r.lhs = obj.at("lhs").get<std::string>();
    r.rhs = obj.at("rhs").get<std::string>();
    r.residual = obj.at("residual").get<std::string>();
    r.scale = obj.at("scale").get<std::string>();
    r.status = obj.at("status").get<std::string>();
    if (obj.contains("corrected_status")) {
      r.corrected_rhs = obj.at("corrected_rhs").get<std::string>();
      r.corrected_residual = obj.at("corrected_residual").get<std::string>();
      r.corrected_status = obj.at("corrected_status").get<std::string>();
    }
    if (obj.contains("reading")) r.reading = obj.at("reading").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::set<std::string> load_known_errata(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read errata list '" + path.string() + "'");
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) out.insert(line);
  }
  return out;
}

std::filesystem::path default_errata_path() {
  return std::filesystem::path(TRIGSUM_DATA_DIR) / "known_errata.txt";
}

}  // namespace trigsum
