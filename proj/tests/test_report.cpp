#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "trigsum/errors.hpp"
#include "trigsum/identities.hpp"
#include "trigsum/report.hpp"

using namespace trigsum;

namespace {

VerificationReport one(const std::string& id, ParamPoint params) {
  VerificationReport rep;
  rep.verdicts.push_back(verify_one(find_identity(id), params));
  summarize(rep);
  return rep;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("empty report") {
  VerificationReport rep;
  CHECK(emit_report(rep, ReportFormat::json) == "[]");
  CHECK(emit_report(rep, ReportFormat::csv) ==
        "identity,params,lhs,rhs,residual,scale,status,corrected_rhs,corrected_residual,"
        "corrected_status,reading\n");
}

TEST_CASE("exact pass renders a literal zero residual") {
  const auto json = emit_report(one("EQ17", {{"p", 5}, {"q", 3}}), ReportFormat::json);
  CHECK(json.find("\"residual\": \"0\"") != std::string::npos);
  CHECK(json.find("\"status\": \"PASS\"") != std::string::npos);
  CHECK(json.find("corrected_status") == std::string::npos);
}

TEST_CASE("complement claim row carries both verdicts") {
  const auto rep = one("EQ16", {{"p", 3}, {"q", 1}});
  const auto json = emit_report(rep, ReportFormat::json);
  CHECK(json.find("\"status\": \"FAIL\"") != std::string::npos);
  CHECK(json.find("\"corrected_status\": \"PASS\"") != std::string::npos);
  CHECK(json.find("\"lhs\": \"-1/18\"") != std::string::npos);
  CHECK(json.find("\"rhs\": \"17/18\"") != std::string::npos);

  const auto csv = emit_report(rep, ReportFormat::csv);
  CHECK(csv.find("\nEQ16,p=3;q=1,-1/18,17/18,1,1,FAIL,-1/18,0,PASS,\n") != std::string::npos);

  const auto text = emit_report(rep, ReportFormat::text);
  CHECK(text.find("EQ16") != std::string::npos);
  CHECK(text.find("errata: EQ16") != std::string::npos);
}

TEST_CASE("approximate values carry an explicit bound") {
  const auto json = emit_report(one("EQ10", {{"p", 3}}), ReportFormat::json);
  CHECK(json.find("\"lhs\": \"2.66666666666666666666666666667e+00±") != std::string::npos);
  CHECK(json.find("\"rhs\": \"8/3\"") != std::string::npos);
}

TEST_CASE("json round trip preserves the verdict multiset") {
  const auto rep = sweep({"EQ4", "EQ9", "EQ16", "SECANT"}, 9);
  const auto records = to_records(rep);
  auto parsed = parse_json_report(emit_report(rep, ReportFormat::json));
  auto original = records;
  std::sort(parsed.begin(), parsed.end());
  std::sort(original.begin(), original.end());
  CHECK(parsed == original);
}

TEST_CASE("emission is deterministic") {
  const auto a = emit_report(sweep({}, 8), ReportFormat::json);
  const auto b = emit_report(sweep({}, 8), ReportFormat::json);
  CHECK(a == b);
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == ReportFormat::json);
  CHECK(parse_format("csv") == ReportFormat::csv);
  CHECK(parse_format("text") == ReportFormat::text);
  CHECK_THROWS_AS(parse_format("xml"), DomainError);
}

TEST_CASE("files and errata list") {
  const auto dir = std::filesystem::temp_directory_path() / "trigsum_report_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.json";
  write_file(path, "[]");
  CHECK(slurp(path) == "[]");
  CHECK_THROWS_AS(write_file(dir / "missing" / "x.json", "[]"), std::runtime_error);

  const auto errata_file = dir / "errata.txt";
  write_file(errata_file, "# comment\nEQ4\n  EQ16  # trailing\n\n");
  CHECK(load_known_errata(errata_file) == std::set<std::string>{"EQ4", "EQ16"});
  CHECK_THROWS_AS(load_known_errata(dir / "nope.txt"), std::runtime_error);

  const auto shipped = load_known_errata(default_errata_path());
  CHECK(shipped == std::set<std::string>{"EQ4", "EQ7", "EQ8", "EQ9", "EQ15", "EQ16"});
  std::filesystem::remove_all(dir);
}
