#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "trigsum/cli.hpp"
#include "trigsum/report.hpp"

using namespace trigsum;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result in_process(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  const auto dir = fs::temp_directory_path() / "trigsum_cli_test";
  fs::create_directories(dir);
  return dir;
}

// Runs the installed binary through the shell and captures both streams.
Result binary(const std::string& args) {
  const auto dir = scratch();
  const auto out = dir / "stdout.txt";
  const auto err = dir / "stderr.txt";
  const std::string cmd = std::string("'") + TRIGSUM_CLI_PATH + "' " + args + " >'" +
                          out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("eval prints an enclosure") {
  const auto r = in_process({"eval", "--p", "3", "--q", "2", "--r", "1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("1.33333333333333333333333333333e+00 ± ") != std::string::npos);
}

TEST_CASE("eval variants") {
  auto r = in_process({"eval", "--sum", "cot", "--p", "3", "--q", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("6.66666666666666666666666666667e-01") != std::string::npos);
  r = in_process({"eval", "--sum", "power", "--kind", "secant", "--range", "from_k0", "--p", "3",
                  "--m", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("9.00000000000000000000000000000e+00") != std::string::npos);
  r = in_process({"eval", "--p", "3", "--q", "2", "--r", "1", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"value\"") != std::string::npos);
}

TEST_CASE("dedekind prints a bare fraction") {
  auto r = in_process({"dedekind", "--q", "1", "--p", "3", "--method", "fast"});
  CHECK(r.code == 0);
  CHECK(r.out == "1/18\n");
  r = in_process({"dedekind", "--q", "2", "--p", "3", "--method", "def"});
  CHECK(r.out == "-1/18\n");
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(in_process({}).code == cli::kExitUsage);
  CHECK(in_process({"frobnicate"}).code == cli::kExitUsage);
  CHECK(in_process({"eval"}).code == cli::kExitUsage);
  CHECK(in_process({"eval", "--p", "1"}).code == cli::kExitUsage);
  CHECK(in_process({"eval", "--p", "4", "--q", "2"}).code == cli::kExitUsage);
  CHECK(in_process({"dedekind", "--q", "2", "--p", "4"}).code == cli::kExitUsage);
  CHECK(in_process({"eval", "--p", "3", "--precision", "40"}).code == cli::kExitUsage);
  CHECK(in_process({"verify", "--id", "NOPE", "--p", "3"}).code == cli::kExitUsage);
  CHECK(in_process({"verify", "--id", "EQ16", "--p", "4", "--q", "2"}).code == cli::kExitUsage);
  CHECK(in_process({"sweep", "--pmax", "1"}).code == cli::kExitUsage);
  CHECK(in_process({"sweep", "--format", "yaml"}).code == cli::kExitUsage);
  const auto r = in_process({"eval", "--p", "1"});
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("verify reports a known erratum without failing") {
  const auto r = in_process({"verify", "--id", "EQ16", "--p", "3", "--q", "1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("errata: EQ16") != std::string::npos);
}

TEST_CASE("an unlisted failure exits 1") {
  const auto errata = scratch() / "none.txt";
  write_file(errata, "# nothing expected\n");
  const auto r =
      in_process({"sweep", "--ids", "EQ16,EQ17", "--pmax", "6", "--errata", errata.string()});
  CHECK(r.code == cli::kExitUnexpectedFail);
  CHECK(r.err.find("unexpected: EQ16") != std::string::npos);
  const auto ok = in_process({"sweep", "--ids", "EQ17", "--pmax", "6", "--errata",
                              errata.string()});
  CHECK(ok.code == cli::kExitOk);
}

TEST_CASE("output file") {
  const auto path = scratch() / "report.csv";
  const auto r = in_process(
      {"sweep", "--ids", "EQ10", "--pmax", "5", "--format", "csv", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const auto csv = slurp(path);
  CHECK(csv.rfind("identity,params,", 0) == 0);
  CHECK(csv.find("EQ10,p=5,") != std::string::npos);
  const auto bad = in_process({"sweep", "--ids", "EQ10", "--pmax", "5", "--output",
                               (scratch() / "no" / "such" / "dir.txt").string()});
  CHECK(bad.code == cli::kExitUsage);
}

TEST_CASE("binary: exit codes and byte-identical sweeps") {
  CHECK(binary("dedekind --q 1 --p 3").out == "1/18\n");
  CHECK(binary("eval --p 1").code == 2);
  const auto a = binary("sweep --ids all --pmax 12 --format json");
  const auto b = binary("sweep --ids all --pmax 12 --format json");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err.find("errata: EQ4 EQ7 EQ8 EQ9 EQ15 EQ16") != std::string::npos);
  CHECK(a.err.find("SECANT matches reading from_k0") != std::string::npos);
  const auto records = parse_json_report(a.out);
  CHECK(records.size() > 100);
}

TEST_CASE("binary: precision from the environment") {
  const auto lo = binary("eval --p 3 --q 2 --r 1");
  ::setenv(cli::kPrecisionEnv, "256", 1);
  const auto hi = binary("eval --p 3 --q 2 --r 1");
  ::setenv(cli::kPrecisionEnv, "12", 1);
  const auto bad = binary("eval --p 3 --q 2 --r 1");
  ::unsetenv(cli::kPrecisionEnv);
  CHECK(lo.code == 0);
  CHECK(hi.code == 0);
  CHECK(lo.out != hi.out);
  CHECK(bad.code == 2);
}
