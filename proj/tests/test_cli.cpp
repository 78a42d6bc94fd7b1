#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "picseq/bimodule/bimodule.hpp"
#include "picseq/cli/run.hpp"
#include "picseq/error.hpp"
#include "support.hpp"

using namespace picseq;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "picseq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0;
  return n;
}

const char* kMinimal = R"({
  "version": 1,
  "name": "tiny",
  "p": 3,
  "S": {"dim": 1, "basis": ["e"], "mul": [[0, 0, 0, 1]]},
  "local_units": [[1]],
  "R_basis": [[1]]
})";

std::string replaced(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

ErrorKind kind_of(const std::string& text) {
  try {
    cli::parse_fixture_text(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

std::string message_of(const std::string& text) {
  try {
    cli::parse_fixture_text(text, "in");
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("minimal fixture parses") {
  cli::Fixture f = cli::parse_fixture_text(kMinimal);
  CHECK(f.p == 3);
  CHECK(f.s.dim == 1);
  CHECK_FALSE(f.description.has_value());
  CHECK(cli::build_extension(f).S->dim() == 1);
}

TEST_CASE("strict parsing") {
  CHECK(kind_of(replaced(kMinimal, "[[0, 0, 0, 1]]", "[[0, 0, 0, 3]]")) == ErrorKind::Parse);
  CHECK(kind_of(replaced(kMinimal, "\"R_basis\": [[1]]", "\"R_basis\": [[1]], \"extra\": 1")) == ErrorKind::Parse);
  CHECK(kind_of(replaced(kMinimal, "\"version\": 1,", "")) == ErrorKind::Parse);
  CHECK(kind_of(replaced(kMinimal, "\"version\": 1", "\"version\": 2")) == ErrorKind::Parse);
  CHECK(kind_of(replaced(kMinimal, "\"p\": 3", "\"p\": 4")) == ErrorKind::Parse);
  CHECK(kind_of(replaced(kMinimal, "\"p\": 3", "\"p\": 101")) == ErrorKind::Parse);
  CHECK(kind_of(replaced(kMinimal, "[[0, 0, 0, 1]]", "[[0, 0, 0, 1], [0, 0, 0, 2]]")) == ErrorKind::Parse);
  CHECK(kind_of(replaced(kMinimal, "[[0, 0, 0, 1]]", "[[0, 1, 0, 1]]")) == ErrorKind::Parse);
  CHECK(kind_of(replaced(kMinimal, "\"local_units\": [[1]]", "\"local_units\": [[1, 0]]")) == ErrorKind::Parse);
  CHECK(kind_of("{\"version\": 1,") == ErrorKind::Parse);
}

TEST_CASE("parse errors name the line and key") {
  std::string msg = message_of(replaced(kMinimal, "\"R_basis\": [[1]]", "\"R_basis\": [[1]],\n  \"bogus\": 0"));
  CHECK(msg.find("in:8:") != std::string::npos);
  CHECK(msg.find("'bogus'") != std::string::npos);
  std::string coef = message_of(replaced(kMinimal, "[[0, 0, 0, 1]]", "[[0, 0, 0, 7]]"));
  CHECK(coef.find("in:5:") != std::string::npos);
  CHECK(coef.find("S.mul[0]") != std::string::npos);
}

TEST_CASE("validation failures") {
  // e*e = 0 with unit e is not unital
  cli::Fixture bad_unit = cli::parse_fixture_text(replaced(kMinimal, "[[0, 0, 0, 1]]", "[]"));
  CHECK_THROWS_AS(cli::build_extension(bad_unit), Error);
  cli::Fixture dependent = cli::parse_fixture_text(replaced(kMinimal, "\"R_basis\": [[1]]", "\"R_basis\": [[1], [2]]"));
  try {
    cli::build_extension(dependent);
    FAIL("dependent R basis accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Validation);
  }
}

TEST_CASE("canonical dump round-trips") {
  for (const char* name : testsupport::kAllFixtures) {
    CAPTURE(name);
    cli::Fixture f = testsupport::load_fixture(name);
    std::string once = cli::canonical_dump(f);
    std::string twice = cli::canonical_dump(cli::parse_fixture_text(once));
    CHECK(once == twice);
    CHECK(once.find('\n') == std::string::npos);
  }
}

TEST_CASE("extra bimodules and maps") {
  std::ifstream in(testsupport::fixture_path("fix-a"));
  std::stringstream buf;
  buf << in.rdbuf();
  std::string base = buf.str();
  std::string extras = R"("R_basis": [[1, 0, 0, 0], [0, 0, 0, 1]],
  "bimodules": [{"name": "first", "over": "R", "dim": 1,
                 "left": [[[1]], [[0]]], "right": [[[1]], [[0]]]}],
  "maps": [{"name": "id", "source": "S", "target": "S", "linearity": "bilinear",
            "matrix": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]},
           {"name": "into", "source": "first", "target": "R", "linearity": "bilinear",
            "matrix": [[1],[0]]}])";
  cli::Fixture good = cli::parse_fixture_text(replaced(base, "\"R_basis\": [[1, 0, 0, 0], [0, 0, 0, 1]]", extras));
  auto v = bimodule::make_extension_modules(cli::build_extension(good));
  algebra::ValidationReport ok = cli::check_extras(good, v);
  CHECK(ok.ok);

  cli::Fixture bad = good;
  bad.maps[0].matrix = {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  bad.maps[1].target = "nowhere";
  bad.bimodules[0].left[0] = {{0}};
  bad.bimodules[0].left[1] = {{1}};
  bad.bimodules[0].right[1] = {{1}};
  algebra::ValidationReport rep = cli::check_extras(bad, v);
  CHECK_FALSE(rep.ok);
  CHECK(rep.problems.size() >= 2);
}

TEST_CASE("run_cli exit codes and output") {
  std::string a = testsupport::fixture_path("fix-a");
  Run all = run({"verify-seq", "--n", "all", a});
  CHECK(all.code == cli::kExitOk);
  CHECK(count_lines_starting(all.out, "PASS seq") == 4);
  CHECK(count_lines_starting(all.out, "FAIL") == 0);

  Run five = run({"verify-seq", "--n", "5", a});
  CHECK(five.code == cli::kExitUsage);

  Run inv = run({"groups", "--which", "inv", a});
  CHECK(inv.code == cli::kExitOk);
  CHECK(inv.out.find("order 2") != std::string::npos);
  CHECK(count_lines_starting(inv.out, "  X = ") == 2);

  Run missing = run({"check", "/nonexistent/fixture.json"});
  CHECK(missing.code == cli::kExitUsage);
  CHECK(missing.err.find("parse-error") != std::string::npos);

  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
  CHECK(run({"check", a}).code == cli::kExitOk);
  CHECK(run({"diagram", a}).code == cli::kExitOk);
}

TEST_CASE("json report file") {
  std::filesystem::path out = std::filesystem::temp_directory_path() / "picseq_cli_report.json";
  std::filesystem::remove(out);
  Run r = run({"verify-seq", "--n", "2", "--format", "json", "--report", out.string(),
               testsupport::fixture_path("fix-b")});
  CHECK(r.code == cli::kExitOk);
  CHECK(std::filesystem::exists(out));
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("\"sequence\"") != std::string::npos);
  CHECK(r.out.find("\"verdicts\"") != std::string::npos);
  std::filesystem::remove(out);
}

}
