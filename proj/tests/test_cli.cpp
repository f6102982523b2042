#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "ars/catalog.hpp"
#include "ars/json_io.hpp"
#include "ars/testkit.hpp"

using namespace ars;

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string command = std::string(ARS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 512> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) {
    output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  return CliResult{WEXITSTATUS(status), output};
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("ars_test_" + name);
  std::ofstream out(path);
  out << content;
  out.close();
  return path.string();
}

std::string fixture_file(const char* name) {
  const auto& ars = catalog::find_fixture(name)->finite().ars;
  return write_temp(std::string(name) + ".json",
                    io::print_document(io::document_from(ars)));
}

}  // namespace

TEST_CASE("document round trip") {
  for (const auto& fixture : catalog::fixtures()) {
    if (!fixture.is_finite()) continue;
    io::ArsDocument doc = io::document_from(fixture.finite().ars);
    CHECK(io::parse_document(io::print_document(doc)) == doc);
    CHECK(io::ars_from(doc) == fixture.finite().ars);
  }
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    FiniteArs ars = testkit::random_ars(seed * 17, 1 + seed % 7, 0.3);
    io::ArsDocument doc = io::document_from(ars);
    CHECK(io::parse_document(io::print_document(doc)) == doc);
  }
}

TEST_CASE("dot golden for CE-4") {
  std::string expected =
      "digraph {\n"
      "  a;\n"
      "  b;\n"
      "  c;\n"
      "  d;\n"
      "  e;\n"
      "  a -> b;\n"
      "  a -> e;\n"
      "  b -> c;\n"
      "  b -> e;\n"
      "  c -> d;\n"
      "  d -> c;\n"
      "}\n";
  CHECK(io::to_dot(catalog::find_fixture("CE-4")->finite().ars) == expected);
  CliResult dot = run_cli("dot " + fixture_file("CE-4"));
  CHECK(dot.exit_code == 0);
  CHECK(dot.output == expected);
}

TEST_CASE("exit code 0: check reports cleanly") {
  CliResult r = run_cli("check " + fixture_file("CE-8") + " --element a");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("CR=true") != std::string::npos);
  CHECK(r.output.find("SN=false") != std::string::npos);
}

TEST_CASE("exit code 1: unjoinable peak") {
  CliResult r = run_cli("join " + fixture_file("CE-4") + " b e c --method exhaustive");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("not joinable") != std::string::npos);
}

TEST_CASE("exit code 2: malformed input") {
  std::string bad = write_temp("bad.json", "{ not json ]");
  CliResult r = run_cli("check " + bad);
  CHECK(r.exit_code == 2);
}

TEST_CASE("exit code 3: normalize on a non-SN element") {
  CliResult r = run_cli("normalize " + fixture_file("CE-8") + " a");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("cycle") != std::string::npos);
  CHECK(r.output.find("a") != std::string::npos);
  CHECK(r.output.find("b") != std::string::npos);
}

TEST_CASE("exit code 4: fuel exhaustion") {
  CliResult r = run_cli("lambda normalize \"(\\x. x x)(\\x. x x)\" --fuel 10");
  CHECK(r.exit_code == 4);
}

TEST_CASE("json report is schema-stable and machine-readable") {
  CliResult r = run_cli("check " + fixture_file("CE-4") + " --element a --json");
  REQUIRE(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.output);
  CHECK(parsed["element"] == "a");
  for (Prop p : element_props()) {
    REQUIRE(parsed["profile"].contains(prop_name(p)));
  }
  CHECK(parsed["profile"]["SM"] == true);
  CHECK(parsed["profile"]["SN"] == false);
  CHECK(parsed["witnesses"].contains("WN"));

  CliResult global = run_cli("check " + fixture_file("CE-4") + " --json");
  REQUIRE(global.exit_code == 0);
  auto gparsed = nlohmann::json::parse(global.output);
  CHECK(gparsed["global"]["WM"] == true);
  CHECK(gparsed["elements"].size() == 5);
}

TEST_CASE("join methods through the CLI") {
  std::string diamond = write_temp(
      "diamond.json",
      R"({"elements": ["a", "b", "c", "d"], "steps": [["a","b"],["a","c"],["b","d"],["c","d"]]})");
  for (const char* method : {"auto", "newman", "gnewman", "wnun", "cp", "exhaustive"}) {
    CliResult r = run_cli("join " + diamond + " a b c --method " + method);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("join at d") != std::string::npos);
  }
  // Newman on a cyclic system: precondition failure.
  CliResult cyclic = run_cli("join " + fixture_file("CE-8") + " a a b --method newman");
  CHECK(cyclic.exit_code == 3);
}

TEST_CASE("catalog verification through the CLI") {
  CliResult r = run_cli("catalog --verify");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0 problems") != std::string::npos);

  CliResult print = run_cli("catalog CE-8");
  CHECK(print.exit_code == 0);
  auto doc = io::parse_document(print.output.substr(0, print.output.find("note:")));
  CHECK(doc == io::document_from(catalog::find_fixture("CE-8")->finite().ars));
}

TEST_CASE("wf through the CLI") {
  CliResult cyclic = run_cli("wf " + fixture_file("CE-8"));
  CHECK(cyclic.exit_code == 1);
  CHECK(cyclic.output.find("agreement: yes") != std::string::npos);

  std::string chain = write_temp(
      "chain.json", R"({"elements": ["a", "b", "c"], "steps": [["a","b"],["b","c"]]})");
  CliResult acyclic = run_cli("wf " + chain);
  CHECK(acyclic.exit_code == 0);
}

TEST_CASE("lambda subcommands") {
  CliResult parse = run_cli("lambda parse \"\\x. x (\\y. y x)\"");
  CHECK(parse.exit_code == 0);

  CliResult nf = run_cli("lambda nf \"\\x. x\"");
  CHECK(nf.exit_code == 0);
  CliResult red = run_cli("lambda nf \"(\\x. x)(\\x. x)\"");
  CHECK(red.exit_code == 1);

  CliResult steps = run_cli("lambda steps \"(\\x. x)(\\x. x)\"");
  CHECK(steps.exit_code == 0);
  CHECK(steps.output.find("\\x0. x0") != std::string::npos);

  CliResult norm = run_cli("lambda normalize \"(\\x. \\y. y)((\\z. z)(\\z. z))\"");
  CHECK(norm.exit_code == 0);
  CHECK(norm.output.find("\\x0. x0") != std::string::npos);

  CliResult bad = run_cli("lambda parse \"(\\x. x\"");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("fuzz through the CLI") {
  CliResult r = run_cli("fuzz --seed 7 --count 120 --max-size 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("clean") != std::string::npos);
}
