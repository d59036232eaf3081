#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "padic/json_io.hpp"

using namespace padic;

namespace {

#ifndef PADIC_WITNESS_CLI
#error "PADIC_WITNESS_CLI must point at the CLI binary"
#endif

std::string cli() { return PADIC_WITNESS_CLI; }

struct RunResult {
  int exit_code;
  std::string stdout_text;
};

RunResult run(const std::string& args) {
  const std::string out_path = "cli_stdout.tmp";
  const std::string cmd = cli() + " " + args + " > " + out_path + " 2> cli_stderr.tmp";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(status), buf.str()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

const char* kWorkedExample = R"({
  "p": 2, "D": 1, "d": 1, "r": 1,
  "basis": [
    {"components": [{"d": 1, "tail": {"kind": "none"}, "terms": [
      {"exp": [0], "coeff": {"p": 2, "D": 1, "terms": [{"j": 0, "num": "1", "den": "1"}]}}
    ]}]},
    {"components": [{"d": 1, "tail": {"kind": "none"}, "terms": [
      {"exp": [1], "coeff": {"p": 2, "D": 1, "terms": [{"j": 0, "num": "1", "den": "1"}]}}
    ]}]}
  ]
})";

}  // namespace

TEST_CASE("analyze emits the worked-example constants") {
  write_file("problem.json", kWorkedExample);
  auto res = run("analyze problem.json");
  REQUIRE(res.exit_code == 0);
  const Json out = Json::parse(res.stdout_text);
  CHECK(out["m"] == 2);
  CHECK(out["A"] == "1");
  CHECK(out["q"] == Json::array({3}));
  CHECK(out["N"] == 2);
}

TEST_CASE("witness then verify round-trips with exit 0") {
  write_file("problem.json", kWorkedExample);
  auto wit = run("witness problem.json --output cert.json");
  REQUIRE(wit.exit_code == 0);
  auto ver = run("verify cert.json problem.json --quiet");
  CHECK(ver.exit_code == 0);

  // the witness is 2^{7/3}: coefficient 4 at index 1 of the D=3 tower
  std::ifstream in("cert.json");
  const Json cert = Json::parse(in);
  CHECK(cert["witness"][0] ==
        Json{{"p", 2}, {"D", 3}, {"terms", {{{"j", 1}, {"num", "4"}, {"den", "1"}}}}});
}

TEST_CASE("identical inputs produce byte-identical output") {
  write_file("problem.json", kWorkedExample);
  auto first = run("witness problem.json");
  auto second = run("witness problem.json");
  CHECK(first.exit_code == 0);
  CHECK(first.stdout_text == second.stdout_text);

  auto a1 = run("analyze problem.json");
  auto a2 = run("analyze problem.json");
  CHECK(a1.stdout_text == a2.stdout_text);
}

TEST_CASE("tampered certificates fail verification with exit 1") {
  write_file("problem.json", kWorkedExample);
  REQUIRE(run("witness problem.json --output cert.json").exit_code == 0);
  std::ifstream in("cert.json");
  Json cert = Json::parse(in);
  cert["stages"][0]["N"] = 1;
  write_file("tampered.json", cert.dump(2));
  CHECK(run("verify tampered.json problem.json --quiet").exit_code == 1);
}

TEST_CASE("schema violations exit 2 with diagnostics") {
  write_file("broken.json", "{\"p\": 2,");
  CHECK(run("analyze broken.json").exit_code == 2);

  write_file("badfield.json", R"({"p": 2, "D": 1, "d": 1, "r": 2, "basis": [
    {"components": [{"d": 1, "tail": {"kind": "none"}, "terms": [
      {"exp": [0], "coeff": {"p": 2, "D": 1, "terms": [{"j": 0, "num": "1", "den": "1"}]}}
    ]}]}
  ]})");
  CHECK(run("analyze badfield.json").exit_code == 2);
}

TEST_CASE("dependent bases exit 3") {
  write_file("dependent.json", R"({
    "p": 2, "D": 1, "d": 1, "r": 1,
    "basis": [
      {"components": [{"d": 1, "tail": {"kind": "none"}, "terms": [
        {"exp": [0], "coeff": {"p": 2, "D": 1, "terms": [{"j": 0, "num": "1", "den": "1"}]}}
      ]}]},
      {"components": [{"d": 1, "tail": {"kind": "none"}, "terms": [
        {"exp": [0], "coeff": {"p": 2, "D": 1, "terms": [{"j": 0, "num": "1", "den": "1"}]}}
      ]}]}
    ]
  })");
  CHECK(run("analyze dependent.json").exit_code == 3);
}

TEST_CASE("under-truncated bases exit 4") {
  write_file("shallow.json", R"({
    "p": 2, "D": 1, "d": 1, "r": 1,
    "basis": [
      {"components": [{"d": 1, "tail": {"kind": "integral", "T": 0}, "terms": [
        {"exp": [0], "coeff": {"p": 2, "D": 1, "terms": [{"j": 0, "num": "1", "den": "1"}]}}
      ]}]},
      {"components": [{"d": 1, "tail": {"kind": "integral", "T": 0}, "terms": [
        {"exp": [0], "coeff": {"p": 2, "D": 1, "terms": [{"j": 0, "num": "3", "den": "1"}]}}
      ]}]}
    ]
  })");
  CHECK(run("witness shallow.json").exit_code == 4);
}

TEST_CASE("valset matches the oracle example") {
  write_file("vectors.json", R"({"p": 2, "D": 1, "vectors": [
    [{"p":2,"D":1,"terms":[{"j":0,"num":"2","den":"1"}]}, {"p":2,"D":1,"terms":[]}],
    [{"p":2,"D":1,"terms":[]}, {"p":2,"D":1,"terms":[{"j":0,"num":"1","den":"1"}]}]
  ]})");
  auto res = run("valset vectors.json --precision 3");
  REQUIRE(res.exit_code == 0);
  const Json out = Json::parse(res.stdout_text);
  CHECK(out == Json{{"set", {"0", "1"}}, {"stabilized", true}});

  // dependent vectors never stabilize: inconclusive exit
  write_file("dependent_vectors.json", R"({"p": 2, "D": 1, "vectors": [
    [{"p":2,"D":1,"terms":[{"j":0,"num":"3","den":"1"}]}],
    [{"p":2,"D":1,"terms":[{"j":0,"num":"1","den":"1"}]}]
  ]})");
  CHECK(run("valset dependent_vectors.json --precision 3").exit_code == 5);
}
