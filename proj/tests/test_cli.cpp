#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(SESHADRI_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("poset DOT output") {
  Run r = run("poset --type A2 --lambda 1,1 --tau w0 --format dot");
  CHECK(r.code == 0);
  CHECK(count(r.out, "[label=\"b=") == 8);
  CHECK(count(r.out, "[label=\"b=2\"]") == 2);
  CHECK(count(r.out, "\" [label=\"") - count(r.out, "[label=\"b=") == 6);
  CHECK(r.out.find("\"1\" -> \"2.1\" [label=\"b=2\"]") != std::string::npos);
  CHECK(r.out.find("\"2\" -> \"1.2\" [label=\"b=2\"]") != std::string::npos);
}

TEST_CASE("degree and dim outputs") {
  Run deg = run("degree --type A1 --lambda 2 --tau 1");
  CHECK(deg.code == 0);
  CHECK(nlohmann::json::parse(deg.out) == nlohmann::json{{"degree", 2}});
  Run dim = run("dim --type A2 --lambda 1,0 --tau w0 --m 1");
  CHECK(dim.code == 0);
  CHECK(nlohmann::json::parse(dim.out) == nlohmann::json{{"dim", 3}});
  Run split = run("dim --type A --rank 2 --lambda 1,1 --m 2");
  CHECK(nlohmann::json::parse(split.out)["dim"] == 27);
}

TEST_CASE("golden poset JSON and re-ingest") {
  Run r = run("poset --type A2 --lambda 1,1 --tau w0");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse(slurp(GOLDEN_DIR "/a2_adjoint_poset.json")));
  Run again = run("poset --in " GOLDEN_DIR "/a2_adjoint_poset.json");
  CHECK(again.code == 0);
  CHECK(again.out == r.out);
  Run bad = run("poset --in " GOLDEN_DIR "/a2_adjoint_tampered.json");
  CHECK(bad.code == 1);
}

TEST_CASE("other commands produce parseable output") {
  CHECK(nlohmann::json::parse(run("chains --type B2 --lambda 1,1").out).size() > 0);
  auto ls = nlohmann::json::parse(run("ls-enum --type A1 --lambda 2 --tau 1 --m 1").out);
  CHECK(ls.size() == 3);
  CHECK(run("ls-enum --type A1 --lambda 2 --tau 1 --m 1 --format csv").out == "id,1\n0,1\n1/2,1/2\n1,0\n");
  auto demazure = run("character --type G2 --lambda 1,0 --m 2").out;
  auto paths = run("character --type G2 --lambda 1,0 --m 2 --model paths").out;
  CHECK(demazure == paths);
  auto nok = nlohmann::json::parse(run("nok --type A2 --lambda 1,1").out);
  CHECK(nok["degree"] == 6);
  CHECK(nok["degree_via_hilbert"] == 6);
  auto dec = nlohmann::json::parse(run("decompose --type A1 --lambda 2 --tau 1 --element 1:3/2,id:1/2").out);
  CHECK(dec["summands"].size() == 2);
  auto mono = nlohmann::json::parse(run("monomial --type A1 --lambda 2 --tau 1 --element 1:1/2,id:1/2").out);
  CHECK(mono["text"] == "X(-1)^(1) v(m=1)");
  auto mono2 = nlohmann::json::parse(run("monomial --type A2 --lambda 1,1 --element 1.2.1:1 --word 2.1.2").out);
  CHECK(mono2["weight"] == nlohmann::json::array({-1, -1}));
}

TEST_CASE("--out writes a file") {
  std::string path = "cli_out_test.json";
  std::remove(path.c_str());
  CHECK(run("degree --type A2 --lambda 1,1 --out " + path).code == 0);
  CHECK(nlohmann::json::parse(slurp(path))["degree"] == 6);
}

TEST_CASE("exit codes for invalid input") {
  CHECK(run("dim --type A2 --lambda -1,0").code == 1);
  CHECK(run("dim --type A2 --lambda 1").code == 1);
  CHECK(run("dim --type X2 --lambda 1,1").code == 1);
  CHECK(run("dim --type A2 --lambda 1,1 --tau 3").code == 1);
  CHECK(run("poset --type A2 --lambda 1,1 --format csv").code == 1);
  CHECK(run("monomial --type A1 --lambda 1 --tau 1 --element 1:1/2,id:1/2").code == 1);
  CHECK(run("monomial --type A2 --lambda 1,1 --element 1.2.1:1 --word 1.2").code == 1);
  CHECK(run("nosuchcommand").code == 1);
  CHECK(run("dim --type A2 --lambda 1,0 --qset 1").code == 1);
}
