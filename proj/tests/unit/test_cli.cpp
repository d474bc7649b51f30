#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "leibniz/catalog.hpp"
#include "leibniz/io.hpp"
#include "leibniz/suite.hpp"

using namespace leibniz;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(LEIBNIZ_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("leibniz_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("validate an abelian file") {
  const fs::path dir = scratch();
  REQUIRE(run("catalog abelian --n 3 -o " + (dir / "a.json").string()).code == 0);
  const Run r = run("validate " + (dir / "a.json").string());
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS", 0) == 0);
}

TEST_CASE("catalog -> file -> parse is identical for every fixture") {
  const fs::path dir = scratch();
  for (const auto& f : suite::fixtures()) {
    const auto& d = f.descriptor;
    const fs::path p = dir / (d.name + ".json");
    std::string args = "catalog " + d.builder + " -o " + p.string();
    if (catalog::builder_takes_n(d.builder)) args += " --n " + std::to_string(d.n);
    REQUIRE(run(args).code == 0);
    CHECK_MESSAGE(io::parse_algebra(io::read_file(p.string())) == f.algebra, d.name);
  }
}

TEST_CASE("fixture files themselves are valid CLI inputs") {
  const Run r = run(std::string("validate ") + LEIBNIZ_FIXTURE_DIR + "/solvable5.json");
  CHECK(r.code == 0);
}

TEST_CASE("completeness of the first section-4 example") {
  const fs::path dir = scratch();
  REQUIRE(run("catalog example_sec4_one -o " + (dir / "one.json").string()).code == 0);
  const Run r = run("completeness " + (dir / "one.json").string());
  CHECK(r.code == 0);
  CHECK(r.out.find("def1: complete") != std::string::npos);
  const Run j = run("--json completeness " + (dir / "one.json").string());
  const auto doc = io::json::parse(j.out);
  CHECK(doc["def1"]["verdict"] == true);
  CHECK(doc["def2"]["verdict"] == false);
}

TEST_CASE("factor prints a certificate and exits nonzero") {
  const fs::path dir = scratch();
  REQUIRE(run("catalog example_sec4_one -o " + (dir / "one.json").string()).code == 0);
  BilinearTensor F(3);
  F(2, 2, 2) = 1;
  write(dir / "F.json", io::emit_bilinear(F));
  const std::string base = "factor " + (dir / "one.json").string() + " --bilinear " + (dir / "F.json").string();
  const Run r = run(base + " --modulo zero");
  CHECK(r.code == 1);
  CHECK(r.out.find("infeasible") != std::string::npos);
  CHECK(r.out.find("contradiction") != std::string::npos);
  const Run m = run(base + " --modulo leib --side both --json");
  CHECK(m.code == 0);
  CHECK(io::json::parse(m.out)["results"].size() == 2);
}

TEST_CASE("input and usage errors exit with 2") {
  const fs::path dir = scratch();
  write(dir / "broken.json", "{\"dim\": 2, \"brackets\": [");
  const std::string broken = (dir / "broken.json").string();
  CHECK(run("validate " + broken).code == 2);
  CHECK(run("validate " + (dir / "missing.json").string()).code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("catalog nosuch").code == 2);
  write(dir / "dup.json", R"({"dim": 2, "brackets": [{"i":1,"j":1,"terms":[]},{"i":1,"j":1,"terms":[]}]})");
  CHECK(run("validate " + (dir / "dup.json").string()).code == 2);
}

TEST_CASE("a non-Leibniz table fails validation with exit 1") {
  const fs::path dir = scratch();
  write(dir / "bad.json", R"({"dim": 2, "brackets": [{"i":1,"j":1,"terms":[{"k":2,"coeff":"1"}]},
                                                   {"i":2,"j":1,"terms":[{"k":1,"coeff":"1"}]}]})");
  const Run r = run("validate " + (dir / "bad.json").string());
  CHECK(r.code == 1);
  CHECK(r.out.rfind("FAIL", 0) == 0);
  CHECK(run("invariants " + (dir / "bad.json").string()).code == 1);
}

TEST_CASE("random catalog entries are deterministic") {
  const Run a = run("catalog random --seed 9 --lie heisenberg --module-dim 3");
  const Run b = run("catalog random --seed 9 --lie heisenberg --module-dim 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(check_left_leibniz(io::parse_algebra(a.out)).empty());
}
