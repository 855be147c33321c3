#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace snax;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.rfind("@", 0) == 0) a = testsupport::corpusPath(a.substr(1));
  std::ostringstream out, err;
  int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check reports the definition count") {
  auto r = cli({"check", "@map.snax"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "ok: 3 definitions\n");
}

TEST_CASE("check rejects with located diagnostics") {
  auto r = cli({"check", "@double_write.snax"});
  CHECK(r.code == kExitRejected);
  CHECK(r.out.find("twice:6:3: DestinationClash") != std::string::npos);
  auto u = cli({"check", "@unguarded.snax"});
  CHECK(u.code == kExitRejected);
  CHECK(u.out.find("Unguarded") != std::string::npos);
  auto d = cli({"check", "@sax_form.snax"});
  CHECK(d.code == kExitRejected);
  CHECK(d.out.find(":5:16: DialectMismatch") != std::string::npos);
}

TEST_CASE("run with a dump shows the negated tag") {
  auto r = cli({"run", "@neg.snax", "--entry", "main", "--scheduler", "seeded", "--seed", "7", "--dump"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("Final after ", 0) == 0);
  CHECK(r.out.find("block \xCE\xB1" "0 : bool [ff]") != std::string::npos);
}

TEST_CASE("run type-checks before executing") {
  auto path = std::string("/tmp/snax-cli-stuck.snax");
  std::ofstream(path) << "proc main (b : 1) =\n  x : 1 <- (read x (() => write x ()));\n  read x (() => write b ())\n";
  auto r = cli({"run", path});
  auto forced = cli({"run", path, "--unchecked"});
  auto conform = cli({"conform", path, "--unchecked", "--schedules", "2"});
  std::remove(path.c_str());
  CHECK(r.code == kExitRejected);
  CHECK(r.out.find("Stuck") == std::string::npos);
  CHECK(forced.code == kExitStuck);
  CHECK(forced.err.rfind("warning: ", 0) == 0);
  CHECK(forced.out.rfind("Stuck after 1 steps\nblocked: ", 0) == 0);
  CHECK(conform.code == kExitConformance);
  CHECK(conform.out.find("stuck=1") != std::string::npos);
}

TEST_CASE("run stops at the step bound") {
  auto r = cli({"run", "@neg.snax", "--bound", "2"});
  CHECK(r.code == kExitBound);
  CHECK(r.out.rfind("BoundExceeded after 2 steps", 0) == 0);
}

TEST_CASE("layout prints the offset report") {
  auto r = cli({"layout", "@map.snax", "boollist"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("size 3; ", 0) == 0);
  CHECK(cli({"layout", "@map.snax", "missing"}).code == kExitRejected);
}

TEST_CASE("trace prints one numbered line per step") {
  auto r = cli({"trace", "@neg.snax", "--seed", "3"});
  CHECK(r.code == kExitOk);
  std::istringstream in(r.out);
  std::string line;
  int n = 0;
  while (std::getline(in, line))
    if (line.rfind("step ", 0) == 0) CHECK(line.rfind("step " + std::to_string(++n) + ": ", 0) == 0);
  CHECK(n == 9);
}

TEST_CASE("conform summarizes the three harnesses") {
  auto r = cli({"conform", "@neg.snax", "--schedules", "10"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "preservation: schedules=10 steps=90 failures=0\nprogress: states=21 stuck=0\ndeterminism: finals=1\n");
  auto b = cli({"conform", "@swap.snax", "--schedules", "1", "--bound", "3"});
  CHECK(b.code == kExitBound);
  CHECK(b.out.find("bound-exceeded") != std::string::npos);
}

TEST_CASE("help and usage errors") {
  for (const char* sub : {"check", "run", "trace", "layout", "conform"}) {
    CAPTURE(sub);
    auto r = cli({sub, "--help"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("Usage") != std::string::npos);
  }
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"explode"}).code == kExitUsage);
  CHECK(cli({"run"}).code == kExitUsage);
  CHECK(cli({"run", "@neg.snax", "--scheduler", "fair"}).code == kExitUsage);
  CHECK(cli({"run", "@neg.snax", "--entry", "neg"}).code == kExitUsage);
  CHECK(cli({"check", "/nonexistent/file.snax"}).code == kExitUsage);
}

TEST_CASE("repeat runs are byte identical") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"trace", "@map_main.snax", "--seed", "11"},
           {"run", "@map.sax", "--dump", "--scheduler", "rr"},
           {"conform", "@swap.snax", "--schedules", "5"}}) {
    auto a = cli(args);
    auto b = cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("parse errors carry the file location") {
  auto path = std::string("/tmp/snax-cli-bad.snax");
  std::ofstream(path) << "type bool = +{ 'tt : 1,\n";
  auto r = cli({"check", path});
  std::remove(path.c_str());
  CHECK(r.code == kExitRejected);
  CHECK(r.out.find(path + ":2:1: ") != std::string::npos);
}
