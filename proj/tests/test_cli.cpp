#include <fstream>
#include <sstream>

#include "doctest.h"
#include "pgk_cli.hpp"

using pgk::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eq decisions and exit codes") {
  auto r = cli({"eq", "--preset", "B3", "a b a", "b a b"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = cli({"eq", "--preset", "B3", "a b", "b a"});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");
}

TEST_CASE("member and coset") {
  auto r = cli({"member", "--preset", "B3", "a b a-"});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");
  r = cli({"member", "--preset", "B3", "b a b a-"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = cli({"coset", "--preset", "B3B3", "-P", "b", "b b a a-"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = cli({"coset", "--preset", "B3B3", "-P", "b", "a"});
  CHECK(r.code == 1);
}

TEST_CASE("tree and check output") {
  auto r = cli({"tree", "--preset", "B3B3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "amalgam {a,b,c} N={b}\n"
        "  leaf {a,b} delta=a b a simples=6\n"
        "  leaf {b,c} delta=b c b simples=6\n");
  r = cli({"check", "--preset", "B4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("generators are atoms: yes") != std::string::npos);
  CHECK(r.out.find("graphs coincide: yes") != std::string::npos);
  CHECK(r.out.find("fc tree: ok (1 leaves)") != std::string::npos);
}

TEST_CASE("simples listing") {
  auto r = cli({"simples", "--preset", "B3B3"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> got;
  std::string line;
  while (std::getline(lines, line)) got.push_back(line);
  std::vector<std::string> want{"1",     "a",     "b",     "c",   "a b",
                                "b a",   "b c",   "c b",   "a b a",
                                "b c b"};
  CHECK(got == want);
}

TEST_CASE("nf of positive and signed words") {
  auto r = cli({"nf", "--preset", "B3B3", "-w", "c a"});
  CHECK(r.code == 0);
  CHECK(r.out == "(2:c | 1:a ; 1)\n");
  r = cli({"nf", "--preset", "B3", "-w", "a b a b"});
  CHECK(r.out == "a b a b\n");
  r = cli({"nf", "--preset", "B3", "-w", "a b a-"});
  CHECK(r.out == "a.b a-\n");
}

TEST_CASE("parabolic verdicts") {
  auto r = cli({"parabolic", "--preset", "B3B3", "-X", "a,c"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = cli({"parabolic", "--preset", "B3B3", "-X", "b"});
  CHECK(r.out == "true\n");
}

TEST_CASE("probe") {
  auto r = cli({"probe", "--preset", "B3", "a b", "-k", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  r = cli({"probe", "--preset", "B3", "a a-"});
  CHECK(r.code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("file input") {
  const char* path = "pgk_cli_test_input.pg";
  {
    std::ofstream f(path);
    f << "atoms: x y\nrel: x y x = y x y\n";
  }
  auto r = cli({"eq", path, "x y x", "y x y"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  std::remove(path);
}

TEST_CASE("identical invocations produce identical output") {
  std::vector<std::vector<std::string>> invocations{
      {"tree", "--preset", "RA2"},
      {"simples", "--preset", "B4"},
      {"nf", "--preset", "B3B3", "-w", "c b a b- c-"},
  };
  for (const auto& args : invocations) {
    auto first = cli(args);
    auto second = cli(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("errors exit with 2") {
  auto r = cli({"eq", "--preset", "NOPE", "a", "a"});
  CHECK(r.code == 2);
  r = cli({"eq", "missing_file.pg", "a", "a"});
  CHECK(r.code == 2);
  r = cli({"bogus-subcommand"});
  CHECK(r.code == 2);
  // unknown atom in a word
  r = cli({"member", "--preset", "B3", "a z"});
  CHECK(r.code == 2);
}
