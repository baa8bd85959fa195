#include <doctest.h>

#include <sstream>

#include "su2free/cli.hpp"
#include "su2free/textio.hpp"

using namespace su2free;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(run({"check", "Z(7)", "x", "2I", "x", "2I"}).code == 0);
  CHECK(run({"check", "Z(2)", "x", "Z(2)", "x", "Z(2)"}).code == 3);
  CHECK(run({"check", "simple(7,2,4)"}).code == 0);
  CHECK(run({"check", "simple(7,1,1)"}).code == 3);
  CHECK(run({"check", "Z(7) x wat x 2I"}).code == 2);
  CHECK(run({"check", ""}).code == 2);
  CHECK(run({"--budget", "100", "check", "Z(7) x 2I x 2I"}).code == 4);
}

TEST_CASE("check reports order and witness") {
  auto r = run({"--format", "records", "check", "Z(7) x 2I x 2I"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"order\":100800") != std::string::npos);
  CHECK(r.out.find("\"free\":true") != std::string::npos);
  auto r2 = run({"--format", "records", "check", "Z(2) x Z(2) x Z(2)"});
  CHECK(r2.code == 3);
  CHECK(r2.out.find("witness") != std::string::npos);
  CHECK(r2.out.find("e(1/2)") != std::string::npos);
}

TEST_CASE("json specification documents") {
  // semisplittable with a graph pair
  auto r = run({"check",
                "{\"kind\":\"semisplittable\",\"pair\":{\"graph\":{\"group\":\"2O\","
                "\"aut\":\"out2O\"}},\"single\":\"Z(5)\",\"position\":3}"});
  CHECK(r.code == 0);
  // semisplittable with an explicit quintuple
  auto r2 = run({"check",
                 "{\"kind\":\"semisplittable\",\"pair\":{\"A\":\"2O\",\"A0\":\"2T\","
                 "\"B\":\"Z(2)\",\"B0\":\"trivial\",\"theta\":\"id\"},"
                 "\"single\":\"2I\"}"});
  CHECK(r2.code == 0);
  // splittable and simple documents
  CHECK(run({"check",
             "{\"kind\":\"splittable\",\"factors\":[\"Z(7)\",\"2I\",\"2I\"]}"})
            .code == 0);
  CHECK(run({"check", "{\"kind\":\"simple\",\"p\":7,\"r\":2,\"s\":4}"}).code == 0);
  // goursat3: the full product Z2 x Z2 x Z2 through a quotient gluing
  auto r3 = run({"--format", "records", "check",
                 "{\"kind\":\"goursat3\",\"pair\":{\"product\":[\"Z(2)\",\"Z(2)\"]},"
                 "\"pair0\":\"full\",\"single\":\"Z(2)\",\"single0\":\"full\","
                 "\"theta\":\"id\"}"});
  CHECK(r3.code == 3);
  CHECK(r3.out.find("\"order\":8") != std::string::npos);
  // goursat3 with trivial kernels: a simple-type diagonal, never free
  auto r4 = run({"check",
                 "{\"kind\":\"goursat3\",\"pair\":{\"graph\":{\"group\":\"Z(3)\","
                 "\"aut\":\"id\"}},\"pair0\":\"trivial\",\"single\":\"Z(3)\","
                 "\"single0\":\"trivial\",\"theta\":\"id\"}"});
  CHECK(r4.code == 3);
  // malformed documents are parse errors
  CHECK(run({"check", "{\"kind\":\"nope\"}"}).code == 2);
  CHECK(run({"check", "{not json"}).code == 2);
}

TEST_CASE("enumerate is deterministic and honors filters") {
  std::vector<std::string> args = {"--format", "records", "enumerate", "--family",
                                   "main:Zn.2T.2T", "--bounds", "5"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"n\":5") != std::string::npos);
  CHECK(a.out.find("\"n\":6") == std::string::npos);

  auto c = run({"enumerate", "--family", "simple", "--bounds", "5"});
  CHECK(c.code == 0);
  // p in {2, 3, 5}: 1 + 4 + 16 instances
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 21);

  CHECK(run({"enumerate", "--family", "bogus"}).code == 2);
}

TEST_CASE("verify exits cleanly on a small theorem") {
  auto r = run({"verify", "--theorem", "simple", "--bounds", "13", "--out", "/dev/null"});
  CHECK(r.code == 0);
  CHECK(r.out.find("unexpected=0") != std::string::npos);
  CHECK(run({"verify", "--theorem", "bogus"}).code == 1);
}

TEST_CASE("tables output is deterministic") {
  auto a = run({"tables"});
  auto b = run({"tables"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("classes: 9, sizes sum to 120") != std::string::npos);
  CHECK(a.out.find("classes: 8, sizes sum to 48") != std::string::npos);
  auto c = run({"tables", "--n", "4"});
  CHECK(c.out.find("Z(4)\t{-1, 0, 1}") != std::string::npos);
}

TEST_CASE("lemma subcommands") {
  CHECK(run({"lemma", "solve", "4", "6", "2"}).out.find("t*(") != std::string::npos);
  CHECK(run({"lemma", "solve", "2", "4", "1"}).out == "unsolvable\n");
  CHECK(run({"lemma", "neg", "12", "5"}).out.find("2*Z") != std::string::npos);
  CHECK(run({"lemma", "coslattice", "6", "4"}).out.find("k=2 n1=3 m1=2") != std::string::npos);
  CHECK(run({"lemma", "res", "5", "1", "-1"}).out == "solvable\n");
  CHECK(run({"lemma", "res", "3", "1", "1"}).out == "not solvable\n");
  CHECK(run({"lemma", "simple", "7", "2", "4"}).out == "only the trivial solution\n");
  CHECK(run({"lemma", "bogus"}).code == 2);
}
