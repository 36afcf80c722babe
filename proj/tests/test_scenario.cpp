#include "doctest.h"
#include "fsplit/errors.hpp"
#include "fsplit/scenario.hpp"
#include "support.hpp"

using namespace fsplit;
using namespace fsplit::testing;

namespace {

const char* kBasic = R"(# two variables over F_2
ring p=2 vars=x,y
splitting standard
ideal I = x
ideal J = x*y
ideal K = x + y
ideal M = x, y
ideal Z =
)";

CommandResult run(const std::string& text, std::vector<std::string> args) {
  return run_command(parse_scenario(text), args);
}

}  // namespace

TEST_CASE("parse a basic scenario") {
  auto s = parse_scenario(kBasic);
  CHECK(s.standard);
  REQUIRE(s.splitting.has_value());
  CHECK(s.splitting->premultiplier() == P(s.ring, "x*y"));
  CHECK(s.ideals.size() == 5);
  REQUIRE(s.find_ideal("Z") != nullptr);
  CHECK(s.find_ideal("Z")->generators.empty());
  CHECK(s.find_ideal("nope") == nullptr);
}

TEST_CASE("scenario without ideals") {
  auto s = parse_scenario("ring p=3 vars=x\nsplitting standard\n");
  CHECK(s.ideals.empty());
  CHECK(s.splitting->premultiplier() == P(s.ring, "x^2"));
  auto r = run_command(s, {"check-compatible", "I"});
  CHECK(r.exit_code == 2);
}

TEST_CASE("scenario errors carry line and column") {
  try {
    parse_scenario("ring p=2 vars=x,y\nsplitting g = x^2\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("not a splitting") != std::string::npos);
  }
  try {
    parse_scenario("ring p=2 vars=x,y\nideal I = x + q\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 15);
  }
  CHECK_THROWS_AS(parse_scenario("ring p=4 vars=x\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("ideal I = x\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("ring p=2 vars=x\nbogus line\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("ring p=2 vars=x\nparam nonsense = 3\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("ring p=2 vars=x\nideal I = x\nideal I = x^2\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("ring p=2 vars=x,y\nweights 1\n"), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  for (const char* text : {kBasic,
                           "ring p=3 vars=a,b,c max-degree=20\nweights 1,2,3\nweights 0,1,0\n"
                           "splitting g = a^2*b^2*c^2 + a^3*b\nideal P = a*b - c^2, b^3\nparam N = 4\n",
                           "ring p=5 vars=x\n"}) {
    auto s = parse_scenario(text);
    auto again = parse_scenario(serialize_scenario(s));
    CHECK(again == s);
    CHECK(serialize_scenario(again) == serialize_scenario(s));
  }
}

TEST_CASE("command examples") {
  auto a = run(kBasic, {"check-compatible", "I"});
  CHECK(a.exit_code == 0);
  CHECK(a.report["result"]["verdict"] == true);
  auto b = run(kBasic, {"check-compatible", "K"});
  CHECK(b.exit_code == 1);
  CHECK(b.report["result"].contains("witness"));
  auto c = run(kBasic, {"rigidity", "I"});
  CHECK(c.exit_code == 0);
  CHECK(c.summary.find("dim_hom=1 dim_intertwined=0") != std::string::npos);
  auto d = run(kBasic, {"enumerate", "--brute-force"});
  CHECK(d.exit_code == 0);
  CHECK(d.report["result"]["members"].size() == 6);
  auto e = run(kBasic, {"enumerate", "--seeds", "J"});
  CHECK(e.report["result"]["members"].size() == 4);
  auto f = run(kBasic, {"enumerate", "--seeds", "K"});
  CHECK(f.exit_code == 1);
  auto g = run(kBasic, {"phi-check", "K", "--N", "2"});
  CHECK(g.exit_code == 1);
  auto h = run(kBasic, {"fixed-points", "--hilbert", "1"});
  CHECK(h.exit_code == 0);
  CHECK(h.report["result"]["members"].size() == 2);
  CHECK(run(kBasic, {"hilbert", "J"}).report["result"]["hilbert_polynomial"] == "2");
  CHECK(run(kBasic, {"check-splitting"}).exit_code == 0);
  CHECK(run(kBasic, {"graded-part"}).exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run(kBasic, {}).exit_code == 2);
  CHECK(run(kBasic, {"bogus"}).exit_code == 2);
  CHECK(run(kBasic, {"check-compatible"}).exit_code == 2);
  CHECK(run(kBasic, {"check-compatible", "nope"}).exit_code == 2);
  CHECK(run(kBasic, {"phi-check", "I"}).exit_code == 2);
  CHECK(run(kBasic, {"rigidity", "Z"}).exit_code == 2);
  CHECK(run("ring p=2 vars=x,y\nideal I = x\n", {"check-compatible", "I"}).exit_code == 2);
}

TEST_CASE("reports are deterministic and versioned") {
  for (std::vector<std::string> args : {std::vector<std::string>{"enumerate", "--brute-force"},
                                        {"rigidity", "J"},
                                        {"check-compatible", "K"},
                                        {"hilbert", "I"}}) {
    auto a = run(kBasic, args);
    auto b = run(kBasic, args);
    CHECK(a.report.dump(2) == b.report.dump(2));
    CHECK(a.summary == b.summary);
    CHECK(a.report["schema_version"] == kReportSchemaVersion);
    CHECK(a.report["exit_code"] == a.exit_code);
  }
}
