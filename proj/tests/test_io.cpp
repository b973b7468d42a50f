#include "doctest.h"

#include "commands.hpp"
#include "test_support.hpp"

using namespace ainf;

namespace {

const char* kUnit = R"({"ring": "ZZ/7", "algebras": [{"name": "S", "generators": [["1", 0]], "unit": "1"}]})";

std::string spec(const std::string& name) { return std::string(AINF_SPECS_DIR) + "/" + name; }

std::string run_json(const std::string& cmd, const io::SpecDocument& d, cli::Options o = {}) {
  return cli::format_json(cli::run(cmd, d, o));
}

}  // namespace

TEST_CASE("minimal documents load") {
  auto d = io::load_string(kUnit);
  REQUIRE(d.algebras.size() == 1);
  CHECK(d.ring == Ring::integers_mod(7));
  CHECK(d.weight_cap == 4);
  CHECK(d.arity_cap == 4);
  require_pass(check_algebra(*d.algebra("S"), 4));

  auto mf = io::load(spec("matrix_factorization.json"));
  REQUIRE(mf.matrix_factorizations.size() == 1);
  const auto& f = mf.matrix_factorizations[0].value;
  CHECK(f.w == Elem::parse(mf.ring, "x^2"));
  require_pass(mf_check(f));
  auto m = b_to_m(mf.algebra("P")->space(), mf.algebra("P")->b());
  CHECK(*m.find({}) == Vec<Letter>(mf.ring, 0).scaled(Elem::parse(mf.ring, "x^2")));
}

TEST_CASE("rings, coefficients and gradings") {
  CHECK(io::parse_ring("ZZ") == Ring::integers());
  CHECK(io::parse_ring("QQ") == Ring::rationals());
  CHECK(io::parse_ring("ZZ/7") == Ring::integers_mod(7));
  CHECK(io::parse_ring("QQ[x, y]") == Ring::polynomial(Ring::rationals(), {"x", "y"}));
  CHECK(io::parse_ring("ZZ/5[t]") == Ring::polynomial(Ring::integers_mod(5), {"t"}));
  CHECK_THROWS_AS(io::parse_ring("RR"), StructuralError);
  CHECK_THROWS_AS(io::parse_ring("ZZ/1"), StructuralError);

  // Big integers as strings, monomial maps with exponent vectors.
  auto d = io::load_string(R"({"ring": "QQ[x,y]", "grading": "Z/2",
    "algebras": [{"name": "P", "form": "dga", "generators": [["e", 0]],
                  "curvature": {"e": {"terms": [[[2, 0], "1"], [[0, 1], "-123456789012345678901234567890"]]}}}]})");
  CHECK(d.grading == Grading::cyclic(2));
  auto m = b_to_m(d.algebra("P")->space(), d.algebra("P")->b());
  CHECK(m.find({})->coeff(0) == Elem::parse(d.ring, "x^2 - 123456789012345678901234567890*y"));
}

TEST_CASE("validation errors name the offending entity") {
  try {
    io::load(spec("bad_degree.json"));
    FAIL("expected a validation error");
  } catch (const io::ValidationError& e) {
    CHECK(e.entity == "algebras.A");
    CHECK(std::string(e.what()).find("(a,a)") != std::string::npos);
  }
  auto entity_of = [](const char* text) {
    try {
      io::load_string(text);
    } catch (const io::ValidationError& e) {
      return e.entity;
    }
    return std::string("loaded");
  };
  CHECK(entity_of(R"({"ring": "QQ", "algebras": [{"name": "A", "generators": [["1", 0]], "unit": "u"}]})") ==
        "algebras.A");
  CHECK(entity_of(R"({"ring": "QQ", "algebras": [{"name": "A", "generators": [["1", 0]], "unit": "1",
                      "operations": [{"in": ["1", "q"], "out": {}}]}]})") == "algebras.A.operations[0]");
  CHECK(entity_of(R"({"ring": "QQ", "modules": [{"name": "M", "algebra": "B", "generators": [["m", 0]]}]})") ==
        "algebra 'B'");
  CHECK(entity_of(R"({"ring": "QQ", "grading": "Q"})") == "grading");
  // m2(1, 1) = 2 contradicts the unit; restating m2(1, 1) = 1 is accepted.
  CHECK(entity_of(R"({"ring": "QQ", "algebras": [{"name": "A", "generators": [["1", 0]], "unit": "1",
                      "operations": [{"in": ["1", "1"], "out": {"1": "2"}}]}]})") == "algebras.A");
  CHECK(entity_of(R"({"ring": "QQ", "algebras": [{"name": "A", "generators": [["1", 0]], "unit": "1",
                      "operations": [{"in": ["1", "1"], "out": {"1": "1"}}]}]})") == "loaded");
  CHECK(entity_of(R"({"ring": "QQ", "algebras": [{"name": "A", "generators": [["1", 0]], "unit": "1"}],
                      "modules": [{"name": "M", "algebra": "A", "generators": [["m", 0]],
                                   "operations": [{"in": ["m", "1"], "out": {"m": "1"}}]}]})") == "modules.M");
  CHECK(entity_of(R"({"ring": "XX"})") == "ring");
  CHECK(entity_of(R"({"ring": "QQ", "matrix_factorizations": [{"name": "F", "even": 1, "odd": 1,
                      "potential": "x", "d": [["0"]]}]})") == "matrix_factorizations.F.potential");
  CHECK(entity_of(R"({"ring": "QQ", "algebras": [{"name": "A", "generators": [["1", 0], ["1", 1]], "unit": "1"}]})") ==
        "algebras.A");
}

TEST_CASE("parse errors carry line and column") {
  try {
    io::load_string("{\n  \"ring\": \"QQ\",\n  oops\n}", "doc.json");
    FAIL("expected a parse error");
  } catch (const io::ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 3);
    CHECK(std::string(e.what()).rfind("doc.json:3:3", 0) == 0);
  }
  CHECK_THROWS_AS(io::load(spec("does-not-exist.json")), io::ParseError);
}

TEST_CASE("dump and load are inverse") {
  for (const char* name : {"inversion.json", "homotopy.json", "pairs.json", "curved_rank1.json",
                           "matrix_factorization.json", "maurer_cartan.json", "unit.json"}) {
    INFO(name);
    auto d = io::load(spec(name));
    std::string once = io::dump(d, 4);
    auto back = io::load_string(once);
    CHECK(io::dump(back, 4) == once);
    REQUIRE(back.algebras.size() == d.algebras.size());
    for (std::size_t i = 0; i < d.algebras.size(); ++i)
      CHECK(back.algebras[i].value->b() == d.algebras[i].value->b());
    for (std::size_t i = 0; i < d.modules.size(); ++i)
      CHECK(back.modules[i].value.module->structure() == d.modules[i].value.module->structure());
  }
}

TEST_CASE("commands: verdicts and exit codes") {
  auto mf = io::load(spec("matrix_factorization.json"));
  CHECK(cli::exit_code(cli::run("mf-check", mf, {}), false) == cli::Ok);
  auto broken = cli::run("mf-check", io::load(spec("broken_mf.json")), {});
  REQUIRE(broken.size() == 1);
  CHECK(broken[0].verdict == Verdict::Fail);
  CHECK(broken[0].witness);
  CHECK(cli::exit_code(broken, false) == cli::Failed);

  // No augmentation for W = x²: UNDECIDED, exit 3 only with --strict.
  auto kp = cli::run("kp-vanish", mf, {});
  CHECK(cli::exit_code(kp, false) == cli::Ok);
  CHECK(cli::exit_code(kp, true) == cli::Undecided);
  CHECK(kp[0].detail.rfind("nonexistence", 0) == 0);

  auto mc = cli::run("mc-test", io::load(spec("maurer_cartan.json")), {});
  REQUIRE(mc.size() == 4);
  CHECK(mc[1].detail.rfind("Vanishes", 0) == 0);
  CHECK(mc[3].detail.rfind("DoesNotVanish", 0) == 0);

  auto curved = io::load(spec("curved_rank1.json"));
  cli::Options cap4;
  cap4.cap = 4;
  CHECK(cli::exit_code(cli::run("check-q-homotopy", curved, cap4), true) == cli::Ok);

  auto inv = cli::run("invert-homotopy", io::load(spec("inversion.json")), {});
  CHECK(cli::exit_code(inv, true) == cli::Ok);
  CHECK(inv.size() == 5);
  auto bad = cli::run("invert-homotopy", io::load(spec("broken_inverse.json")), {});
  CHECK(cli::exit_code(bad, false) == cli::Failed);
  CHECK(bad.front().witness);
}

TEST_CASE("usage errors") {
  auto d = io::load_string(kUnit);
  CHECK_THROWS_AS(cli::run("no-such-command", d, {}), cli::UsageError);
  cli::Options to;
  to.to = "QQ";
  CHECK_THROWS_AS(cli::run("check-algebra", d, to), cli::UsageError);
  CHECK_THROWS_AS(cli::run("base-change", d, {}), cli::UsageError);
  CHECK_THROWS_AS(cli::run("base-change", d, to), cli::UsageError);  // no map ZZ/7 -> QQ
  cli::Options name;
  name.name = "T";
  CHECK_THROWS_AS(cli::run("check-algebra", d, name), cli::UsageError);
  cli::Options neg;
  neg.cap = -1;
  CHECK_THROWS_AS(cli::run("check-algebra", d, neg), cli::UsageError);
  CHECK(cli::command_names().size() == 19);
}

TEST_CASE("reports do not depend on the worker count") {
  for (const char* name : {"pairs.json", "inversion.json", "homotopy.json"}) {
    auto d = io::load(spec(name));
    cli::Options o;
    o.cap = 3;
    for (const auto& cmd : cli::command_names()) {
      if (cmd == "base-change") continue;
      set_worker_count(1);
      std::string one = run_json(cmd, d, o);
      set_worker_count(4);
      std::string four = run_json(cmd, d, o);
      CHECK_MESSAGE(one == four, name << " " << cmd);
    }
  }
  set_worker_count(1);
}
