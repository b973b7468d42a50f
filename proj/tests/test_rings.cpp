#include "doctest.h"

#include "ainf/fixtures.hpp"
#include "test_support.hpp"

using namespace ainf;

namespace {

Elem num(RingRef r, const char* s) { return Elem::parse(r, s); }

std::vector<RingRef> sample_rings() {
  RingRef zx = Ring::polynomial(Ring::integers(), {"x"});
  RingRef qxy = Ring::polynomial(Ring::rationals(), {"x", "y"});
  return {Ring::integers(), Ring::rationals(), Ring::integers_mod(7), Ring::integers_mod(12), zx, qxy};
}

Elem random_any(Rng& rng, RingRef r) {
  if (r->kind() != RingKind::Polynomial) return random_elem(rng, r);
  Elem out = Elem::zero(r);
  for (int t = 0; t < 3; ++t) {
    Elem m = Elem::from_int(r, rng.uniform(-4, 4));
    for (std::size_t v = 0; v < r->nvars(); ++v) m *= Elem::variable(r, v).pow(static_cast<unsigned>(rng.uniform(0, 2)));
    out += m;
  }
  return out;
}

}  // namespace

TEST_CASE("ring arithmetic oracles") {
  RingRef f7 = Ring::integers_mod(7);
  CHECK(num(f7, "5") * num(f7, "4") == num(f7, "6"));
  RingRef q = Ring::rationals();
  CHECK(num(q, "1/2") + num(q, "1/3") == num(q, "5/6"));
  RingRef zx = Ring::polynomial(Ring::integers(), {"x"});
  CHECK(num(zx, "x + 1") * num(zx, "x - 1") == num(zx, "x^2 - 1"));
  CHECK((num(zx, "x + 1") * num(zx, "x - 1")).str() == "x^2 - 1");

  CHECK_FALSE(num(Ring::polynomial(q, {"x"}), "x^2").is_unit());
  CHECK(num(f7, "3").is_unit());
  CHECK_FALSE(num(Ring::integers(), "2").is_unit());
  CHECK(num(Ring::integers(), "-1").is_unit());
  CHECK(*num(f7, "3").inverse() == num(f7, "5"));
  CHECK_FALSE(num(Ring::integers_mod(12), "4").inverse());

  // Arbitrary precision on both sides of the small-modulus fast path.
  RingRef z = Ring::integers();
  Elem big = num(z, "123456789012345678901234567890");
  CHECK((big * big).str() == "15241578753238836750495351562536198787501905199875019052100");
  RingRef p = Ring::integers_mod(mpz_class("340282366920938463463374607431768211507"));
  Elem a = num(p, "340282366920938463463374607431768211506");
  CHECK(a * a == Elem::one(p));
}

TEST_CASE("rings are interned and mismatches are structural errors") {
  CHECK(Ring::integers_mod(7) == Ring::integers_mod(7));
  CHECK(Ring::polynomial(Ring::rationals(), {"x"}) == Ring::polynomial(Ring::rationals(), {"x"}));
  CHECK(Ring::integers_mod(7) != Ring::integers_mod(5));
  CHECK_THROWS_AS(Elem::one(Ring::integers_mod(7)) + Elem::one(Ring::integers_mod(5)), StructuralError);
  CHECK_THROWS_AS(Elem::parse(Ring::integers(), "1/2"), StructuralError);
  CHECK(Elem::parse(Ring::integers_mod(7), "1/2") == Elem::from_int(Ring::integers_mod(7), 4));
}

TEST_CASE("ring axioms on random elements") {
  Rng rng(1);
  for (RingRef r : sample_rings()) {
    INFO(r->describe());
    for (int i = 0; i < 60; ++i) {
      Elem a = random_any(rng, r), b = random_any(rng, r), c = random_any(rng, r);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Elem::zero(r));
      CHECK(a * Elem::one(r) == a);
      CHECK(Elem::parse(r, a.str()) == a);
      if (auto inv = a.inverse()) CHECK(a * *inv == Elem::one(r));
      if (r->is_field() && !a.is_zero()) CHECK(a.is_unit());
    }
  }
}

TEST_CASE("solve_linear oracles and substitution property") {
  RingRef f5 = Ring::integers_mod(5);
  auto e = [&](long v) { return Elem::from_int(f5, v); };
  auto sol = solve_linear(f5, 2, {{e(1), e(2)}, {e(0), e(1)}}, {e(3), e(4)});
  REQUIRE(std::holds_alternative<std::vector<Elem>>(sol));
  CHECK(std::get<std::vector<Elem>>(sol) == std::vector<Elem>{e(0), e(4)});

  RingRef z = Ring::integers();
  CHECK(std::holds_alternative<NoSolution>(solve_linear(z, 1, {{Elem::from_int(z, 2)}}, {Elem::one(z)})));
  auto empty = solve_linear(z, 0, {}, {});
  REQUIRE(std::holds_alternative<std::vector<Elem>>(empty));
  CHECK(std::get<std::vector<Elem>>(empty).empty());
  CHECK_THROWS_AS(solve_linear(Ring::polynomial(z, {"x"}), 1, {{Elem::one(Ring::polynomial(z, {"x"}))}},
                               {Elem::one(Ring::polynomial(z, {"x"}))}),
                  UnsupportedRing);

  // Random consistent systems: b = A x₀ always has a solution that
  // reproduces b.
  Rng rng(2);
  for (RingRef r : {Ring::integers(), Ring::rationals(), Ring::integers_mod(7), Ring::integers_mod(12)}) {
    for (int t = 0; t < 40; ++t) {
      std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 4)), cols = static_cast<std::size_t>(rng.uniform(1, 4));
      Matrix a(rows, std::vector<Elem>(cols));
      std::vector<Elem> x0(cols);
      for (auto& row : a)
        for (auto& v : row) v = random_elem(rng, r);
      for (auto& v : x0) v = random_elem(rng, r);
      auto b = mat_vec(r, cols, a, x0);
      auto s = solve_linear(r, cols, a, b);
      REQUIRE(std::holds_alternative<std::vector<Elem>>(s));
      CHECK(mat_vec(r, cols, a, std::get<std::vector<Elem>>(s)) == b);
    }
  }
}

TEST_CASE("kernel basis over a field") {
  Rng rng(3);
  RingRef r = Ring::integers_mod(7);
  for (int t = 0; t < 30; ++t) {
    std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 3)), cols = static_cast<std::size_t>(rng.uniform(1, 5));
    Matrix a(rows, std::vector<Elem>(cols));
    for (auto& row : a)
      for (auto& v : row) v = random_elem(rng, r);
    auto k = kernel_basis(r, cols, a);
    CHECK(k.size() + rows >= cols);
    for (const auto& v : k) CHECK(mat_vec(r, cols, a, v) == std::vector<Elem>(rows, Elem::zero(r)));
  }
}

TEST_CASE("ring maps are homomorphisms") {
  Rng rng(4);
  RingRef z = Ring::integers(), f7 = Ring::integers_mod(7), q = Ring::rationals();
  RingRef qx = Ring::polynomial(q, {"x"});
  std::vector<RingMap> maps = {RingMap::reduction(z, f7), RingMap::reduction(Ring::integers_mod(21), f7),
                               RingMap::into_rationals(), RingMap::embedding(q, qx),
                               RingMap::evaluation(qx, {Elem::parse(q, "2/3")})};
  for (const auto& f : maps)
    for (int i = 0; i < 30; ++i) {
      Elem a = random_any(rng, f.source()), b = random_any(rng, f.source());
      CHECK(f(a + b) == f(a) + f(b));
      CHECK(f(a * b) == f(a) * f(b));
      CHECK(f(Elem::one(f.source())) == Elem::one(f.target()));
    }
  CHECK(RingMap::evaluation(qx, {Elem::from_int(q, 3)})(Elem::parse(qx, "x^2 - 1")) == Elem::from_int(q, 8));
  CHECK_THROWS(RingMap::reduction(Ring::integers_mod(10), f7));
}
