#include "doctest.h"

#include "ainf/fixtures.hpp"
#include "ainf/functors.hpp"
#include "ainf/vanishing.hpp"
#include "test_support.hpp"

using namespace ainf;

namespace {

RingRef k7() { return Ring::integers_mod(7); }

AlgebraRef rank_one(RingRef r, std::optional<Elem> curvature) {
  GradedSpace s(r, Grading::cyclic(2), {{"e", 0}});
  MultiOp b(r, 1);
  if (curvature) b.set({}, Vec<Letter>(r, 0).scaled(*curvature));
  impose_unit_laws(s.shift(), 0, b);
  return std::make_shared<const AInfAlgebra>(s, 0, b, 4);
}

std::size_t word_length(const std::string& rendered) {
  std::size_t n = 1, pos = 0;
  while ((pos = rendered.find("(x)", pos)) != std::string::npos) ++n, pos += 3;
  return n;
}

}  // namespace

TEST_CASE("unit and rank-one curved algebras pass") {
  require_pass(check_algebra(*rank_one(k7(), std::nullopt), 4));
  for (long c : {1, 3, 6}) require_pass(check_algebra(*rank_one(k7(), Elem::from_int(k7(), c)), 4));
  auto a = rank_one(k7(), std::nullopt);
  CHECK(a->b_of({0, 0}) == Vec<Letter>(k7(), 0));
  CHECK(alternative_units(*a, 3).empty());
}

TEST_CASE("non-associative product fails at length three") {
  DgaData d{upper_triangular(k7()), Vec<Letter>(k7()), {}};
  require_pass(check_algebra(*build_algebra(d, 3), 4));
  // E11·E11 = 2 E11 breaks associativity but keeps degrees.
  d.alg.mult[{1, 1}] = Vec<Letter>(k7(), 1).scaled(Elem::from_int(k7(), 2));
  auto a = build_algebra(d, 3);
  auto r = check_relation_bB(*a, 4);
  REQUIRE_FALSE(r.passed());
  REQUIRE(r.witness);
  CHECK(word_length(r.witness->input) == 3);
  CHECK_FALSE(check_algebra(*a, 4).passed());
}

TEST_CASE("cross-cancel and B squared agree on random algebras and mutants") {
  Rng rng(6);
  int mutants_failing = 0;
  for (int i = 0; i < 40; ++i) {
    auto a = random_curved_algebra(rng, k7(), 3, i % 2 == 0);
    auto bb = check_relation_BB(*a, 4), bB = check_relation_bB(*a, 4);
    CHECK(bb.passed());
    CHECK(bB.passed());
    auto m = mutate_algebra(rng, *a);
    auto mbb = check_relation_BB(*m, 4), mbB = check_relation_bB(*m, 4);
    CHECK(mbb.verdict == mbB.verdict);
    if (!mbB.passed()) ++mutants_failing;
  }
  CHECK(mutants_failing >= 15);
}

TEST_CASE("m-b dictionary") {
  // Rank one: m₂(e, e) = e gives b₂(η, η) = η.
  GradedSpace s(k7(), Grading::integer(), {{"e", 0}});
  MultiOp m(k7(), 0);
  m.set({0, 0}, Vec<Letter>(k7(), 0));
  MultiOp b = m_to_b(s, m);
  CHECK(*b.find({0, 0}) == Vec<Letter>(k7(), 0));
  MultiOp unit(k7(), 1);
  impose_unit_laws(s.shift(), 0, unit);
  CHECK(b == unit);

  // Roundtrip on random tables, and unit laws transported.
  Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    auto a = random_curved_algebra(rng, k7(), 3, i % 3 == 0);
    MultiOp mt = b_to_m(a->space(), a->b());
    CHECK(m_to_b(a->space(), mt) == a->b());
    CHECK(b_to_m(a->space(), m_to_b(a->space(), mt)) == mt);
    // m₂(e, x) = x = m₂(x, e) on every generator.
    for (Letter x = 0; x < a->rank(); ++x) {
      CHECK(*mt.find({a->unit(), x}) == Vec<Letter>(k7(), x));
      CHECK(*mt.find({x, a->unit()}) == Vec<Letter>(k7(), x));
    }
  }
  MultiOp bad(k7(), 0);
  bad.set({0, 0}, Vec<Letter>(k7(), 0));
  GradedSpace odd(k7(), Grading::integer(), {{"e", 0}, {"a", 1}});
  bad.set({1, 1}, Vec<Letter>(k7(), 1));
  CHECK_THROWS_AS(validate_m_family(odd, bad), StructuralError);
}

TEST_CASE("morphisms: identity, unit law, composition") {
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    auto a = random_curved_algebra(rng, k7(), 3, i % 2 == 0);
    auto id = AInfMorphism::identity(a);
    require_pass(check_morphism(id, 4));
    auto f = random_algebra_iso(rng, a);
    auto g = random_algebra_iso(rng, f.target);
    require_pass(check_morphism(*f.map, 4));
    require_pass(check_morphism(*g.map, 4));
    auto gf = compose_morphisms(*g.map, *f.map);
    require_pass(check_morphism(gf, 4));
    // Linear maps compose linearly.
    for (Letter x = 0; x < a->rank(); ++x) {
      Vec<Letter> expect(k7());
      for (const auto& [l, c] : *f.map->f().find({x}))
        if (const auto* v = g.map->f().find({l})) expect.add_scaled(*v, c);
      const auto* got = gf.f().find({x});
      CHECK((got ? *got : Vec<Letter>(k7())) == expect);
    }
    require_pass(check_morphism(compose_morphisms(*f.inverse, *f.map), 4));
  }
  // f₁(η) = 2η breaks the unit law.
  auto a = rank_one(k7(), std::nullopt);
  MultiOp f(k7(), 0);
  f.set({0}, Vec<Letter>(k7(), 0).scaled(Elem::from_int(k7(), 2)));
  CHECK_FALSE(check_morphism(AInfMorphism(a, a, f), 3).passed());
}

TEST_CASE("curved dga axioms") {
  RingRef qx = Ring::polynomial(Ring::rationals(), {"x"});
  auto p = potential_algebra(qx, Elem::parse(qx, "x^2"));
  require_pass(curved_dga_axioms(*p, 4));
  require_pass(curved_dga_axioms_direct(*p));

  // Inner curvature θ² on the dual numbers over Z/2.
  Rng rng(9);
  for (int i = 0; i < 10; ++i) {
    auto d = random_dga(rng, k7(), true);
    auto a = build_algebra(d.data, 3);
    require_pass(curved_dga_axioms(*a, 4));
  }

  // c = t with dt = s ≠ 0.
  AssocAlgebra free{k7(), Grading::integer(), {{"e", 0}, {"t", 2}, {"s", 3}}, {}};
  DgaData bad{free, Vec<Letter>(k7(), 1), {}};
  bad.diff[1] = Vec<Letter>(k7(), 2);
  auto r = curved_dga_axioms_direct(*build_algebra(bad, 3));
  CHECK_FALSE(r.passed());
  CHECK_FALSE(check_algebra(*build_algebra(bad, 3), 3).passed());
}

TEST_CASE("modules: regular, dg, and a broken curvature identity") {
  Rng rng(10);
  for (int i = 0; i < 6; ++i) {
    auto a = random_curved_algebra(rng, k7(), 3, false);
    if (a->is_curved()) continue;
    require_pass(check_module(*regular_module(a), 4));
  }
  for (int i = 0; i < 6; ++i) {
    auto p = random_pair(rng, k7(), true, 3);
    require_pass(check_module(*p.module, 4));
  }
  // Over (S·e, 0, c = 1): d² = -m·c holds for d(u) = v, d(v) = -u and fails for d(v) = u.
  DgaData d{AssocAlgebra{k7(), Grading::cyclic(2), {{"e", 0}}, {}}, Vec<Letter>(k7(), 0), {}};
  auto a = build_algebra(d, 3);
  DgModuleData good{GradedSpace(k7(), Grading::cyclic(2), {{"u", 0}, {"v", 1}}), {}, {}};
  good.d[0] = Vec<Letter>(k7(), 1);
  good.d[1] = -Vec<Letter>(k7(), 0);
  require_pass(check_module(*build_module(a, good, 3), 4));
  DgModuleData broken = good;
  broken.d[1] = Vec<Letter>(k7(), 0);
  auto r = check_module(*build_module(a, broken, 3), 4);
  REQUIRE_FALSE(r.passed());
  REQUIRE(r.witness);
  CHECK(r.witness->input.find("(x)") == std::string::npos);
}

TEST_CASE("homs: differential and composition") {
  Rng rng(11);
  for (int i = 0; i < 5; ++i) {
    auto p = random_pair(rng, k7(), i % 2 == 0, 3);
    ModuleRef m = p.module;
    Hom id = Hom::identity(m);
    require_pass(check_closed("identity", id, 3));
    require_pass(compare_homs("id∘id", compose_hom(id, id), id, 3));
    auto iso = random_module_iso(rng, *p.module);
    Hom phi = strict_hom(m, iso.target, iso.map);
    require_pass(check_closed("strict iso", phi, 3));
    require_pass(check_commutator_identity(phi, 3));
    // δ² = 0 on a random hom.
    Hom x = random_hom(rng, m, m, 1, 3);
    require_pass(compare_homs("δδ", hom_differential(hom_differential(x)).tabulated(2), Hom::zero(m, m, 3), 2));
    require_pass(check_commutator_identity(x, 3));
  }
}

TEST_CASE("bimodules over unit algebras") {
  auto s = rank_one(k7(), std::nullopt);
  GradedSpace v(k7(), Grading::cyclic(2), {{"v", 0}});
  TableBimodule::Table t;
  // Unit laws only: b(η, v) = v and b(v, η) = -v.
  t[{Word{0}, 0, Word{}}] = Vec<Letter>(k7(), 0);
  t[{Word{}, 0, Word{0}}] = -Vec<Letter>(k7(), 0);
  auto vb = std::make_shared<TableBimodule>(s, s, v, t);
  auto r = check_bimodule(*vb, 4);
  require_pass(r);
  t[{Word{0, 0}, 0, Word{}}] = Vec<Letter>(k7(), 0);
  CHECK_THROWS_AS(TableBimodule(s, s, v, t), StructuralError);
}
