#include "doctest.h"

#include "ainf/fixtures.hpp"
#include "test_support.hpp"

using namespace ainf;


TEST_CASE("random dgas satisfy the algebra relations") {
  Rng rng(11);
  for (RingRef r : {Ring::integers_mod(7), Ring::rationals(), Ring::integers()}) {
    for (int i = 0; i < 10; ++i) {
      std::string family;
      auto a = random_curved_algebra(rng, r, 4, false, &family);
      INFO(family);
      require_pass(check_algebra(*a, 4));
      require_pass(curved_dga_axioms(*a, 3));
    }
  }
}

TEST_CASE("fixture modules satisfy the module and dg-module axioms") {
  Rng rng(5);
  for (int i = 0; i < 12; ++i) {
    auto p = random_pair(rng, Ring::integers_mod(7), false, 4);
    INFO(p.family);
    require_pass(check_module(*p.module, 4));
    UeAlgebra u(p.algebra);
    require_pass(check_dg_module(*p.module, u, 3));
  }
}

TEST_CASE("U_e curvature, ideal stability and inclusion") {
  Rng rng(3);
  for (int i = 0; i < 8; ++i) {
    std::string family;
    auto a = random_curved_algebra(rng, Ring::integers_mod(7), 4, i % 2 == 0, &family);
    INFO(family);
    UeAlgebra u(a);
    require_pass(check_u_curvature(u, 3));
    require_pass(check_ideal_stability(u, 3));
    require_pass(check_u_derivation(u, 3));
    require_pass(check_normal_form_soundness(u, 3));
    require_pass(check_inclusion_morphism(u, 3));
  }
}

TEST_CASE("the full coproduct breaks curvature") {
  Rng rng(9);
  int killed = 0;
  for (int i = 0; i < 8; ++i) {
    auto a = random_curved_algebra(rng, Ring::integers_mod(7), 4, true);
    UeAlgebra u(a, UeAlgebra::Coproduct::FullCoproduct);
    if (!check_u_curvature(u, 3).passed()) ++killed;
  }
  CHECK(killed == 8);
}

TEST_CASE("mutants of valid algebras are rejected") {
  Rng rng(21);
  int killed = 0, total = 0;
  for (int i = 0; i < 20; ++i) {
    auto a = random_curved_algebra(rng, Ring::integers_mod(7), 4, false);
    auto m = mutate_algebra(rng, *a);
    if (m->b() == a->b()) continue;
    ++total;
    if (!check_algebra(*m, 4).passed()) ++killed;
  }
  MESSAGE("killed " << killed << " of " << total);
  CHECK(total > 10);
  // Cocycle perturbations are first-order deformations and survive at cap 4.
  CHECK(killed * 3 >= total);
}

TEST_CASE("strict isomorphisms are U_e-linear chain maps") {
  Rng rng(17);
  for (int i = 0; i < 6; ++i) {
    auto p = random_pair(rng, Ring::integers_mod(7), false, 4);
    auto iso = random_module_iso(rng, *p.module);
    require_pass(check_module(*iso.target, 3));
    Hom phi = strict_hom(p.module, iso.target, iso.map);
    auto closed = check_closed("iso", phi, 3);
    require_pass(closed);
    CHECK(closed.checked > 0);
    UeAlgebra u(p.algebra);
    require_pass(check_strict_morphism_identification(phi, u, 3));
  }
}

TEST_CASE("identity morphism of a dga satisfies universality") {
  Rng rng(2);
  for (int i = 0; i < 6; ++i) {
    auto a = random_curved_algebra(rng, Ring::integers_mod(7), 4, false);
    UeAlgebra u(a);
    auto r = check_universality(AInfMorphism::identity(a), u, 3);
    require_pass(r);
  }
}
