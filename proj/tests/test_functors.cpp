#include "doctest.h"

#include "ainf/fixtures.hpp"
#include "ainf/functors.hpp"
#include "test_support.hpp"

using namespace ainf;

TEST_CASE("U_e(A) is a bimodule; the flipped variant is not") {
  Rng rng(4);
  for (int i = 0; i < 4; ++i) {
    auto a = random_curved_algebra(rng, Ring::integers_mod(7), 4, i % 2 == 0);
    auto u = std::make_shared<const UeAlgebra>(a);
    require_pass(check_bimodule(UeBimodule(u), 3));
    CHECK_FALSE(check_bimodule(UeBimodule(u, UeBimodule::Variant::FlippedLeft), 3).passed());
  }
}

TEST_CASE("Q(M) is a module and equivalent to M") {
  Rng rng(8);
  int curved = 0;
  for (int i = 0; i < 6; ++i) {
    auto p = random_pair(rng, Ring::integers_mod(7), i < 3, 4);
    INFO(p.family);
    if (p.algebra->is_curved()) ++curved;
    auto q = q_module(p.module);
    require_pass(check_q_module(*q, 3));
    require_pass(check_q_equivalence(q, 3));
  }
  CHECK(curved >= 3);
}

TEST_CASE("lambda is not closed for the flipped bimodule") {
  Rng rng(12);
  auto p = random_pair(rng, Ring::integers_mod(7), true, 4);
  auto q = q_module(p.module, UeBimodule::Variant::FlippedLeft);
  CHECK_FALSE(check_closed("lambda", lambda_map(p.module, q), 2).passed());
}

TEST_CASE("adjunction transport") {
  Rng rng(30);
  for (int i = 0; i < 4; ++i) {
    auto p = random_pair(rng, Ring::integers_mod(7), i % 2 == 0, 4);
    auto iso = random_module_iso(rng, *p.module);
    auto q = q_module(p.module);
    for (Degree deg : {0, 1}) {
      Hom phi = random_hom(rng, p.module, iso.target, deg, 3);
      require_pass(check_adjunction(phi, q, 3));
    }
    require_pass(compare_homs("identity to epsilon", adjunction_forward(Hom::identity(p.module), q),
                              epsilon_map(q), 3));
  }
}

TEST_CASE("restriction of scalars") {
  Rng rng(40);
  for (int i = 0; i < 4; ++i) {
    auto p = random_pair(rng, Ring::integers_mod(7), i % 2 == 0, 4);
    auto first = random_algebra_iso(rng, p.algebra);
    auto second = random_algebra_iso(rng, first.target);
    require_pass(check_morphism(*first.map, 4));
    require_pass(check_morphism(*second.inverse, 4));
    // second.inverse: A2 -> A1, first.inverse: A1 -> A.
    auto restricted = restrict_scalars(first.inverse, p.module);
    require_pass(check_module(*restricted, 4));
    require_pass(check_restriction_functoriality(second.inverse, first.inverse, p.module, 3));

    auto iso = random_module_iso(rng, *p.module);
    Hom phi = strict_hom(p.module, iso.target, iso.map);
    Hom rphi = restrict_hom(phi, restricted, restrict_scalars(first.inverse, iso.target));
    require_pass(check_closed("restricted iso", rphi, 3));
  }
}

TEST_CASE("U_e of a morphism and extension of scalars") {
  Rng rng(50);
  for (int i = 0; i < 4; ++i) {
    auto a = random_curved_algebra(rng, Ring::integers_mod(7), 4, i % 2 == 0);
    auto iso = random_algebra_iso(rng, a);
    auto u = std::make_shared<const UeAlgebra>(a);
    auto u2 = std::make_shared<const UeAlgebra>(iso.target);
    require_pass(check_ue_map(*iso.map, *u, *u2, 3));

    auto p = std::make_shared<const FreeUeModule>(free_koszul(u, i % 2));
    require_pass(check_module(*p, 3));
    require_pass(check_dg_module(*p, *u, 3));
    auto lp = std::make_shared<const FreeUeModule>(extend_scalars(*iso.map, u2, p->presentation()));
    require_pass(check_module(*lp, 3));
    require_pass(check_extension_adjunction(iso.map, p, lp, 3));

    auto same = extend_scalars(AInfMorphism::identity(a), u, p->presentation());
    CHECK(same.d == p->presentation().d);
  }
}
