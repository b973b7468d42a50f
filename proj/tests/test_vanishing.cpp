#include "doctest.h"

#include "ainf/fixtures.hpp"
#include "ainf/vanishing.hpp"
#include "generators.hpp"
#include "test_support.hpp"

using namespace ainf;
using namespace ainf::testgen;


TEST_CASE("augmentation detection") {
  RingRef k = Ring::integers_mod(7);
  auto unit_curvature = detect_augmentation(*potential_algebra(k, Elem::one(k)));
  REQUIRE(unit_curvature.kind == AugmentationSearch::Kind::Found);
  CHECK(unit_curvature.augmentation->values[0] == Elem::one(k));

  RingRef z = Ring::integers();
  CHECK(detect_augmentation(*potential_algebra(z, Elem::from_int(z, 2))).kind ==
        AugmentationSearch::Kind::Nonexistence);
  CHECK(detect_augmentation(*potential_algebra(z, Elem::from_int(z, -1))).kind == AugmentationSearch::Kind::Found);

  RingRef r = qx();
  auto mf = detect_augmentation(*potential_algebra(r, poly(r, {0, 0, 1})));
  CHECK(mf.kind == AugmentationSearch::Kind::Nonexistence);
  CHECK(mf.detail.find("not a unit") != std::string::npos);

  Rng rng(3);
  auto uncurved = random_curved_algebra(rng, k, 3, false);
  while (uncurved->is_curved()) uncurved = random_curved_algebra(rng, k, 3, false);
  CHECK(detect_augmentation(*uncurved).kind == AugmentationSearch::Kind::Nonexistence);
}

TEST_CASE("KP contraction on augmented curved pairs") {
  Rng rng(11);
  int tested = 0;
  for (int i = 0; i < 8; ++i) {
    auto p = random_pair(rng, Ring::integers_mod(7), true, 4);
    INFO(p.family);
    auto s = detect_augmentation(*p.algebra);
    REQUIRE(s.augmentation);
    KpContraction kp(p.module, *s.augmentation);
    require_pass(check_kp_b0(kp, 4));
    require_pass(check_kp_contraction(kp, 3));
    ++tested;
  }
  CHECK(tested == 8);
}

TEST_CASE("KP contraction on the ground ring") {
  RingRef k = Ring::integers_mod(7);
  auto a = potential_algebra(k, Elem::one(k));
  auto m = mf_module(two_by_two(k, Elem::one(k), Elem::one(k), Elem::one(k)), a);
  KpContraction kp(m, *detect_augmentation(*a).augmentation);
  require_pass(check_kp_contraction(kp, 4));
  require_pass(check_gamma(kp, 4));
}

TEST_CASE("KP precondition") {
  RingRef k = Ring::integers_mod(7);
  Elem two = Elem::from_int(k, 2);
  auto a = potential_algebra(k, two);
  auto m = mf_module(two_by_two(k, Elem::one(k), two, two), a);
  Augmentation wrong{{Elem::one(k)}};
  CHECK_THROWS_AS(KpContraction(m, wrong), PreconditionFailure);
  Augmentation right{{Elem::from_int(k, 4)}};
  CHECK_NOTHROW(KpContraction(m, right));
}

TEST_CASE("gamma closed form agrees with the series") {
  Rng rng(5);
  int tested = 0;
  for (int i = 0; i < 12 && tested < 5; ++i) {
    auto p = random_pair(rng, Ring::integers_mod(7), true, 4);
    if (p.family == "dual-numbers") continue;
    INFO(p.family);
    KpContraction kp(p.module, *detect_augmentation(*p.algebra).augmentation);
    Hom g = gamma_homotopy(kp);
    bool odd_arity_three = false;
    for (const auto& x : p.module->inputs(3)) {
      if (x.a.size() % 2 == 0) CHECK(g(x).is_zero());
      if (x.a.size() == 3 && !g(x).is_zero()) odd_arity_three = true;
    }
    CHECK(odd_arity_three);
    require_pass(check_gamma(kp, 3));
    ++tested;
  }
  CHECK(tested == 5);
}

TEST_CASE("gamma rejects inapplicable structure") {
  Rng rng(2);
  for (int i = 0; i < 10; ++i) {
    auto p = random_pair(rng, Ring::integers_mod(7), true, 4);
    if (p.family != "dual-numbers") continue;
    KpContraction kp(p.module, *detect_augmentation(*p.algebra).augmentation);
    CHECK_THROWS_AS(gamma_homotopy(kp), StructuralError);
    return;
  }
}

TEST_CASE("base change preserves passing verdicts") {
  Rng rng(21);
  RingRef z = Ring::integers(), k = Ring::integers_mod(7);
  for (int i = 0; i < 4; ++i) {
    auto a = random_curved_algebra(rng, z, 3, i % 2 == 0);
    require_pass(check_algebra(*a, 3));
    require_pass(check_algebra(*base_change(*a, RingMap::reduction(z, k)), 3));
    require_pass(check_algebra(*base_change(*a, RingMap::into_rationals()), 3));
    auto same = base_change(*a, RingMap::identity(z));
    CHECK(same->b().table() == a->b().table());
  }
  auto p = random_pair(rng, z, true, 4);
  auto ak = base_change(*p.algebra, RingMap::reduction(z, k));
  require_pass(check_module(*base_change(*p.module, ak, RingMap::reduction(z, k)), 3));

  RingRef r = qx();
  auto w = potential_algebra(r, poly(r, {2, 0, 1}));
  auto at0 = base_change(*w, RingMap::evaluation(r, {Elem::zero(Ring::rationals())}));
  CHECK(at0->curvature_b() == potential_algebra(Ring::rationals(), Elem::from_int(Ring::rationals(), 2))->curvature_b());
}

TEST_CASE("Maurer-Cartan") {
  for (RingRef r : {Ring::integers_mod(2), Ring::integers_mod(7), Ring::rationals(), Ring::integers()}) {
    auto with = mc_example(r, true);
    auto without = mc_example(r, false);
    auto v = mc_criterion(*with);
    CHECK(v.verdict == McVerdict::Vanishes);
    REQUIRE(v.preimage);
    CHECK(mc_criterion(*without).verdict == McVerdict::DoesNotVanish);
    require_pass(check_mc_linearization(*with));
    require_pass(check_mc_linearization(*without));

    auto kappa = identity_null_homotopy(with, 3);
    REQUIRE(kappa.kappa);
    auto m = regular_module(with);
    require_pass(compare_homs("delta kappa = 1", hom_differential(*kappa.kappa), Hom::identity(m), 3));
    CHECK_FALSE(identity_null_homotopy(without, 3).kappa);
  }
  RingRef r = qx();
  CHECK(mc_criterion(*base_change(*mc_example(Ring::rationals(), true), RingMap::embedding(Ring::rationals(), r)))
            .verdict == McVerdict::Undecided);
  RingRef k = Ring::integers_mod(7);
  CHECK_THROWS_AS(mc_criterion(*potential_algebra(k, Elem::one(k))), PreconditionFailure);
}

TEST_CASE("Maurer-Cartan linearization on random uncurved algebras") {
  Rng rng(17);
  for (int i = 0; i < 6; ++i) {
    auto a = random_curved_algebra(rng, Ring::integers_mod(7), 3, false);
    require_pass(check_mc_linearization(*a));
    if (!a->is_curved()) CHECK(mc_evaluate(*a, Vec<Letter>(a->ring())).is_zero());
  }
}

TEST_CASE("matrix factorization fixtures") {
  RingRef r = qx();
  Elem x = poly(r, {0, 1}), x2 = poly(r, {0, 0, 1});
  require_pass(mf_check(two_by_two(r, x, x, x2)));
  require_pass(mf_check(two_by_two(r, Elem::one(r), x2, x2)));
  auto bad = two_by_two(r, x, x + Elem::one(r), x2);
  auto rep = mf_check(bad);
  CHECK_FALSE(rep.passed());
  require_pass(check_module(*mf_module(two_by_two(r, x, x, x2), potential_algebra(r, x2)), 3));
}

TEST_CASE("random matrix factorizations and mutants") {
  Rng rng(9);
  RingRef r = qx();
  for (int i = 0; i < 10; ++i) {
    auto mf = random_mf(rng, r);
    auto good = mf_check(mf);
    require_pass(good);
    require_pass(mf_direct_check(mf));

    auto mutant = mf;
    std::size_t n = mf.rank();
    std::size_t row = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    std::size_t col = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    if (i % 3 != 0)
      while (!mutant.is_odd_entry(row, col)) col = (col + 1) % n;
    mutant.d[row][col] += random_poly(rng, r, 1);
    if (mutant.d[row][col] == mf.d[row][col]) mutant.d[row][col] += Elem::one(r);
    auto bad = mf_check(mutant);
    INFO(bad.detail);
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(mf_direct_check(mutant).passed());
  }
}
