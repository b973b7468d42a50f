#include "doctest.h"

#include "ainf/fixtures.hpp"
#include "ainf/homotopy.hpp"
#include "test_support.hpp"

using namespace ainf;

namespace {

// Degree -1 family on non-unit words of length <= max_len.
MultiOp random_homotopy(Rng& rng, const AInfAlgebra& src, const AInfAlgebra& tgt, std::size_t max_len) {
  MultiOp h(src.ring(), -1);
  const auto& g = src.grading();
  for (const auto& w : all_words(src.rank(), max_len)) {
    if (w.empty() || std::find(w.begin(), w.end(), src.unit()) != w.end()) continue;
    Vec<Letter> out(src.ring());
    for (Letter y = 0; y < tgt.rank(); ++y)
      if (g.same(tgt.sdeg(y), src.sdeg(w) - 1) && rng.coin()) out.add(y, random_elem(rng, src.ring()));
    if (!out.is_zero()) h.set(w, std::move(out));
  }
  return h;
}

AlgebraRef uncurved(Rng& rng, RingRef r) {
  for (;;) {
    auto a = random_curved_algebra(rng, r, 4, false);
    if (!a->is_curved()) return a;
  }
}

}  // namespace

TEST_CASE("interval coalgebra and its dual") {
  for (RingRef r : {Ring::integers(), Ring::integers_mod(2), Ring::rationals()}) {
    auto c = IntervalCoalgebra::make(r);
    require_pass(check_interval_coalgebra(c));
    require_pass(check_interval_algebra(c));
  }
  auto bad = IntervalCoalgebra::make(Ring::integers());
  bad.coproduct[IntervalCoalgebra::I] = Vec<Word>(Ring::integers(), Word{0, 2});
  CHECK_FALSE(check_interval_coalgebra(bad).passed());
}

TEST_CASE("homotopy flow produces homotopic morphisms") {
  Rng rng(31);
  RingRef k = Ring::integers_mod(7);
  for (int i = 0; i < 6; ++i) {
    auto a = uncurved(rng, k);
    auto iso = random_algebra_iso(rng, a);
    auto h = random_homotopy(rng, *a, *iso.target, 2);
    auto g = homotopy_flow(*iso.map, h, 4);
    AInfHomotopy hom{iso.map, g, h};
    require_pass(check_ainf_homotopy(hom, 4));

    // A perturbed g is no longer homotopic through h.
    MultiOp broken = g->f();
    Letter x = a->unit() == 0 ? 1 : 0;
    Vec<Letter> v = broken.find(Word{x}) ? *broken.find(Word{x}) : Vec<Letter>(k);
    v.add(x, Elem::one(k));
    broken.set(Word{x}, v);
    AInfHomotopy bad{iso.map, std::make_shared<const AInfMorphism>(a, iso.target, broken), h};
    CHECK_FALSE(check_ainf_homotopy(bad, 3).passed());
  }
}

TEST_CASE("homotopy derivation") {
  Rng rng(41);
  RingRef k = Ring::integers_mod(7);
  for (int i = 0; i < 4; ++i) {
    auto a = uncurved(rng, k);
    auto iso = random_algebra_iso(rng, a);
    auto h = random_homotopy(rng, *a, *iso.target, 2);
    auto g = homotopy_flow(*iso.map, h, 4);
    auto us = std::make_shared<const UeAlgebra>(a);
    auto ut = std::make_shared<const UeAlgebra>(iso.target);
    HomotopyDerivation d(AInfHomotopy{iso.map, g, h}, us, ut);
    require_pass(check_homotopy_derivation(d, 3));
  }
}

TEST_CASE("U_e contraction onto A") {
  Rng rng(51);
  RingRef k = Ring::integers_mod(7);
  for (int i = 0; i < 5; ++i) {
    auto a = uncurved(rng, k);
    auto c = ue_contraction(std::make_shared<const UeAlgebra>(a), 3);
    require_pass(c.report);
    CHECK_FALSE(c.certificates.empty());
  }
  auto curved = random_curved_algebra(rng, k, 3, true);
  CHECK(ue_contraction(std::make_shared<const UeAlgebra>(curved), 3).report.verdict == Verdict::Unsupported);
}

TEST_CASE("bar transfer contraction") {
  for (RingRef r : {Ring::integers_mod(7), Ring::rationals()}) {
    auto acyclic = bar_transfer_contraction(acyclic_pair_transfer(r), 3);
    require_pass(acyclic.report);
    auto dual = bar_transfer_contraction(dual_numbers_transfer(r), 3);
    require_pass(dual.report);
    CHECK(dual.basis_size == 392);
    CHECK(dual.max_series_terms >= 2);
  }
  auto in = dual_numbers_transfer(Ring::integers_mod(7));
  auto cone = mapping_cone(in);
  auto h = solve_contraction(cone.space, cone.d);
  REQUIRE(h);
  (*h)[0] = Vec<Letter>(Ring::integers_mod(7));
  in.contraction = h;
  CHECK_FALSE(bar_transfer_contraction(in, 2).report.passed());
}

TEST_CASE("Quillen components") {
  Rng rng(61);
  RingRef k = Ring::integers_mod(7);
  for (int i = 0; i < 3; ++i) {
    auto a = uncurved(rng, k);
    auto iso = random_algebra_iso(rng, a);
    auto h = random_homotopy(rng, *a, *iso.target, 1);
    AInfHomotopy hom{iso.map, homotopy_flow(*iso.map, h, 3), h};
    require_pass(quillen_classical_components(iso.map, hom, 3));
  }
  auto curved = random_curved_algebra(rng, k, 3, true);
  auto id = std::make_shared<const AInfMorphism>(AInfMorphism::identity(curved));
  CHECK(quillen_classical_components(id, std::nullopt, 3).verdict == Verdict::Unsupported);
}
