#include "doctest.h"

#include "ainf/functors.hpp"
#include "ainf/obstruction.hpp"
#include "test_support.hpp"

using namespace ainf;

namespace {

RingRef f7() { return Ring::integers_mod(7); }

bool has_nonzero_arity(const Hom& phi, std::size_t k) {
  for (const auto& x : arity_inputs(phi.source(), k, true))
    if (!phi(x).is_zero()) return true;
  return false;
}

}  // namespace

TEST_CASE("quasi-isomorphism fixtures") {
  Rng rng(7);
  for (int i = 0; i < 3; ++i) {
    auto f = random_quasi_iso(rng, f7(), 3);
    INFO(f.name);
    require_pass(check_module(*f.m, 3));
    require_pass(check_module(*f.n, 3));
    require_pass(check_closed("phi", f.phi, 3));
    CHECK(has_nonzero_arity(f.phi, 2));
    CHECK_FALSE(check_ak(f.psi, 2).passed());
  }
}

TEST_CASE("homotopy inversion") {
  Rng rng(101);
  for (int i = 0; i < 5; ++i) {
    auto f = random_quasi_iso(rng, f7(), 3);
    INFO(f.name);
    auto res = invert_homotopy(f.phi, f.psi, f.h, f.l, 3);
    require_pass(res.report);
    REQUIRE(res.achieved);
    CHECK(*res.achieved == 3);
    CHECK(res.stages.size() == 4);
    CHECK(res.stages[1].psi_extended);
    REQUIRE(res.psi);
    require_pass(check_closed("psi hat", *res.psi, 3));
  }
}

TEST_CASE("homotopy inversion of a strict isomorphism") {
  RingRef k = f7();
  auto f = quasi_iso_fixture(k, Elem::from_int(k, 3), {}, Elem::zero(k), 3);
  auto res = invert_homotopy(f.phi, f.psi, f.h, f.l, 3);
  require_pass(res.report);
  REQUIRE(res.h);
  for (std::size_t a = 0; a <= 3; ++a) CHECK_FALSE(has_nonzero_arity(*res.h, a));
}

TEST_CASE("violated hypotheses are witnessed") {
  auto f = rank_drop_fixture(f7(), 3);
  auto res = invert_homotopy(f.phi, f.psi, f.h, f.l, 3);
  CHECK_FALSE(res.report.passed());
  CHECK(res.stages.size() == 1);
  CHECK(res.report.witness);
  CHECK_FALSE(res.psi);
}

TEST_CASE("extension and essential obstructions") {
  RingRef k = f7();
  Rng rng(5);
  auto f = random_quasi_iso(rng, k, 3);

  // An A∞-morphism has vanishing classes.
  for (std::size_t s = 1; s <= 3; ++s) {
    auto c = obstruction_class(f.phi, s);
    CHECK(c.exact == Verdict::Pass);
    require_pass(c.closed);
  }

  // ψ₀ is A_1 with a removable arity-1 defect.
  auto ext = extend_morphism(f.psi, 1);
  require_pass(ext.report);
  REQUIRE(ext.extended);
  require_pass(check_ak(*ext.extended, 2));
  CHECK_THROWS_AS(obstruction_class(f.psi, 2), PreconditionFailure);

  auto bad = essential_obstruction(k);
  auto c = obstruction_class(bad, 1);
  require_pass(c.closed);
  CHECK(c.exact == Verdict::Fail);
  auto e = extend_morphism(bad, 1);
  CHECK_FALSE(e.extended);
  CHECK(e.report.witness);

  auto over_z = essential_obstruction(Ring::integers());
  CHECK(obstruction_class(over_z, 1).exact == Verdict::Undecided);
}

TEST_CASE("homotopic maps have cohomologous obstructions") {
  Rng rng(13);
  RingRef k = f7();
  for (int i = 0; i < 4; ++i) {
    auto f = random_quasi_iso(rng, k, 3);
    // ψ' = ψ + ([B,ζ] below arity 1) for random ζ.
    Hom zeta = random_hom(rng, f.n, f.m, -1, 2);
    Hom psi2 = (f.psi + restrict_arity_below(hom_differential(zeta), 1)).tabulated(2);
    require_pass(check_ak(psi2, 1));
    require_pass(check_homotopic_obstructions(f.psi, psi2, 1));
    // A non-homotopic change in arity zero breaks it when it alters the class.
  }
}

TEST_CASE("obstruction ideal and derivation law") {
  Rng rng(17);
  RingRef k = f7();
  auto f = random_quasi_iso(rng, k, 3);
  auto inv = invert_homotopy(f.phi, f.psi, f.h, f.l, 3);
  REQUIRE(inv.psi);
  for (std::size_t s = 1; s <= 2; ++s) {
    for (int i = 0; i < 3; ++i) {
      Hom x = random_hom(rng, f.m, f.n, 0, 3);
      Hom pre = random_hom(rng, f.m, f.m, 0, 3);
      Hom post = random_hom(rng, f.n, f.n, static_cast<Degree>(i % 2), 3);
      require_pass(check_obstruction_ideal(x, pre, post, s, 3));

      Hom alpha = inv.psi->truncated(s);
      Hom beta = inv.psi->truncated(s);
      Hom phi = random_hom(rng, f.m, f.n, static_cast<Degree>(i % 2), 3);
      Hom psi = random_hom(rng, f.m, f.m, -1, 3);
      require_pass(check_obstruction_derivation(alpha, phi, psi, beta, s, 3));
    }
  }
}
