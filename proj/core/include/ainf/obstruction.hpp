#pragma once

#include "ainf/fixtures.hpp"

namespace ainf {

// ---------------------------------------------------------------------------
// Obstruction complexes for A∞-module maps over an uncurved algebra. A family
// supported on arities >= k is taken modulo arities >= k+1, so the stage-(k+1)
// complex is the space of families supported on arity exactly k with the
// differential [B, -] read off at arity k. Module homotopies have degree -1.

// Inputs m ⊙ a with exactly k letters; normalized drops words containing
// the unit.
std::vector<MElem> arity_inputs(const ModuleStructure& m, std::size_t k, bool normalized);

Hom restrict_arity(const Hom& phi, std::size_t k);           // arity exactly k
Hom restrict_arity_at_least(const Hom& phi, std::size_t k);  // arities >= k
Hom restrict_arity_below(const Hom& phi, std::size_t k);     // arities < k

// [B, -] of the stage-(k+1) complex.
Hom obstruction_differential(const Hom& x, std::size_t k);

// φ is A_k when [B, φ] vanishes on arities < k.
CheckReport check_ak(const Hom& phi, std::size_t k);

struct ObstructionElement {
  std::size_t k = 0;
  Hom representative;  // supported on arity k, degree |φ| + 1
};

struct ObstructionClass {
  ObstructionElement element;
  CheckReport closed;     // [B, obs]_k = 0
  Verdict exact = Verdict::Undecided;  // Pass: exact, Fail: essential
  std::optional<Hom> primitive;        // X with [B, X]_k = obs
  std::string detail;
};

// Throws PreconditionFailure if φ is not A_k or the algebra is curved.
// Exactness is Undecided unless the coefficients form a field.
ObstructionClass obstruction_class(const Hom& phi, std::size_t k);

// Solves [B, X]_k = rhs for a normalized X of the given degree supported on
// arity k. Nullopt when there is no solution; throws UnsupportedRing unless
// the coefficients form a field.
std::optional<Hom> solve_stage(const Hom& rhs, Degree degree, std::size_t k);

struct Extension {
  std::optional<Hom> extended;  // φ + X, verified A_{k+1}
  ObstructionClass obstruction;
  CheckReport report;
};

// Extends an A_k-morphism to an A_{k+1}-morphism by solving [B, X]_k = -obs(φ).
Extension extend_morphism(const Hom& phi, std::size_t k);

// obs(φ) - obs(φ') is exact for A_k-morphisms φ, φ' that are homotopic
// below arity k.
CheckReport check_homotopic_obstructions(const Hom& phi, const Hom& phi2, std::size_t k);

// Families supported on arities >= k stay so under α∘x, x∘β and [B, x].
CheckReport check_obstruction_ideal(const Hom& x, const Hom& pre, const Hom& post, std::size_t k, int cap);

// [B, α∘φ∘ψ∘β] = α∘([B,φ]∘ψ + (-1)^φ φ∘[B,ψ])∘β on arities <= k for
// A_{k+1}-morphisms α, β.
CheckReport check_obstruction_derivation(const Hom& alpha, const Hom& phi, const Hom& psi, const Hom& beta,
                                         std::size_t k, int cap);

// ---------------------------------------------------------------------------
// Homotopy inversion. φ: M -> N is an A∞-morphism, ψ: N -> M, h: N -> N and
// ℓ: M -> M have arity-zero parts with 1 - φψ - [B,h] = 0 and
// 1 - ψφ - [B,ℓ] = 0 at arity zero. Stage k first extends ψ so that it is
// A_{k+1}, then solves [B,X]_k = 0 and φ₀X + [B,Y]_k = E_k for
// E = 1 - φψ - [B,h], and sets ψ += X, h += Y.

struct StageRecord {
  std::size_t stage = 0;
  CheckReport report;
  std::size_t unknowns = 0;
  bool psi_extended = false;  // step one changed ψ
};

struct InversionResult {
  std::optional<Hom> psi;
  std::optional<Hom> h;
  std::vector<StageRecord> stages;
  std::optional<std::size_t> achieved;  // last completed stage
  CheckReport report;
};

InversionResult invert_homotopy(const Hom& phi, const Hom& psi, const Hom& h, const Hom& l, std::size_t cap);

// ---------------------------------------------------------------------------
// Fixtures over S[x]/x² with |x| = 1.

AlgebraRef square_zero_algebra(RingRef r, std::size_t arity_cap);

struct QuasiIsoFixture {
  std::string name;
  AlgebraRef algebra;
  ModuleRef m;
  ModuleRef n;
  Hom phi;  // M -> N
  Hom psi;  // N -> M, arity zero
  Hom h;    // N -> N, zero
  Hom l;    // M -> M, arity zero
};

// N = free on n (n, nx). M = N ⊕ P with P free on an acyclic pair u -> v.
// φ = aπ + [B,κ] for a unit a and κ supported on
// {ux, v, vx} ⊙ σx^{≥1}; ψ₀ = a⁻¹ι + w with w(nx) = c·v, which is not
// A-linear when c ≠ 0. ℓ is solved for.
QuasiIsoFixture quasi_iso_fixture(RingRef r, const Elem& a, const std::vector<Elem>& kappa,
                                  const Elem& c, std::size_t cap);
QuasiIsoFixture random_quasi_iso(Rng& rng, RingRef r, std::size_t cap);

// φ₀ = multiplication by x on N, ψ = 1: the arity-zero hypothesis fails.
QuasiIsoFixture rank_drop_fixture(RingRef r, std::size_t cap);

// A chain map N -> N scaling n and nx differently; its stage-1 class is
// nonzero since the stage-1 differential vanishes.
Hom essential_obstruction(RingRef r);

}  // namespace ainf
