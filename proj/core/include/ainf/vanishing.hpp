#pragma once

#include <variant>

#include "ainf/solve.hpp"

namespace ainf {

// ---------------------------------------------------------------------------
// Base change along a ring homomorphism S -> T, coefficient by coefficient.

Vec<Letter> map_coefficients(const Vec<Letter>& v, const RingMap& f);
MultiOp map_coefficients(const MultiOp& m, const RingMap& f);
AlgebraRef base_change(const AInfAlgebra& a, const RingMap& f);
std::shared_ptr<TableModule> base_change(const TableModule& m, AlgebraRef target, const RingMap& f);

// ---------------------------------------------------------------------------
// Augmentations ℓ: A -> S with ℓ(𝔪₀(1)) = 1, given on generators.

struct Augmentation {
  std::vector<Elem> values;

  Elem operator()(const Vec<Letter>& a) const;
  // λ = -ℓ∘ω on a letter of A[1].
  Elem lambda(Letter l) const { return -values.at(l); }
};

struct AugmentationSearch {
  enum class Kind { Found, Nonexistence, Undecided };
  Kind kind = Kind::Undecided;
  std::optional<Augmentation> augmentation;
  std::string detail;  // certificate or reason
};

std::string to_string(AugmentationSearch::Kind k);

// Solves ℓ(𝔪₀(1)) = 1 with ℓ supported on generators of the curvature's degree.
AugmentationSearch detect_augmentation(const AInfAlgebra& a);

// ---------------------------------------------------------------------------
// Kontsevich-Positselski contraction: h(m ⊙ a) = (-1)^{|m|} λ(a) m, e = 1 - δh,
// g = Σ_k e^k∘h. Then δg = 1, i.e. [B, G] = 1 for G = g ⊙ 1^⊗.

class KpContraction {
 public:
  // Throws PreconditionFailure unless ℓ(𝔪₀(1)) = 1.
  KpContraction(ModuleRef m, Augmentation l);

  const Hom& h() const { return h_; }
  // g tabulated on inputs of weight <= cap; the series is summed until a term
  // vanishes on all of them. Throws if it does not within cap + 3 terms.
  Hom g(std::size_t cap) const;
  std::size_t terms_used(std::size_t cap) const;

  const Augmentation& augmentation() const { return l_; }
  ModuleRef module_ref() const { return m_; }

 private:
  ModuleRef m_;
  Augmentation l_;
  Hom h_;
};

// [B₀, H] = 1 ⊙ 1^⊗ with B₀ the curvature insertions.
CheckReport check_kp_b0(const KpContraction& kp, int cap);
// [B, G](w) = w for every word of tensor degree <= cap.
CheckReport check_kp_contraction(const KpContraction& kp, int cap);

// Closed form for curved algebras (𝔪₁ = 0, 𝔪_ℓ = 0 for ℓ >= 3) acting on
// dg-modules (b^M_ℓ = 0 for ℓ >= 2): zero on even arity, and on odd arity
// γ(m ⊙ σf₁ ⊙ ... ⊙ σf_{2i+1}) = -(-1)^{|m|} m·(ℓ(f₁) L(f₂,f₃) ... L(f_{2i},f_{2i+1}))
// with L(f,g) = ℓ(fg) - ℓ(f)g - ℓ(g)f.
Hom gamma_homotopy(const KpContraction& kp);
// γ = g on all inputs of weight <= cap.
CheckReport check_gamma(const KpContraction& kp, int cap);

// ---------------------------------------------------------------------------
// Maurer-Cartan.

// Σ_k (-1)^{k(k-1)/2} 𝔪_k(x^{⊗k}) for k up to the arity cap.
Vec<Letter> mc_evaluate(const AInfAlgebra& a, const Vec<Letter>& x);
// Over S[ε]/ε²: the ε-linear part of 𝔐𝔠(εx) equals 𝔪₁(x) for every basis
// vector x of degree 1.
CheckReport check_mc_linearization(const AInfAlgebra& a);

enum class McVerdict { Vanishes, DoesNotVanish, Undecided };
std::string to_string(McVerdict v);

struct McResult {
  McVerdict verdict = McVerdict::Undecided;
  std::optional<Vec<Letter>> preimage;  // x with 𝔪₁(x) = e
  std::string detail;
};

// Decides whether e lies in the image of 𝔪₁ from degree |e| - 1. Throws
// PreconditionFailure on curved input.
McResult mc_criterion(const AInfAlgebra& a);

// Basis e (even), a (odd) over the Z/2 grading, a² = 0, and 𝔪₁(a) = e or 0.
AlgebraRef mc_example(RingRef r, bool with_differential);

// Solves δκ = 1 for the regular module: the identity is a boundary.
HomSolution identity_null_homotopy(AlgebraRef a, std::size_t cap);

// ---------------------------------------------------------------------------
// Matrix factorizations over a commutative ring: odd d on S^{even} ⊕ S^{odd}
// with d² = W·1. d[i][j] is the coefficient of basis vector i in d(e_j).

struct MatrixFactorization {
  RingRef ring = nullptr;
  std::size_t even = 0;
  std::size_t odd = 0;
  std::vector<std::vector<Elem>> d;
  Elem w;

  std::size_t rank() const { return even + odd; }
  bool is_odd_entry(std::size_t i, std::size_t j) const { return (i < even) != (j < even); }
};

// The curved dg-algebra (S·e, 0, W), Z/2-graded.
AlgebraRef potential_algebra(RingRef r, const Elem& w);
// d is odd and d² = W·1, entry by entry.
CheckReport mf_direct_check(const MatrixFactorization& f);
// The A∞-module over potential_algebra(W) induced by the dg-module
// (S^n, d') with d'(v) = (-1)^{|v|} d(v), so that d'² = -W as required by
// the module identification.
std::shared_ptr<TableModule> mf_module(const MatrixFactorization& f, AlgebraRef a);
// Direct check, module check, and agreement of the two verdicts.
CheckReport mf_check(const MatrixFactorization& f);

}  // namespace ainf
