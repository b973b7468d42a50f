#pragma once

#include "ainf/functors.hpp"

namespace ainf {

// ---------------------------------------------------------------------------
// Interval coalgebra I_• on p, q (degree 0) and I (degree -1):
// Δp = p⊗p, Δq = q⊗q, ΔI = p⊗I + I⊗q, ∂I = p - q.

struct IntervalCoalgebra {
  static constexpr Letter p = 0, q = 1, I = 2;

  GradedSpace space;
  std::map<Letter, Vec<Word>> coproduct;  // values are two-letter words
  std::map<Letter, Vec<Letter>> boundary;

  static IntervalCoalgebra make(RingRef r);
};

// ∂² = 0, coassociativity, and Δ∂ = (∂⊗1 + 1⊗∂)Δ.
CheckReport check_interval_coalgebra(const IntervalCoalgebra& c);

// The dual algebra I^• on e_p, e_q, ε with ε of degree 1 (the dual of I):
// products (φψ)(x) = Σ (-1)^{|ψ||x₁|} φ(x₁)ψ(x₂), d φ = -(-1)^{|φ|} φ∘∂.
// Associativity, unit e_p + e_q, d² = 0 and the Leibniz rule.
CheckReport check_interval_algebra(const IntervalCoalgebra& c);

// ---------------------------------------------------------------------------
// A∞-homotopies between morphisms f, g: A -> A'. h is a degree -1 family on
// A[1]^{⊗≥1} (degree-preserving on I_• ⊗ A[1]^⊗ since I has degree -1).

struct AInfHomotopy {
  std::shared_ptr<const AInfMorphism> f;
  std::shared_ptr<const AInfMorphism> g;
  MultiOp h;
};

// H̃ = f^⊗ ⊗ h ⊗ g^⊗ on a word of A[1].
Vec<Word> homotopy_extend(const AInfHomotopy& h, const Word& w);

// B'H̃ + H̃B = F - G on every word of length <= cap; f and g must pass
// check_morphism, which is part of the report.
CheckReport check_ainf_homotopy(const AInfHomotopy& h, int cap);

// Given f and h with h(b₀) = 0, the unique g with B'H̃ + H̃B = F - G, built
// arity by arity: g(w) = f(w) - b'(H̃(w)) - h(B w). Defined on words of length
// <= cap.
std::shared_ptr<const AInfMorphism> homotopy_flow(const AInfMorphism& f, const MultiOp& h,
                                                  std::size_t cap);

// ---------------------------------------------------------------------------
// The (U_e(f), U_e(g))-derivation D: U_e(A) -> U_e(A') of a homotopy,
// D(ω[w]) = ω[H̃(w)] on letters, extended by
// D(x⊠y) = D(x)⊠U_e(g)(y) + (-1)^{|x|} U_e(f)(x)⊠D(y).

class HomotopyDerivation {
 public:
  HomotopyDerivation(AInfHomotopy h, UeRef source, UeRef target);

  UVec operator()(const UWord& u) const;
  UVec operator()(const UVec& v) const;

  const UeAlgebra& source() const { return *source_; }
  const UeAlgebra& target() const { return *target_; }
  const AInfHomotopy& homotopy() const { return h_; }

 private:
  AInfHomotopy h_;
  UeRef source_;
  UeRef target_;
};

// D(xy) = D(x)U_e(g)(y) + (-1)^{|x|}U_e(f)(x)D(y) on normal-form pairs of
// total weight <= cap, and the chain condition dD + Dd = U_e(f) - U_e(g) on
// words of weight <= cap.
CheckReport check_homotopy_derivation(const HomotopyDerivation& d, int cap);

// ---------------------------------------------------------------------------
// Contraction of U_e(A) onto A for uncurved A over a field. H moves a leading
// length-one letter into the next one: H(ω[a]⊠ω[w]⊠rest) = (-1)^{|a|} ω[a w]⊠rest,
// and T = 1 - [d, H].

struct UeCertificate {
  UVec u;         // a cycle of U_e(A)
  std::size_t steps = 0;  // ℓ with T^ℓ(u) in A
  UVec a;         // T^ℓ(u)
  UVec h_hat;     // Ĥ(u) with u - a = dĤ(u)
};

struct UeContraction {
  CheckReport report;
  std::vector<UeCertificate> certificates;
};

class UeHomotopy {
 public:
  explicit UeHomotopy(UeRef u) : u_(std::move(u)) {}

  UVec h(const UWord& w) const;
  UVec h(const UVec& v) const;
  // T = 1 - dH - Hd.
  UVec t(const UVec& v) const;
  // Elements of the image of A: combinations of 1_⊠ and length-one letters.
  bool in_a(const UVec& v) const;

  const UeAlgebra& ue() const { return *u_; }

 private:
  UeRef u_;
};

// For a basis of the cycles of weight <= cap: iterates T until the result
// lies in A and certifies u - a = dĤ(u) with Ĥ = H Σ_{i<ℓ} T^i. Also checks
// T = 1 on A and that every basis word reaches A. Unsupported for curved
// algebras and for rings that are not fields.
UeContraction ue_contraction(UeRef u, int cap);

// ---------------------------------------------------------------------------
// Bar transfer. For a dga morphism 𝔣: 𝒜 -> ℬ with cone C and a right
// 𝒜-module M, the complex ⊕ M⊗𝒜^{⊗k}⊗C⊗𝒜^{⊗l} (bar weight k + l) with
// internal differential d and bar differential B, all signs taken in shifted
// degrees so that (d + B)² = 0. An S-linear contraction h of C is promoted
// factorwise and then to H = h Σ_i (-Bh)^i.

struct DgAlgebraTable {
  GradedSpace space;  // generator 0 is the unit
  std::map<Letter, Vec<Letter>> d;
  std::map<std::pair<Letter, Letter>, Vec<Letter>> mult;  // non-unit products

  Vec<Letter> product(Letter x, Letter y) const;
};

struct BarTransferInput {
  DgAlgebraTable source;  // 𝒜
  DgAlgebraTable target;  // ℬ
  std::map<Letter, Vec<Letter>> morphism;  // 𝔣 on generators of 𝒜
  GradedSpace module;                      // M, a right 𝒜-module
  std::map<Letter, Vec<Letter>> module_d;
  std::map<std::pair<Letter, Letter>, Vec<Letter>> module_act;  // m·a for non-unit a
  // Contraction of C, keyed by cone generators; empty means "solve for it".
  std::optional<std::map<Letter, Vec<Letter>>> contraction;
};

// The cone C = ℬ ⊕ 𝒜[1] as an 𝒜-bimodule. Generators are ℬ's followed by
// σ of 𝒜's.
struct Cone {
  GradedSpace space;
  std::map<Letter, Vec<Letter>> d;
  std::function<Vec<Letter>(Letter a, Letter c)> left;
  std::function<Vec<Letter>(Letter c, Letter a)> right;
};
Cone mapping_cone(const BarTransferInput& in);

// A contraction h of (C, d) found by linear algebra over a field.
std::optional<std::map<Letter, Vec<Letter>>> solve_contraction(const GradedSpace& space,
                                                               const std::map<Letter, Vec<Letter>>& d);

struct BarTransferResult {
  CheckReport report;
  std::size_t basis_size = 0;
  std::size_t max_series_terms = 0;  // largest j with (-Bh)^j x ≠ 0, plus one
};

// Checks h against (C, d), d² = 0, B² = 0, dB + Bd = 0 and [d, h] = 1 on the
// truncated complex, then 1 = (d+B)H + H(d+B) on all basis words of bar
// weight <= cap.
BarTransferResult bar_transfer_contraction(const BarTransferInput& in, int cap);

// 𝒜 = S, ℬ = S ⊕ S t ⊕ S s with dt = s and t², ts, st, s² = 0, M = S.
BarTransferInput acyclic_pair_transfer(RingRef r);
// 𝒜 = S[a]/a², ℬ = 𝒜 ⊗ (S ⊕ S t ⊕ S s), M = S with a acting by 0.
BarTransferInput dual_numbers_transfer(RingRef r);

// ---------------------------------------------------------------------------
// Checkable constituents of the Quillen comparison for f: A -> A' over a
// field: the square i∘f = U_e(f)∘i, the derivation attached to a homotopy,
// and the U_e contractions of both sides. The bundle does not claim the
// equivalence itself.
CheckReport quillen_classical_components(std::shared_ptr<const AInfMorphism> f,
                                         const std::optional<AInfHomotopy>& homotopy, int cap);

// i∘f = U_e(f)∘i on words of length <= cap, the left side through the A∞
// composition with i_ℓ(w) = σω[w].
CheckReport check_inclusion_square(const AInfMorphism& f, const UeAlgebra& source,
                                   const UeAlgebra& target, int cap);

}  // namespace ainf
