#pragma once

#include "ainf/adjoint.hpp"

namespace ainf {

// U_e(A) as an ∞-bimodule over (A, A): b(u) = du, b(l ⊙ u) = ω[l]⊠u,
// b(u ⊙ r) = -(-1)^{|u|} u⊠ω[r], zero when both sides are nonempty.
// Keys are encoded normal-form U-words and degrees are U_e degrees.
class UeBimodule : public BimoduleStructure {
 public:
  // FlippedLeft negates the ω⁺⊠1^⊠ term; a mutant for testing.
  enum class Variant { Standard, FlippedLeft };

  explicit UeBimodule(UeRef u, Variant variant = Variant::Standard);

  AlgebraRef left_ref() const override { return u_->base_ref(); }
  AlgebraRef right_ref() const override { return u_->base_ref(); }
  Degree degree(const Key& v) const override { return u_->degree(decode_uword(v)); }
  Vec<Key> act(std::span<const Letter> l, const Key& v, std::span<const Letter> r) const override;
  std::vector<Key> basis(std::size_t w) const override;
  std::size_t weight(const Key& v) const override { return uweight(decode_uword(v)); }
  std::string render(const Key& v) const override { return u_->render(decode_uword(v)); }

  const UeAlgebra& ue() const { return *u_; }
  UeRef ue_ref() const { return u_; }

 private:
  UeRef u_;
  Variant variant_;
};

Vec<Key> encode_uvec(RingRef r, const UVec& v);
UVec decode_kvec(RingRef r, const Vec<Key>& v);

// Q_A(M) = M ⊗∞ U_e(A), on the normalized middle slot.
class QModule : public InfinityTensor {
 public:
  QModule(ModuleRef m, std::shared_ptr<const UeBimodule> v);

  const UeBimodule& ue_bimodule() const { return *ue_bimodule_; }
  const UeAlgebra& ue() const { return ue_bimodule_->ue(); }

  static Key key(const Key& m, const Word& left, const UWord& u) {
    return encode(m, left, encode_uword(u));
  }
  // Right multiplication by a U_e word, (m ⊙ α ⊙ u)·u' = m ⊙ α ⊙ nf(u⊠u').
  Vec<Key> multiply(const Key& q, const UWord& u) const;

 private:
  std::shared_ptr<const UeBimodule> ue_bimodule_;
};

using QRef = std::shared_ptr<const QModule>;

QRef q_module(ModuleRef m, UeBimodule::Variant variant = UeBimodule::Variant::Standard);

// λ: M -> Q_A(M), λ(m ⊙ α) = m ⊙ α ⊙ 1_⊠.
Hom lambda_map(ModuleRef m, QRef q);
// ε: Q_A(M) -> M strict, ε(m ⊙ 1_⊗ ⊙ u) = m·u and zero on nonempty left slots.
Hom epsilon_map(QRef q);

// H on Q_A(M) ⊙ A[1]^⊗, of degree -1: projects onto the empty left slot and
// moves each U-letter ω[w] across as w.
Vec<MElem> q_homotopy(const QModule& q, const MElem& x);
Vec<MElem> q_homotopy(const QModule& q, const Vec<MElem>& v);

// BH + HB = 1 - ΛE on Q_A(M) ⊙ A[1]^⊗, weight <= cap.
CheckReport check_q_homotopy(const QModule& q, const Hom& lambda, const Hom& epsilon, int cap);
// Λ and E closed, E∘Λ = 1, BH + HB = 1 - ΛE.
CheckReport check_q_equivalence(QRef q, int cap);
// Q_A(M) is an A∞-module and a U_e(A) dg-module whose action agrees with
// right multiplication.
CheckReport check_q_module(const QModule& q, int cap);

// ---------------------------------------------------------------------------
// Adjunction: φ: M -> N in Mod∞(A) with N a module (hence a U_e dg-module)
// corresponds to the U_e-linear strict map φ̃(m ⊙ α ⊙ u) = φ(m ⊙ α)·u.

Hom adjunction_forward(const Hom& phi, QRef q);
// ψ ↦ ψ∘λ for strict ψ: Q_A(M) -> N.
Hom adjunction_backward(const Hom& psi, QRef q);

// Roundtrips on both sides and δ-compatibility, δ(φ̃) = (δφ)~.
CheckReport check_adjunction(const Hom& phi, QRef q, int cap);

// A random hom M -> N of the given degree, tabulated on inputs of weight <= cap
// and vanishing on words that contain the unit (a normalized cochain). The
// adjunction is a bijection on normalized homs.
class Rng;
Hom random_hom(Rng& rng, ModuleRef m, ModuleRef n, Degree degree, std::size_t cap);

// ---------------------------------------------------------------------------
// Restriction of scalars along f: A -> A', R_f(M')(m ⊙ α) = b^{M'}(m ⊙ F(α)).

class RestrictedModule : public ModuleStructure {
 public:
  RestrictedModule(std::shared_ptr<const AInfMorphism> f, ModuleRef target);

  AlgebraRef algebra_ref() const override { return f_->source_ref(); }
  Degree degree(const Key& m) const override { return m_->degree(m); }
  Vec<Key> act(const Key& m, std::span<const Letter> a) const override;
  std::vector<Key> basis(std::size_t w) const override { return m_->basis(w); }
  std::size_t weight(const Key& k) const override { return m_->weight(k); }
  std::string render(const Key& k) const override { return m_->render(k); }
  using ModuleStructure::render;

  const AInfMorphism& morphism() const { return *f_; }
  const ModuleStructure& original() const { return *m_; }

 private:
  std::shared_ptr<const AInfMorphism> f_;
  ModuleRef m_;
};

ModuleRef restrict_scalars(std::shared_ptr<const AInfMorphism> f, ModuleRef target);
// φ ↦ φ(1 ⊙ F) between restricted modules.
Hom restrict_hom(const Hom& phi, ModuleRef source, ModuleRef target);

// R_{g∘f} = R_f R_g, R_id = 1 on structure tables of weight <= cap.
CheckReport check_restriction_functoriality(std::shared_ptr<const AInfMorphism> f,
                                            std::shared_ptr<const AInfMorphism> g, ModuleRef m,
                                            int cap);

// U_e(f): ω[w] ↦ ω[F(w)], multiplicative, followed by the normal form.
UVec ue_map(const AInfMorphism& f, const UeAlgebra& target, const UWord& u);
UVec ue_map(const AInfMorphism& f, const UeAlgebra& target, const UVec& u);
// U_e(f) is a curved dg-map: commutes with d and sends c to c'.
CheckReport check_ue_map(const AInfMorphism& f, const UeAlgebra& source, const UeAlgebra& target,
                         int cap);

// ---------------------------------------------------------------------------
// Free U_e(A) dg-modules on a finite generator set, as A∞-modules over A.
// Keys are {g} followed by an encoded U-word; generator degrees are module
// (A∞) degrees.

struct FreePresentation {
  UeRef ue;
  GradedSpace generators;
  // d(g) as a combination of g'·u keys.
  std::map<Letter, Vec<Key>> d;
};

Key free_key(Letter g, const UWord& u);
std::pair<Letter, UWord> decode_free_key(const Key& k);

class FreeUeModule : public ModuleStructure {
 public:
  explicit FreeUeModule(FreePresentation p);

  AlgebraRef algebra_ref() const override { return p_.ue->base_ref(); }
  Degree degree(const Key& k) const override;
  Vec<Key> act(const Key& k, std::span<const Letter> a) const override;
  std::vector<Key> basis(std::size_t w) const override;
  std::size_t weight(const Key& k) const override { return uweight(decode_free_key(k).second); }
  std::string render(const Key& k) const override;
  using ModuleStructure::render;

  const FreePresentation& presentation() const { return p_; }
  // dg-side operations.
  Vec<Key> d(const Key& k) const;
  Vec<Key> multiply(const Vec<Key>& v, const UWord& u) const;

 private:
  FreePresentation p_;
};

using FreeRef = std::shared_ptr<const FreeUeModule>;

// L_f on a free presentation: same generators, d'(g) = Σ g'·U_e(f)(u).
FreePresentation extend_scalars(const AInfMorphism& f, UeRef target, const FreePresentation& p);

// Unit P -> R_f L_f P, g·u ↦ g·U_e(f)(u), a strict morphism over A.
Hom extension_unit(std::shared_ptr<const AInfMorphism> f, FreeRef p, FreeRef lp);

// The unit is closed; a U_e(A')-linear closed map ψ: L_f P -> N given on
// generators corresponds to R_f(ψ)∘unit, which is closed and agrees with ψ
// on generators.
CheckReport check_extension_adjunction(std::shared_ptr<const AInfMorphism> f, FreeRef p, FreeRef lp,
                                       int cap);

// Two-generator free module with d g0 = g1, d g1 = -g0·c (valid over any
// curvature); generator 0 has degree `shift`.
FreePresentation free_koszul(UeRef u, Degree shift);

}  // namespace ainf
