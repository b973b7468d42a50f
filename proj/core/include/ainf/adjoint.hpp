#pragma once

#include "ainf/module.hpp"

namespace ainf {

// A letter of X = ((A[1])^{⊗≥1})[-1]: the element ω[w] for a nonempty word w.
using ULetter = Word;
// A ⊠-word in X; the empty word is 1_⊠.
using UWord = std::vector<ULetter>;
using UVec = Vec<UWord>;

std::size_t uweight(const UWord& u);
Key encode_uword(const UWord& u);
UWord decode_uword(const Key& k);

// U(A) = X^⊠ with d = 1^⊠ ⊠ (D₁ + D̄₂) ⊠ 1^⊠, and its quotient U_e(A) by the
// ideal generated by 1_⊠ - ω[η] and the letters ω[..η..] of length > 1.
class UeAlgebra {
 public:
  // FullCoproduct replaces Δ̄ by Δ, reading ω[1_⊗] as 1_⊠. It is not a valid
  // construction and exists for mutation testing.
  enum class Coproduct { Reduced, FullCoproduct };

  explicit UeAlgebra(AlgebraRef a, Coproduct variant = Coproduct::Reduced);

  const AInfAlgebra& base() const { return *a_; }
  AlgebraRef base_ref() const { return a_; }
  RingRef ring() const { return a_->ring(); }
  Coproduct variant() const { return variant_; }

  Degree degree(const ULetter& x) const { return a_->sdeg(x) + 1; }
  Degree degree(const UWord& u) const;

  // D = D₁ + D̄₂ on one letter, valued in U(A).
  UVec letter_differential(const ULetter& x) const;
  // The derivation d on U(A) (no normal form).
  UVec differential(const UWord& u) const;
  UVec differential(const UVec& v) const;
  // c = -ω(b₀(1)) in U(A).
  UVec curvature() const;

  // Canonical representative modulo I.
  UVec normal_form(const UWord& u) const;
  UVec normal_form(const UVec& v) const;
  bool is_normal(const UWord& u) const;

  // Operations of U_e(A) on normal forms.
  UVec d(const UWord& u) const { return normal_form(differential(u)); }
  UVec d(const UVec& v) const { return normal_form(differential(v)); }
  UVec c() const { return normal_form(curvature()); }
  UVec mul(const UVec& x, const UVec& y) const;  // concatenation, no normal form

  // All ⊠-words of U(A), resp. normal forms of U_e(A), of weight <= w,
  // ordered by weight and then lexicographically.
  std::vector<UWord> free_basis(std::size_t w) const;
  std::vector<UWord> basis(std::size_t w) const;
  // Ideal generators 1_⊠ - ω[η] and ω[..η..] of weight <= w.
  std::vector<UVec> ideal_generators(std::size_t w) const;

  std::string render(const ULetter& x) const;
  std::string render(const UWord& u) const;
  std::string render(const UVec& v) const;

 private:
  std::vector<UWord> words_over(std::size_t alphabet_skip_unit, std::size_t w, bool skip_unit) const;

  AlgebraRef a_;
  Coproduct variant_;
};

using UeRef = std::shared_ptr<const UeAlgebra>;

// d²u = c⊠u - u⊠c on all of U(A) and on U_e(A), weight <= cap.
CheckReport check_u_curvature(const UeAlgebra& u, int cap);
// nf(d g) = 0 for every ideal generator of weight <= cap.
CheckReport check_ideal_stability(const UeAlgebra& u, int cap);
// d(xy) = dx·y + (-1)^x x·dy for pairs of weight <= cap.
CheckReport check_u_derivation(const UeAlgebra& u, int cap);
// nf(x ⊠ g ⊠ y) = 0 for generators g and words x, y with total weight <= cap.
CheckReport check_normal_form_soundness(const UeAlgebra& u, int cap);

// ---------------------------------------------------------------------------
// Module identification: right A∞-modules over A and dg-modules over U_e(A)
// with dm = -b^M(m) and m·ω[w] = -(-1)^{|m|} b^M(m ⊙ w). Since b^M has
// degree 1 on M ⊙ A[1]^⊗, the dg-module is M[-1]: an element m has dg degree
// |m| + 1, and the module A[1] over A corresponds to A itself.

struct DgModuleTable {
  AlgebraRef algebra;
  GradedSpace space;
  std::map<Letter, Vec<Letter>> d;
  // m·ω[w] for η-free nonempty words w; absent entries are zero.
  std::map<std::pair<Letter, Word>, Vec<Letter>> act;

  friend bool operator==(const DgModuleTable& x, const DgModuleTable& y) {
    return x.d == y.d && x.act == y.act;
  }
};

DgModuleTable module_to_ue(const TableModule& m);
std::shared_ptr<TableModule> ue_to_module(const DgModuleTable& t);

// The induced U_e(A)-action on an arbitrary module, letter by letter.
Vec<Key> ue_act(const ModuleStructure& m, const Key& k, const UWord& u);
Vec<Key> ue_act(const ModuleStructure& m, const Vec<Key>& v, const UWord& u);
Vec<Key> ue_act(const ModuleStructure& m, const Vec<Key>& v, const UVec& u);
Vec<Key> ue_d(const ModuleStructure& m, const Key& k);
Vec<Key> ue_d(const ModuleStructure& m, const Vec<Key>& v);

// dg-module axioms over U_e(A): d²m = -m·c, d(m·u) = dm·u - (-1)^{|m|} m·du,
// descent through I, on module basis keys of weight <= cap paired with U_e
// words of weight <= cap.
CheckReport check_dg_module(const ModuleStructure& m, const UeAlgebra& u, int cap);

// A strict degree-0 morphism is closed in Mod∞(A) iff it is a U_e(A)-linear
// chain map. Both sides are computed and must agree.
CheckReport check_strict_morphism_identification(const Hom& phi, const UeAlgebra& u, int cap);

// ---------------------------------------------------------------------------
// Universality: an A∞-morphism f: A -> A' into a curved dg-algebra induces
// 𝔣: U_e(A) -> A' with 𝔣(ω[w]) = ω(f(w)).

Vec<Letter> transport_value(const AInfMorphism& f, const UWord& u);
Vec<Letter> transport_value(const AInfMorphism& f, const UVec& u);
CheckReport check_universality(const AInfMorphism& f, const UeAlgebra& u, int cap);

// The canonical i_•: A[1]^⊗ -> U_e(A)[1] with i_ℓ(w) = σ(ω[w]) is an
// A∞-morphism: B^{U_e} I = I B on words of length <= cap.
CheckReport check_inclusion_morphism(const UeAlgebra& u, int cap);

// b-side of U_e(A) as an A∞-algebra with U_e-words as letters.
Vec<UWord> ue_b(const UeAlgebra& u, std::span<const UWord> in);

}  // namespace ainf
