#pragma once

#include <memory>

#include "ainf/graded.hpp"
#include "ainf/report.hpp"

namespace ainf {

// Curved strictly unital A∞-algebra in b-form: degree-one operations on the
// shifted space A[1]. Letter i of A[1] is σ of generator i of A.
class AInfAlgebra {
 public:
  AInfAlgebra(GradedSpace space, Letter unit, MultiOp b, std::size_t arity_cap);

  const GradedSpace& space() const { return space_; }
  const GradedSpace& shifted() const { return shifted_; }
  RingRef ring() const { return space_.ring(); }
  const Grading& grading() const { return space_.grading(); }
  std::size_t rank() const { return space_.rank(); }
  Letter unit() const { return unit_; }
  const MultiOp& b() const { return b_; }
  std::size_t arity_cap() const { return arity_cap_; }

  // Degree of a letter in A[1].
  Degree sdeg(Letter l) const { return shifted_.degree(l); }
  Degree sdeg(std::span<const Letter> w) const { return word_degree(shifted_, w); }

  Vec<Word> coderivation(const Word& w) const { return sandwich(shifted_, b_, w); }
  Vec<Word> coderivation(const Vec<Word>& v) const { return sandwich(shifted_, b_, v); }
  Vec<Letter> apply_b(const Vec<Word>& v) const { return apply_op(b_, v); }
  Vec<Letter> b_of(const Word& w) const;

  // b_0(1) as a combination of A[1] letters.
  Vec<Letter> curvature_b() const { return b_of({}); }
  bool is_curved() const { return !curvature_b().is_zero(); }
  bool is_dga() const { return b_.max_arity() <= 2; }

  std::string letter_name(Letter l) const { return "s" + space_.name(l); }
  std::string render(const Word& w) const { return render_word(space_, w); }

 private:
  GradedSpace space_;
  GradedSpace shifted_;
  Letter unit_;
  MultiOp b_;
  std::size_t arity_cap_;
};

using AlgebraRef = std::shared_ptr<const AInfAlgebra>;

// Fills b_2(η⊗x) = x and b_2(x⊗η) = -(-1)^{|x|} x for every letter x of A[1],
// overwriting any previous entries on those inputs.
void impose_unit_laws(const GradedSpace& shifted, Letter unit, MultiOp& b);

// Ordered list of the checks performed by check_algebra.
CheckReport check_unit_laws(const AInfAlgebra& a, int cap);
// b(B(w)) = 0 for all words of length <= cap.
CheckReport check_relation_bB(const AInfAlgebra& a, int cap);
// B(B(w)) = 0 for all words of length <= cap.
CheckReport check_relation_BB(const AInfAlgebra& a, int cap);
// Unit laws plus both relation forms; a disagreement between the two forms
// is reported as a failure of its own.
CheckReport check_algebra(const AInfAlgebra& a, int cap);

// Searches for generators other than the declared unit satisfying the unit
// laws on words <= cap. Returns their names.
std::vector<std::string> alternative_units(const AInfAlgebra& a, int cap);

// ---------------------------------------------------------------------------
// m <-> b dictionary. An m-family is a MultiOp on the unshifted space whose
// arity-i part has degree 2 - i; its degree field is ignored.

MultiOp m_to_b(const GradedSpace& space, const MultiOp& m);
MultiOp b_to_m(const GradedSpace& space, const MultiOp& b);

// Validates homogeneity of an m-family (arity i has degree 2 - i).
void validate_m_family(const GradedSpace& space, const MultiOp& m);

// ---------------------------------------------------------------------------
// Curved dg-algebras: the A∞-algebras with b_ℓ = 0 for ℓ >= 3.

struct CurvedDgaView {
  explicit CurvedDgaView(const AInfAlgebra& a);

  const AInfAlgebra& algebra;
  MultiOp m;

  Vec<Letter> curvature() const;                     // 𝔪₀(1)
  Vec<Letter> d(const Vec<Letter>& x) const;         // 𝔪₁
  Vec<Letter> mul(const Vec<Letter>& x, const Vec<Letter>& y) const;  // 𝔪₂
  Vec<Letter> basis(Letter l) const { return Vec<Letter>(algebra.ring(), l); }
  Degree deg(Letter l) const { return algebra.space().degree(l); }
};

// dc = 0, d² = [c,-], Leibniz, associativity, de = 0, checked on basis
// elements directly, and compared with check_algebra on the b-side.
CheckReport curved_dga_axioms(const AInfAlgebra& a, int cap);
CheckReport curved_dga_axioms_direct(const AInfAlgebra& a);

// ---------------------------------------------------------------------------

class AInfMorphism {
 public:
  AInfMorphism(AlgebraRef source, AlgebraRef target, MultiOp f);

  const AInfAlgebra& source() const { return *source_; }
  const AInfAlgebra& target() const { return *target_; }
  AlgebraRef source_ref() const { return source_; }
  AlgebraRef target_ref() const { return target_; }
  const MultiOp& f() const { return f_; }

  // F = f^⊗ on a word of A[1].
  Vec<Word> extend(const Word& w) const { return geometric_extend(source_->shifted(), f_, w); }
  Vec<Word> extend(const Vec<Word>& v) const;

  static AInfMorphism identity(AlgebraRef a);

 private:
  AlgebraRef source_;
  AlgebraRef target_;
  MultiOp f_;
};

CheckReport check_morphism(const AInfMorphism& f, int cap);

// (g∘f)_ℓ = g(f^⊗) on words of length ℓ <= min of the arity caps.
AInfMorphism compose_morphisms(const AInfMorphism& g, const AInfMorphism& f);

std::string render_letters(const GradedSpace& s, const Vec<Letter>& v, const std::string& prefix);
std::string render_words(const AInfAlgebra& a, const Vec<Word>& v);

}  // namespace ainf
