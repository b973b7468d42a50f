#pragma once

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <tuple>

#include "ainf/algebra.hpp"

namespace ainf {

// Opaque basis key of a module. Its meaning belongs to the module that
// produced it; finite table modules use one-token keys {generator}.
using Key = std::vector<std::uint32_t>;

// Basis element m ⊙ a of M ⊙ A[1]^⊗.
struct MElem {
  Key m;
  Word a;
  friend auto operator<=>(const MElem&, const MElem&) = default;
};

// Strictly unital right A∞-module. The structure map b^M has degree 1 and
// takes one module element followed by any number of A[1] letters.
class ModuleStructure {
 public:
  virtual ~ModuleStructure() = default;

  virtual AlgebraRef algebra_ref() const = 0;
  const AInfAlgebra& algebra() const { return *algebra_ref(); }
  RingRef ring() const { return algebra().ring(); }

  virtual Degree degree(const Key& m) const = 0;
  virtual Vec<Key> act(const Key& m, std::span<const Letter> a) const = 0;
  // Basis keys of weight <= w, in a fixed order.
  virtual std::vector<Key> basis(std::size_t w) const = 0;
  virtual std::size_t weight(const Key&) const { return 0; }
  virtual std::string render(const Key& m) const = 0;

  Degree degree(const MElem& x) const { return degree(x.m) + algebra().sdeg(x.a); }
  std::string render(const MElem& x) const;
  std::string render(const Vec<Key>& v) const;
  std::string render(const Vec<MElem>& v) const;

  // B^M = b^M ⊙ 1^⊗ + 1 ⊙ 1^⊗ ⊗ b ⊗ 1^⊗.
  Vec<MElem> coderivation(const MElem& x) const;
  Vec<MElem> coderivation(const Vec<MElem>& v) const;
  Vec<Key> apply_structure(const Vec<MElem>& v) const;

  // Inputs m ⊙ a with weight(m) + |a| <= cap.
  std::vector<MElem> inputs(std::size_t cap) const;
};

using ModuleRef = std::shared_ptr<const ModuleStructure>;

// Module given by a finite table b^M(m ⊙ a_1 ... a_k). Table keys are words
// [m, a_1, ..., a_k] whose first entry indexes the module space.
class TableModule : public ModuleStructure {
 public:
  TableModule(AlgebraRef algebra, GradedSpace space, MultiOp structure);

  AlgebraRef algebra_ref() const override { return algebra_; }
  Degree degree(const Key& m) const override { return space_.degree(m.at(0)); }
  Vec<Key> act(const Key& m, std::span<const Letter> a) const override;
  std::vector<Key> basis(std::size_t) const override;
  std::string render(const Key& m) const override { return space_.name(m.at(0)); }
  using ModuleStructure::render;

  const GradedSpace& space() const { return space_; }
  const MultiOp& structure() const { return structure_; }

 private:
  AlgebraRef algebra_;
  GradedSpace space_;
  MultiOp structure_;
};

// Fills the unit law b^M(m ⊙ η) = -(-1)^{|m|} m and clears other entries
// that contain the unit letter.
void impose_module_unit_laws(const AInfAlgebra& a, const GradedSpace& space, MultiOp& structure);

// The algebra acting on itself through b (requires b_0 = 0).
std::shared_ptr<TableModule> regular_module(AlgebraRef a);

CheckReport check_module_unit_laws(const ModuleStructure& m, int cap);
CheckReport check_module_relation(const ModuleStructure& m, int cap);
// Unit laws, b^M(B^M) = 0 and (B^M)^2 = 0 with agreement.
CheckReport check_module(const ModuleStructure& m, int cap);

// ---------------------------------------------------------------------------
// Elements of the hom complexes of Mod∞(A): families φ(m ⊙ a) -> N.

class Hom {
 public:
  using Fn = std::function<Vec<Key>(const Key&, const Word&)>;

  Hom(ModuleRef source, ModuleRef target, Degree degree, Fn fn);

  const ModuleStructure& source() const { return *source_; }
  const ModuleStructure& target() const { return *target_; }
  ModuleRef source_ref() const { return source_; }
  ModuleRef target_ref() const { return target_; }
  Degree degree() const { return degree_; }

  Vec<Key> operator()(const Key& m, const Word& a) const { return fn_(m, a); }
  Vec<Key> operator()(const MElem& x) const { return fn_(x.m, x.a); }
  Vec<Key> apply(const Vec<MElem>& v) const;
  // Φ = φ ⊙ 1^⊗.
  Vec<MElem> extend(const MElem& x) const;
  Vec<MElem> extend(const Vec<MElem>& v) const;

  static Hom identity(ModuleRef m);
  static Hom zero(ModuleRef s, ModuleRef t, Degree degree);
  // Keeps only the components with at most `arity` algebra letters.
  Hom truncated(std::size_t arity) const;
  // Tabulates the components on inputs of weight <= cap; the result no
  // longer references closures of other homs.
  Hom tabulated(std::size_t cap) const;

  Hom operator+(const Hom& o) const;
  Hom operator-(const Hom& o) const;
  Hom scaled(const Elem& c) const;

 private:
  ModuleRef source_;
  ModuleRef target_;
  Degree degree_;
  Fn fn_;
};

// δφ = b^N(φ ⊙ 1^⊗) - (-1)^φ φ(B^M).
Hom hom_differential(const Hom& phi);
// ψ∘φ = ψ(φ ⊙ 1^⊗).
Hom compose_hom(const Hom& psi, const Hom& phi);

// Table-backed hom; keys of the table are (source key, word).
Hom hom_from_table(ModuleRef source, ModuleRef target, Degree degree,
                   std::map<MElem, Vec<Key>> table);

// [B,Φ] = B^N Φ - (-1)^φ Φ B^M evaluated on one input.
Vec<MElem> hom_commutator(const Hom& phi, const MElem& x);

// Checks φ(x) = ψ(x) on all inputs of weight <= cap.
CheckReport compare_homs(const std::string& name, const Hom& a, const Hom& b, int cap);
CheckReport check_closed(const std::string& name, const Hom& phi, int cap);
// [B,Φ] = (δφ) ⊙ 1^⊗ on all inputs of weight <= cap.
CheckReport check_commutator_identity(const Hom& phi, int cap);

// ---------------------------------------------------------------------------
// ∞-bimodules: b^V(α ⊙ v ⊙ α') with α over the left algebra, α' over the right.

struct BiElem {
  Word left;
  Key v;
  Word right;
  friend auto operator<=>(const BiElem&, const BiElem&) = default;
};

class BimoduleStructure {
 public:
  virtual ~BimoduleStructure() = default;

  virtual AlgebraRef left_ref() const = 0;
  virtual AlgebraRef right_ref() const = 0;
  const AInfAlgebra& left() const { return *left_ref(); }
  const AInfAlgebra& right() const { return *right_ref(); }
  RingRef ring() const { return left().ring(); }

  virtual Degree degree(const Key& v) const = 0;
  virtual Vec<Key> act(std::span<const Letter> l, const Key& v, std::span<const Letter> r) const = 0;
  virtual std::vector<Key> basis(std::size_t w) const = 0;
  virtual std::size_t weight(const Key&) const { return 0; }
  virtual std::string render(const Key& v) const = 0;

  std::string render(const BiElem& x) const;
  std::string render(const Vec<BiElem>& v) const;

  Vec<BiElem> coderivation(const BiElem& x) const;
  Vec<Key> apply_structure(const Vec<BiElem>& v) const;
  std::vector<BiElem> inputs(std::size_t cap) const;
};

using BimoduleRef = std::shared_ptr<const BimoduleStructure>;

class TableBimodule : public BimoduleStructure {
 public:
  using Table = std::map<std::tuple<Word, Letter, Word>, Vec<Letter>>;
  TableBimodule(AlgebraRef left, AlgebraRef right, GradedSpace space, Table table);

  AlgebraRef left_ref() const override { return left_; }
  AlgebraRef right_ref() const override { return right_; }
  Degree degree(const Key& v) const override { return space_.degree(v.at(0)); }
  Vec<Key> act(std::span<const Letter> l, const Key& v, std::span<const Letter> r) const override;
  std::vector<Key> basis(std::size_t) const override;
  std::string render(const Key& v) const override { return space_.name(v.at(0)); }

  const GradedSpace& space() const { return space_; }
  const Table& table() const { return table_; }

 private:
  AlgebraRef left_;
  AlgebraRef right_;
  GradedSpace space_;
  Table table_;
};

CheckReport check_bimodule_unit_laws(const BimoduleStructure& v, int cap);
CheckReport check_bimodule(const BimoduleStructure& v, int cap);

// M ⊗∞ V = M ⊙ A[1]^⊗ ⊙ V as a module over the right algebra of V. The
// normalized variant is the quotient by keys whose middle word contains the
// unit, which span a submodule when M and V are strictly unital.
class InfinityTensor : public ModuleStructure {
 public:
  InfinityTensor(ModuleRef m, BimoduleRef v, bool normalized = false);

  AlgebraRef algebra_ref() const override { return v_->right_ref(); }
  Degree degree(const Key& k) const override;
  Vec<Key> act(const Key& k, std::span<const Letter> a) const override;
  std::vector<Key> basis(std::size_t w) const override;
  std::size_t weight(const Key& k) const override;
  std::string render(const Key& k) const override;
  using ModuleStructure::render;

  struct Parts {
    Key m;
    Word left;
    Key v;
  };
  static Key encode(const Key& m, const Word& left, const Key& v);
  static Parts decode(const Key& k);

  const ModuleStructure& module() const { return *m_; }
  const BimoduleStructure& bimodule() const { return *v_; }
  ModuleRef module_ref() const { return m_; }
  BimoduleRef bimodule_ref() const { return v_; }
  bool normalized() const { return normalized_; }
  // Zero for a degenerate middle word in the normalized variant.
  bool keeps(const Word& left) const;

 private:
  ModuleRef m_;
  BimoduleRef v_;
  bool normalized_;
};

// φ ↦ φ ⊙ 1^⊗ ⊙ 1 between infinity tensors with the same bimodule.
Hom infinity_tensor_map(const Hom& phi, std::shared_ptr<const InfinityTensor> source,
                        std::shared_ptr<const InfinityTensor> target);

}  // namespace ainf
