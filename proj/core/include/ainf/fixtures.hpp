#pragma once

#include <random>

#include "ainf/adjoint.hpp"

namespace ainf {

// Finite associative algebra on the m-side: structure constants for products
// of basis elements. Generator 0 is the unit; its products are implicit.
struct AssocAlgebra {
  RingRef ring = nullptr;
  Grading grading = Grading::integer();
  std::vector<Generator> gens;
  std::map<std::pair<Letter, Letter>, Vec<Letter>> mult;

  std::size_t rank() const { return gens.size(); }
  Degree deg(Letter l) const { return gens.at(l).degree; }
  Vec<Letter> product(Letter x, Letter y) const;
  Vec<Letter> product(const Vec<Letter>& x, const Vec<Letter>& y) const;
  // Graded commutator [x, y] of homogeneous elements.
  Vec<Letter> commutator(const Vec<Letter>& x, Degree dx, const Vec<Letter>& y, Degree dy) const;
};

// k[ξ]/(ξ² - α), ξ odd, Z/2-graded.
AssocAlgebra dual_numbers(RingRef r, const Elem& alpha);
// Upper-triangular 2×2 matrices with E12 in degree 1: basis 1, E11, E12.
AssocAlgebra upper_triangular(RingRef r);
// k × k with idempotent p = (1, 0), concentrated in degree 0.
AssocAlgebra split_product(RingRef r);
// k[t]/(t³ - a t² - b t - c), t even of degree t_degree, Z/2-graded when the
// relation is not homogeneous for the integer grading.
AssocAlgebra truncated_cubic(RingRef r, const Elem& a, const Elem& b, const Elem& c, Grading g,
                             Degree t_degree);

// m-side description of a curved dg-algebra.
struct DgaData {
  AssocAlgebra alg;
  Vec<Letter> curvature;               // m₀(1)
  std::map<Letter, Vec<Letter>> diff;  // m₁ on generators
};

// (A, [θ,-], θ²) for odd θ.
DgaData inner_curved(const AssocAlgebra& a, const Vec<Letter>& theta, Degree theta_degree);
// (A, 0, c) for a central element c of degree 2.
DgaData central_curved(const AssocAlgebra& a, const Vec<Letter>& c);

MultiOp dga_m_table(const DgaData& d);
AlgebraRef build_algebra(const DgaData& d, std::size_t arity_cap);

// A dg-module over a curved dga: finite free space with d and the action of
// A's generators. Converted to an A∞-module through module identification.
struct DgModuleData {
  GradedSpace space;
  std::map<Letter, Vec<Letter>> d;
  std::map<std::pair<Letter, Letter>, Vec<Letter>> act;  // m·x
};

// Free module ⊕ g_i·A with d(g·a) = -(-1)^{|g|+|a|} g·aθ, over (A, [θ,-], θ²).
DgModuleData twisted_regular(const DgaData& d, const Vec<Letter>& theta, std::vector<Degree> shifts);
// V ⊗ A with V = span{v0, v1}, d(v0) = v1, d(v1) = -v0·c, over (A, 0, c).
DgModuleData koszul_pair(const DgaData& d, Degree shift);

std::shared_ptr<TableModule> build_module(AlgebraRef a, const DgModuleData& m, std::size_t arity_cap);

// ---------------------------------------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v.at(static_cast<std::size_t>(uniform(0, static_cast<long>(v.size()) - 1)));
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

Elem random_elem(Rng& rng, RingRef r, bool nonzero = false);

// Degree-preserving invertible change of basis fixing the unit, applied to an
// m-table (a strict A∞-isomorphism).
MultiOp random_basis_change(Rng& rng, const GradedSpace& space, Letter unit, const MultiOp& m);

// A random curved dga over r from the fixed families, after a random basis
// change. Returns the algebra and, if it is of inner type, θ.
struct RandomDga {
  DgaData data;
  std::optional<Vec<Letter>> theta;
  Degree theta_degree = 1;
  std::string family;
};
RandomDga random_dga(Rng& rng, RingRef r, bool require_curved);

AlgebraRef random_curved_algebra(Rng& rng, RingRef r, std::size_t arity_cap, bool require_curved,
                                 std::string* family = nullptr);

// Perturbs one b₂ entry on non-unit letters or adds one b₃ entry; outputs
// respect degrees and strict unitality.
AlgebraRef mutate_algebra(Rng& rng, const AInfAlgebra& a);

// A random dg-module over a random dga; the pair is valid by construction.
struct AlgebraModulePair {
  AlgebraRef algebra;
  std::shared_ptr<TableModule> module;
  std::string family;
};
AlgebraModulePair random_pair(Rng& rng, RingRef r, bool require_curved, std::size_t arity_cap);

// Random strict automorphism of a table module: the transported module and
// the strict isomorphism from the original to it.
struct ModuleIso {
  std::shared_ptr<TableModule> target;
  std::map<Letter, Vec<Letter>> map;
};
ModuleIso random_module_iso(Rng& rng, const TableModule& m);

// Random strict automorphism transported to a new algebra: f₁ = φ fixing the
// unit, target b' = φ b φ⁻¹, with the inverse morphism.
struct AlgebraIso {
  AlgebraRef target;
  std::shared_ptr<const AInfMorphism> map;
  std::shared_ptr<const AInfMorphism> inverse;
};
AlgebraIso random_algebra_iso(Rng& rng, AlgebraRef a);

Hom strict_hom(ModuleRef source, ModuleRef target, const std::map<Letter, Vec<Letter>>& map);

}  // namespace ainf
