#pragma once

#include <optional>

#include "ainf/module.hpp"

namespace ainf {

// Linear problem δκ = rhs in the hom complex Mod∞(A)(M, N), truncated at
// input weight cap. Unknowns are the components κ(m ⊙ a) on inputs of weight
// <= cap (+1 when A is curved, since B^M then raises weight), valued in
// target basis keys of weight <= cap + 1.
struct HomProblem {
  ModuleRef source;
  ModuleRef target;
  Degree degree = 0;  // degree of κ
  std::size_t cap = 2;
  // Only words without the unit letter carry unknowns.
  bool normalized = true;
};

struct HomSolution {
  std::optional<Hom> kappa;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::string reason;  // why no solution exists
};

HomSolution solve_hom(const HomProblem& p, const Hom& rhs);

}  // namespace ainf
