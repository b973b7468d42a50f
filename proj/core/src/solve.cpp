#include "ainf/solve.hpp"

#include <algorithm>

namespace ainf {

HomSolution solve_hom(const HomProblem& p, const Hom& rhs) {
  const auto& M = *p.source;
  const auto& N = *p.target;
  RingRef r = M.ring();
  const auto& g = M.algebra().grading();
  Letter unit = M.algebra().unit();
  bool curved = M.algebra().is_curved();
  std::size_t in_cap = p.cap + (curved ? 1 : 0);

  auto targets = N.basis(p.cap + 1);
  std::vector<std::pair<MElem, Key>> unknowns;
  std::map<MElem, std::vector<std::size_t>> by_input;
  for (const auto& x : M.inputs(in_cap)) {
    if (p.normalized && std::find(x.a.begin(), x.a.end(), unit) != x.a.end()) continue;
    Degree want = M.degree(x) + p.degree;
    for (const auto& k : targets)
      if (g.same(N.degree(k), want)) {
        by_input[x].push_back(unknowns.size());
        unknowns.emplace_back(x, k);
      }
  }

  // Rows are (equation input y, output key); each entry of δκ(y) is linear
  // in the unknowns.
  std::map<std::pair<MElem, Key>, std::map<std::size_t, Elem>> rows;
  std::map<std::pair<MElem, Key>, Elem> rhs_entries;
  int s = sign_of(p.degree);
  for (const auto& y : M.inputs(p.cap)) {
    auto add = [&](const Key& out, std::size_t col, const Elem& c) {
      auto& row = rows[{y, out}];
      auto [it, inserted] = row.try_emplace(col, c);
      if (!inserted) it->second += c;
    };
    // b^N(κ(m ⊙ y[0..j)) ⊙ y[j..])
    for (std::size_t j = 0; j <= y.a.size(); ++j) {
      MElem x{y.m, Word(y.a.begin(), y.a.begin() + static_cast<std::ptrdiff_t>(j))};
      auto it = by_input.find(x);
      if (it == by_input.end()) continue;
      Word rest(y.a.begin() + static_cast<std::ptrdiff_t>(j), y.a.end());
      for (std::size_t col : it->second)
        for (const auto& [out, c] : N.act(unknowns[col].second, rest)) add(out, col, c);
    }
    // -(-1)^κ κ(B^M y)
    for (const auto& [z, c] : M.coderivation(y)) {
      auto it = by_input.find(z);
      if (it == by_input.end()) continue;
      for (std::size_t col : it->second) add(unknowns[col].second, col, s > 0 ? -c : c);
    }
    for (const auto& [out, c] : rhs(y)) {
      rows[{y, out}];
      rhs_entries[{y, out}] = c;
    }
  }

  HomSolution result;
  result.unknowns = unknowns.size();
  result.equations = rows.size();
  Matrix a;
  std::vector<Elem> b;
  for (const auto& [key, row] : rows) {
    std::vector<Elem> line(unknowns.size(), Elem::zero(r));
    for (const auto& [col, c] : row) line[col] = c;
    a.push_back(std::move(line));
    auto it = rhs_entries.find(key);
    b.push_back(it == rhs_entries.end() ? Elem::zero(r) : it->second);
  }
  if (unknowns.empty()) {
    bool zero = std::all_of(b.begin(), b.end(), [](const Elem& e) { return e.is_zero(); });
    if (!zero) {
      result.reason = "no unknowns and a nonzero right-hand side";
      return result;
    }
    result.kappa = Hom::zero(p.source, p.target, p.degree);
    return result;
  }
  auto sol = solve_linear(r, unknowns.size(), a, b);
  if (auto* ns = std::get_if<NoSolution>(&sol)) {
    result.reason = ns->reason;
    return result;
  }
  const auto& x = std::get<std::vector<Elem>>(sol);
  std::map<MElem, Vec<Key>> table;
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    if (x[i].is_zero()) continue;
    auto [it, inserted] = table.try_emplace(unknowns[i].first, Vec<Key>(r));
    it->second.add(unknowns[i].second, x[i]);
  }
  result.kappa = hom_from_table(p.source, p.target, p.degree, std::move(table));
  return result;
}

}  // namespace ainf
