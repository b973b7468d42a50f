#include "ainf/obstruction.hpp"

#include <algorithm>

namespace ainf {

std::vector<MElem> arity_inputs(const ModuleStructure& m, std::size_t k, bool normalized) {
  std::vector<MElem> out;
  Letter unit = m.algebra().unit();
  for (auto& x : m.inputs(k)) {
    if (x.a.size() != k) continue;
    if (normalized && std::find(x.a.begin(), x.a.end(), unit) != x.a.end()) continue;
    out.push_back(std::move(x));
  }
  return out;
}

namespace {

Hom restrict_if(const Hom& phi, std::function<bool(std::size_t)> keep) {
  RingRef r = phi.source().ring();
  return Hom(phi.source_ref(), phi.target_ref(), phi.degree(), [phi, keep, r](const Key& m, const Word& a) {
    return keep(a.size()) ? phi(m, a) : Vec<Key>(r);
  });
}

void require_uncurved(const ModuleStructure& m, const char* who) {
  if (m.algebra().is_curved()) throw PreconditionFailure(std::string(who) + ": the algebra is curved");
}

// Single-entry hom sending x to y.
Hom elementary(ModuleRef s, ModuleRef t, Degree degree, const MElem& x, const Key& y) {
  std::map<MElem, Vec<Key>> table;
  table.emplace(x, Vec<Key>(s->ring(), y));
  return hom_from_table(std::move(s), std::move(t), degree, std::move(table));
}

struct Unknown {
  MElem input;
  Key output;
};

std::vector<Unknown> unknowns_for(const ModuleStructure& s, const ModuleStructure& t, Degree degree, std::size_t k) {
  std::vector<Unknown> out;
  const auto& g = s.algebra().grading();
  auto keys = t.basis(k);
  for (const auto& x : arity_inputs(s, k, true))
    for (const auto& y : keys)
      if (g.same(t.degree(y), s.degree(x) + degree)) out.push_back({x, y});
  return out;
}

// Linear system whose columns are images of elementary homs, evaluated on
// arity-k inputs. Rows are (block, input, output key).
class StageSystem {
 public:
  StageSystem(RingRef r, std::size_t k) : r_(r), k_(k) {}

  // Evaluates each (block, hom) on the arity-k inputs of its source.
  std::vector<std::pair<std::size_t, Elem>> entries(const std::vector<std::pair<int, Hom>>& images) {
    std::vector<std::pair<std::size_t, Elem>> out;
    for (const auto& [block, hom] : images)
      for (const auto& x : inputs(hom.source())) {
        for (const auto& [y, c] : hom(x)) out.emplace_back(row(block, x, y), c);
      }
    return out;
  }

  void add_column(const std::vector<std::pair<int, Hom>>& images) { columns_.push_back(entries(images)); }

  std::optional<std::vector<Elem>> solve(const std::vector<std::pair<int, Hom>>& rhs_images) {
    auto rhs_entries = entries(rhs_images);
    Matrix m(rows_.size(), std::vector<Elem>(columns_.size(), Elem::zero(r_)));
    for (std::size_t j = 0; j < columns_.size(); ++j)
      for (const auto& [i, c] : columns_[j]) m[i][j] += c;
    std::vector<Elem> rhs(rows_.size(), Elem::zero(r_));
    for (const auto& [i, c] : rhs_entries) rhs[i] += c;
    if (columns_.empty()) {
      if (std::all_of(rhs.begin(), rhs.end(), [](const Elem& e) { return e.is_zero(); }))
        return std::vector<Elem>{};
      return std::nullopt;
    }
    auto sol = solve_linear(r_, columns_.size(), m, rhs);
    if (std::holds_alternative<NoSolution>(sol)) return std::nullopt;
    return std::get<std::vector<Elem>>(sol);
  }

  std::size_t equations() const { return rows_.size(); }

 private:
  const std::vector<MElem>& inputs(const ModuleStructure& m) {
    auto it = inputs_.find(&m);
    if (it == inputs_.end()) it = inputs_.emplace(&m, arity_inputs(m, k_, false)).first;
    return it->second;
  }
  std::size_t row(int block, const MElem& x, const Key& y) {
    return rows_.try_emplace(std::make_tuple(block, x, y), rows_.size()).first->second;
  }

  RingRef r_;
  std::size_t k_;
  std::map<const ModuleStructure*, std::vector<MElem>> inputs_;
  std::map<std::tuple<int, MElem, Key>, std::size_t> rows_;
  std::vector<std::vector<std::pair<std::size_t, Elem>>> columns_;
};

Hom assemble(ModuleRef s, ModuleRef t, Degree degree, const std::vector<Unknown>& unknowns,
             const std::vector<Elem>& values, std::size_t offset) {
  std::map<MElem, Vec<Key>> table;
  RingRef r = s->ring();
  for (std::size_t i = 0; i < unknowns.size(); ++i) {
    const Elem& c = values[offset + i];
    if (c.is_zero()) continue;
    table.try_emplace(unknowns[i].input, Vec<Key>(r)).first->second.add(unknowns[i].output, c);
  }
  return hom_from_table(std::move(s), std::move(t), degree, std::move(table));
}

std::optional<Witness> nonzero_on(const Hom& phi, const std::vector<MElem>& inputs) {
  for (const auto& x : inputs) {
    auto v = phi(x);
    if (!v.is_zero()) return Witness{phi.source().render(x), "0", phi.target().render(v)};
  }
  return std::nullopt;
}

CheckReport vanishes_below(const std::string& name, const std::string& identity, const Hom& phi, std::size_t k) {
  std::vector<MElem> inputs;
  if (k > 0)
    for (const auto& x : phi.source().inputs(k - 1)) inputs.push_back(x);
  return run_check(name, identity, static_cast<int>(k), inputs, [&](const MElem& x) -> std::optional<Witness> {
    auto v = phi(x);
    if (v.is_zero()) return std::nullopt;
    return Witness{phi.source().render(x), "0", phi.target().render(v)};
  });
}

CheckReport vanishes_at(const std::string& name, const std::string& identity, const Hom& phi, std::size_t k) {
  auto inputs = arity_inputs(phi.source(), k, false);
  return run_check(name, identity, static_cast<int>(k), inputs, [&](const MElem& x) -> std::optional<Witness> {
    auto v = phi(x);
    if (v.is_zero()) return std::nullopt;
    return Witness{phi.source().render(x), "0", phi.target().render(v)};
  });
}

}  // namespace

Hom restrict_arity(const Hom& phi, std::size_t k) {
  return restrict_if(phi, [k](std::size_t n) { return n == k; });
}
Hom restrict_arity_at_least(const Hom& phi, std::size_t k) {
  return restrict_if(phi, [k](std::size_t n) { return n >= k; });
}
Hom restrict_arity_below(const Hom& phi, std::size_t k) {
  return restrict_if(phi, [k](std::size_t n) { return n < k; });
}

Hom obstruction_differential(const Hom& x, std::size_t k) {
  return restrict_arity(hom_differential(restrict_arity(x, k)), k);
}

CheckReport check_ak(const Hom& phi, std::size_t k) {
  return vanishes_below("A_" + std::to_string(k) + " condition", "[B,φ] = 0 below arity " + std::to_string(k),
                        hom_differential(phi), k);
}

std::optional<Hom> solve_stage(const Hom& rhs, Degree degree, std::size_t k) {
  RingRef r = rhs.source().ring();
  if (!r->is_field()) throw UnsupportedRing("stage equations are solved over fields only");
  ModuleRef s = rhs.source_ref(), t = rhs.target_ref();
  auto unknowns = unknowns_for(*s, *t, degree, k);
  StageSystem sys(r, k);
  for (const auto& u : unknowns)
    sys.add_column({{0, obstruction_differential(elementary(s, t, degree, u.input, u.output), k)}});
  auto sol = sys.solve({{0, restrict_arity(rhs, k)}});
  if (!sol) return std::nullopt;
  return assemble(s, t, degree, unknowns, *sol, 0);
}

ObstructionClass obstruction_class(const Hom& phi, std::size_t k) {
  require_uncurved(phi.source(), "obstruction_class");
  auto ak = check_ak(phi, k);
  if (!ak.passed())
    throw PreconditionFailure("obstruction_class: the map is not A_" + std::to_string(k) + " (input " +
                              ak.witness->input + ")");
  ObstructionClass out{ObstructionElement{k, restrict_arity(hom_differential(phi), k).tabulated(k)}, {},
                       Verdict::Undecided, std::nullopt, ""};
  const Hom& obs = out.element.representative;
  out.closed = vanishes_at("obstruction closed", "[B, obs]_k = 0", obstruction_differential(obs, k), k);
  if (!phi.source().ring()->is_field()) {
    out.exact = Verdict::Undecided;
    out.detail = "exactness is decided over fields only";
    return out;
  }
  if (!nonzero_on(obs, arity_inputs(phi.source(), k, false))) {
    out.exact = Verdict::Pass;
    out.primitive = Hom::zero(phi.source_ref(), phi.target_ref(), phi.degree());
    out.detail = "the obstruction vanishes";
    return out;
  }
  out.primitive = solve_stage(obs, phi.degree(), k);
  out.exact = out.primitive ? Verdict::Pass : Verdict::Fail;
  out.detail = out.primitive ? "exact" : "nonzero class in stage " + std::to_string(k + 1);
  return out;
}

Extension extend_morphism(const Hom& phi, std::size_t k) {
  Extension out{std::nullopt, obstruction_class(phi, k), {}};
  std::string name = "extend A_" + std::to_string(k) + " to A_" + std::to_string(k + 1);
  if (out.obstruction.exact != Verdict::Pass) {
    out.report.name = name;
    out.report.identity = "[B, -X] = obs";
    out.report.cap = static_cast<int>(k);
    out.report.verdict = out.obstruction.exact == Verdict::Undecided ? Verdict::Undecided : Verdict::Fail;
    out.report.witness = nonzero_on(out.obstruction.element.representative, arity_inputs(phi.source(), k, false));
    out.report.detail = out.obstruction.detail;
    return out;
  }
  Hom ext = (phi - *out.obstruction.primitive).tabulated(k + 1);
  auto check = check_ak(ext, k + 1);
  out.report = combine(name, "[B, -X] = obs and φ - X is A_" + std::to_string(k + 1), static_cast<int>(k),
                       {out.obstruction.closed, check});
  if (out.report.passed()) out.extended = ext;
  return out;
}

CheckReport check_homotopic_obstructions(const Hom& phi, const Hom& phi2, std::size_t k) {
  auto a = obstruction_class(phi, k);
  auto b = obstruction_class(phi2, k);
  Hom diff = (a.element.representative - b.element.representative).tabulated(k);
  CheckReport r;
  r.name = "homotopic obstructions";
  r.identity = "obs(φ) - obs(φ') is exact";
  r.cap = static_cast<int>(k);
  r.checked = arity_inputs(phi.source(), k, false).size();
  if (!nonzero_on(diff, arity_inputs(phi.source(), k, false))) return r;
  if (!solve_stage(diff, phi.degree(), k)) {
    r.verdict = Verdict::Fail;
    r.witness = nonzero_on(diff, arity_inputs(phi.source(), k, false));
    r.detail = "the difference of the classes is not exact";
  }
  return r;
}

CheckReport check_obstruction_ideal(const Hom& x, const Hom& pre, const Hom& post, std::size_t k, int cap) {
  Hom y = restrict_arity_at_least(x, k);
  std::string s = std::to_string(k);
  auto left = vanishes_below("ideal: post-composition", "α∘x vanishes below arity " + s, compose_hom(post, y), k);
  auto right = vanishes_below("ideal: pre-composition", "x∘β vanishes below arity " + s, compose_hom(y, pre), k);
  auto diff = vanishes_below("ideal: differential", "[B,x] vanishes below arity " + s, hom_differential(y), k);
  // The restriction really is supported on arities >= k.
  auto support = vanishes_below("ideal: support", "x vanishes below arity " + s, y, k);
  return combine("obstruction ideal", "arity >= " + s + " families form an ideal", cap, {support, left, right, diff});
}

CheckReport check_obstruction_derivation(const Hom& alpha, const Hom& phi, const Hom& psi, const Hom& beta,
                                         std::size_t k, int cap) {
  Hom whole = compose_hom(alpha, compose_hom(phi, compose_hom(psi, beta)));
  Hom left = hom_differential(whole);
  Hom inner = compose_hom(hom_differential(phi), psi) +
              compose_hom(phi, hom_differential(psi)).scaled(Elem::from_int(phi.source().ring(), sign_of(phi.degree())));
  Hom right = compose_hom(alpha, compose_hom(inner, beta));
  auto inputs = beta.source().inputs(std::min<std::size_t>(k, static_cast<std::size_t>(cap)));
  return run_check("obstruction derivation law", "[B, αφψβ] = α([B,φ]ψ + (-1)^φ φ[B,ψ])β", cap, inputs,
                   [&](const MElem& x) -> std::optional<Witness> {
                     auto got = left(x), expected = right(x);
                     if (got == expected) return std::nullopt;
                     return Witness{beta.source().render(x), alpha.target().render(expected),
                                    alpha.target().render(got)};
                   });
}

// ---------------------------------------------------------------------------
// Homotopy inversion

InversionResult invert_homotopy(const Hom& phi, const Hom& psi_in, const Hom& h_in, const Hom& l, std::size_t cap) {
  InversionResult out;
  ModuleRef M = phi.source_ref(), N = phi.target_ref();
  RingRef r = M->ring();
  int icap = static_cast<int>(cap);
  require_uncurved(*M, "invert_homotopy");
  if (!r->is_field()) throw UnsupportedRing("invert_homotopy: coefficients must form a field");

  Hom psi = psi_in.truncated(0).tabulated(0);
  Hom h = h_in.truncated(0).tabulated(0);
  Hom one_n = Hom::identity(N), one_m = Hom::identity(M);

  // Stage 0: the hypotheses at arity zero.
  {
    auto phi_closed = check_closed("φ is A∞", phi, icap);
    auto psi_chain = vanishes_at("ψ₀ is a chain map", "[B,ψ]₀ = 0", hom_differential(psi), 0);
    auto right = vanishes_at("right homotopy at arity 0", "1 - φψ - [B,h] = 0 at arity 0",
                             one_n - compose_hom(phi, psi) - hom_differential(h), 0);
    auto left = vanishes_at("left homotopy at arity 0", "1 - ψφ - [B,ℓ] = 0 at arity 0",
                            one_m - compose_hom(psi, phi) - hom_differential(l.truncated(0)), 0);
    StageRecord rec;
    rec.stage = 0;
    rec.report = combine("stage 0", "hypotheses", 0, {phi_closed, psi_chain, right, left});
    bool ok = rec.report.passed();
    out.stages.push_back(std::move(rec));
    if (!ok) {
      out.report = out.stages.back().report;
      out.report.name = "homotopy inversion";
      out.report.detail = "hypotheses fail at stage 0";
      return out;
    }
    out.achieved = 0;
  }

  for (std::size_t k = 1; k <= cap; ++k) {
    StageRecord rec;
    rec.stage = k;
    std::string sk = std::to_string(k);
    // Step one: make ψ A_{k+1}.
    Hom obs = restrict_arity(hom_differential(psi), k).tabulated(k);
    std::vector<CheckReport> parts;
    if (nonzero_on(obs, arity_inputs(*N, k, false))) {
      auto x = solve_stage(obs.scaled(-Elem::one(r)), 0, k);
      if (!x) {
        rec.report.name = "stage " + sk;
        rec.report.identity = "[B, X'] = -obs(ψ)";
        rec.report.verdict = Verdict::Fail;
        rec.report.witness = nonzero_on(obs, arity_inputs(*N, k, false));
        rec.report.detail = "ψ does not extend: nonzero obstruction class";
        out.stages.push_back(std::move(rec));
        break;
      }
      psi = (psi + *x).tabulated(k);
      rec.psi_extended = true;
    }
    parts.push_back(check_ak(psi, k + 1));

    // Step two.
    Hom e = (one_n - compose_hom(phi, psi) - hom_differential(h)).tabulated(k);
    parts.push_back(vanishes_below("E vanishes below arity " + sk, "1 - φψ - [B,h] = 0 below arity " + sk, e, k));
    parts.push_back(vanishes_at("E closed", "[B, E]_k = 0", obstruction_differential(e, k), k));

    auto ux = unknowns_for(*N, *M, 0, k);
    auto uy = unknowns_for(*N, *N, -1, k);
    StageSystem sys(r, k);
    for (const auto& u : ux) {
      Hom ex = elementary(N, M, 0, u.input, u.output);
      sys.add_column({{0, obstruction_differential(ex, k)}, {1, restrict_arity(compose_hom(phi, ex), k)}});
    }
    for (const auto& u : uy)
      sys.add_column({{1, obstruction_differential(elementary(N, N, -1, u.input, u.output), k)}});
    rec.unknowns = ux.size() + uy.size();
    auto sol = sys.solve({{1, restrict_arity(e, k)}});
    if (!sol) {
      CheckReport fail;
      fail.name = "stage " + sk + " solve";
      fail.identity = "[B,X]_k = 0, φ₀X + [B,Y]_k = E_k";
      fail.cap = static_cast<int>(k);
      fail.verdict = Verdict::Fail;
      fail.witness = nonzero_on(restrict_arity(e, k), arity_inputs(*N, k, false));
      fail.detail = "the stage equations have no solution although the hypotheses hold";
      parts.push_back(fail);
      rec.report = combine("stage " + sk, "extend ψ and h to arity " + sk, static_cast<int>(k), parts);
      out.stages.push_back(std::move(rec));
      break;
    }
    psi = (psi + assemble(N, M, 0, ux, *sol, 0)).tabulated(cap);
    h = (h + assemble(N, N, -1, uy, *sol, ux.size())).tabulated(cap);
    Hom e2 = one_n - compose_hom(phi, psi) - hom_differential(h);
    parts.push_back(vanishes_at("E killed at arity " + sk, "1 - φψ - [B,h] = 0 at arity " + sk, e2, k));
    parts.push_back(check_ak(psi, k + 1));
    rec.report = combine("stage " + sk, "extend ψ and h to arity " + sk, static_cast<int>(k), parts);
    bool ok = rec.report.passed();
    out.stages.push_back(std::move(rec));
    if (!ok) break;
    out.achieved = k;
  }

  std::vector<CheckReport> parts;
  for (const auto& s : out.stages) parts.push_back(s.report);
  if (out.achieved == cap) {
    parts.push_back(check_closed("ψ̂ is A∞", psi, icap));
    parts.push_back(compare_homs("1 - φψ̂ = [B,ĥ]", one_n - compose_hom(phi, psi), hom_differential(h), icap));
    out.psi = psi;
    out.h = h;
  }
  out.report = combine("homotopy inversion", "1 - φ(ψ̂ ⊙ 1) = [B, ĥ] on words <= cap", icap, parts);
  if (out.achieved != cap && out.report.passed()) out.report.verdict = Verdict::Fail;
  out.report.detail = out.achieved ? "achieved stage " + std::to_string(*out.achieved) : "no stage achieved";
  return out;
}

// ---------------------------------------------------------------------------
// Fixtures

AlgebraRef square_zero_algebra(RingRef r, std::size_t arity_cap) {
  AssocAlgebra a{r, Grading::integer(), {{"1", 0}, {"x", 1}}, {}};
  DgaData d{a, Vec<Letter>(r), {}};
  return build_algebra(d, arity_cap);
}

namespace {

constexpr Letter kX = 1;

std::shared_ptr<TableModule> free_n(AlgebraRef a) {
  RingRef r = a->ring();
  DgModuleData n{GradedSpace(r, Grading::integer(), {{"n", 0}, {"nx", 1}}), {}, {}};
  n.act[{0, kX}] = Vec<Letter>(r, 1);
  return build_module(a, n, a->arity_cap());
}

}  // namespace

QuasiIsoFixture quasi_iso_fixture(RingRef r, const Elem& a, const std::vector<Elem>& kappa,
                                  const Elem& c, std::size_t cap) {
  auto alg = square_zero_algebra(r, cap + 1);
  auto n = free_n(alg);
  // n, nx, u, ux, v, vx with du = v.
  DgModuleData md{GradedSpace(r, Grading::integer(),
                              {{"n", 0}, {"nx", 1}, {"u", 0}, {"ux", 1}, {"v", 1}, {"vx", 2}}),
                  {}, {}};
  md.act[{0, kX}] = Vec<Letter>(r, 1);
  md.act[{2, kX}] = Vec<Letter>(r, 3);
  md.act[{4, kX}] = Vec<Letter>(r, 5);
  md.d[2] = Vec<Letter>(r, 4);
  md.d[3] = Vec<Letter>(r, 5);
  auto m = build_module(alg, md, cap + 1);

  auto ainv = a.inverse();
  if (!ainv) throw PreconditionFailure("quasi_iso_fixture: a must be a unit");
  std::map<Letter, Vec<Letter>> g, gi;
  for (Letter l : {0, 1}) {
    g[l] = Vec<Letter>(r, l).scaled(a);
    gi[l] = Vec<Letter>(r, l).scaled(*ainv);
  }
  Hom gpi = strict_hom(m, n, g);

  // κ(m ⊙ σx^j) for m in {ux, v} (to n) and vx (to nx), j = 1..cap.
  std::map<MElem, Vec<Key>> kt;
  std::size_t idx = 0;
  for (std::size_t j = 1; j <= cap; ++j)
    for (auto [src, dst] : {std::pair<Letter, Letter>{3, 0}, {4, 0}, {5, 1}}) {
      const Elem& k = kappa.empty() ? Elem::zero(r) : kappa[idx++ % kappa.size()];
      if (!k.is_zero()) kt[MElem{Key{src}, Word(j, kX)}] = Vec<Key>(r, Key{dst}).scaled(k);
    }
  Hom kap = hom_from_table(m, n, -1, kt);
  Hom phi = (gpi + hom_differential(kap)).tabulated(cap + 1);

  std::map<Letter, Vec<Letter>> s = gi;
  Vec<Letter> w = s[1];
  w.add(4, c);
  s[1] = w;
  Hom psi = strict_hom(n, m, s);

  QuasiIsoFixture f{"", alg, m, n, phi, psi, Hom::zero(n, n, -1), Hom::zero(m, m, -1)};
  // ℓ with [B,ℓ] = 1 - ψφ at arity zero.
  Hom rhs = (Hom::identity(m) - compose_hom(psi, phi)).truncated(0).tabulated(0);
  auto l = solve_stage(rhs, -1, 0);
  if (!l) throw StructuralError("quasi_iso_fixture: 1 - ψφ is not null-homotopic");
  f.l = *l;
  f.name = "a=" + a.str() + " c=" + c.str();
  return f;
}

QuasiIsoFixture random_quasi_iso(Rng& rng, RingRef r, std::size_t cap) {
  Elem a = random_elem(rng, r, true), c = random_elem(rng, r, true);
  std::vector<Elem> kappa;
  for (int i = 0; i < 3; ++i) kappa.push_back(random_elem(rng, r, true));
  return quasi_iso_fixture(r, a, kappa, c, cap);
}

QuasiIsoFixture rank_drop_fixture(RingRef r, std::size_t cap) {
  auto alg = square_zero_algebra(r, cap + 1);
  auto n = free_n(alg);
  std::map<Letter, Vec<Letter>> x;
  x[0] = Vec<Letter>(r, 1);
  Hom phi = strict_hom(n, n, x);
  return {"rank drop", alg, n, n, phi, Hom::identity(n), Hom::zero(n, n, -1), Hom::zero(n, n, -1)};
}

Hom essential_obstruction(RingRef r) {
  auto n = free_n(square_zero_algebra(r, 3));
  std::map<Letter, Vec<Letter>> s;
  s[0] = Vec<Letter>(r, 0);
  s[1] = Vec<Letter>(r, 1).scaled(Elem::from_int(r, 2));
  return strict_hom(n, n, s);
}

}  // namespace ainf
