#include "ainf/vanishing.hpp"

#include <algorithm>

#include "ainf/adjoint.hpp"
#include "ainf/fixtures.hpp"

namespace ainf {

// ---------------------------------------------------------------------------
// Base change

Vec<Letter> map_coefficients(const Vec<Letter>& v, const RingMap& f) {
  Vec<Letter> out(f.target());
  for (const auto& [l, c] : v) out.add(l, f(c));
  return out;
}

MultiOp map_coefficients(const MultiOp& m, const RingMap& f) {
  MultiOp out(f.target(), m.degree());
  for (const auto& [in, v] : m.table()) {
    auto w = map_coefficients(v, f);
    if (!w.is_zero()) out.set(in, std::move(w));
  }
  return out;
}

namespace {

GradedSpace respace(const GradedSpace& s, RingRef r) { return GradedSpace(r, s.grading(), s.generators()); }

}  // namespace

AlgebraRef base_change(const AInfAlgebra& a, const RingMap& f) {
  if (f.source() != a.ring()) throw StructuralError("base_change: ring map source is not the algebra's ring");
  return std::make_shared<const AInfAlgebra>(respace(a.space(), f.target()), a.unit(),
                                             map_coefficients(a.b(), f), a.arity_cap());
}

std::shared_ptr<TableModule> base_change(const TableModule& m, AlgebraRef target, const RingMap& f) {
  if (f.source() != m.ring() || target->ring() != f.target())
    throw StructuralError("base_change: rings do not match");
  return std::make_shared<TableModule>(std::move(target), respace(m.space(), f.target()),
                                       map_coefficients(m.structure(), f));
}

// ---------------------------------------------------------------------------
// Augmentations

Elem Augmentation::operator()(const Vec<Letter>& a) const {
  Elem out = Elem::zero(a.ring());
  for (const auto& [l, c] : a) out += values.at(l) * c;
  return out;
}

std::string to_string(AugmentationSearch::Kind k) {
  switch (k) {
    case AugmentationSearch::Kind::Found:
      return "found";
    case AugmentationSearch::Kind::Nonexistence:
      return "nonexistence";
    case AugmentationSearch::Kind::Undecided:
      return "undecided";
  }
  return "?";
}

namespace {

Vec<Letter> m_curvature(const AInfAlgebra& a) {
  MultiOp m = b_to_m(a.space(), a.b());
  const auto* c = m.find({});
  return c ? *c : Vec<Letter>(a.ring());
}

}  // namespace

AugmentationSearch detect_augmentation(const AInfAlgebra& a) {
  RingRef r = a.ring();
  AugmentationSearch out;
  Vec<Letter> c = m_curvature(a);
  std::string rendered = render_letters(a.space(), c, "");
  if (c.is_zero()) {
    out.kind = AugmentationSearch::Kind::Nonexistence;
    out.detail = "m0(1) = 0, so l(m0(1)) = 0 for every l";
    return out;
  }
  std::vector<Letter> support;
  for (const auto& [l, coeff] : c) support.push_back(l);
  Augmentation aug{std::vector<Elem>(a.rank(), Elem::zero(r))};

  if (r->kind() == RingKind::Polynomial) {
    if (a.rank() > 1) {
      out.detail = "linear algebra over " + r->describe() + " is not attempted for rank > 1";
      return out;
    }
    auto inv = c.coeff(support[0]).inverse();
    if (!inv) {
      out.kind = AugmentationSearch::Kind::Nonexistence;
      out.detail = "m0(1) = " + rendered + " and " + c.coeff(support[0]).str() + " is not a unit in " + r->describe();
      return out;
    }
    aug.values[support[0]] = *inv;
    out.kind = AugmentationSearch::Kind::Found;
    out.augmentation = aug;
    return out;
  }

  Matrix m(1, std::vector<Elem>());
  for (Letter l : support) m[0].push_back(c.coeff(l));
  auto sol = solve_linear(r, support.size(), m, {Elem::one(r)});
  if (auto* ns = std::get_if<NoSolution>(&sol)) {
    out.kind = AugmentationSearch::Kind::Nonexistence;
    out.detail = "m0(1) = " + rendered + "; the coefficients generate a proper ideal (" + ns->reason + ")";
    return out;
  }
  const auto& x = std::get<std::vector<Elem>>(sol);
  for (std::size_t i = 0; i < support.size(); ++i) aug.values[support[i]] = x[i];
  out.kind = AugmentationSearch::Kind::Found;
  out.augmentation = aug;
  return out;
}

// ---------------------------------------------------------------------------
// KP contraction

namespace {

Hom kp_h(ModuleRef m, const Augmentation& l) {
  RingRef r = m->ring();
  const ModuleStructure* mp = m.get();
  return Hom(m, m, -1, [l, r, mp](const Key& k, const Word& a) {
    Vec<Key> out(r);
    if (a.size() != 1) return out;
    Elem c = l.lambda(a[0]);
    if (sign_of(mp->degree(k)) < 0) c = -c;
    out.add(k, c);
    return out;
  });
}

bool vanishes_on(const Hom& h, const std::vector<MElem>& inputs) {
  return std::all_of(inputs.begin(), inputs.end(), [&](const MElem& x) { return h(x).is_zero(); });
}

}  // namespace

KpContraction::KpContraction(ModuleRef m, Augmentation l)
    : m_(std::move(m)), l_(std::move(l)), h_(kp_h(m_, l_)) {
  Elem v = l_(m_curvature(m_->algebra()));
  if (!v.is_one()) throw PreconditionFailure("kp_contraction: l(m0(1)) = " + v.str() + ", not 1");
}

namespace {

struct Series {
  Hom g;
  std::size_t terms;
};

Series kp_series(const ModuleRef& m, const Hom& h, std::size_t cap) {
  auto inputs = m->inputs(cap);
  Hom e = Hom::identity(m) - hom_differential(h);
  Hom term = h.tabulated(cap);
  Hom sum = term;
  for (std::size_t k = 1; k <= cap + 3; ++k) {
    term = compose_hom(e, term).tabulated(cap);
    if (vanishes_on(term, inputs)) return {sum, k};
    sum = (sum + term).tabulated(cap);
  }
  throw PreconditionFailure("kp_contraction: the series does not terminate at weight " + std::to_string(cap));
}

}  // namespace

Hom KpContraction::g(std::size_t cap) const { return kp_series(m_, h_, cap).g; }
std::size_t KpContraction::terms_used(std::size_t cap) const { return kp_series(m_, h_, cap).terms; }

CheckReport check_kp_b0(const KpContraction& kp, int cap) {
  const auto& M = *kp.module_ref();
  const auto& A = M.algebra();
  MultiOp b0(A.ring(), 1);
  if (!A.curvature_b().is_zero()) b0.set({}, A.curvature_b());
  auto inputs = M.inputs(static_cast<std::size_t>(cap));
  auto B0 = [&](const Vec<MElem>& v) {
    Vec<MElem> out(A.ring());
    for (const auto& [x, c] : v)
      for (const auto& [w, d] : sandwich(A.shifted(), b0, x.a)) out.add(MElem{x.m, w}, c * d, sign_of(M.degree(x.m)));
    return out;
  };
  const Hom& h = kp.h();
  return run_check("KP [B0,H]", "[B0, H] = 1", cap, inputs, [&](const MElem& x) -> std::optional<Witness> {
    Vec<MElem> one(A.ring(), x);
    auto got = B0(h.extend(x)) + h.extend(B0(one));
    if (got == one) return std::nullopt;
    return Witness{M.render(x), M.render(one), M.render(got)};
  });
}

CheckReport check_kp_contraction(const KpContraction& kp, int cap) {
  auto m = kp.module_ref();
  std::size_t table_cap = static_cast<std::size_t>(cap) + (m->algebra().is_curved() ? 1 : 0);
  Hom g = kp.g(table_cap);
  auto r = compare_homs("KP contraction", hom_differential(g), Hom::identity(m), cap);
  r.identity = "[B, G] = 1";
  return r;
}

Hom gamma_homotopy(const KpContraction& kp) {
  auto m = kp.module_ref();
  const auto& A = m->algebra();
  if (!A.is_dga()) throw UnsupportedRing("gamma_homotopy: the algebra has operations of arity >= 3");
  MultiOp mt = b_to_m(A.space(), A.b());
  for (Letter x = 0; x < A.rank(); ++x)
    if (mt.find({x})) throw StructuralError("gamma_homotopy: m1 is not zero");
  RingRef r = A.ring();
  const Augmentation& l = kp.augmentation();
  const ModuleStructure* mp = m.get();
  auto prod = [mt, r](const Vec<Letter>& x, const Vec<Letter>& y) { return apply_multilinear(mt, {x, y}); };
  // L(f, g) = ℓ(fg) e - ℓ(f) g - ℓ(g) f on basis letters.
  Letter unit = A.unit();
  auto L = [=](Letter f, Letter g) {
    Vec<Letter> vf(r, f), vg(r, g);
    Vec<Letter> out(r);
    out.add(unit, l(prod(vf, vg)));
    out.add_scaled(vg, -l.values[f]);
    out.add_scaled(vf, -l.values[g]);
    return out;
  };
  return Hom(m, m, -1, [=](const Key& k, const Word& a) {
    Vec<Key> out(r);
    if (a.size() % 2 == 0) return out;
    Vec<Letter> acc(r, unit);
    acc = acc.scaled(l.values[a[0]]);
    for (std::size_t i = 1; i + 1 < a.size() && !acc.is_zero(); i += 2) acc = prod(acc, L(a[i], a[i + 1]));
    if (acc.is_zero()) return out;
    // m·x for x in A is -(-1)^{|m|} b^M(m ⊙ σx).
    for (const auto& [x, c] : acc) out.add_scaled(mp->act(k, Word{x}), sign_of(mp->degree(k)) > 0 ? -c : c);
    return out.scaled(Elem::from_int(r, -sign_of(mp->degree(k))));
  });
}

CheckReport check_gamma(const KpContraction& kp, int cap) {
  auto r = compare_homs("gamma = G", gamma_homotopy(kp), kp.g(static_cast<std::size_t>(cap)), cap);
  r.identity = "gamma = g componentwise";
  return r;
}

// ---------------------------------------------------------------------------
// Maurer-Cartan

Vec<Letter> mc_evaluate(const AInfAlgebra& a, const Vec<Letter>& x) {
  MultiOp m = b_to_m(a.space(), a.b());
  Vec<Letter> out(a.ring());
  for (std::size_t k = 0; k <= a.arity_cap(); ++k) {
    std::vector<Vec<Letter>> args(k, x);
    auto v = apply_multilinear(m, args);
    out.add_signed(v, sign_of(static_cast<Degree>(k * (k - (k > 0 ? 1 : 0)) / 2)));
  }
  return out;
}

CheckReport check_mc_linearization(const AInfAlgebra& a) {
  RingRef r = a.ring();
  CheckReport rep;
  rep.name = "MC linearization";
  rep.identity = "d/de Mc(e x) at 0 = m1(x)";
  rep.cap = 1;
  if (r->kind() == RingKind::Polynomial || !(r->is_field() || r->kind() == RingKind::Integers)) {
    rep.verdict = Verdict::Unsupported;
    rep.detail = "dual numbers over " + r->describe() + " are not supported";
    return rep;
  }
  RingRef poly = Ring::polynomial(r, {"eps"});
  auto emb = RingMap::embedding(r, poly);
  auto ae = base_change(a, emb);
  MultiOp m = b_to_m(a.space(), a.b());
  std::vector<Letter> odd;
  for (Letter x = 0; x < a.rank(); ++x)
    if (a.grading().same(a.space().degree(x), 1)) odd.push_back(x);
  Elem eps = Elem::variable(poly, 0);
  return run_check(rep.name, rep.identity, 1, odd, [&](Letter x) -> std::optional<Witness> {
    Vec<Letter> arg(poly);
    arg.add(x, eps);
    Vec<Letter> got(r);
    for (const auto& [l, c] : mc_evaluate(*ae, arg))
      for (const auto& [mono, q] : c.terms())
        if (mono.size() == 1 && mono[0] == 1) got.add(l, Elem::from_mpq(r, q));
    const auto* m1 = m.find({x});
    Vec<Letter> expected = m1 ? *m1 : Vec<Letter>(r);
    if (got == expected) return std::nullopt;
    return Witness{a.space().name(x), render_letters(a.space(), expected, ""), render_letters(a.space(), got, "")};
  });
}

std::string to_string(McVerdict v) {
  switch (v) {
    case McVerdict::Vanishes:
      return "Vanishes";
    case McVerdict::DoesNotVanish:
      return "DoesNotVanish";
    case McVerdict::Undecided:
      return "Undecided";
  }
  return "?";
}

McResult mc_criterion(const AInfAlgebra& a) {
  if (a.is_curved()) throw PreconditionFailure("mc_criterion: the algebra is curved");
  RingRef r = a.ring();
  McResult out;
  if (r->kind() == RingKind::Polynomial) {
    out.detail = "linear algebra over " + r->describe() + " is not supported";
    return out;
  }
  MultiOp m = b_to_m(a.space(), a.b());
  Letter e = a.unit();
  std::vector<Letter> cols;
  for (Letter x = 0; x < a.rank(); ++x)
    if (a.grading().same(a.space().degree(x), a.space().degree(e) - 1)) cols.push_back(x);
  Matrix mat(a.rank(), std::vector<Elem>(cols.size(), Elem::zero(r)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (const auto* v = m.find({cols[j]}))
      for (const auto& [l, c] : *v) mat[l][j] = c;
  std::vector<Elem> rhs(a.rank(), Elem::zero(r));
  rhs[e] = Elem::one(r);
  if (cols.empty()) {
    out.verdict = McVerdict::DoesNotVanish;
    out.detail = "no generators of degree |e| - 1";
    return out;
  }
  auto sol = solve_linear(r, cols.size(), mat, rhs);
  if (auto* ns = std::get_if<NoSolution>(&sol)) {
    out.verdict = McVerdict::DoesNotVanish;
    out.detail = "e is not in the image of m1: " + ns->reason;
    return out;
  }
  const auto& x = std::get<std::vector<Elem>>(sol);
  Vec<Letter> pre(r);
  for (std::size_t j = 0; j < cols.size(); ++j) pre.add(cols[j], x[j]);
  out.verdict = McVerdict::Vanishes;
  out.preimage = pre;
  out.detail = "m1(" + render_letters(a.space(), pre, "") + ") = e";
  return out;
}

AlgebraRef mc_example(RingRef r, bool with_differential) {
  AssocAlgebra alg{r, Grading::cyclic(2), {{"e", 0}, {"a", 1}}, {}};
  DgaData d{alg, Vec<Letter>(r), {}};
  if (with_differential) d.diff[1] = Vec<Letter>(r, 0);
  return build_algebra(d, 3);
}

HomSolution identity_null_homotopy(AlgebraRef a, std::size_t cap) {
  ModuleRef m = regular_module(a);
  return solve_hom(HomProblem{m, m, -1, cap, true}, Hom::identity(m));
}

// ---------------------------------------------------------------------------
// Matrix factorizations

AlgebraRef potential_algebra(RingRef r, const Elem& w) {
  AssocAlgebra alg{r, Grading::cyclic(2), {{"e", 0}}, {}};
  Vec<Letter> c(r);
  c.add(0, w);
  return build_algebra(DgaData{alg, c, {}}, 3);
}

CheckReport mf_direct_check(const MatrixFactorization& f) {
  RingRef r = f.ring;
  std::size_t n = f.rank();
  if (f.d.size() != n) throw StructuralError("matrix factorization: d has the wrong number of rows");
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t i = 0; i < n; ++i) {
    if (f.d[i].size() != n) throw StructuralError("matrix factorization: d has a row of the wrong length");
    for (std::size_t j = 0; j < n; ++j) entries.emplace_back(i, j);
  }
  auto odd = run_check("MF odd", "d maps even to odd and odd to even", 0, entries,
                       [&](const std::pair<std::size_t, std::size_t>& e) -> std::optional<Witness> {
                         const auto& v = f.d[e.first][e.second];
                         if (f.is_odd_entry(e.first, e.second) || v.is_zero()) return std::nullopt;
                         return Witness{"d[" + std::to_string(e.first) + "][" + std::to_string(e.second) + "]",
                                        "0", v.str()};
                       });
  auto square = run_check("MF square", "d^2 = W 1", 0, entries,
                          [&](const std::pair<std::size_t, std::size_t>& e) -> std::optional<Witness> {
                            Elem got = Elem::zero(r);
                            for (std::size_t k = 0; k < n; ++k) got += f.d[e.first][k] * f.d[k][e.second];
                            Elem expected = e.first == e.second ? f.w : Elem::zero(r);
                            if (got == expected) return std::nullopt;
                            return Witness{"(d^2)[" + std::to_string(e.first) + "][" + std::to_string(e.second) + "]",
                                           expected.str(), got.str()};
                          });
  return combine("MF direct", "d odd, d^2 = W 1", 0, {odd, square});
}

std::shared_ptr<TableModule> mf_module(const MatrixFactorization& f, AlgebraRef a) {
  RingRef r = f.ring;
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < f.rank(); ++i) gens.push_back({"v" + std::to_string(i), i < f.even ? 0 : 1});
  GradedSpace dg(r, Grading::cyclic(2), gens);
  DgModuleTable t{a, dg.shift(), {}, {}};
  for (std::size_t j = 0; j < f.rank(); ++j) {
    Vec<Letter> v(r);
    for (std::size_t i = 0; i < f.rank(); ++i) v.add(static_cast<Letter>(i), f.d[i][j]);
    if (j >= f.even) v = -v;
    if (!v.is_zero()) t.d[static_cast<Letter>(j)] = v;
  }
  return ue_to_module(t);
}

CheckReport mf_check(const MatrixFactorization& f) {
  auto direct = mf_direct_check(f);
  CheckReport module;
  try {
    module = check_module(*mf_module(f, potential_algebra(f.ring, f.w)), 3);
  } catch (const StructuralError& e) {
    module.name = "MF module";
    module.verdict = Verdict::Fail;
    module.witness = Witness{"module construction", "homogeneous module", e.what()};
  }
  module.name = "MF module: " + module.name;
  CheckReport agree;
  agree.name = "MF code paths agree";
  agree.identity = "direct verdict = module verdict";
  if (direct.passed() != module.passed()) {
    agree.verdict = Verdict::Fail;
    agree.witness = Witness{"verdicts", to_string(direct.verdict), to_string(module.verdict)};
  }
  return combine("MF", "d^2 = W 1 and the induced module is valid", 3, {direct, module, agree});
}

}  // namespace ainf
