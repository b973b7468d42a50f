#include "ainf/adjoint.hpp"

#include <algorithm>

namespace ainf {

std::size_t uweight(const UWord& u) {
  std::size_t w = 0;
  for (const auto& x : u) w += x.size();
  return w;
}

Key encode_uword(const UWord& u) {
  Key k;
  k.push_back(static_cast<std::uint32_t>(u.size()));
  for (const auto& x : u) {
    k.push_back(static_cast<std::uint32_t>(x.size()));
    k.insert(k.end(), x.begin(), x.end());
  }
  return k;
}

UWord decode_uword(const Key& k) {
  UWord u;
  std::size_t i = 0;
  std::size_t n = k.at(i++);
  u.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t len = k.at(i++);
    u.emplace_back(k.begin() + static_cast<std::ptrdiff_t>(i),
                   k.begin() + static_cast<std::ptrdiff_t>(i + len));
    i += len;
  }
  return u;
}

UeAlgebra::UeAlgebra(AlgebraRef a, Coproduct variant) : a_(std::move(a)), variant_(variant) {}

Degree UeAlgebra::degree(const UWord& u) const {
  Degree d = 0;
  for (const auto& x : u) d += degree(x);
  return d;
}

UVec UeAlgebra::letter_differential(const ULetter& x) const {
  RingRef r = ring();
  UVec out(r);
  // D₁(ω[w]) = -ω[B(w)]
  for (const auto& [w, c] : a_->coderivation(x)) out.add(UWord{w}, -c);
  // D̄₂(ω[w]) = -Σ (-1)^{|w₁|} ω[w₁] ⊠ ω[w₂]
  bool full = variant_ == Coproduct::FullCoproduct;
  std::size_t lo = full ? 0 : 1, hi = full ? x.size() : x.size() - 1;
  Degree prefix = 0;
  for (std::size_t i = 0; i < lo; ++i) prefix += a_->sdeg(x[i]);
  for (std::size_t i = lo; i <= hi; ++i) {
    ULetter l(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i));
    ULetter rgt(x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
    UWord u;
    if (!l.empty()) u.push_back(std::move(l));
    if (!rgt.empty()) u.push_back(std::move(rgt));
    out.add(std::move(u), Elem::one(r), -sign_of(prefix));
    if (i < x.size()) prefix += a_->sdeg(x[i]);
  }
  return out;
}

UVec UeAlgebra::differential(const UWord& u) const {
  UVec out(ring());
  Degree prefix = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (const auto& [v, c] : letter_differential(u[i])) {
      UWord w;
      w.reserve(u.size() + v.size());
      w.insert(w.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
      w.insert(w.end(), v.begin(), v.end());
      w.insert(w.end(), u.begin() + static_cast<std::ptrdiff_t>(i + 1), u.end());
      out.add(std::move(w), c, sign_of(prefix));
    }
    prefix += degree(u[i]);
  }
  return out;
}

UVec UeAlgebra::differential(const UVec& v) const {
  UVec out(ring());
  for (const auto& [u, c] : v) out.add_scaled(differential(u), c);
  return out;
}

UVec UeAlgebra::curvature() const {
  UVec out(ring());
  for (const auto& [l, c] : a_->curvature_b()) out.add(UWord{ULetter{l}}, -c);
  return out;
}

bool UeAlgebra::is_normal(const UWord& u) const {
  for (const auto& x : u)
    if (std::find(x.begin(), x.end(), a_->unit()) != x.end()) return false;
  return true;
}

UVec UeAlgebra::normal_form(const UWord& u) const {
  UVec out(ring());
  UWord w;
  w.reserve(u.size());
  Letter eta = a_->unit();
  for (const auto& x : u) {
    if (x.size() == 1 && x[0] == eta) continue;
    if (std::find(x.begin(), x.end(), eta) != x.end()) return out;
    w.push_back(x);
  }
  out.add(std::move(w), Elem::one(ring()));
  return out;
}

UVec UeAlgebra::normal_form(const UVec& v) const {
  UVec out(ring());
  for (const auto& [u, c] : v) out.add_scaled(normal_form(u), c);
  return out;
}

UVec UeAlgebra::mul(const UVec& x, const UVec& y) const {
  UVec out(ring());
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) {
      UWord w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(std::move(w), a * b);
    }
  return out;
}

std::vector<UWord> UeAlgebra::words_over(std::size_t, std::size_t max_weight, bool skip_unit) const {
  // Letters of each weight, then ⊠-words by total weight.
  std::vector<std::vector<ULetter>> letters(max_weight + 1);
  for (auto& w : all_words(a_->rank(), max_weight)) {
    if (w.empty()) continue;
    if (skip_unit && std::find(w.begin(), w.end(), a_->unit()) != w.end()) continue;
    letters[w.size()].push_back(std::move(w));
  }
  std::vector<std::vector<UWord>> by_weight(max_weight + 1);
  by_weight[0].push_back({});
  for (std::size_t n = 1; n <= max_weight; ++n)
    for (std::size_t first = 1; first <= n; ++first)
      for (const auto& x : letters[first])
        for (const auto& rest : by_weight[n - first]) {
          UWord u{x};
          u.insert(u.end(), rest.begin(), rest.end());
          by_weight[n].push_back(std::move(u));
        }
  std::vector<UWord> out;
  for (auto& v : by_weight) {
    std::sort(v.begin(), v.end());
    for (auto& u : v) out.push_back(std::move(u));
  }
  return out;
}

std::vector<UWord> UeAlgebra::free_basis(std::size_t w) const { return words_over(0, w, false); }
std::vector<UWord> UeAlgebra::basis(std::size_t w) const { return words_over(0, w, true); }

std::vector<UVec> UeAlgebra::ideal_generators(std::size_t w) const {
  RingRef r = ring();
  std::vector<UVec> out;
  Letter eta = a_->unit();
  UVec g(r, UWord{});
  g.add(UWord{ULetter{eta}}, Elem::one(r), -1);
  out.push_back(std::move(g));
  for (auto& x : all_words(a_->rank(), w))
    if (x.size() > 1 && std::find(x.begin(), x.end(), eta) != x.end())
      out.emplace_back(r, UWord{std::move(x)});
  return out;
}

std::string UeAlgebra::render(const ULetter& x) const { return "w[" + a_->render(x) + "]"; }

std::string UeAlgebra::render(const UWord& u) const {
  if (u.empty()) return "1";
  std::string s;
  for (const auto& x : u) s += (s.empty() ? "" : " [x] ") + render(x);
  return s;
}

std::string UeAlgebra::render(const UVec& v) const {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [u, c] : v) s += (s.empty() ? "" : " + ") + ("(" + c.str() + ")") + render(u);
  return s;
}

// ---------------------------------------------------------------------------

namespace {

UVec commutator_with(const UeAlgebra& U, const UVec& c, const UWord& u) {
  UVec uv(U.ring(), u);
  return U.mul(c, uv) - U.mul(uv, c);
}

}  // namespace

CheckReport check_u_curvature(const UeAlgebra& U, int cap) {
  auto free_words = U.free_basis(static_cast<std::size_t>(cap));
  UVec c = U.curvature();
  auto free_part = run_check("U(A) curvature", "d^2 u = c u - u c", cap, free_words,
                             [&](const UWord& u) -> std::optional<Witness> {
                               UVec got = U.differential(U.differential(u));
                               UVec expected = commutator_with(U, c, u);
                               if (got == expected) return std::nullopt;
                               return Witness{U.render(u), U.render(expected), U.render(got)};
                             });
  auto words = U.basis(static_cast<std::size_t>(cap));
  UVec ce = U.c();
  auto quotient = run_check("U_e(A) curvature", "d^2 u = c u - u c modulo I", cap, words,
                            [&](const UWord& u) -> std::optional<Witness> {
                              UVec got = U.d(U.d(u));
                              UVec expected = U.normal_form(commutator_with(U, ce, u));
                              if (got == expected) return std::nullopt;
                              return Witness{U.render(u), U.render(expected), U.render(got)};
                            });
  return combine("check-u-curvature", "d^2 = [c,-] on U(A) and U_e(A)", cap, {free_part, quotient});
}

CheckReport check_ideal_stability(const UeAlgebra& U, int cap) {
  auto gens = U.ideal_generators(static_cast<std::size_t>(cap));
  return run_check("check-ideal", "nf(d g) = 0 for ideal generators g", cap, gens,
                   [&](const UVec& g) -> std::optional<Witness> {
                     UVec got = U.normal_form(U.differential(g));
                     if (got.is_zero()) return std::nullopt;
                     return Witness{U.render(g), "0", U.render(got)};
                   });
}

CheckReport check_u_derivation(const UeAlgebra& U, int cap) {
  auto words = U.free_basis(static_cast<std::size_t>(cap));
  std::vector<std::pair<UWord, UWord>> pairs;
  for (const auto& x : words)
    for (const auto& y : words)
      if (uweight(x) + uweight(y) <= static_cast<std::size_t>(cap)) pairs.emplace_back(x, y);
  RingRef r = U.ring();
  return run_check("u-derivation", "d(xy) = dx y + (-1)^x x dy", cap, pairs,
                   [&](const std::pair<UWord, UWord>& p) -> std::optional<Witness> {
                     UVec x(r, p.first), y(r, p.second);
                     UVec got = U.differential(U.mul(x, y));
                     UVec expected = U.mul(U.differential(x), y);
                     expected.add_signed(U.mul(x, U.differential(y)), sign_of(U.degree(p.first)));
                     if (got == expected) return std::nullopt;
                     return Witness{U.render(p.first) + " ; " + U.render(p.second), U.render(expected),
                                    U.render(got)};
                   });
}

CheckReport check_normal_form_soundness(const UeAlgebra& U, int cap) {
  RingRef r = U.ring();
  auto gens = U.ideal_generators(static_cast<std::size_t>(cap));
  auto words = U.free_basis(static_cast<std::size_t>(cap));
  struct Case {
    std::size_t g;
    UWord x, y;
  };
  std::vector<Case> cases;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::size_t gw = 0;
    for (const auto& [u, c] : gens[i]) gw = std::max(gw, uweight(u));
    for (const auto& x : words)
      for (const auto& y : words)
        if (gw + uweight(x) + uweight(y) <= static_cast<std::size_t>(cap)) cases.push_back({i, x, y});
  }
  return run_check("normal-form soundness", "nf(x g y) = 0", cap, cases,
                   [&](const Case& k) -> std::optional<Witness> {
                     UVec p = U.mul(U.mul(UVec(r, k.x), gens[k.g]), UVec(r, k.y));
                     UVec got = U.normal_form(p);
                     if (got.is_zero()) return std::nullopt;
                     return Witness{U.render(p), "0", U.render(got)};
                   });
}

// ---------------------------------------------------------------------------

DgModuleTable module_to_ue(const TableModule& M) {
  const auto& A = M.algebra();
  DgModuleTable t{M.algebra_ref(), M.space(), {}, {}};
  for (const auto& [in, out] : M.structure().table()) {
    Letter m = in[0];
    Word w(in.begin() + 1, in.end());
    if (w.empty()) {
      t.d[m] = -out;
      continue;
    }
    if (std::find(w.begin(), w.end(), A.unit()) != w.end()) continue;
    t.act[{m, w}] = out.scaled(Elem::from_int(A.ring(), -sign_of(M.space().degree(m))));
  }
  return t;
}

std::shared_ptr<TableModule> ue_to_module(const DgModuleTable& t) {
  const auto& A = *t.algebra;
  MultiOp s(A.ring(), 1);
  for (const auto& [m, v] : t.d)
    if (!v.is_zero()) s.set({m}, -v);
  for (const auto& [key, v] : t.act) {
    if (v.is_zero()) continue;
    Word in{key.first};
    in.insert(in.end(), key.second.begin(), key.second.end());
    s.set(std::move(in), v.scaled(Elem::from_int(A.ring(), -sign_of(t.space.degree(key.first)))));
  }
  impose_module_unit_laws(A, t.space, s);
  return std::make_shared<TableModule>(t.algebra, t.space, std::move(s));
}

Vec<Key> ue_d(const ModuleStructure& M, const Key& k) { return -M.act(k, {}); }

Vec<Key> ue_d(const ModuleStructure& M, const Vec<Key>& v) {
  Vec<Key> out(M.ring());
  for (const auto& [k, c] : v) out.add_scaled(ue_d(M, k), c);
  return out;
}

Vec<Key> ue_act(const ModuleStructure& M, const Vec<Key>& v, const UWord& u) {
  Vec<Key> cur = v;
  for (const auto& x : u) {
    Vec<Key> next(M.ring());
    for (const auto& [k, c] : cur)
      next.add_scaled(M.act(k, x), sign_of(M.degree(k)) > 0 ? -c : c);
    cur = std::move(next);
    if (cur.is_zero()) break;
  }
  return cur;
}

Vec<Key> ue_act(const ModuleStructure& M, const Key& k, const UWord& u) {
  return ue_act(M, Vec<Key>(M.ring(), k), u);
}

Vec<Key> ue_act(const ModuleStructure& M, const Vec<Key>& v, const UVec& u) {
  Vec<Key> out(M.ring());
  for (const auto& [w, c] : u) out.add_scaled(ue_act(M, v, w), c);
  return out;
}

CheckReport check_dg_module(const ModuleStructure& M, const UeAlgebra& U, int cap) {
  RingRef r = M.ring();
  auto keys = M.basis(static_cast<std::size_t>(cap));
  std::vector<Key> base;
  for (const auto& k : keys)
    if (M.weight(k) <= static_cast<std::size_t>(cap)) base.push_back(k);

  UVec c = U.c();
  auto curv = run_check("dg-module curvature", "d^2 m = -m c", cap, base,
                        [&](const Key& k) -> std::optional<Witness> {
                          auto got = ue_d(M, ue_d(M, k));
                          auto expected = -ue_act(M, Vec<Key>(r, k), c);
                          if (got == expected) return std::nullopt;
                          return Witness{M.render(k), M.render(expected), M.render(got)};
                        });

  std::vector<std::pair<Key, UWord>> pairs;
  for (const auto& u : U.basis(static_cast<std::size_t>(cap)))
    for (const auto& k : base)
      if (M.weight(k) + uweight(u) <= static_cast<std::size_t>(cap)) pairs.emplace_back(k, u);
  // The dg-module lives on M[-1], so the Koszul parity of m is |m| + 1.
  auto leibniz = run_check("dg-module Leibniz", "d(m u) = dm u - (-1)^|m| m du", cap, pairs,
                           [&](const std::pair<Key, UWord>& p) -> std::optional<Witness> {
                             auto got = ue_d(M, ue_act(M, p.first, p.second));
                             auto expected = ue_act(M, ue_d(M, p.first), p.second);
                             expected.add_signed(ue_act(M, Vec<Key>(r, p.first), U.d(p.second)),
                                                 -sign_of(M.degree(p.first)));
                             if (got == expected) return std::nullopt;
                             return Witness{M.render(p.first) + " . " + U.render(p.second),
                                            M.render(expected), M.render(got)};
                           });

  // The action of U(A) must kill I: m·ω[η] = m and m·ω[..η..] = 0.
  std::vector<std::pair<Key, std::size_t>> descent_cases;
  auto gens = U.ideal_generators(static_cast<std::size_t>(cap));
  for (const auto& k : base)
    for (std::size_t i = 0; i < gens.size(); ++i) descent_cases.emplace_back(k, i);
  auto descent = run_check("dg-module descent", "m g = 0 for ideal generators g", cap, descent_cases,
                           [&](const std::pair<Key, std::size_t>& p) -> std::optional<Witness> {
                             auto got = ue_act(M, Vec<Key>(r, p.first), gens[p.second]);
                             if (got.is_zero()) return std::nullopt;
                             return Witness{M.render(p.first) + " . " + U.render(gens[p.second]), "0",
                                            M.render(got)};
                           });
  return combine("check-dg-module", "dg-module over U_e(A)", cap, {curv, leibniz, descent});
}

CheckReport check_strict_morphism_identification(const Hom& phi, const UeAlgebra& U, int cap) {
  RingRef r = phi.source().ring();
  const auto& M = phi.source();
  const auto& N = phi.target();
  auto closed = check_closed("strict morphism closed", phi, cap);
  std::vector<std::pair<Key, UWord>> pairs;
  for (const auto& k : M.basis(static_cast<std::size_t>(cap)))
    for (const auto& u : U.basis(static_cast<std::size_t>(cap)))
      if (M.weight(k) + uweight(u) <= static_cast<std::size_t>(cap)) pairs.emplace_back(k, u);
  auto apply = [&](const Vec<Key>& v) {
    Vec<Key> out(r);
    for (const auto& [k, c] : v) out.add_scaled(phi(k, {}), c);
    return out;
  };
  auto chain = run_check("U_e-linear chain map", "phi d = d phi, phi(m u) = phi(m) u", cap, pairs,
                         [&](const std::pair<Key, UWord>& p) -> std::optional<Witness> {
                           Vec<Key> m(r, p.first);
                           auto lhs = apply(ue_act(M, m, p.second));
                           auto rhs = ue_act(N, apply(m), p.second);
                           if (lhs != rhs)
                             return Witness{M.render(p.first) + " . " + U.render(p.second), N.render(rhs),
                                            N.render(lhs)};
                           if (!p.second.empty()) return std::nullopt;
                           auto dl = ue_d(N, apply(m));
                           auto dr = apply(ue_d(M, m));
                           if (dl == dr) return std::nullopt;
                           return Witness{"d " + M.render(p.first), N.render(dr), N.render(dl)};
                         });
  std::vector<CheckReport> parts{closed, chain};
  if (closed.passed() != chain.passed()) {
    CheckReport mismatch;
    mismatch.name = "identification agreement";
    mismatch.identity = "closed strict morphism iff U_e-linear chain map";
    mismatch.cap = cap;
    mismatch.verdict = Verdict::Fail;
    parts.push_back(mismatch);
  }
  return combine("strict-morphism-identification", "strict morphisms as U_e(A)-linear chain maps", cap,
                 parts);
}

// ---------------------------------------------------------------------------

Vec<Letter> transport_value(const AInfMorphism& f, const UWord& u) {
  const auto& T = f.target();
  CurvedDgaView view(T);
  Vec<Letter> acc(T.ring(), T.unit());
  for (const auto& x : u) {
    const Vec<Letter>* v = f.f().find(x);
    if (!v) return Vec<Letter>(T.ring());
    acc = view.mul(acc, *v);
    if (acc.is_zero()) break;
  }
  return acc;
}

Vec<Letter> transport_value(const AInfMorphism& f, const UVec& u) {
  Vec<Letter> out(f.target().ring());
  for (const auto& [w, c] : u) out.add_scaled(transport_value(f, w), c);
  return out;
}

CheckReport check_universality(const AInfMorphism& f, const UeAlgebra& U, int cap) {
  const auto& T = f.target();
  if (!T.is_dga()) {
    CheckReport r;
    r.name = "universality";
    r.identity = "target must be a curved dg-algebra";
    r.cap = cap;
    r.verdict = Verdict::Unsupported;
    return r;
  }
  CurvedDgaView view(T);
  RingRef r = T.ring();
  auto render = [&](const Vec<Letter>& v) { return render_letters(T.space(), v, ""); };
  std::vector<CheckReport> parts;

  {
    CheckReport unit;
    unit.name = "transport unit and curvature";
    unit.identity = "f(1) = e', f(c) = c'";
    unit.cap = cap;
    unit.checked = 2;
    Vec<Letter> e(r, T.unit());
    auto fu = transport_value(f, UWord{});
    auto fc = transport_value(f, U.c());
    auto c2 = view.curvature();
    if (fu != e) {
      unit.verdict = Verdict::Fail;
      unit.witness = Witness{"1", render(e), render(fu)};
    } else if (fc != c2) {
      unit.verdict = Verdict::Fail;
      unit.witness = Witness{"c", render(c2), render(fc)};
    }
    parts.push_back(unit);
  }

  auto words = U.basis(static_cast<std::size_t>(cap));
  parts.push_back(run_check("transport chain map", "d' f(u) = f(d u)", cap, words,
                            [&](const UWord& u) -> std::optional<Witness> {
                              auto lhs = view.d(transport_value(f, u));
                              auto rhs = transport_value(f, U.d(u));
                              if (lhs == rhs) return std::nullopt;
                              return Witness{U.render(u), render(rhs), render(lhs)};
                            }));

  std::vector<std::pair<UWord, UWord>> pairs;
  for (const auto& x : words)
    for (const auto& y : words)
      if (uweight(x) + uweight(y) <= static_cast<std::size_t>(cap)) pairs.emplace_back(x, y);
  parts.push_back(run_check("transport multiplicative", "f(xy) = f(x) f(y)", cap, pairs,
                            [&](const std::pair<UWord, UWord>& p) -> std::optional<Witness> {
                              UWord xy = p.first;
                              xy.insert(xy.end(), p.second.begin(), p.second.end());
                              auto lhs = transport_value(f, xy);
                              auto rhs = view.mul(transport_value(f, p.first), transport_value(f, p.second));
                              if (lhs == rhs) return std::nullopt;
                              return Witness{U.render(p.first) + " ; " + U.render(p.second), render(rhs),
                                             render(lhs)};
                            }));

  auto gens = U.ideal_generators(static_cast<std::size_t>(cap));
  parts.push_back(run_check("transport descends", "f(g) = 0 on ideal generators", cap, gens,
                            [&](const UVec& g) -> std::optional<Witness> {
                              auto v = transport_value(f, g);
                              if (v.is_zero()) return std::nullopt;
                              return Witness{U.render(g), "0", render(v)};
                            }));

  // f = (σ∘𝔣∘ω) ∘ i on words, and the letter values of 𝔣 are recovered from f.
  auto all = all_words(f.source().rank(), static_cast<std::size_t>(cap));
  parts.push_back(run_check("universal factorization", "f_l(w) = sigma f(omega[w])", cap, all,
                            [&](const Word& w) -> std::optional<Witness> {
                              if (w.empty()) return std::nullopt;
                              const Vec<Letter>* fv = f.f().find(w);
                              Vec<Letter> expected = fv ? *fv : Vec<Letter>(r);
                              Vec<Letter> got = transport_value(f, U.normal_form(UWord{w}));
                              if (w.size() > 1 && !U.is_normal(UWord{w})) {
                                // f_l kills unit letters for l > 1; so does 𝔣 modulo I.
                                if (expected.is_zero() && got.is_zero()) return std::nullopt;
                              } else if (expected == got) {
                                return std::nullopt;
                              }
                              return Witness{f.source().render(w), render(expected), render(got)};
                            }));
  return combine("universality", "U_e(A) is left adjoint to the inclusion", cap, parts);
}

Vec<UWord> ue_b(const UeAlgebra& U, std::span<const UWord> in) {
  RingRef r = U.ring();
  Vec<UWord> out(r);
  switch (in.size()) {
    case 0:
      for (const auto& [u, c] : U.c()) out.add(u, -c);
      break;
    case 1:
      for (const auto& [u, c] : U.d(in[0])) out.add(u, -c);
      break;
    case 2: {
      UWord xy = in[0];
      xy.insert(xy.end(), in[1].begin(), in[1].end());
      out.add(std::move(xy), Elem::one(r), -sign_of(U.degree(in[0]) - 1));
      break;
    }
    default:
      break;
  }
  return out;
}

CheckReport check_inclusion_morphism(const UeAlgebra& U, int cap) {
  RingRef r = U.ring();
  const auto& A = U.base();
  using UWordSeq = std::vector<UWord>;
  // I(w) = Σ over compositions of w of the sequence of normal-formed letters.
  std::function<void(const Word&, std::size_t, UWordSeq&, const Elem&, Vec<UWordSeq>&)> rec =
      [&](const Word& w, std::size_t pos, UWordSeq& cur, const Elem& c, Vec<UWordSeq>& out) {
        if (pos == w.size()) {
          out.add(cur, c);
          return;
        }
        for (std::size_t end = pos + 1; end <= w.size(); ++end) {
          ULetter x(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(end));
          for (const auto& [u, k] : U.normal_form(UWord{x})) {
            cur.push_back(u);
            rec(w, end, cur, c * k, out);
            cur.pop_back();
          }
        }
      };
  auto I = [&](const Vec<Word>& v) {
    Vec<UWordSeq> out(r);
    for (const auto& [w, c] : v) {
      UWordSeq cur;
      rec(w, 0, cur, c, out);
    }
    return out;
  };
  auto words = all_words(A.rank(), static_cast<std::size_t>(cap));
  auto deg = [&](const UWord& u) { return U.degree(u) - 1; };
  auto op = [&](std::span<const UWord> s) { return ue_b(U, s); };
  return run_check("inclusion morphism", "B^{U_e} I = I B", cap, words,
                   [&](const Word& w) -> std::optional<Witness> {
                     auto iw = I(Vec<Word>(r, w));
                     Vec<UWordSeq> lhs(r);
                     for (const auto& [seq, c] : iw)
                       lhs.add_scaled(sandwich_generic<UWord>(r, seq, 2, 1, op, deg), c);
                     auto rhs = I(A.coderivation(w));
                     if (lhs == rhs) return std::nullopt;
                     auto show = [&](const Vec<UWordSeq>& v) {
                       if (v.is_zero()) return std::string("0");
                       std::string s;
                       for (const auto& [seq, c] : v) {
                         s += (s.empty() ? "" : " + ") + ("(" + c.str() + ")");
                         for (std::size_t i = 0; i < seq.size(); ++i)
                           s += (i ? " (x) " : "") + ("s{" + U.render(seq[i]) + "}");
                       }
                       return s;
                     };
                     return Witness{A.render(w), show(rhs), show(lhs)};
                   });
}

}  // namespace ainf
