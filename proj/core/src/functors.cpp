#include "ainf/functors.hpp"

#include <algorithm>

#include "ainf/fixtures.hpp"

namespace ainf {

namespace {

UWord concat(UWord a, const UWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

Vec<Key> encode_uvec(RingRef r, const UVec& v) {
  Vec<Key> out(r);
  for (const auto& [u, c] : v) out.add(encode_uword(u), c);
  return out;
}

UVec decode_kvec(RingRef r, const Vec<Key>& v) {
  UVec out(r);
  for (const auto& [k, c] : v) out.add(decode_uword(k), c);
  return out;
}

// ---------------------------------------------------------------------------

UeBimodule::UeBimodule(UeRef u, Variant variant) : u_(std::move(u)), variant_(variant) {}

Vec<Key> UeBimodule::act(std::span<const Letter> l, const Key& v, std::span<const Letter> r) const {
  RingRef ring = u_->ring();
  if (!l.empty() && !r.empty()) return Vec<Key>(ring);
  UWord u = decode_uword(v);
  if (l.empty() && r.empty()) return encode_uvec(ring, u_->d(u));
  if (!l.empty()) {
    UWord w{Word(l.begin(), l.end())};
    auto out = encode_uvec(ring, u_->normal_form(concat(w, u)));
    return variant_ == Variant::FlippedLeft ? -out : out;
  }
  UWord w = u;
  w.push_back(Word(r.begin(), r.end()));
  auto out = encode_uvec(ring, u_->normal_form(w));
  return sign_of(u_->degree(u)) > 0 ? -out : out;
}

std::vector<Key> UeBimodule::basis(std::size_t w) const {
  std::vector<Key> out;
  for (const auto& u : u_->basis(w)) out.push_back(encode_uword(u));
  return out;
}

// ---------------------------------------------------------------------------

QModule::QModule(ModuleRef m, std::shared_ptr<const UeBimodule> v)
    : InfinityTensor(std::move(m), v, true), ue_bimodule_(std::move(v)) {}

Vec<Key> QModule::multiply(const Key& q, const UWord& u) const {
  auto p = decode(q);
  Vec<Key> out(ring());
  for (const auto& [w, c] : ue().normal_form(concat(decode_uword(p.v), u))) out.add(key(p.m, p.left, w), c);
  return out;
}

QRef q_module(ModuleRef m, UeBimodule::Variant variant) {
  auto u = std::make_shared<const UeAlgebra>(m->algebra_ref());
  return std::make_shared<const QModule>(std::move(m), std::make_shared<const UeBimodule>(u, variant));
}

Hom lambda_map(ModuleRef m, QRef q) {
  RingRef r = m->ring();
  const QModule* qp = q.get();
  return Hom(std::move(m), q, 0, [r, qp](const Key& k, const Word& a) {
    return qp->keeps(a) ? Vec<Key>(r, QModule::key(k, a, {})) : Vec<Key>(r);
  });
}

Hom epsilon_map(QRef q) {
  RingRef r = q->ring();
  const ModuleStructure* m = &q->module();
  return Hom(q, q->module_ref(), 0, [r, m](const Key& k, const Word& a) {
    if (!a.empty()) return Vec<Key>(r);
    auto p = InfinityTensor::decode(k);
    if (!p.left.empty()) return Vec<Key>(r);
    return ue_act(*m, p.m, decode_uword(p.v));
  });
}

Vec<MElem> q_homotopy(const QModule& q, const MElem& x) {
  RingRef r = q.ring();
  Vec<MElem> out(r);
  auto p = InfinityTensor::decode(x.m);
  if (!p.left.empty()) return out;
  const auto& M = q.module();
  const auto& U = q.ue();
  UWord u = decode_uword(p.v);
  Degree prefix = M.degree(p.m);
  for (std::size_t i = 0; i < u.size(); ++i) {
    UWord head(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
    UWord tail(u.begin() + static_cast<std::ptrdiff_t>(i + 1), u.end());
    for (const auto& [mk, c] : ue_act(M, p.m, head))
      out.add(MElem{QModule::key(mk, u[i], tail), x.a}, c, sign_of(prefix));
    prefix += U.degree(u[i]);
  }
  return out;
}

Vec<MElem> q_homotopy(const QModule& q, const Vec<MElem>& v) {
  Vec<MElem> out(q.ring());
  for (const auto& [x, c] : v) out.add_scaled(q_homotopy(q, x), c);
  return out;
}

CheckReport check_q_homotopy(const QModule& q, const Hom& lambda, const Hom& epsilon, int cap) {
  auto inputs = q.inputs(static_cast<std::size_t>(cap));
  return run_check("Q homotopy", "BH + HB = 1 - Lambda E", cap, inputs,
                   [&](const MElem& x) -> std::optional<Witness> {
                     auto got = q.coderivation(q_homotopy(q, x)) + q_homotopy(q, q.coderivation(x));
                     Vec<MElem> expected(q.ring(), x);
                     expected -= lambda.extend(epsilon.extend(x));
                     if (got == expected) return std::nullopt;
                     return Witness{q.render(x), q.render(expected), q.render(got)};
                   });
}

CheckReport check_q_equivalence(QRef q, int cap) {
  Hom lambda = lambda_map(q->module_ref(), q);
  Hom epsilon = epsilon_map(q);
  auto triangle = compare_homs("E o Lambda = 1", compose_hom(epsilon, lambda),
                               Hom::identity(q->module_ref()), cap);
  return combine("Q equivalence", "Lambda, E closed; E Lambda = 1; BH + HB = 1 - Lambda E", cap,
                 {check_closed("Lambda closed", lambda, cap), check_closed("E closed", epsilon, cap),
                  triangle, check_q_homotopy(*q, lambda, epsilon, cap)});
}

CheckReport check_q_module(const QModule& q, int cap) {
  std::vector<std::pair<Key, UWord>> pairs;
  for (const auto& u : q.ue().basis(static_cast<std::size_t>(cap)))
    for (const auto& k : q.basis(static_cast<std::size_t>(cap)))
      if (q.weight(k) + uweight(u) <= static_cast<std::size_t>(cap)) pairs.emplace_back(k, u);
  auto agree = run_check("Q action agreement", "m (.) a (.) u . u' = m (.) a (.) uu'", cap, pairs,
                         [&](const std::pair<Key, UWord>& p) -> std::optional<Witness> {
                           auto got = ue_act(q, p.first, p.second);
                           auto expected = q.multiply(p.first, p.second);
                           if (got == expected) return std::nullopt;
                           return Witness{q.render(p.first) + " . " + q.ue().render(p.second),
                                          q.render(expected), q.render(got)};
                         });
  return combine("Q module", "A-infinity module, U_e dg-module, agreeing actions", cap,
                 {check_module(q, cap), check_dg_module(q, q.ue(), cap), agree});
}

// ---------------------------------------------------------------------------

Hom adjunction_forward(const Hom& phi, QRef q) {
  RingRef r = q->ring();
  const ModuleStructure* n = &phi.target();
  return Hom(q, phi.target_ref(), phi.degree(), [phi, r, n](const Key& k, const Word& a) {
    if (!a.empty()) return Vec<Key>(r);
    auto p = InfinityTensor::decode(k);
    return ue_act(*n, phi(p.m, p.left), decode_uword(p.v));
  });
}

Hom adjunction_backward(const Hom& psi, QRef q) {
  return compose_hom(psi, lambda_map(q->module_ref(), q));
}

CheckReport check_adjunction(const Hom& phi, QRef q, int cap) {
  Hom fwd = adjunction_forward(phi, q);
  auto back = compare_homs("adjunction roundtrip on Mod(A)", adjunction_backward(fwd, q), phi, cap);
  auto front = compare_homs("adjunction roundtrip on Q", adjunction_forward(adjunction_backward(fwd, q), q),
                            fwd, cap);
  auto diff = compare_homs("adjunction differential", hom_differential(fwd),
                           adjunction_forward(hom_differential(phi), q), cap);
  return combine("adjunction", "bijection of hom complexes compatible with differentials", cap,
                 {back, front, diff});
}

Hom random_hom(Rng& rng, ModuleRef m, ModuleRef n, Degree degree, std::size_t cap) {
  RingRef r = m->ring();
  const auto& g = m->algebra().grading();
  auto targets = n->basis(cap);
  std::map<MElem, Vec<Key>> table;
  Letter unit = m->algebra().unit();
  for (const auto& x : m->inputs(cap)) {
    if (std::find(x.a.begin(), x.a.end(), unit) != x.a.end()) continue;
    Degree want = m->degree(x) + degree;
    Vec<Key> v(r);
    for (const auto& t : targets)
      if (g.same(n->degree(t), want) && rng.uniform(0, 2) == 0) v.add(t, random_elem(rng, r));
    if (!v.is_zero()) table.emplace(x, std::move(v));
  }
  return hom_from_table(std::move(m), std::move(n), degree, std::move(table));
}

// ---------------------------------------------------------------------------

RestrictedModule::RestrictedModule(std::shared_ptr<const AInfMorphism> f, ModuleRef target)
    : f_(std::move(f)), m_(std::move(target)) {
  if (&f_->target() != &m_->algebra()) throw StructuralError("restrict_scalars: algebra mismatch");
}

Vec<Key> RestrictedModule::act(const Key& m, std::span<const Letter> a) const {
  Vec<Key> out(ring());
  for (const auto& [w, c] : f_->extend(Word(a.begin(), a.end()))) out.add_scaled(m_->act(m, w), c);
  return out;
}

ModuleRef restrict_scalars(std::shared_ptr<const AInfMorphism> f, ModuleRef target) {
  return std::make_shared<const RestrictedModule>(std::move(f), std::move(target));
}

Hom restrict_hom(const Hom& phi, ModuleRef source, ModuleRef target) {
  auto* rs = dynamic_cast<const RestrictedModule*>(source.get());
  if (!rs) throw StructuralError("restrict_hom: source is not a restricted module");
  const AInfMorphism* f = &rs->morphism();
  RingRef r = source->ring();
  return Hom(std::move(source), std::move(target), phi.degree(), [phi, f, r](const Key& k, const Word& a) {
    Vec<Key> out(r);
    for (const auto& [w, c] : f->extend(a)) out.add_scaled(phi(k, w), c);
    return out;
  });
}

CheckReport check_restriction_functoriality(std::shared_ptr<const AInfMorphism> f,
                                            std::shared_ptr<const AInfMorphism> g, ModuleRef m,
                                            int cap) {
  auto gf = std::make_shared<const AInfMorphism>(compose_morphisms(*g, *f));
  auto composite = restrict_scalars(gf, m);
  auto iterated = restrict_scalars(f, restrict_scalars(g, m));
  auto id = std::make_shared<const AInfMorphism>(AInfMorphism::identity(m->algebra_ref()));
  auto trivial = restrict_scalars(id, m);
  auto same_structure = [cap](std::string name, const ModuleStructure& x, const ModuleStructure& y) {
    auto inputs = x.inputs(static_cast<std::size_t>(cap));
    return run_check(std::move(name), "equal structure maps", cap, inputs,
                     [&](const MElem& e) -> std::optional<Witness> {
                       auto vx = x.act(e.m, e.a), vy = y.act(e.m, e.a);
                       if (vx == vy) return std::nullopt;
                       return Witness{x.render(e), y.render(vy), x.render(vx)};
                     });
  };
  return combine("restriction functoriality", "R_{gf} = R_f R_g, R_id = 1", cap,
                 {same_structure("R_{gf} = R_f R_g", *composite, *iterated),
                  same_structure("R_id = 1", *trivial, *m)});
}

UVec ue_map(const AInfMorphism& f, const UeAlgebra& target, const UWord& u) {
  RingRef r = target.ring();
  UVec cur(r, UWord{});
  for (const auto& x : u) {
    UVec next(r);
    auto image = f.extend(x);
    for (const auto& [w, c] : cur)
      for (const auto& [y, d] : image) {
        UWord nw = w;
        nw.push_back(y);
        next.add(std::move(nw), c * d);
      }
    cur = std::move(next);
  }
  return target.normal_form(cur);
}

UVec ue_map(const AInfMorphism& f, const UeAlgebra& target, const UVec& u) {
  UVec out(target.ring());
  for (const auto& [w, c] : u) out.add_scaled(ue_map(f, target, w), c);
  return out;
}

CheckReport check_ue_map(const AInfMorphism& f, const UeAlgebra& source, const UeAlgebra& target,
                         int cap) {
  auto words = source.basis(static_cast<std::size_t>(cap));
  auto chain = run_check("U_e(f) chain map", "U_e(f) d = d U_e(f)", cap, words,
                         [&](const UWord& u) -> std::optional<Witness> {
                           auto got = ue_map(f, target, source.d(u));
                           auto expected = target.d(ue_map(f, target, u));
                           if (got == expected) return std::nullopt;
                           return Witness{source.render(u), target.render(expected), target.render(got)};
                         });
  std::vector<int> one{0};
  auto curv = run_check("U_e(f) curvature", "U_e(f) c = c'", cap, one,
                        [&](int) -> std::optional<Witness> {
                          auto got = ue_map(f, target, source.c());
                          auto expected = target.c();
                          if (got == expected) return std::nullopt;
                          return Witness{"c", target.render(expected), target.render(got)};
                        });
  return combine("U_e(f)", "curved dg-algebra map", cap, {chain, curv});
}

// ---------------------------------------------------------------------------

Key free_key(Letter g, const UWord& u) {
  Key k{g};
  auto e = encode_uword(u);
  k.insert(k.end(), e.begin(), e.end());
  return k;
}

std::pair<Letter, UWord> decode_free_key(const Key& k) {
  return {k.at(0), decode_uword(Key(k.begin() + 1, k.end()))};
}

FreeUeModule::FreeUeModule(FreePresentation p) : p_(std::move(p)) {
  const auto& g = p_.generators.grading();
  for (const auto& [gen, v] : p_.d)
    for (const auto& [k, c] : v)
      if (!g.same(degree(k), p_.generators.degree(gen) + 1))
        throw StructuralError("free module: d(" + p_.generators.name(gen) + ") is not of degree 1");
}

Degree FreeUeModule::degree(const Key& k) const {
  auto [g, u] = decode_free_key(k);
  return p_.generators.degree(g) + p_.ue->degree(u);
}

std::string FreeUeModule::render(const Key& k) const {
  auto [g, u] = decode_free_key(k);
  return u.empty() ? p_.generators.name(g) : p_.generators.name(g) + "." + p_.ue->render(u);
}

Vec<Key> FreeUeModule::multiply(const Vec<Key>& v, const UWord& u) const {
  Vec<Key> out(ring());
  for (const auto& [k, c] : v) {
    auto [g, w] = decode_free_key(k);
    for (const auto& [nw, d] : p_.ue->normal_form(concat(w, u))) out.add(free_key(g, nw), c * d);
  }
  return out;
}

Vec<Key> FreeUeModule::d(const Key& k) const {
  auto [g, u] = decode_free_key(k);
  Vec<Key> out(ring());
  auto it = p_.d.find(g);
  if (it != p_.d.end()) out += multiply(it->second, u);
  Vec<Key> gu(ring());
  for (const auto& [w, c] : p_.ue->d(u)) gu.add(free_key(g, w), c);
  out.add_signed(gu, -sign_of(p_.generators.degree(g)));
  return out;
}

Vec<Key> FreeUeModule::act(const Key& k, std::span<const Letter> a) const {
  if (a.empty()) return -d(k);
  auto out = multiply(Vec<Key>(ring(), k), UWord{Word(a.begin(), a.end())});
  return sign_of(degree(k)) > 0 ? -out : out;
}

std::vector<Key> FreeUeModule::basis(std::size_t w) const {
  std::vector<Key> out;
  auto words = p_.ue->basis(w);
  for (Letter g = 0; g < p_.generators.rank(); ++g)
    for (const auto& u : words) out.push_back(free_key(g, u));
  return out;
}

FreePresentation extend_scalars(const AInfMorphism& f, UeRef target, const FreePresentation& p) {
  if (&f.source() != &p.ue->base()) throw StructuralError("extend_scalars: algebra mismatch");
  FreePresentation out{target, p.generators, {}};
  RingRef r = target->ring();
  for (const auto& [g, v] : p.d) {
    Vec<Key> dv(r);
    for (const auto& [k, c] : v) {
      auto [h, u] = decode_free_key(k);
      for (const auto& [w, e] : ue_map(f, *target, u)) dv.add(free_key(h, w), c * e);
    }
    if (!dv.is_zero()) out.d[g] = std::move(dv);
  }
  return out;
}

Hom extension_unit(std::shared_ptr<const AInfMorphism> f, FreeRef p, FreeRef lp) {
  RingRef r = p->ring();
  auto target = restrict_scalars(f, lp);
  const AInfMorphism* fp = f.get();
  const UeAlgebra* ue = lp->presentation().ue.get();
  return Hom(p, target, 0, [f, fp, ue, r](const Key& k, const Word& a) {
    Vec<Key> out(r);
    if (!a.empty()) return out;
    auto [g, u] = decode_free_key(k);
    for (const auto& [w, c] : ue_map(*fp, *ue, u)) out.add(free_key(g, w), c);
    return out;
  });
}

CheckReport check_extension_adjunction(std::shared_ptr<const AInfMorphism> f, FreeRef p, FreeRef lp,
                                       int cap) {
  RingRef r = p->ring();
  Hom unit = extension_unit(f, p, lp);
  auto closed = check_closed("extension unit closed", unit, cap);

  // A closed U_e(A')-linear map ψ = δχ, with χ(g) the sum of the other
  // generators one degree lower.
  const auto& gens = lp->presentation().generators;
  std::map<Letter, Vec<Key>> images;
  for (Letter g = 0; g < gens.rank(); ++g) {
    Vec<Key> v(r);
    for (Letter h = 0; h < gens.rank(); ++h)
      if (h != g && gens.grading().same(gens.degree(h), gens.degree(g) - 1)) v.add(free_key(h, {}), Elem::one(r));
    images.emplace(g, std::move(v));
  }
  const FreeUeModule* lpp = lp.get();
  Hom chi(lp, lp, -1, [images, lpp, r](const Key& k, const Word& a) {
    if (!a.empty()) return Vec<Key>(r);
    auto [g, u] = decode_free_key(k);
    return lpp->multiply(images.at(g), u);
  });
  Hom psi = hom_differential(chi);
  auto rlp = unit.target_ref();
  Hom flat = compose_hom(restrict_hom(psi, rlp, restrict_scalars(f, lp)), unit);
  auto flat_closed = check_closed("transported map closed", flat, cap);
  std::vector<Letter> gen_list;
  for (Letter g = 0; g < gens.rank(); ++g) gen_list.push_back(g);
  auto on_gens = run_check("agrees on generators", "psi-flat(g) = psi(g)", cap, gen_list,
                           [&](Letter g) -> std::optional<Witness> {
                             auto got = flat(free_key(g, {}), {});
                             auto expected = psi(free_key(g, {}), {});
                             if (got == expected) return std::nullopt;
                             return Witness{gens.name(g), lp->render(expected), lp->render(got)};
                           });
  return combine("extension of scalars", "unit closed; adjunction bijection on generators", cap,
                 {closed, flat_closed, on_gens});
}

FreePresentation free_koszul(UeRef u, Degree shift) {
  const auto& a = u->base();
  RingRef r = a.ring();
  FreePresentation p{u, GradedSpace(r, a.grading(), {{"g0", shift}, {"g1", shift + 1}}), {}};
  p.d[0] = Vec<Key>(r, free_key(1, {}));
  Vec<Key> dg1(r);
  for (const auto& [w, c] : u->c()) dg1.add(free_key(0, w), -c);
  if (!dg1.is_zero()) p.d[1] = dg1;
  return p;
}

}  // namespace ainf
