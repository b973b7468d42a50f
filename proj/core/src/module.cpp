#include "ainf/module.hpp"

#include <algorithm>

namespace ainf {

namespace {

Word slice(std::span<const Letter> w, std::size_t i, std::size_t j) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j));
}

std::string coeff_prefix(const Elem& c) { return "(" + c.str() + ")"; }

}  // namespace

// ---------------------------------------------------------------------------
// ModuleStructure

std::string ModuleStructure::render(const MElem& x) const {
  std::string s = render(x.m);
  if (!x.a.empty()) s += " (.) " + algebra().render(x.a);
  return s;
}

std::string ModuleStructure::render(const Vec<Key>& v) const {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : v) s += (s.empty() ? "" : " + ") + coeff_prefix(c) + "[" + render(k) + "]";
  return s;
}

std::string ModuleStructure::render(const Vec<MElem>& v) const {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : v) s += (s.empty() ? "" : " + ") + coeff_prefix(c) + "[" + render(k) + "]";
  return s;
}

Vec<MElem> ModuleStructure::coderivation(const MElem& x) const {
  const auto& A = algebra();
  Vec<MElem> out(ring());
  // b^M on a prefix of the word.
  for (std::size_t j = 0; j <= x.a.size(); ++j) {
    Vec<Key> r = act(x.m, std::span<const Letter>(x.a.data(), j));
    Word rest = slice(x.a, j, x.a.size());
    for (const auto& [k, c] : r) out.add(MElem{k, rest}, c);
  }
  // b inserted into the algebra word, passing m and the prefix.
  for (const auto& [w, c] : A.coderivation(x.a))
    out.add(MElem{x.m, w}, c, sign_of(degree(x.m)));
  return out;
}

Vec<MElem> ModuleStructure::coderivation(const Vec<MElem>& v) const {
  Vec<MElem> out(ring());
  for (const auto& [x, c] : v) out.add_scaled(coderivation(x), c);
  return out;
}

Vec<Key> ModuleStructure::apply_structure(const Vec<MElem>& v) const {
  Vec<Key> out(ring());
  for (const auto& [x, c] : v) out.add_scaled(act(x.m, x.a), c);
  return out;
}

std::vector<MElem> ModuleStructure::inputs(std::size_t cap) const {
  std::vector<MElem> out;
  auto words = all_words(algebra().rank(), cap);
  for (const auto& m : basis(cap)) {
    std::size_t wm = weight(m);
    if (wm > cap) continue;
    for (const auto& w : words)
      if (w.size() + wm <= cap) out.push_back(MElem{m, w});
  }
  return out;
}

// ---------------------------------------------------------------------------
// TableModule

TableModule::TableModule(AlgebraRef algebra, GradedSpace space, MultiOp structure)
    : algebra_(std::move(algebra)), space_(std::move(space)), structure_(std::move(structure)) {
  const auto& A = *algebra_;
  if (space_.ring() != A.ring()) throw StructuralError("module ring differs from algebra ring");
  if (!(space_.grading() == A.grading())) throw StructuralError("module grading differs from algebra grading");
  if (!A.grading().same(structure_.degree(), 1)) throw StructuralError("module structure map must have degree 1");
  for (const auto& [in, out] : structure_.table()) {
    if (in.empty()) throw StructuralError("module table entry without a module letter");
    if (in[0] >= space_.rank()) throw StructuralError("module letter out of range");
    for (std::size_t i = 1; i < in.size(); ++i)
      if (in[i] >= A.rank()) throw StructuralError("algebra letter out of range in module table");
    if (in.size() - 1 > A.arity_cap()) throw StructuralError("module table exceeds the arity cap");
    Degree expected = space_.degree(in[0]) + A.sdeg(std::span<const Letter>(in).subspan(1)) + 1;
    for (const auto& [l, c] : out) {
      if (l >= space_.rank()) throw StructuralError("module output out of range");
      if (!A.grading().same(space_.degree(l), expected))
        throw StructuralError("degree-inconsistent module entry on " + space_.name(in[0]) +
                              " -> " + space_.name(l));
    }
  }
}

Vec<Key> TableModule::act(const Key& m, std::span<const Letter> a) const {
  Word in;
  in.reserve(a.size() + 1);
  in.push_back(m.at(0));
  in.insert(in.end(), a.begin(), a.end());
  Vec<Key> out(ring());
  if (const auto* r = structure_.find(in))
    for (const auto& [l, c] : *r) out.add(Key{l}, c);
  return out;
}

std::vector<Key> TableModule::basis(std::size_t) const {
  std::vector<Key> out;
  for (Letter i = 0; i < space_.rank(); ++i) out.push_back(Key{i});
  return out;
}

void impose_module_unit_laws(const AInfAlgebra& a, const GradedSpace& space, MultiOp& structure) {
  RingRef r = a.ring();
  std::vector<Word> drop;
  for (const auto& [w, out] : structure.table())
    if (std::find(w.begin() + 1, w.end(), a.unit()) != w.end()) drop.push_back(w);
  for (const auto& w : drop) structure.erase(w);
  for (Letter m = 0; m < space.rank(); ++m) {
    Vec<Letter> v(r);
    v.add(m, Elem::one(r), -sign_of(space.degree(m)));
    structure.set({m, a.unit()}, std::move(v));
  }
}

std::shared_ptr<TableModule> regular_module(AlgebraRef a) {
  if (a->is_curved()) throw StructuralError("a curved algebra is not a module over itself");
  MultiOp s(a->ring(), 1);
  for (const auto& [w, out] : a->b().table()) {
    if (w.empty()) continue;
    s.set(w, out);
  }
  return std::make_shared<TableModule>(a, a->shifted(), std::move(s));
}

CheckReport check_module_unit_laws(const ModuleStructure& M, int cap) {
  const auto& A = M.algebra();
  RingRef r = M.ring();
  std::vector<MElem> inputs;
  for (auto& x : M.inputs(static_cast<std::size_t>(cap)))
    if (std::find(x.a.begin(), x.a.end(), A.unit()) != x.a.end()) inputs.push_back(std::move(x));
  return run_check("module unit laws", "b^M(m,e) = -(-1)^|m| m, other e-entries vanish", cap,
                   inputs, [&](const MElem& x) -> std::optional<Witness> {
                     Vec<Key> expected(r);
                     if (x.a.size() == 1) expected.add(x.m, Elem::one(r), -sign_of(M.degree(x.m)));
                     Vec<Key> got = M.act(x.m, x.a);
                     if (got == expected) return std::nullopt;
                     return Witness{M.render(x), M.render(expected), M.render(got)};
                   });
}

CheckReport check_module_relation(const ModuleStructure& M, int cap) {
  auto inputs = M.inputs(static_cast<std::size_t>(cap));
  return run_check("module relation", "b^M(B^M(x)) = 0", cap, inputs,
                   [&](const MElem& x) -> std::optional<Witness> {
                     Vec<Key> got = M.apply_structure(M.coderivation(x));
                     if (got.is_zero()) return std::nullopt;
                     return Witness{M.render(x), "0", M.render(got)};
                   });
}

CheckReport check_module(const ModuleStructure& M, int cap) {
  auto unit = check_module_unit_laws(M, cap);
  auto rel = check_module_relation(M, cap);
  auto inputs = M.inputs(static_cast<std::size_t>(cap));
  auto sq = run_check("module coderivation square", "B^M(B^M(x)) = 0", cap, inputs,
                      [&](const MElem& x) -> std::optional<Witness> {
                        Vec<MElem> got = M.coderivation(M.coderivation(x));
                        if (got.is_zero()) return std::nullopt;
                        return Witness{M.render(x), "0", M.render(got)};
                      });
  std::vector<CheckReport> parts{unit, rel, sq};
  if (rel.passed() != sq.passed()) {
    CheckReport mismatch;
    mismatch.name = "module cross-cancel agreement";
    mismatch.identity = "(B^M)^2 = 0 iff b^M(B^M) = 0";
    mismatch.cap = cap;
    mismatch.verdict = Verdict::Fail;
    parts.push_back(mismatch);
  }
  return combine("check-module", "A-infinity module relations and strict unit", cap, parts);
}

// ---------------------------------------------------------------------------
// Hom

Hom::Hom(ModuleRef source, ModuleRef target, Degree degree, Fn fn)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree), fn_(std::move(fn)) {
  if (source_->ring() != target_->ring()) throw StructuralError("hom between modules over different rings");
}

Vec<Key> Hom::apply(const Vec<MElem>& v) const {
  Vec<Key> out(source_->ring());
  for (const auto& [x, c] : v) out.add_scaled(fn_(x.m, x.a), c);
  return out;
}

Vec<MElem> Hom::extend(const MElem& x) const {
  Vec<MElem> out(source_->ring());
  for (std::size_t j = 0; j <= x.a.size(); ++j) {
    Vec<Key> r = fn_(x.m, slice(x.a, 0, j));
    if (r.is_zero()) continue;
    Word rest = slice(x.a, j, x.a.size());
    for (const auto& [k, c] : r) out.add(MElem{k, rest}, c);
  }
  return out;
}

Vec<MElem> Hom::extend(const Vec<MElem>& v) const {
  Vec<MElem> out(source_->ring());
  for (const auto& [x, c] : v) out.add_scaled(extend(x), c);
  return out;
}

Hom Hom::identity(ModuleRef m) {
  RingRef r = m->ring();
  return Hom(m, m, 0, [r](const Key& k, const Word& a) {
    return a.empty() ? Vec<Key>(r, k) : Vec<Key>(r);
  });
}

Hom Hom::zero(ModuleRef s, ModuleRef t, Degree degree) {
  RingRef r = s->ring();
  return Hom(s, t, degree, [r](const Key&, const Word&) { return Vec<Key>(r); });
}

Hom Hom::truncated(std::size_t arity) const {
  RingRef r = source_->ring();
  auto fn = fn_;
  return Hom(source_, target_, degree_, [fn, arity, r](const Key& k, const Word& a) {
    return a.size() <= arity ? fn(k, a) : Vec<Key>(r);
  });
}

Hom Hom::tabulated(std::size_t cap) const {
  std::map<MElem, Vec<Key>> table;
  for (const auto& x : source_->inputs(cap)) {
    auto v = fn_(x.m, x.a);
    if (!v.is_zero()) table.emplace(x, std::move(v));
  }
  return hom_from_table(source_, target_, degree_, std::move(table));
}

Hom Hom::operator+(const Hom& o) const {
  auto f = fn_, g = o.fn_;
  return Hom(source_, target_, degree_, [f, g](const Key& k, const Word& a) { return f(k, a) + g(k, a); });
}

Hom Hom::operator-(const Hom& o) const {
  auto f = fn_, g = o.fn_;
  return Hom(source_, target_, degree_, [f, g](const Key& k, const Word& a) { return f(k, a) - g(k, a); });
}

Hom Hom::scaled(const Elem& c) const {
  auto f = fn_;
  return Hom(source_, target_, degree_, [f, c](const Key& k, const Word& a) { return f(k, a).scaled(c); });
}

Hom hom_from_table(ModuleRef source, ModuleRef target, Degree degree,
                   std::map<MElem, Vec<Key>> table) {
  RingRef r = source->ring();
  auto t = std::make_shared<const std::map<MElem, Vec<Key>>>(std::move(table));
  return Hom(std::move(source), std::move(target), degree, [t, r](const Key& k, const Word& a) {
    auto it = t->find(MElem{k, a});
    return it == t->end() ? Vec<Key>(r) : it->second;
  });
}

Hom hom_differential(const Hom& phi) {
  ModuleRef src = phi.source_ref(), tgt = phi.target_ref();
  int s = sign_of(phi.degree());
  return Hom(src, tgt, phi.degree() + 1, [phi, src, tgt, s](const Key& k, const Word& a) {
    MElem x{k, a};
    Vec<Key> out = tgt->apply_structure(phi.extend(x));
    out.add_signed(phi.apply(src->coderivation(x)), -s);
    return out;
  });
}

Hom compose_hom(const Hom& psi, const Hom& phi) {
  if (phi.target_ref() != psi.source_ref() && &phi.target() != &psi.source())
    throw StructuralError("compose_hom: modules do not chain");
  return Hom(phi.source_ref(), psi.target_ref(), phi.degree() + psi.degree(),
             [psi, phi](const Key& k, const Word& a) { return psi.apply(phi.extend(MElem{k, a})); });
}

Vec<MElem> hom_commutator(const Hom& phi, const MElem& x) {
  Vec<MElem> out = phi.target().coderivation(phi.extend(x));
  out.add_signed(phi.extend(phi.source().coderivation(x)), -sign_of(phi.degree()));
  return out;
}

CheckReport compare_homs(const std::string& name, const Hom& a, const Hom& b, int cap) {
  auto inputs = a.source().inputs(static_cast<std::size_t>(cap));
  return run_check(name, "componentwise equality", cap, inputs,
                   [&](const MElem& x) -> std::optional<Witness> {
                     auto va = a(x), vb = b(x);
                     if (va == vb) return std::nullopt;
                     return Witness{a.source().render(x), a.target().render(vb), a.target().render(va)};
                   });
}

CheckReport check_closed(const std::string& name, const Hom& phi, int cap) {
  Hom d = hom_differential(phi);
  auto inputs = phi.source().inputs(static_cast<std::size_t>(cap));
  return run_check(name, "delta(phi) = 0", cap, inputs,
                   [&](const MElem& x) -> std::optional<Witness> {
                     auto v = d(x);
                     if (v.is_zero()) return std::nullopt;
                     return Witness{phi.source().render(x), "0", phi.target().render(v)};
                   });
}

CheckReport check_commutator_identity(const Hom& phi, int cap) {
  Hom d = hom_differential(phi);
  auto inputs = phi.source().inputs(static_cast<std::size_t>(cap));
  return run_check("commutator identity", "[B,Phi] = (delta phi) (.) 1", cap, inputs,
                   [&](const MElem& x) -> std::optional<Witness> {
                     auto lhs = hom_commutator(phi, x);
                     auto rhs = d.extend(x);
                     if (lhs == rhs) return std::nullopt;
                     return Witness{phi.source().render(x), phi.target().render(rhs),
                                    phi.target().render(lhs)};
                   });
}

// ---------------------------------------------------------------------------
// Bimodules

std::string BimoduleStructure::render(const BiElem& x) const {
  std::string s;
  if (!x.left.empty()) s += left().render(x.left) + " (.) ";
  s += render(x.v);
  if (!x.right.empty()) s += " (.) " + right().render(x.right);
  return s;
}

std::string BimoduleStructure::render(const Vec<BiElem>& v) const {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : v) s += (s.empty() ? "" : " + ") + coeff_prefix(c) + "[" + render(k) + "]";
  return s;
}

Vec<BiElem> BimoduleStructure::coderivation(const BiElem& x) const {
  const auto& L = left();
  const auto& R = right();
  Vec<BiElem> out(ring());
  for (const auto& [w, c] : L.coderivation(x.left)) out.add(BiElem{w, x.v, x.right}, c);
  Degree prefix = 0;
  for (std::size_t i = 0; i <= x.left.size(); ++i) {
    int s = sign_of(prefix);
    for (std::size_t j = 0; j <= x.right.size(); ++j) {
      Vec<Key> r = act(std::span<const Letter>(x.left).subspan(i), x.v,
                       std::span<const Letter>(x.right.data(), j));
      if (r.is_zero()) continue;
      Word l1 = slice(x.left, 0, i), r2 = slice(x.right, j, x.right.size());
      for (const auto& [k, c] : r) out.add(BiElem{l1, k, r2}, c, s);
    }
    if (i < x.left.size()) prefix += L.sdeg(x.left[i]);
  }
  int s = sign_of(L.sdeg(x.left) + degree(x.v));
  for (const auto& [w, c] : R.coderivation(x.right)) out.add(BiElem{x.left, x.v, w}, c, s);
  return out;
}

Vec<Key> BimoduleStructure::apply_structure(const Vec<BiElem>& v) const {
  Vec<Key> out(ring());
  for (const auto& [x, c] : v) out.add_scaled(act(x.left, x.v, x.right), c);
  return out;
}

std::vector<BiElem> BimoduleStructure::inputs(std::size_t cap) const {
  std::vector<BiElem> out;
  auto lw = all_words(left().rank(), cap);
  auto rw = all_words(right().rank(), cap);
  for (const auto& v : basis(cap)) {
    std::size_t wv = weight(v);
    if (wv > cap) continue;
    for (const auto& l : lw) {
      if (l.size() + wv > cap) continue;
      for (const auto& r : rw)
        if (l.size() + r.size() + wv <= cap) out.push_back(BiElem{l, v, r});
    }
  }
  return out;
}

TableBimodule::TableBimodule(AlgebraRef left, AlgebraRef right, GradedSpace space, Table table)
    : left_(std::move(left)), right_(std::move(right)), space_(std::move(space)), table_(std::move(table)) {
  if (left_->ring() != right_->ring() || space_.ring() != left_->ring())
    throw StructuralError("bimodule over mismatched rings");
  const auto& g = space_.grading();
  for (auto it = table_.begin(); it != table_.end();) {
    const auto& [l, v, r] = it->first;
    if (v >= space_.rank()) throw StructuralError("bimodule letter out of range");
    Degree expected = left_->sdeg(l) + space_.degree(v) + right_->sdeg(r) + 1;
    for (const auto& [o, c] : it->second)
      if (!g.same(space_.degree(o), expected))
        throw StructuralError("degree-inconsistent bimodule entry on " + space_.name(v));
    if (it->second.is_zero())
      it = table_.erase(it);
    else
      ++it;
  }
}

Vec<Key> TableBimodule::act(std::span<const Letter> l, const Key& v, std::span<const Letter> r) const {
  Vec<Key> out(ring());
  auto it = table_.find({Word(l.begin(), l.end()), v.at(0), Word(r.begin(), r.end())});
  if (it != table_.end())
    for (const auto& [o, c] : it->second) out.add(Key{o}, c);
  return out;
}

std::vector<Key> TableBimodule::basis(std::size_t) const {
  std::vector<Key> out;
  for (Letter i = 0; i < space_.rank(); ++i) out.push_back(Key{i});
  return out;
}

CheckReport check_bimodule_unit_laws(const BimoduleStructure& V, int cap) {
  RingRef r = V.ring();
  Letter el = V.left().unit(), er = V.right().unit();
  std::vector<BiElem> inputs;
  for (auto& x : V.inputs(static_cast<std::size_t>(cap)))
    if (std::find(x.left.begin(), x.left.end(), el) != x.left.end() ||
        std::find(x.right.begin(), x.right.end(), er) != x.right.end())
      inputs.push_back(std::move(x));
  return run_check("bimodule unit laws", "b(e,v) = v, b(v,e) = -(-1)^|v| v, others vanish", cap,
                   inputs, [&](const BiElem& x) -> std::optional<Witness> {
                     Vec<Key> expected(r);
                     if (x.left.size() + x.right.size() == 1) {
                       if (!x.left.empty())
                         expected.add(x.v, Elem::one(r));
                       else
                         expected.add(x.v, Elem::one(r), -sign_of(V.degree(x.v)));
                     }
                     auto got = V.act(x.left, x.v, x.right);
                     if (got == expected) return std::nullopt;
                     std::string e, g;
                     for (const auto& [k, c] : expected) e += coeff_prefix(c) + V.render(k) + " ";
                     for (const auto& [k, c] : got) g += coeff_prefix(c) + V.render(k) + " ";
                     return Witness{V.render(x), e.empty() ? "0" : e, g.empty() ? "0" : g};
                   });
}

CheckReport check_bimodule(const BimoduleStructure& V, int cap) {
  auto inputs = V.inputs(static_cast<std::size_t>(cap));
  auto render_keys = [&](const Vec<Key>& v) {
    if (v.is_zero()) return std::string("0");
    std::string s;
    for (const auto& [k, c] : v) s += (s.empty() ? "" : " + ") + coeff_prefix(c) + "[" + V.render(k) + "]";
    return s;
  };
  auto rel = run_check("bimodule relation", "b^V(B^V(x)) = 0", cap, inputs,
                       [&](const BiElem& x) -> std::optional<Witness> {
                         auto got = V.apply_structure(V.coderivation(x));
                         if (got.is_zero()) return std::nullopt;
                         return Witness{V.render(x), "0", render_keys(got)};
                       });
  auto sq = run_check("bimodule coderivation square", "B^V(B^V(x)) = 0", cap, inputs,
                      [&](const BiElem& x) -> std::optional<Witness> {
                        Vec<BiElem> acc(V.ring());
                        for (const auto& [y, c] : V.coderivation(x)) acc.add_scaled(V.coderivation(y), c);
                        if (acc.is_zero()) return std::nullopt;
                        return Witness{V.render(x), "0", V.render(acc)};
                      });
  auto unit = check_bimodule_unit_laws(V, cap);
  return combine("check-bimodule", "infinity-bimodule relations", cap, {unit, rel, sq});
}

// ---------------------------------------------------------------------------
// InfinityTensor

InfinityTensor::InfinityTensor(ModuleRef m, BimoduleRef v, bool normalized)
    : m_(std::move(m)), v_(std::move(v)), normalized_(normalized) {
  if (&m_->algebra() != &v_->left()) throw StructuralError("infinity_tensor: algebra mismatch");
}

bool InfinityTensor::keeps(const Word& left) const {
  if (!normalized_) return true;
  Letter unit = m_->algebra().unit();
  return std::find(left.begin(), left.end(), unit) == left.end();
}

Key InfinityTensor::encode(const Key& m, const Word& left, const Key& v) {
  Key k;
  k.reserve(m.size() + left.size() + v.size() + 2);
  k.push_back(static_cast<std::uint32_t>(m.size()));
  k.insert(k.end(), m.begin(), m.end());
  k.push_back(static_cast<std::uint32_t>(left.size()));
  k.insert(k.end(), left.begin(), left.end());
  k.insert(k.end(), v.begin(), v.end());
  return k;
}

InfinityTensor::Parts InfinityTensor::decode(const Key& k) {
  Parts p;
  std::size_t i = 0;
  std::size_t lm = k.at(i++);
  p.m.assign(k.begin() + static_cast<std::ptrdiff_t>(i), k.begin() + static_cast<std::ptrdiff_t>(i + lm));
  i += lm;
  std::size_t ll = k.at(i++);
  p.left.assign(k.begin() + static_cast<std::ptrdiff_t>(i), k.begin() + static_cast<std::ptrdiff_t>(i + ll));
  i += ll;
  p.v.assign(k.begin() + static_cast<std::ptrdiff_t>(i), k.end());
  return p;
}

Degree InfinityTensor::degree(const Key& k) const {
  auto p = decode(k);
  return m_->degree(p.m) + m_->algebra().sdeg(p.left) + v_->degree(p.v);
}

std::size_t InfinityTensor::weight(const Key& k) const {
  auto p = decode(k);
  return m_->weight(p.m) + p.left.size() + v_->weight(p.v);
}

std::string InfinityTensor::render(const Key& k) const {
  auto p = decode(k);
  std::string s = m_->render(p.m) + " (.) ";
  s += p.left.empty() ? "1" : m_->algebra().render(p.left);
  return s + " (.) " + v_->render(p.v);
}

Vec<Key> InfinityTensor::act(const Key& k, std::span<const Letter> a) const {
  auto p = decode(k);
  const auto& A = m_->algebra();
  Vec<Key> out(ring());
  if (a.empty()) {
    for (const auto& [x, c] : m_->coderivation(MElem{p.m, p.left}))
      if (keeps(x.a)) out.add(encode(x.m, x.a, p.v), c);
  }
  Degree prefix = m_->degree(p.m);
  for (std::size_t i = 0; i <= p.left.size(); ++i) {
    Vec<Key> r = v_->act(std::span<const Letter>(p.left).subspan(i), p.v, a);
    if (!r.is_zero()) {
      Word l1 = slice(p.left, 0, i);
      for (const auto& [v, c] : r) out.add(encode(p.m, l1, v), c, sign_of(prefix));
    }
    if (i < p.left.size()) prefix += A.sdeg(p.left[i]);
  }
  return out;
}

std::vector<Key> InfinityTensor::basis(std::size_t w) const {
  std::vector<Key> out;
  auto words = all_words(m_->algebra().rank(), w);
  auto vbasis = v_->basis(w);
  for (const auto& m : m_->basis(w)) {
    std::size_t wm = m_->weight(m);
    if (wm > w) continue;
    for (const auto& l : words) {
      if (wm + l.size() > w || !keeps(l)) continue;
      for (const auto& v : vbasis)
        if (wm + l.size() + v_->weight(v) <= w) out.push_back(encode(m, l, v));
    }
  }
  return out;
}

Hom infinity_tensor_map(const Hom& phi, std::shared_ptr<const InfinityTensor> source,
                        std::shared_ptr<const InfinityTensor> target) {
  RingRef r = source->ring();
  return Hom(source, target, phi.degree(), [phi, r](const Key& k, const Word& a) {
    Vec<Key> out(r);
    if (!a.empty()) return out;
    auto p = InfinityTensor::decode(k);
    for (const auto& [x, c] : phi.extend(MElem{p.m, p.left}))
      out.add(InfinityTensor::encode(x.m, x.a, p.v), c);
    return out;
  });
}

}  // namespace ainf
