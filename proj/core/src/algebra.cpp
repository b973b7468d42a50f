#include "ainf/algebra.hpp"

#include <algorithm>

namespace ainf {

namespace {

// Checks every output letter of `op` on input `in` has the expected degree.
void require_homogeneous(const GradedSpace& src, const GradedSpace& dst, const MultiOp& op,
                         Degree op_degree_for_arity0, bool arity_dependent,
                         const std::string& what) {
  const auto& g = dst.grading();
  for (const auto& [in, out] : op.table()) {
    for (auto l : in)
      if (l >= src.rank()) throw StructuralError(what + ": input letter out of range");
    Degree expected = word_degree(src, in) +
                      (arity_dependent ? 2 - static_cast<Degree>(in.size()) : op_degree_for_arity0);
    for (const auto& [l, c] : out) {
      if (l >= dst.rank()) throw StructuralError(what + ": output letter out of range");
      if (!g.same(dst.degree(l), expected)) {
        std::string in_s;
        for (auto x : in) in_s += (in_s.empty() ? "" : ",") + src.name(x);
        throw StructuralError(what + ": degree-inconsistent entry on (" + in_s + ") -> " +
                              dst.name(l));
      }
    }
  }
}

int unit_sign(const AInfAlgebra& a, Letter x) { return -sign_of(a.sdeg(x)); }

}  // namespace

std::string render_letters(const GradedSpace& s, const Vec<Letter>& v, const std::string& prefix) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [l, c] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")" + prefix + s.name(l);
  }
  return out;
}

std::string render_words(const AInfAlgebra& a, const Vec<Word>& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : v) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")[" + a.render(w) + "]";
  }
  return out;
}

AInfAlgebra::AInfAlgebra(GradedSpace space, Letter unit, MultiOp b, std::size_t arity_cap)
    : space_(std::move(space)), shifted_(space_.shift()), unit_(unit), b_(std::move(b)),
      arity_cap_(arity_cap) {
  if (unit_ >= space_.rank()) throw StructuralError("unit generator out of range");
  if (!space_.grading().same(space_.degree(unit_), 0))
    throw StructuralError("unit generator must have degree 0");
  if (b_.ring() != space_.ring()) throw StructuralError("operation ring differs from space ring");
  if (!space_.grading().same(b_.degree(), 1)) throw StructuralError("b must have degree 1");
  if (b_.max_arity() > arity_cap_)
    throw StructuralError("b has entries beyond the declared arity cap");
  require_homogeneous(shifted_, shifted_, b_, 1, false, "b");
}

Vec<Letter> AInfAlgebra::b_of(const Word& w) const {
  const auto* r = b_.find(w);
  return r ? *r : Vec<Letter>(ring());
}

void impose_unit_laws(const GradedSpace& shifted, Letter unit, MultiOp& b) {
  RingRef r = shifted.ring();
  for (Letter x = 0; x < shifted.rank(); ++x) {
    b.set({unit, x}, Vec<Letter>(r, x));
    if (x != unit) {
      Vec<Letter> v(r);
      v.add(x, Elem::one(r), -sign_of(shifted.degree(x)));
      b.set({x, unit}, std::move(v));
    }
  }
  // Other arities vanish on words containing the unit.
  std::vector<Word> drop;
  for (const auto& [w, out] : b.table())
    if (w.size() != 2 && std::find(w.begin(), w.end(), unit) != w.end()) drop.push_back(w);
  for (const auto& w : drop) b.erase(w);
}

CheckReport check_unit_laws(const AInfAlgebra& a, int cap) {
  std::size_t len = std::min<std::size_t>(static_cast<std::size_t>(cap), a.arity_cap());
  std::vector<Word> inputs;
  for (auto& w : all_words(a.rank(), len))
    if (std::find(w.begin(), w.end(), a.unit()) != w.end()) inputs.push_back(std::move(w));
  RingRef r = a.ring();
  return run_check("unit-laws", "b2(e,x) = x, b2(x,e) = -(-1)^|x| x, b_l(..e..) = 0 for l != 2",
                   cap, inputs, [&](const Word& w) -> std::optional<Witness> {
                     Vec<Letter> expected(r);
                     if (w.size() == 2) {
                       if (w[0] == a.unit()) expected.add(w[1], Elem::one(r));
                       else expected.add(w[0], Elem::one(r), unit_sign(a, w[0]));
                     }
                     Vec<Letter> got = a.b_of(w);
                     if (got == expected) return std::nullopt;
                     return Witness{a.render(w), render_letters(a.space(), expected, "s"),
                                    render_letters(a.space(), got, "s")};
                   });
}

CheckReport check_relation_bB(const AInfAlgebra& a, int cap) {
  auto inputs = all_words(a.rank(), static_cast<std::size_t>(cap));
  return run_check("relation b(B)", "b(B(w)) = 0", cap, inputs,
                   [&](const Word& w) -> std::optional<Witness> {
                     Vec<Letter> got = a.apply_b(a.coderivation(w));
                     if (got.is_zero()) return std::nullopt;
                     return Witness{a.render(w), "0", render_letters(a.space(), got, "s")};
                   });
}

CheckReport check_relation_BB(const AInfAlgebra& a, int cap) {
  auto inputs = all_words(a.rank(), static_cast<std::size_t>(cap));
  return run_check("relation B^2", "B(B(w)) = 0", cap, inputs,
                   [&](const Word& w) -> std::optional<Witness> {
                     Vec<Word> got = a.coderivation(a.coderivation(w));
                     if (got.is_zero()) return std::nullopt;
                     return Witness{a.render(w), "0", render_words(a, got)};
                   });
}

CheckReport check_algebra(const AInfAlgebra& a, int cap) {
  auto units = check_unit_laws(a, cap);
  auto bB = check_relation_bB(a, cap);
  auto BB = check_relation_BB(a, cap);
  std::vector<CheckReport> parts{units, bB, BB};
  if (bB.passed() != BB.passed()) {
    CheckReport mismatch;
    mismatch.name = "cross-cancel agreement";
    mismatch.identity = "B^2 = 0 iff b(B) = 0";
    mismatch.cap = cap;
    mismatch.verdict = Verdict::Fail;
    mismatch.detail = "b(B) " + to_string(bB.verdict) + " but B^2 " + to_string(BB.verdict);
    parts.push_back(mismatch);
  }
  return combine("check-algebra", "A-infinity relations and strict unit", cap, parts);
}

std::vector<std::string> alternative_units(const AInfAlgebra& a, int cap) {
  std::vector<std::string> out;
  RingRef r = a.ring();
  std::size_t len = std::min<std::size_t>(static_cast<std::size_t>(cap), a.arity_cap());
  for (Letter u = 0; u < a.rank(); ++u) {
    if (u == a.unit() || !a.grading().same(a.space().degree(u), 0)) continue;
    bool ok = true;
    for (const auto& w : all_words(a.rank(), len)) {
      if (std::find(w.begin(), w.end(), u) == w.end()) continue;
      Vec<Letter> expected(r);
      if (w.size() == 2) {
        if (w[0] == u) expected.add(w[1], Elem::one(r));
        else expected.add(w[0], Elem::one(r), unit_sign(a, w[0]));
      }
      if (!(a.b_of(w) == expected)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a.space().name(u));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// (-1)^{Σ_k (i-k) |σa_k|}: the sign of ω^{⊗i} on σa_1 ⊗ ... ⊗ σa_i.
int omega_tensor_sign(const GradedSpace& shifted, const Word& w) {
  Degree e = 0;
  const auto i = static_cast<Degree>(w.size());
  for (std::size_t k = 0; k < w.size(); ++k)
    e += (i - 1 - static_cast<Degree>(k)) * shifted.degree(w[k]);
  return sign_of(e);
}

MultiOp convert(const GradedSpace& space, const MultiOp& src, Degree out_degree) {
  auto shifted = space.shift();
  MultiOp out(space.ring(), out_degree);
  for (const auto& [w, v] : src.table()) {
    Vec<Letter> r(space.ring());
    r.add_signed(v, -omega_tensor_sign(shifted, w));
    out.set(w, std::move(r));
  }
  return out;
}

}  // namespace

MultiOp m_to_b(const GradedSpace& space, const MultiOp& m) {
  validate_m_family(space, m);
  return convert(space, m, 1);
}

MultiOp b_to_m(const GradedSpace& space, const MultiOp& b) { return convert(space, b, 0); }

void validate_m_family(const GradedSpace& space, const MultiOp& m) {
  require_homogeneous(space, space, m, 0, true, "m");
}

// ---------------------------------------------------------------------------

CurvedDgaView::CurvedDgaView(const AInfAlgebra& a) : algebra(a), m(b_to_m(a.space(), a.b())) {
  if (!a.is_dga()) throw StructuralError("curved dg-algebra view needs b_l = 0 for l >= 3");
}

Vec<Letter> CurvedDgaView::curvature() const {
  const auto* r = m.find({});
  return r ? *r : Vec<Letter>(algebra.ring());
}

Vec<Letter> CurvedDgaView::d(const Vec<Letter>& x) const {
  Vec<Letter> out(algebra.ring());
  for (const auto& [l, c] : x)
    if (const auto* r = m.find({l})) out.add_scaled(*r, c);
  return out;
}

Vec<Letter> CurvedDgaView::mul(const Vec<Letter>& x, const Vec<Letter>& y) const {
  Vec<Letter> out(algebra.ring());
  for (const auto& [l1, c1] : x)
    for (const auto& [l2, c2] : y)
      if (const auto* r = m.find({l1, l2})) out.add_scaled(*r, c1 * c2);
  return out;
}

CheckReport curved_dga_axioms_direct(const AInfAlgebra& a) {
  CurvedDgaView v(a);
  RingRef r = a.ring();
  const auto& sp = a.space();
  auto show = [&](const Vec<Letter>& x) { return render_letters(sp, x, ""); };
  std::vector<CheckReport> parts;

  Vec<Letter> c = v.curvature();
  {
    CheckReport rep;
    rep.name = "dc = 0";
    rep.identity = "d(c) = 0";
    rep.checked = 1;
    auto dc = v.d(c);
    if (!dc.is_zero()) {
      rep.verdict = Verdict::Fail;
      rep.witness = Witness{"c", "0", show(dc)};
    }
    parts.push_back(rep);
  }
  {
    CheckReport rep;
    rep.name = "de = 0";
    rep.identity = "d(e) = 0";
    rep.checked = 1;
    auto de = v.d(v.basis(a.unit()));
    if (!de.is_zero()) {
      rep.verdict = Verdict::Fail;
      rep.witness = Witness{sp.name(a.unit()), "0", show(de)};
    }
    parts.push_back(rep);
  }
  std::vector<Letter> letters(a.rank());
  for (Letter l = 0; l < a.rank(); ++l) letters[l] = l;
  parts.push_back(run_check("d^2 = [c,-]", "d(d(x)) = c x - x c", 1, letters,
                            [&](Letter x) -> std::optional<Witness> {
                              auto bx = v.basis(x);
                              auto lhs = v.d(v.d(bx));
                              auto rhs = v.mul(c, bx) - v.mul(bx, c);
                              if (lhs == rhs) return std::nullopt;
                              return Witness{sp.name(x), show(rhs), show(lhs)};
                            }));
  std::vector<Word> pairs = all_words(a.rank(), 2);
  std::erase_if(pairs, [](const Word& w) { return w.size() != 2; });
  parts.push_back(run_check("Leibniz", "d(xy) = d(x)y + (-1)^|x| x d(y)", 2, pairs,
                            [&](const Word& w) -> std::optional<Witness> {
                              auto x = v.basis(w[0]), y = v.basis(w[1]);
                              auto lhs = v.d(v.mul(x, y));
                              auto rhs = v.mul(v.d(x), y);
                              rhs.add_signed(v.mul(x, v.d(y)), sign_of(v.deg(w[0])));
                              if (lhs == rhs) return std::nullopt;
                              return Witness{sp.name(w[0]) + "," + sp.name(w[1]), show(rhs),
                                             show(lhs)};
                            }));
  std::vector<Word> triples = all_words(a.rank(), 3);
  std::erase_if(triples, [](const Word& w) { return w.size() != 3; });
  parts.push_back(run_check("associativity", "(xy)z = x(yz)", 3, triples,
                            [&](const Word& w) -> std::optional<Witness> {
                              auto x = v.basis(w[0]), y = v.basis(w[1]), z = v.basis(w[2]);
                              auto lhs = v.mul(v.mul(x, y), z);
                              auto rhs = v.mul(x, v.mul(y, z));
                              if (lhs == rhs) return std::nullopt;
                              return Witness{sp.name(w[0]) + "," + sp.name(w[1]) + "," +
                                                 sp.name(w[2]),
                                             show(rhs), show(lhs)};
                            }));
  (void)r;
  return combine("curved-dga axioms", "dc = 0, d^2 = [c,-], Leibniz, associativity, de = 0", 3,
                 parts);
}

CheckReport curved_dga_axioms(const AInfAlgebra& a, int cap) {
  auto direct = curved_dga_axioms_direct(a);
  auto bside = check_algebra(a, cap);
  std::vector<CheckReport> parts{direct, bside};
  if (direct.passed() != bside.passed()) {
    CheckReport mismatch;
    mismatch.name = "dga/b-side agreement";
    mismatch.identity = "axioms hold iff the b-relations hold";
    mismatch.cap = cap;
    mismatch.verdict = Verdict::Fail;
    mismatch.detail = "direct " + to_string(direct.verdict) + ", b-side " + to_string(bside.verdict);
    parts.push_back(mismatch);
  }
  return combine("curved-dga", "curved dg-algebra axioms", cap, parts);
}

// ---------------------------------------------------------------------------

AInfMorphism::AInfMorphism(AlgebraRef source, AlgebraRef target, MultiOp f)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(f)) {
  if (source_->ring() != target_->ring()) throw StructuralError("morphism between different rings");
  if (!source_->grading().same(f_.degree(), 0)) throw StructuralError("morphism must have degree 0");
  if (f_.find({})) throw StructuralError("morphisms with an f_0 term are not supported");
  require_homogeneous(source_->shifted(), target_->shifted(), f_, 0, false, "f");
}

Vec<Word> AInfMorphism::extend(const Vec<Word>& v) const {
  Vec<Word> out(source_->ring());
  for (const auto& [w, c] : v) out.add_scaled(extend(w), c);
  return out;
}

AInfMorphism AInfMorphism::identity(AlgebraRef a) {
  MultiOp f(a->ring(), 0);
  for (Letter l = 0; l < a->rank(); ++l) f.add({l}, l, Elem::one(a->ring()));
  return AInfMorphism(a, a, std::move(f));
}

CheckReport check_morphism(const AInfMorphism& f, int cap) {
  const auto& A = f.source();
  const auto& B = f.target();
  RingRef r = A.ring();
  auto inputs = all_words(A.rank(), static_cast<std::size_t>(cap));
  auto rel = run_check("morphism relation", "B'F - FB = 0", cap, inputs,
                       [&](const Word& w) -> std::optional<Witness> {
                         Vec<Word> lhs = B.coderivation(f.extend(w));
                         Vec<Word> rhs = f.extend(A.coderivation(w));
                         if (lhs == rhs) return std::nullopt;
                         return Witness{A.render(w), render_words(B, rhs), render_words(B, lhs)};
                       });
  std::vector<Word> unit_inputs;
  for (const auto& w : all_words(A.rank(), std::min<std::size_t>(static_cast<std::size_t>(cap),
                                                                  f.f().max_arity() + 1)))
    if (!w.empty() && std::find(w.begin(), w.end(), A.unit()) != w.end()) unit_inputs.push_back(w);
  auto unit = run_check("morphism unit", "f1(e) = e', f_l(..e..) = 0 for l != 1", cap, unit_inputs,
                        [&](const Word& w) -> std::optional<Witness> {
                          const auto* got = f.f().find(w);
                          Vec<Letter> expected(r);
                          if (w.size() == 1) expected.add(B.unit(), Elem::one(r));
                          Vec<Letter> g = got ? *got : Vec<Letter>(r);
                          if (g == expected) return std::nullopt;
                          return Witness{A.render(w), render_letters(B.space(), expected, "s"),
                                         render_letters(B.space(), g, "s")};
                        });
  return combine("check-morphism", "A-infinity morphism", cap, {rel, unit});
}

AInfMorphism compose_morphisms(const AInfMorphism& g, const AInfMorphism& f) {
  if (f.target_ref() != g.source_ref() && &f.target() != &g.source())
    throw StructuralError("compose_morphisms: target(f) != source(g)");
  const auto& A = f.source();
  RingRef r = A.ring();
  std::size_t cap = std::min({A.arity_cap(), f.target().arity_cap(), g.target().arity_cap()});
  MultiOp out(r, 0);
  for (const auto& w : all_words(A.rank(), cap)) {
    if (w.empty()) continue;
    Vec<Letter> v(r);
    for (const auto& [fw, c] : f.extend(w))
      if (const auto* gv = g.f().find(fw)) v.add_scaled(*gv, c);
    out.set(w, std::move(v));
  }
  return AInfMorphism(f.source_ref(), g.target_ref(), std::move(out));
}

}  // namespace ainf
