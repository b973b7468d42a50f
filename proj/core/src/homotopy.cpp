#include "ainf/homotopy.hpp"

#include <algorithm>

namespace ainf {

// ---------------------------------------------------------------------------
// Interval coalgebra

IntervalCoalgebra IntervalCoalgebra::make(RingRef r) {
  IntervalCoalgebra c;
  c.space = GradedSpace(r, Grading::integer(), {{"p", 0}, {"q", 0}, {"I", -1}});
  c.coproduct[p] = Vec<Word>(r, Word{p, p});
  c.coproduct[q] = Vec<Word>(r, Word{q, q});
  Vec<Word> di(r, Word{p, I});
  di.add(Word{I, q}, Elem::one(r));
  c.coproduct[I] = di;
  Vec<Letter> b(r, p);
  b.add(q, -Elem::one(r));
  c.boundary[I] = b;
  return c;
}

namespace {

Vec<Letter> boundary_of(const IntervalCoalgebra& c, const Vec<Letter>& v) {
  Vec<Letter> out(v.ring());
  for (const auto& [l, x] : v)
    if (auto it = c.boundary.find(l); it != c.boundary.end()) out.add_scaled(it->second, x);
  return out;
}

Vec<Word> coproduct_of(const IntervalCoalgebra& c, Letter l) {
  auto it = c.coproduct.find(l);
  return it == c.coproduct.end() ? Vec<Word>(c.space.ring()) : it->second;
}

std::vector<Letter> letters_of(const GradedSpace& s) {
  std::vector<Letter> out(s.rank());
  for (Letter l = 0; l < s.rank(); ++l) out[l] = l;
  return out;
}

}  // namespace

CheckReport check_interval_coalgebra(const IntervalCoalgebra& c) {
  RingRef r = c.space.ring();
  auto gens = letters_of(c.space);
  auto name = [&](Letter l) { return c.space.name(l); };
  auto square = run_check("interval d^2", "d^2 = 0", 0, gens, [&](Letter l) -> std::optional<Witness> {
    auto got = boundary_of(c, boundary_of(c, Vec<Letter>(r, l)));
    if (got.is_zero()) return std::nullopt;
    return Witness{name(l), "0", render_letters(c.space, got, "")};
  });
  auto coassoc = run_check("interval coassociativity", "(Δ⊗1)Δ = (1⊗Δ)Δ", 0, gens,
                           [&](Letter l) -> std::optional<Witness> {
                             Vec<Word> left(r), right(r);
                             for (const auto& [w, x] : coproduct_of(c, l)) {
                               for (const auto& [u, y] : coproduct_of(c, w[0]))
                                 left.add(Word{u[0], u[1], w[1]}, x * y);
                               for (const auto& [u, y] : coproduct_of(c, w[1]))
                                 right.add(Word{w[0], u[0], u[1]}, x * y);
                             }
                             if (left == right) return std::nullopt;
                             return Witness{name(l), render_word(c.space, left.begin()->first),
                                            right.is_zero() ? "0" : render_word(c.space, right.begin()->first)};
                           });
  auto coder = run_check("interval coderivation", "Δ∂ = (∂⊗1 + 1⊗∂)Δ", 0, gens,
                         [&](Letter l) -> std::optional<Witness> {
                           Vec<Word> left(r), right(r);
                           for (const auto& [x, a] : boundary_of(c, Vec<Letter>(r, l)))
                             left.add_scaled(coproduct_of(c, x), a);
                           for (const auto& [w, a] : coproduct_of(c, l)) {
                             for (const auto& [y, b] : boundary_of(c, Vec<Letter>(r, w[0])))
                               right.add(Word{y, w[1]}, a * b);
                             int s = sign_of(c.space.degree(w[0]));
                             for (const auto& [y, b] : boundary_of(c, Vec<Letter>(r, w[1])))
                               right.add(Word{w[0], y}, a * b, s);
                           }
                           if (left == right) return std::nullopt;
                           return Witness{name(l), std::to_string(left.size()) + " terms",
                                          std::to_string(right.size()) + " terms"};
                         });
  return combine("interval coalgebra", "∂² = 0, coassociative, ∂ a coderivation", 0, {square, coassoc, coder});
}

CheckReport check_interval_algebra(const IntervalCoalgebra& c) {
  RingRef r = c.space.ring();
  std::size_t n = c.space.rank();
  // Dual basis φ_x with degree -|x|.
  auto deg = [&](Letter x) { return -c.space.degree(x); };
  auto mul = [&](Letter a, Letter b) {
    Vec<Letter> out(r);
    for (Letter x = 0; x < n; ++x)
      for (const auto& [w, k] : coproduct_of(c, x))
        if (w[0] == a && w[1] == b) out.add(x, k, sign_of(deg(b) * c.space.degree(a)));
    return out;
  };
  auto mulv = [&](const Vec<Letter>& u, const Vec<Letter>& v) {
    Vec<Letter> out(r);
    for (const auto& [a, x] : u)
      for (const auto& [b, y] : v) out.add_scaled(mul(a, b), x * y);
    return out;
  };
  auto d = [&](Letter a) {
    Vec<Letter> out(r);
    for (Letter x = 0; x < n; ++x) {
      Elem k = boundary_of(c, Vec<Letter>(r, x)).coeff(a);
      out.add(x, k, -sign_of(deg(a)));
    }
    return out;
  };
  auto dv = [&](const Vec<Letter>& u) {
    Vec<Letter> out(r);
    for (const auto& [a, x] : u) out.add_scaled(d(a), x);
    return out;
  };
  auto name = [&](Letter x) { return "e_" + c.space.name(x); };
  std::vector<Word> triples = all_words(n, 3), pairs = all_words(n, 2);
  std::erase_if(triples, [](const Word& w) { return w.size() != 3; });
  std::erase_if(pairs, [](const Word& w) { return w.size() != 2; });
  auto render = [&](const Vec<Letter>& v) {
    std::string s;
    for (const auto& [x, k] : v) s += (s.empty() ? "" : " + ") + k.str() + " " + name(x);
    return s.empty() ? std::string("0") : s;
  };
  auto assoc = run_check("interval algebra associativity", "(xy)z = x(yz)", 0, triples,
                         [&](const Word& w) -> std::optional<Witness> {
                           Vec<Letter> x(r, w[0]), y(r, w[1]), z(r, w[2]);
                           auto left = mulv(mulv(x, y), z), right = mulv(x, mulv(y, z));
                           if (left == right) return std::nullopt;
                           return Witness{name(w[0]) + name(w[1]) + name(w[2]), render(left), render(right)};
                         });
  Vec<Letter> one(r);
  one.add(IntervalCoalgebra::p, Elem::one(r));
  one.add(IntervalCoalgebra::q, Elem::one(r));
  auto unit = run_check("interval algebra unit", "1 = e_p + e_q", 0, letters_of(c.space),
                        [&](Letter a) -> std::optional<Witness> {
                          Vec<Letter> x(r, a);
                          if (mulv(one, x) == x && mulv(x, one) == x) return std::nullopt;
                          return Witness{name(a), render(x), render(mulv(one, x))};
                        });
  auto square = run_check("interval algebra d^2", "d² = 0", 0, letters_of(c.space),
                          [&](Letter a) -> std::optional<Witness> {
                            auto got = dv(d(a));
                            if (got.is_zero()) return std::nullopt;
                            return Witness{name(a), "0", render(got)};
                          });
  auto leibniz = run_check("interval algebra Leibniz", "d(xy) = dx y + (-1)^x x dy", 0, pairs,
                           [&](const Word& w) -> std::optional<Witness> {
                             Vec<Letter> x(r, w[0]), y(r, w[1]);
                             auto left = dv(mulv(x, y));
                             auto right = mulv(d(w[0]), y);
                             right.add_signed(mulv(x, d(w[1])), sign_of(deg(w[0])));
                             if (left == right) return std::nullopt;
                             return Witness{name(w[0]) + name(w[1]), render(right), render(left)};
                           });
  return combine("interval algebra", "dual dg-algebra of the interval", 0, {assoc, unit, square, leibniz});
}

// ---------------------------------------------------------------------------
// A∞-homotopies

namespace {

void compositions(std::size_t n, std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    cur.push_back(k);
    compositions(n - k, cur, out);
    cur.pop_back();
  }
}

const std::vector<std::vector<std::size_t>>& compositions_of(std::size_t n) {
  static std::mutex lock;
  static std::map<std::size_t, std::vector<std::vector<std::size_t>>> cache;
  std::lock_guard guard(lock);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  compositions(n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

Vec<Word> extend_words(const AInfHomotopy& h, const Vec<Word>& v) {
  Vec<Word> out(h.f->target().ring());
  for (const auto& [w, c] : v) out.add_scaled(homotopy_extend(h, w), c);
  return out;
}

Vec<Word> homotopy_extend_with(const GradedSpace& src, const MultiOp& f, const MultiOp& h, const MultiOp& g,
                               const Word& w) {
  Vec<Word> out(f.ring());
  if (w.empty()) return out;
  for (const auto& blocks : compositions_of(w.size()))
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      std::vector<const MultiOp*> ops(blocks.size(), &f);
      ops[j] = &h;
      for (std::size_t i = j + 1; i < blocks.size(); ++i) ops[i] = &g;
      out += koszul_apply(src, ops, blocks, w);
    }
  return out;
}

std::vector<Word> words_up_to(std::size_t rank, int cap) {
  return all_words(rank, static_cast<std::size_t>(std::max(cap, 0)));
}

}  // namespace

Vec<Word> homotopy_extend(const AInfHomotopy& h, const Word& w) {
  return homotopy_extend_with(h.f->source().shifted(), h.f->f(), h.h, h.g->f(), w);
}

CheckReport check_ainf_homotopy(const AInfHomotopy& h, int cap) {
  const auto& src = h.f->source();
  const auto& tgt = h.f->target();
  auto fm = check_morphism(*h.f, cap);
  fm.name = "f: " + fm.name;
  auto gm = check_morphism(*h.g, cap);
  gm.name = "g: " + gm.name;
  auto words = words_up_to(src.rank(), cap);
  auto id = run_check("A∞ homotopy", "B'H + HB = F - G", cap, words, [&](const Word& w) -> std::optional<Witness> {
    auto got = tgt.coderivation(homotopy_extend(h, w)) + extend_words(h, src.coderivation(w));
    auto expected = h.f->extend(w) - h.g->extend(w);
    if (got == expected) return std::nullopt;
    return Witness{src.render(w), render_words(tgt, expected), render_words(tgt, got)};
  });
  return combine("A∞ homotopy", "f, g morphisms and B'H + HB = F - G", cap, {fm, gm, id});
}

std::shared_ptr<const AInfMorphism> homotopy_flow(const AInfMorphism& f, const MultiOp& h, std::size_t cap) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  if (!apply_op(h, Vec<Word>(src.ring(), Word{})).is_zero() ||
      !apply_op(h, src.coderivation(Word{})).is_zero())
    throw PreconditionFailure("homotopy_flow: h(b0) is not zero");
  MultiOp g(f.f().ring(), 0);
  for (const auto& w : all_words(src.rank(), cap)) {
    if (w.empty()) continue;
    Vec<Letter> v(tgt.ring());
    if (const auto* fw = f.f().find(w)) v = *fw;
    v -= tgt.apply_b(homotopy_extend_with(src.shifted(), f.f(), h, g, w));
    v -= apply_op(h, src.coderivation(w));
    if (!v.is_zero()) g.set(w, std::move(v));
  }
  return std::make_shared<const AInfMorphism>(f.source_ref(), f.target_ref(), std::move(g));
}

// ---------------------------------------------------------------------------
// Derivations

HomotopyDerivation::HomotopyDerivation(AInfHomotopy h, UeRef source, UeRef target)
    : h_(std::move(h)), source_(std::move(source)), target_(std::move(target)) {}

UVec HomotopyDerivation::operator()(const UWord& u) const {
  RingRef r = target_->ring();
  UVec out(r);
  Degree prefix = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    UWord before(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(i));
    UWord after(u.begin() + static_cast<std::ptrdiff_t>(i + 1), u.end());
    UVec mid(r);
    for (const auto& [w, c] : homotopy_extend(h_, u[i])) mid.add(UWord{w}, c);
    auto left = ue_map(*h_.f, *target_, before);
    auto right = ue_map(*h_.g, *target_, after);
    out.add_signed(target_->mul(target_->mul(left, mid), right), sign_of(prefix));
    prefix += source_->degree(u[i]);
  }
  return target_->normal_form(out);
}

UVec HomotopyDerivation::operator()(const UVec& v) const {
  UVec out(target_->ring());
  for (const auto& [u, c] : v) out.add_scaled((*this)(u), c);
  return out;
}

CheckReport check_homotopy_derivation(const HomotopyDerivation& d, int cap) {
  const auto& src = d.source();
  const auto& tgt = d.target();
  const auto& f = *d.homotopy().f;
  const auto& g = *d.homotopy().g;
  auto basis = src.basis(static_cast<std::size_t>(cap));
  std::vector<std::pair<UWord, UWord>> pairs;
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (uweight(a) + uweight(b) <= static_cast<std::size_t>(cap)) pairs.emplace_back(a, b);
  auto law = run_check("derivation law", "D(xy) = D(x)g(y) + (-1)^x f(x)D(y)", cap, pairs,
                       [&](const std::pair<UWord, UWord>& p) -> std::optional<Witness> {
                         RingRef r = src.ring();
                         auto xy = src.normal_form(src.mul(UVec(r, p.first), UVec(r, p.second)));
                         auto got = d(xy);
                         auto expected = tgt.mul(d(p.first), ue_map(g, tgt, p.second));
                         expected.add_signed(tgt.mul(ue_map(f, tgt, p.first), d(p.second)),
                                             sign_of(src.degree(p.first)));
                         expected = tgt.normal_form(expected);
                         if (got == expected) return std::nullopt;
                         return Witness{src.render(p.first) + " , " + src.render(p.second), tgt.render(expected),
                                        tgt.render(got)};
                       });
  auto chain = run_check("derivation chain condition", "dD + Dd = U_e(g) - U_e(f)", cap, basis,
                         [&](const UWord& u) -> std::optional<Witness> {
                           auto got = tgt.d(d(u)) + d(src.d(u));
                           auto expected = ue_map(g, tgt, u) - ue_map(f, tgt, u);
                           if (got == expected) return std::nullopt;
                           return Witness{src.render(u), tgt.render(expected), tgt.render(got)};
                         });
  return combine("homotopy derivation", "(U_e(f), U_e(g))-derivation", cap, {law, chain});
}

// ---------------------------------------------------------------------------
// U_e contraction

UVec UeHomotopy::h(const UWord& w) const {
  UVec out(u_->ring());
  if (w.size() < 2 || w[0].size() != 1) return out;
  ULetter joined = w[0];
  joined.insert(joined.end(), w[1].begin(), w[1].end());
  UWord nw{std::move(joined)};
  nw.insert(nw.end(), w.begin() + 2, w.end());
  out.add(std::move(nw), Elem::one(u_->ring()), sign_of(u_->degree(w[0])));
  return u_->normal_form(out);
}

UVec UeHomotopy::h(const UVec& v) const {
  UVec out(u_->ring());
  for (const auto& [w, c] : v) out.add_scaled(h(w), c);
  return out;
}

UVec UeHomotopy::t(const UVec& v) const { return v - u_->d(h(v)) - h(u_->d(v)); }

bool UeHomotopy::in_a(const UVec& v) const {
  return std::all_of(v.begin(), v.end(), [](const auto& t) {
    const UWord& w = t.first;
    return w.empty() || (w.size() == 1 && w[0].size() == 1);
  });
}

namespace {

// Cycles of U_e(A) of weight <= cap, degree by degree.
std::vector<UVec> cycle_basis(const UeAlgebra& u, std::size_t cap) {
  RingRef r = u.ring();
  const auto& g = u.base().grading();
  std::map<Degree, std::vector<UWord>> groups;
  for (const auto& w : u.basis(cap)) groups[g.normalize(u.degree(w))].push_back(w);
  std::vector<UVec> out;
  for (const auto& [deg, words] : groups) {
    std::map<UWord, std::size_t> rows;
    std::vector<UVec> images;
    for (const auto& w : words) {
      images.push_back(u.d(w));
      for (const auto& [x, c] : images.back()) rows.try_emplace(x, rows.size());
    }
    Matrix m(rows.size(), std::vector<Elem>(words.size(), Elem::zero(r)));
    for (std::size_t j = 0; j < words.size(); ++j)
      for (const auto& [x, c] : images[j]) m[rows.at(x)][j] = c;
    for (const auto& k : kernel_basis(r, words.size(), m)) {
      UVec v(r);
      for (std::size_t j = 0; j < words.size(); ++j) v.add(words[j], k[j]);
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

UeContraction ue_contraction(UeRef u, int cap) {
  UeContraction out;
  out.report.name = "U_e contraction";
  out.report.identity = "u - a = dĤ(u) for cycles u, T = 1 on A";
  out.report.cap = cap;
  const auto& a = u->base();
  if (a.is_curved() || !a.ring()->is_field()) {
    out.report.verdict = Verdict::Unsupported;
    out.report.detail = a.is_curved() ? "the algebra is curved" : "coefficients are not a field";
    return out;
  }
  RingRef r = a.ring();
  UeHomotopy hom(u);
  std::size_t ucap = static_cast<std::size_t>(cap);
  std::size_t limit = 2 * ucap + 4;
  auto reach = [&](UVec v, std::size_t& steps, std::vector<UVec>* trail) -> std::optional<UVec> {
    for (steps = 0; steps <= limit; ++steps) {
      if (hom.in_a(v)) return v;
      if (trail) trail->push_back(v);
      v = hom.t(v);
    }
    return std::nullopt;
  };

  std::vector<UWord> a_words;
  for (const auto& w : u->basis(1)) a_words.push_back(w);
  auto fixed = run_check("T = 1 on A", "(1 - [d,H]) a = a", cap, a_words, [&](const UWord& w) -> std::optional<Witness> {
    UVec v(r, w);
    auto got = hom.t(v);
    if (got == v) return std::nullopt;
    return Witness{u->render(w), u->render(v), u->render(got)};
  });

  auto all = u->basis(ucap);
  auto reaches = run_check("T reaches A", "(1 - [d,H])^l(u) in A", cap, all, [&](const UWord& w) -> std::optional<Witness> {
    std::size_t steps = 0;
    if (reach(UVec(r, w), steps, nullptr)) return std::nullopt;
    return Witness{u->render(w), "an element of A after <= " + std::to_string(limit) + " steps", "no"};
  });

  auto cycles = cycle_basis(*u, ucap);
  for (const auto& z : cycles) {
    UeCertificate cert;
    cert.u = z;
    std::vector<UVec> trail;
    auto end = reach(z, cert.steps, &trail);
    if (!end) continue;
    cert.a = *end;
    UVec sum(r);
    for (const auto& t : trail) sum += t;
    cert.h_hat = hom.h(sum);
    out.certificates.push_back(std::move(cert));
  }
  auto certified = run_check("cycle certificates", "u - a = dĤ(u)", cap, cycles, [&](const UVec& z) -> std::optional<Witness> {
    auto it = std::find_if(out.certificates.begin(), out.certificates.end(),
                           [&](const UeCertificate& c) { return c.u == z; });
    if (it == out.certificates.end()) return Witness{u->render(z), "a certificate", "T did not reach A"};
    auto got = u->d(it->h_hat);
    auto expected = z - it->a;
    if (got == expected) return std::nullopt;
    return Witness{u->render(z), u->render(expected), u->render(got)};
  });
  out.report = combine(out.report.name, out.report.identity, cap, {fixed, reaches, certified});
  out.report.detail = std::to_string(cycles.size()) + " cycles certified";
  return out;
}

// ---------------------------------------------------------------------------
// Bar transfer

Vec<Letter> DgAlgebraTable::product(Letter x, Letter y) const {
  RingRef r = space.ring();
  if (x == 0) return Vec<Letter>(r, y);
  if (y == 0) return Vec<Letter>(r, x);
  auto it = mult.find({x, y});
  return it == mult.end() ? Vec<Letter>(r) : it->second;
}

namespace {

Vec<Letter> lookup(const std::map<Letter, Vec<Letter>>& m, Letter l, RingRef r) {
  auto it = m.find(l);
  return it == m.end() ? Vec<Letter>(r) : it->second;
}

Vec<Letter> apply_table(const std::map<Letter, Vec<Letter>>& m, const Vec<Letter>& v) {
  Vec<Letter> out(v.ring());
  for (const auto& [l, c] : v) out.add_scaled(lookup(m, l, v.ring()), c);
  return out;
}

}  // namespace

Cone mapping_cone(const BarTransferInput& in) {
  RingRef r = in.source.space.ring();
  const auto& A = in.source;
  const auto& B = in.target;
  Letter nb = static_cast<Letter>(B.space.rank());
  std::vector<Generator> gens = B.space.generators();
  for (const auto& g : A.space.generators()) gens.push_back({"σ" + g.name, g.degree - 1});
  Cone c;
  c.space = GradedSpace(r, B.space.grading(), gens);
  for (Letter b = 0; b < nb; ++b)
    if (auto v = lookup(B.d, b, r); !v.is_zero()) c.d[b] = v;
  for (Letter a = 0; a < A.space.rank(); ++a) {
    Vec<Letter> v = lookup(in.morphism, a, r);
    for (const auto& [x, k] : lookup(A.d, a, r)) v.add(nb + x, -k);
    if (!v.is_zero()) c.d[nb + a] = v;
  }
  auto f = [&in, r](Letter a) { return lookup(in.morphism, a, r); };
  auto shift_in = [nb, r](const Vec<Letter>& v) {
    Vec<Letter> out(r);
    for (const auto& [x, k] : v) out.add(nb + x, k);
    return out;
  };
  c.left = [A, B, f, shift_in, nb, r](Letter a, Letter x) {
    Vec<Letter> out(r);
    if (x < nb) {
      for (const auto& [y, k] : f(a))
        out.add_scaled(B.product(y, x), k);
      return out;
    }
    return shift_in(A.product(a, x - nb)).scaled(Elem::from_int(r, sign_of(A.space.degree(a))));
  };
  c.right = [A, B, f, shift_in, nb, r](Letter x, Letter a) {
    Vec<Letter> out(r);
    if (x < nb) {
      for (const auto& [y, k] : f(a)) out.add_scaled(B.product(x, y), k);
      return out;
    }
    return shift_in(A.product(x - nb, a));
  };
  return c;
}

std::optional<std::map<Letter, Vec<Letter>>> solve_contraction(const GradedSpace& space,
                                                               const std::map<Letter, Vec<Letter>>& d) {
  RingRef r = space.ring();
  const auto& g = space.grading();
  std::size_t n = space.rank();
  std::vector<std::pair<Letter, Letter>> unknowns;  // h(i) has a j component
  for (Letter i = 0; i < n; ++i)
    for (Letter j = 0; j < n; ++j)
      if (g.same(space.degree(j), space.degree(i) - 1)) unknowns.emplace_back(i, j);
  // (dh + hd)(i) = i, row (i, k).
  Matrix m(n * n, std::vector<Elem>(unknowns.size(), Elem::zero(r)));
  std::vector<Elem> rhs(n * n, Elem::zero(r));
  for (Letter i = 0; i < n; ++i) rhs[i * n + i] = Elem::one(r);
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    auto [i, j] = unknowns[u];
    // d(h(i)) picks up d(j) in row i.
    for (const auto& [k, c] : lookup(d, j, r)) m[i * n + k][u] += c;
    // h(d(x)) for every x whose differential contains i.
    for (Letter x = 0; x < n; ++x) {
      Elem c = lookup(d, x, r).coeff(i);
      if (!c.is_zero()) m[x * n + j][u] += c;
    }
  }
  auto sol = solve_linear(r, unknowns.size(), m, rhs);
  if (std::holds_alternative<NoSolution>(sol)) return std::nullopt;
  const auto& x = std::get<std::vector<Elem>>(sol);
  std::map<Letter, Vec<Letter>> h;
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    if (x[u].is_zero()) continue;
    auto [it, inserted] = h.try_emplace(unknowns[u].first, Vec<Letter>(r));
    it->second.add(unknowns[u].second, x[u]);
  }
  return h;
}

namespace {

// A bar word: key[0] = k, then m, a_1..a_k, c, a'_1..a'_l.
struct BarComplex {
  const BarTransferInput& in;
  Cone cone;
  std::map<Letter, Vec<Letter>> h;
  RingRef r;

  enum Part { Mod, Alg, Con };

  Part part(const Word& key, std::size_t i) const {
    std::size_t k = key[0];
    if (i == 1) return Mod;
    if (i == k + 2) return Con;
    return Alg;
  }
  const GradedSpace& space(Part p) const {
    return p == Mod ? in.module : p == Alg ? in.source.space : cone.space;
  }
  Degree degree(const Word& key, std::size_t i) const { return space(part(key, i)).degree(key[i]); }
  std::size_t weight(const Word& key) const { return key.size() - 3; }

  Vec<Letter> d_of(Part p, Letter x) const {
    if (p == Mod) return lookup(in.module_d, x, r);
    if (p == Alg) return lookup(in.source.d, x, r);
    return lookup(cone.d, x, r);
  }

  Vec<Word> d(const Word& key) const {
    Vec<Word> out(r);
    Degree prefix = 0;
    for (std::size_t i = 1; i < key.size(); ++i) {
      for (const auto& [y, c] : d_of(part(key, i), key[i])) {
        Word w = key;
        w[i] = y;
        out.add(std::move(w), c, sign_of(prefix));
      }
      prefix += degree(key, i) + 1;
    }
    return out;
  }

  Vec<Letter> module_product(Letter m, Letter a) const {
    if (a == 0) return Vec<Letter>(r, m);
    auto it = in.module_act.find({m, a});
    return it == in.module_act.end() ? Vec<Letter>(r) : it->second;
  }

  Vec<Word> bar(const Word& key) const {
    Vec<Word> out(r);
    std::size_t k = key[0];
    Degree prefix = 0;
    for (std::size_t i = 1; i + 1 < key.size(); ++i) {
      Part p = part(key, i), q = part(key, i + 1);
      Vec<Letter> prod(r);
      std::size_t nk = k;
      if (p == Mod && q == Alg) {
        prod = module_product(key[i], key[i + 1]);
        --nk;
      } else if (p == Alg && q == Alg) {
        prod = in.source.product(key[i], key[i + 1]);
        if (i <= k) --nk;
      } else if (p == Alg && q == Con) {
        prod = cone.left(key[i], key[i + 1]);
        --nk;
      } else if (p == Con && q == Alg) {
        prod = cone.right(key[i], key[i + 1]);
      } else {
        prefix += degree(key, i) + 1;
        continue;
      }
      int s = sign_of(prefix + degree(key, i) + 1);
      for (const auto& [y, c] : prod) {
        Word w;
        w.reserve(key.size() - 1);
        w.push_back(static_cast<Letter>(nk));
        w.insert(w.end(), key.begin() + 1, key.begin() + static_cast<std::ptrdiff_t>(i));
        w.push_back(y);
        w.insert(w.end(), key.begin() + static_cast<std::ptrdiff_t>(i + 2), key.end());
        out.add(std::move(w), c, s);
      }
      prefix += degree(key, i) + 1;
    }
    return out;
  }

  Vec<Word> hx(const Word& key) const {
    Vec<Word> out(r);
    std::size_t pos = key[0] + 2;
    Degree prefix = 0;
    for (std::size_t i = 1; i < pos; ++i) prefix += degree(key, i) + 1;
    for (const auto& [y, c] : lookup(h, key[pos], r)) {
      Word w = key;
      w[pos] = y;
      out.add(std::move(w), c, sign_of(prefix));
    }
    return out;
  }

  template <class Fn>
  Vec<Word> linear(const Vec<Word>& v, Fn&& fn) const {
    Vec<Word> out(r);
    for (const auto& [w, c] : v) out.add_scaled(fn(w), c);
    return out;
  }

  std::vector<Word> basis(std::size_t cap) const {
    std::vector<Word> out;
    std::size_t na = in.source.space.rank(), nc = cone.space.rank(), nm = in.module.rank();
    for (std::size_t w = 0; w <= cap; ++w)
      for (std::size_t k = 0; k <= w; ++k) {
        std::size_t l = w - k;
        for (const auto& left : all_words(na, k)) {
          if (left.size() != k) continue;
          for (const auto& right : all_words(na, l)) {
            if (right.size() != l) continue;
            for (Letter m = 0; m < nm; ++m)
              for (Letter c = 0; c < nc; ++c) {
                Word key{static_cast<Letter>(k), m};
                key.insert(key.end(), left.begin(), left.end());
                key.push_back(c);
                key.insert(key.end(), right.begin(), right.end());
                out.push_back(std::move(key));
              }
          }
        }
      }
    return out;
  }

  std::string render(const Word& key) const {
    std::string s;
    for (std::size_t i = 1; i < key.size(); ++i) {
      if (i > 1) s += "⊗";
      s += space(part(key, i)).name(key[i]);
    }
    return s;
  }
  std::string render(const Vec<Word>& v) const {
    if (v.is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : v) s += (s.empty() ? "" : " + ") + c.str() + " " + render(w);
    return s;
  }
};

}  // namespace

BarTransferResult bar_transfer_contraction(const BarTransferInput& in, int cap) {
  BarTransferResult out;
  RingRef r = in.source.space.ring();
  BarComplex bc{in, mapping_cone(in), {}, r};
  std::string name = "bar transfer";
  if (in.contraction) {
    bc.h = *in.contraction;
  } else {
    auto solved = solve_contraction(bc.cone.space, bc.cone.d);
    if (!solved) {
      out.report.name = name;
      out.report.verdict = Verdict::Fail;
      out.report.detail = "the cone has no S-linear contraction";
      return out;
    }
    bc.h = *solved;
  }
  auto cone_gens = letters_of(bc.cone.space);
  auto hc = run_check("h contracts C", "dh + hd = 1 on C", cap, cone_gens, [&](Letter x) -> std::optional<Witness> {
    Vec<Letter> got = apply_table(bc.cone.d, lookup(bc.h, x, r)) + apply_table(bc.h, lookup(bc.cone.d, x, r));
    if (got == Vec<Letter>(r, x)) return std::nullopt;
    return Witness{bc.cone.space.name(x), bc.cone.space.name(x), render_letters(bc.cone.space, got, "")};
  });

  auto basis = bc.basis(static_cast<std::size_t>(cap));
  out.basis_size = basis.size();
  auto dv = [&](const Vec<Word>& v) { return bc.linear(v, [&](const Word& w) { return bc.d(w); }); };
  auto bv = [&](const Vec<Word>& v) { return bc.linear(v, [&](const Word& w) { return bc.bar(w); }); };
  auto hv = [&](const Vec<Word>& v) { return bc.linear(v, [&](const Word& w) { return bc.hx(w); }); };
  auto structure = run_check("bar complex", "d² = 0, B² = 0, dB + Bd = 0", cap, basis,
                             [&](const Word& w) -> std::optional<Witness> {
                               Vec<Word> x(r, w);
                               if (!dv(dv(x)).is_zero()) return Witness{bc.render(w), "d² = 0", bc.render(dv(dv(x)))};
                               if (!bv(bv(x)).is_zero()) return Witness{bc.render(w), "B² = 0", bc.render(bv(bv(x)))};
                               auto mixed = dv(bv(x)) + bv(dv(x));
                               if (!mixed.is_zero()) return Witness{bc.render(w), "dB + Bd = 0", bc.render(mixed)};
                               return std::nullopt;
                             });
  auto promoted = run_check("promoted h", "dh + hd = 1 on the bar complex", cap, basis,
                            [&](const Word& w) -> std::optional<Witness> {
                              Vec<Word> x(r, w);
                              auto got = dv(hv(x)) + hv(dv(x));
                              if (got == x) return std::nullopt;
                              return Witness{bc.render(w), bc.render(x), bc.render(got)};
                            });
  std::size_t max_terms = 0;
  auto H = [&](const Vec<Word>& x, std::size_t* terms) {
    Vec<Word> acc(r), y = x;
    std::size_t j = 0;
    while (!y.is_zero()) {
      auto z = hv(y);
      acc += z;
      y = -bv(z);
      ++j;
    }
    if (terms) *terms = j;
    return acc;
  };
  for (const auto& w : basis) {
    std::size_t j = 0;
    H(Vec<Word>(r, w), &j);
    max_terms = std::max(max_terms, j);
  }
  out.max_series_terms = max_terms;
  auto contraction = run_check("bar contraction", "(d+B)H + H(d+B) = 1", cap, basis,
                               [&](const Word& w) -> std::optional<Witness> {
                                 Vec<Word> x(r, w);
                                 auto hx = H(x, nullptr);
                                 auto got = dv(hx) + bv(hx) + H(dv(x) + bv(x), nullptr);
                                 if (got == x) return std::nullopt;
                                 return Witness{bc.render(w), bc.render(x), bc.render(got)};
                               });
  out.report = combine(name, "1 = (d+B)H + H(d+B) with H = h Σ (-Bh)^i", cap, {hc, structure, promoted, contraction});
  out.report.detail = std::to_string(basis.size()) + " basis words, series length <= " + std::to_string(max_terms);
  return out;
}

BarTransferInput acyclic_pair_transfer(RingRef r) {
  BarTransferInput in;
  Grading z = Grading::integer();
  in.source.space = GradedSpace(r, z, {{"1", 0}});
  in.target.space = GradedSpace(r, z, {{"1", 0}, {"t", -1}, {"s", 0}});
  in.target.d[1] = Vec<Letter>(r, 2);
  in.morphism[0] = Vec<Letter>(r, 0);
  in.module = GradedSpace(r, z, {{"m", 0}});
  return in;
}

BarTransferInput dual_numbers_transfer(RingRef r) {
  BarTransferInput in;
  Grading z = Grading::integer();
  in.source.space = GradedSpace(r, z, {{"1", 0}, {"a", 0}});
  // 1, a, t, at, s, as
  in.target.space = GradedSpace(r, z, {{"1", 0}, {"a", 0}, {"t", -1}, {"at", -1}, {"s", 0}, {"as", 0}});
  in.target.d[2] = Vec<Letter>(r, 4);
  in.target.d[3] = Vec<Letter>(r, 5);
  auto& m = in.target.mult;
  m[{1, 2}] = Vec<Letter>(r, 3);
  m[{2, 1}] = Vec<Letter>(r, 3);
  m[{1, 4}] = Vec<Letter>(r, 5);
  m[{4, 1}] = Vec<Letter>(r, 5);
  in.morphism[0] = Vec<Letter>(r, 0);
  in.morphism[1] = Vec<Letter>(r, 1);
  in.module = GradedSpace(r, z, {{"m", 0}});
  return in;
}

// ---------------------------------------------------------------------------
// Quillen components

CheckReport check_inclusion_square(const AInfMorphism& f, const UeAlgebra& source, const UeAlgebra& target,
                                   int cap) {
  const auto& src = f.source();
  std::vector<Word> words = words_up_to(src.rank(), cap);
  std::erase_if(words, [](const Word& w) { return w.empty(); });
  return run_check("inclusion square", "i∘f = U_e(f)∘i", cap, words, [&](const Word& w) -> std::optional<Witness> {
    RingRef r = target.ring();
    // (i∘f)(w) = Σ i_j(f(w_1) ... f(w_j)) with i_j(v) = σω[v].
    UVec left(r);
    for (const auto& [v, c] : f.extend(w)) left.add(UWord{v}, c);
    left = target.normal_form(left);
    auto right = ue_map(f, target, source.normal_form(UWord{w}));
    if (left == right) return std::nullopt;
    return Witness{src.render(w), target.render(right), target.render(left)};
  });
}

CheckReport quillen_classical_components(std::shared_ptr<const AInfMorphism> f,
                                         const std::optional<AInfHomotopy>& homotopy, int cap) {
  std::string name = "Quillen components";
  std::string identity = "square, derivation, U_e contractions (constituents only)";
  const auto& src = f->source();
  const auto& tgt = f->target();
  if (src.is_curved() || tgt.is_curved() || !src.ring()->is_field()) {
    CheckReport r;
    r.name = name;
    r.identity = identity;
    r.cap = cap;
    r.verdict = Verdict::Unsupported;
    r.detail = "requires uncurved algebras over a field";
    return r;
  }
  auto us = std::make_shared<const UeAlgebra>(f->source_ref());
  auto ut = std::make_shared<const UeAlgebra>(f->target_ref());
  std::vector<CheckReport> parts;
  parts.push_back(check_morphism(*f, cap));
  parts.push_back(check_inclusion_square(*f, *us, *ut, cap));
  if (homotopy) {
    parts.push_back(check_ainf_homotopy(*homotopy, cap));
    parts.push_back(check_homotopy_derivation(HomotopyDerivation(*homotopy, us, ut), cap));
  }
  auto cs = ue_contraction(us, cap).report;
  cs.name = "source " + cs.name;
  auto ct = ue_contraction(ut, cap).report;
  ct.name = "target " + ct.name;
  parts.push_back(cs);
  parts.push_back(ct);
  auto out = combine(name, identity, cap, parts);
  out.detail = "the equivalence of the model structures is not checked";
  return out;
}

}  // namespace ainf
