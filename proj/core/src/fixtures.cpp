#include "ainf/fixtures.hpp"

#include <algorithm>

namespace ainf {

Vec<Letter> AssocAlgebra::product(Letter x, Letter y) const {
  if (x == 0) return Vec<Letter>(ring, y);
  if (y == 0) return Vec<Letter>(ring, x);
  auto it = mult.find({x, y});
  return it == mult.end() ? Vec<Letter>(ring) : it->second;
}

Vec<Letter> AssocAlgebra::product(const Vec<Letter>& x, const Vec<Letter>& y) const {
  Vec<Letter> out(ring);
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add_scaled(product(a, b), ca * cb);
  return out;
}

Vec<Letter> AssocAlgebra::commutator(const Vec<Letter>& x, Degree dx, const Vec<Letter>& y,
                                     Degree dy) const {
  Vec<Letter> out = product(x, y);
  out.add_signed(product(y, x), -sign_of(dx * dy));
  return out;
}

AssocAlgebra dual_numbers(RingRef r, const Elem& alpha) {
  AssocAlgebra a{r, Grading::cyclic(2), {{"e", 0}, {"xi", 1}}, {}};
  Vec<Letter> sq(r);
  sq.add(0, alpha);
  a.mult[{1, 1}] = sq;
  return a;
}

AssocAlgebra upper_triangular(RingRef r) {
  AssocAlgebra a{r, Grading::integer(), {{"e", 0}, {"p", 0}, {"n", 1}}, {}};
  a.mult[{1, 1}] = Vec<Letter>(r, 1);
  a.mult[{1, 2}] = Vec<Letter>(r, 2);
  return a;
}

AssocAlgebra split_product(RingRef r) {
  AssocAlgebra a{r, Grading::cyclic(2), {{"e", 0}, {"p", 0}}, {}};
  a.mult[{1, 1}] = Vec<Letter>(r, 1);
  return a;
}

AssocAlgebra truncated_cubic(RingRef r, const Elem& a3, const Elem& b3, const Elem& c3, Grading g,
                             Degree t_degree) {
  AssocAlgebra a{r, g, {{"e", 0}, {"t", t_degree}, {"t2", 2 * t_degree}}, {}};
  Vec<Letter> cube(r);  // t³
  cube.add(2, a3);
  cube.add(1, b3);
  cube.add(0, c3);
  if (!cube.is_zero() && !g.is_cyclic())
    throw StructuralError("truncated_cubic: inhomogeneous relation needs a cyclic grading");
  a.mult[{1, 1}] = Vec<Letter>(r, 2);
  a.mult[{1, 2}] = cube;
  a.mult[{2, 1}] = cube;
  // t⁴ = t·t³
  Vec<Letter> t4(r);
  t4.add_scaled(cube, a3);
  t4.add(2, b3);
  t4.add(1, c3);
  a.mult[{2, 2}] = t4;
  return a;
}

DgaData inner_curved(const AssocAlgebra& a, const Vec<Letter>& theta, Degree theta_degree) {
  if (!is_odd(theta_degree)) throw StructuralError("inner_curved: theta must be odd");
  DgaData d{a, a.product(theta, theta), {}};
  for (Letter x = 0; x < a.rank(); ++x) {
    auto v = a.commutator(theta, theta_degree, Vec<Letter>(a.ring, x), a.deg(x));
    if (!v.is_zero()) d.diff[x] = std::move(v);
  }
  return d;
}

DgaData central_curved(const AssocAlgebra& a, const Vec<Letter>& c) {
  for (Letter x = 0; x < a.rank(); ++x) {
    Vec<Letter> vx(a.ring, x);
    if (a.product(c, vx) != a.product(vx, c)) throw StructuralError("central_curved: c is not central");
  }
  return DgaData{a, c, {}};
}

MultiOp dga_m_table(const DgaData& d) {
  const auto& a = d.alg;
  MultiOp m(a.ring, 0);
  if (!d.curvature.is_zero()) m.set({}, d.curvature);
  for (const auto& [x, v] : d.diff)
    if (!v.is_zero()) m.set({x}, v);
  for (Letter x = 0; x < a.rank(); ++x)
    for (Letter y = 0; y < a.rank(); ++y) {
      auto v = a.product(x, y);
      if (!v.is_zero()) m.set({x, y}, std::move(v));
    }
  return m;
}

AlgebraRef build_algebra(const DgaData& d, std::size_t arity_cap) {
  GradedSpace space(d.alg.ring, d.alg.grading, d.alg.gens);
  MultiOp b = m_to_b(space, dga_m_table(d));
  return std::make_shared<AInfAlgebra>(std::move(space), 0, std::move(b), arity_cap);
}

DgModuleData twisted_regular(const DgaData& d, const Vec<Letter>& theta, std::vector<Degree> shifts) {
  const auto& a = d.alg;
  RingRef r = a.ring;
  std::size_t n = a.rank();
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < shifts.size(); ++i)
    for (Letter j = 0; j < n; ++j)
      gens.push_back({"g" + std::to_string(i) + "." + a.gens[j].name, shifts[i] + a.deg(j)});
  DgModuleData m{GradedSpace(r, a.grading, gens), {}, {}};
  auto embed = [&](std::size_t i, const Vec<Letter>& v) {
    Vec<Letter> out(r);
    for (const auto& [l, c] : v) out.add(static_cast<Letter>(i * n + l), c);
    return out;
  };
  for (std::size_t i = 0; i < shifts.size(); ++i)
    for (Letter j = 0; j < n; ++j) {
      Letter k = static_cast<Letter>(i * n + j);
      Vec<Letter> aj(r, j);
      auto dv = embed(i, a.product(aj, theta));
      if (!dv.is_zero()) m.d[k] = dv.scaled(Elem::from_int(r, -sign_of(shifts[i] + a.deg(j))));
      for (Letter x = 1; x < n; ++x) {
        auto v = embed(i, a.product(j, x));
        if (!v.is_zero()) m.act[{k, x}] = std::move(v);
      }
    }
  return m;
}

DgModuleData koszul_pair(const DgaData& d, Degree shift) {
  const auto& a = d.alg;
  RingRef r = a.ring;
  std::size_t n = a.rank();
  std::vector<Generator> gens;
  for (int v = 0; v < 2; ++v)
    for (Letter j = 0; j < n; ++j)
      gens.push_back({"v" + std::to_string(v) + "." + a.gens[j].name, shift + v + a.deg(j)});
  DgModuleData m{GradedSpace(r, a.grading, gens), {}, {}};
  for (Letter j = 0; j < n; ++j) {
    m.d[j] = Vec<Letter>(r, static_cast<Letter>(n + j));
    Vec<Letter> ca = a.product(d.curvature, Vec<Letter>(r, j));
    Vec<Letter> v(r);
    for (const auto& [l, c] : ca) v.add(l, -c);
    if (!v.is_zero()) m.d[static_cast<Letter>(n + j)] = v;
    for (Letter x = 1; x < n; ++x)
      for (Letter half = 0; half < 2; ++half) {
        Vec<Letter> out(r);
        for (const auto& [l, c] : a.product(j, x)) out.add(static_cast<Letter>(half * n + l), c);
        if (!out.is_zero()) m.act[{static_cast<Letter>(half * n + j), x}] = std::move(out);
      }
  }
  return m;
}

std::shared_ptr<TableModule> build_module(AlgebraRef a, const DgModuleData& m, std::size_t) {
  DgModuleTable t{a, m.space.shift(), m.d, {}};
  for (const auto& [key, v] : m.act) t.act[{key.first, Word{key.second}}] = v;
  return ue_to_module(t);
}

// ---------------------------------------------------------------------------

Elem random_elem(Rng& rng, RingRef r, bool nonzero) {
  for (;;) {
    Elem e;
    switch (r->kind()) {
      case RingKind::IntegersModN:
        e = Elem::from_mpz(r, mpz_class(rng.uniform(0, 1 << 20)));
        break;
      case RingKind::Rationals:
      {
        mpq_class q(mpz_class(rng.uniform(-5, 5)), mpz_class(rng.uniform(1, 4)));
        q.canonicalize();
        e = Elem::from_mpq(r, q);
      }
        break;
      default:
        e = Elem::from_int(r, rng.uniform(-3, 3));
        break;
    }
    if (!nonzero || !e.is_zero()) return e;
  }
}

namespace {

Elem random_unit(Rng& rng, RingRef r) {
  for (;;) {
    Elem e = random_elem(rng, r, true);
    if (e.is_unit()) return e;
  }
}

// Triangular degree-preserving automorphism fixing letter `fixed`: the image
// of x is u_x (x + Σ_{y<x, |y|=|x|} n_{yx} y), with its inverse.
struct LinearIso {
  std::vector<Vec<Letter>> fwd, inv;

  Vec<Letter> apply(const std::vector<Vec<Letter>>& m, const Vec<Letter>& v, RingRef r) const {
    Vec<Letter> out(r);
    for (const auto& [l, c] : v) out.add_scaled(m[l], c);
    return out;
  }
};

LinearIso random_iso(Rng& rng, RingRef r, const Grading& g, const std::vector<Degree>& degs,
                     std::optional<Letter> fixed) {
  std::size_t n = degs.size();
  LinearIso iso;
  iso.fwd.assign(n, Vec<Letter>(r));
  for (Letter x = 0; x < n; ++x) {
    if (fixed && x == *fixed) {
      iso.fwd[x] = Vec<Letter>(r, x);
      continue;
    }
    Elem u = random_unit(rng, r);
    Vec<Letter> v(r);
    v.add(x, u);
    for (Letter y = 0; y < x; ++y)
      if (g.same(degs[y], degs[x]) && rng.coin()) v.add(y, u * random_elem(rng, r));
    iso.fwd[x] = v;
  }
  // Back substitution: x = (fwd[x] - Σ_{y<x} c_y y) / u_x.
  iso.inv.assign(n, Vec<Letter>(r));
  for (Letter x = 0; x < n; ++x) {
    Elem ux = iso.fwd[x].coeff(x);
    Elem uinv = *ux.inverse();
    Vec<Letter> v(r, x);
    for (const auto& [y, c] : iso.fwd[x])
      if (y != x) v.add_scaled(iso.inv[y], -c);
    iso.inv[x] = v.scaled(uinv);
  }
  return iso;
}

MultiOp transport_table(const MultiOp& m, const LinearIso& iso, RingRef r, std::size_t rank) {
  MultiOp out(r, m.degree());
  std::size_t max_arity = m.max_arity();
  for (const auto& w : all_words(rank, max_arity)) {
    std::vector<Vec<Letter>> args;
    for (Letter l : w) args.push_back(iso.inv[l]);
    auto v = iso.apply(iso.fwd, apply_multilinear(m, args), r);
    if (!v.is_zero()) out.set(w, std::move(v));
  }
  return out;
}

std::vector<Degree> degrees_of(const std::vector<Generator>& gens) {
  std::vector<Degree> d;
  for (const auto& g : gens) d.push_back(g.degree);
  return d;
}

DgaData transport_dga(const DgaData& d, const LinearIso& iso) {
  const auto& a = d.alg;
  RingRef r = a.ring;
  DgaData out{a, iso.apply(iso.fwd, d.curvature, r), {}};
  out.alg.mult.clear();
  for (Letter x = 1; x < a.rank(); ++x)
    for (Letter y = 1; y < a.rank(); ++y) {
      auto v = iso.apply(iso.fwd, a.product(iso.inv[x], iso.inv[y]), r);
      if (!v.is_zero()) out.alg.mult[{x, y}] = std::move(v);
    }
  for (Letter x = 0; x < a.rank(); ++x) {
    Vec<Letter> dx(r);
    for (const auto& [l, c] : iso.inv[x]) {
      auto it = d.diff.find(l);
      if (it != d.diff.end()) dx.add_scaled(it->second, c);
    }
    dx = iso.apply(iso.fwd, dx, r);
    if (!dx.is_zero()) out.diff[x] = std::move(dx);
  }
  return out;
}

}  // namespace

MultiOp random_basis_change(Rng& rng, const GradedSpace& space, Letter unit, const MultiOp& m) {
  auto iso = random_iso(rng, space.ring(), space.grading(), degrees_of(space.generators()), unit);
  return transport_table(m, iso, space.ring(), space.rank());
}

RandomDga random_dga(Rng& rng, RingRef r, bool require_curved) {
  RandomDga out;
  for (;;) {
    long family = rng.uniform(0, 4);
    if (require_curved && family == 1) continue;
    switch (family) {
      case 0: {
        Elem alpha = random_elem(rng, r, require_curved);
        auto a = dual_numbers(r, alpha);
        Vec<Letter> theta(r);
        theta.add(1, random_elem(rng, r, true));
        out.data = inner_curved(a, theta, 1);
        out.theta = theta;
        out.family = "dual-numbers";
        break;
      }
      case 1: {
        auto a = upper_triangular(r);
        Vec<Letter> theta(r);
        theta.add(2, random_elem(rng, r, true));
        out.data = inner_curved(a, theta, 1);
        out.theta = theta;
        out.family = "upper-triangular";
        break;
      }
      case 2: {
        auto a = split_product(r);
        Vec<Letter> c(r);
        c.add(0, random_elem(rng, r));
        c.add(1, random_elem(rng, r));
        out.data = central_curved(a, c);
        out.family = "split-product";
        break;
      }
      case 3: {
        auto a = truncated_cubic(r, random_elem(rng, r), random_elem(rng, r), random_elem(rng, r),
                                 Grading::cyclic(2), 0);
        Vec<Letter> c(r);
        for (Letter l = 0; l < 3; ++l) c.add(l, random_elem(rng, r));
        out.data = central_curved(a, c);
        out.family = "cubic";
        break;
      }
      default: {
        auto a = truncated_cubic(r, Elem::zero(r), Elem::zero(r), Elem::zero(r), Grading::integer(), 2);
        Vec<Letter> c(r);
        c.add(1, random_elem(rng, r, require_curved));
        out.data = central_curved(a, c);
        out.family = "graded-cubic";
        break;
      }
    }
    if (require_curved && out.data.curvature.is_zero()) continue;
    break;
  }
  const auto& a = out.data.alg;
  auto iso = random_iso(rng, r, a.grading, degrees_of(a.gens), Letter{0});
  out.data = transport_dga(out.data, iso);
  if (out.theta) out.theta = iso.apply(iso.fwd, *out.theta, r);
  return out;
}

AlgebraRef random_curved_algebra(Rng& rng, RingRef r, std::size_t arity_cap, bool require_curved,
                                 std::string* family) {
  auto d = random_dga(rng, r, require_curved);
  if (family) *family = d.family;
  return build_algebra(d.data, arity_cap);
}

AlgebraRef mutate_algebra(Rng& rng, const AInfAlgebra& a) {
  const auto& s = a.shifted();
  RingRef r = a.ring();
  std::vector<Letter> letters;
  for (Letter l = 0; l < a.rank(); ++l)
    if (l != a.unit()) letters.push_back(l);
  MultiOp b = a.b();
  if (!letters.empty()) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      std::size_t arity = (a.arity_cap() >= 3 && rng.coin()) ? 3 : 2;
      Word w;
      for (std::size_t i = 0; i < arity; ++i) w.push_back(rng.pick(letters));
      Degree target = word_degree(s, w) + 1;
      std::vector<Letter> outs;
      for (Letter l = 0; l < a.rank(); ++l)
        if (a.grading().same(s.degree(l), target)) outs.push_back(l);
      if (outs.empty()) continue;
      b.add(w, rng.pick(outs), random_elem(rng, r, true));
      return std::make_shared<AInfAlgebra>(a.space(), a.unit(), std::move(b), a.arity_cap());
    }
  }
  return std::make_shared<AInfAlgebra>(a);
}

AlgebraModulePair random_pair(Rng& rng, RingRef r, bool require_curved, std::size_t arity_cap) {
  auto d = random_dga(rng, r, require_curved);
  AlgebraRef a = build_algebra(d.data, arity_cap);
  DgModuleData m;
  if (d.theta) {
    m = twisted_regular(d.data, *d.theta, {rng.uniform(0, 1)});
  } else {
    Degree shift = rng.uniform(0, 1);
    m = koszul_pair(d.data, shift);
  }
  auto mod = build_module(a, m, arity_cap);
  auto iso = random_module_iso(rng, *mod);
  return {a, iso.target, d.family};
}

ModuleIso random_module_iso(Rng& rng, const TableModule& M) {
  const auto& space = M.space();
  RingRef r = space.ring();
  auto iso = random_iso(rng, r, space.grading(), degrees_of(space.generators()), std::nullopt);
  MultiOp s(r, 1);
  // b'(m ⊙ w) = φ(b(φ⁻¹ m ⊙ w)).
  for (Letter m = 0; m < space.rank(); ++m) {
    std::map<Word, Vec<Letter>> acc;
    for (const auto& [l, c] : iso.inv[m])
      for (const auto& [in, out] : M.structure().table()) {
        if (in[0] != l) continue;
        Word tail(in.begin() + 1, in.end());
        auto [it, inserted] = acc.try_emplace(tail, Vec<Letter>(r));
        it->second.add_scaled(iso.apply(iso.fwd, out, r), c);
      }
    for (auto& [tail, v] : acc) {
      if (v.is_zero()) continue;
      Word in{m};
      in.insert(in.end(), tail.begin(), tail.end());
      s.set(std::move(in), std::move(v));
    }
  }
  auto target = std::make_shared<TableModule>(M.algebra_ref(), space, std::move(s));
  std::map<Letter, Vec<Letter>> map;
  for (Letter m = 0; m < space.rank(); ++m) map[m] = iso.fwd[m];
  return {target, map};
}

AlgebraIso random_algebra_iso(Rng& rng, AlgebraRef a) {
  const auto& s = a->shifted();
  RingRef r = a->ring();
  auto iso = random_iso(rng, r, s.grading(), degrees_of(s.generators()), a->unit());
  auto b = transport_table(a->b(), iso, r, a->rank());
  auto target = std::make_shared<const AInfAlgebra>(a->space(), a->unit(), std::move(b), a->arity_cap());
  MultiOp f(r, 0), g(r, 0);
  for (Letter x = 0; x < a->rank(); ++x) {
    f.set({x}, iso.fwd[x]);
    g.set({x}, iso.inv[x]);
  }
  return {target, std::make_shared<const AInfMorphism>(a, target, std::move(f)),
          std::make_shared<const AInfMorphism>(target, a, std::move(g))};
}

Hom strict_hom(ModuleRef source, ModuleRef target, const std::map<Letter, Vec<Letter>>& map) {
  RingRef r = source->ring();
  auto table = std::make_shared<const std::map<Letter, Vec<Letter>>>(map);
  return Hom(std::move(source), std::move(target), 0, [table, r](const Key& k, const Word& a) {
    Vec<Key> out(r);
    if (!a.empty()) return out;
    auto it = table->find(k.at(0));
    if (it == table->end()) return out;
    for (const auto& [l, c] : it->second) out.add(Key{l}, c);
    return out;
  });
}

}  // namespace ainf
