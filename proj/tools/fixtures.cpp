// Writes the generated example documents under specs/.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "io.hpp"

namespace {

using namespace ainf;

io::SpecDocument empty_doc(RingRef r, Grading g) {
  io::SpecDocument d;
  d.ring = r;
  d.grading = g;
  return d;
}

io::SpecDocument inversion_doc(const QuasiIsoFixture& f, std::size_t cap) {
  io::SpecDocument d = empty_doc(f.algebra->ring(), f.algebra->grading());
  d.weight_cap = d.arity_cap = cap;
  d.algebras.push_back({"A", f.algebra});
  auto as_table = [](const ModuleRef& m) { return std::const_pointer_cast<TableModule>(std::dynamic_pointer_cast<const TableModule>(m)); };
  d.modules.push_back({"M", {"A", as_table(f.m)}});
  d.modules.push_back({"N", {"A", as_table(f.n)}});
  d.module_maps.push_back({"phi", {"M", "N", f.phi, false}});
  d.module_maps.push_back({"psi", {"N", "M", f.psi, true}});
  d.module_maps.push_back({"l", {"M", "M", f.l, true}});
  d.inversions.push_back({"I", {"phi", "psi", std::nullopt, "l"}});
  return d;
}

MultiOp random_homotopy(Rng& rng, const AInfAlgebra& src, const AInfAlgebra& tgt, std::size_t max_len) {
  MultiOp h(src.ring(), -1);
  for (const auto& w : all_words(src.rank(), max_len)) {
    if (w.empty() || std::find(w.begin(), w.end(), src.unit()) != w.end()) continue;
    Vec<Letter> out(src.ring());
    for (Letter y = 0; y < tgt.rank(); ++y)
      if (src.grading().same(tgt.sdeg(y), src.sdeg(w) - 1) && rng.coin()) out.add(y, random_elem(rng, src.ring()));
    if (!out.is_zero()) h.set(w, std::move(out));
  }
  return h;
}

io::SpecDocument homotopy_doc(std::uint64_t seed) {
  Rng rng(seed);
  RingRef k = Ring::integers_mod(7);
  AlgebraRef a;
  do a = random_curved_algebra(rng, k, 4, false);
  while (a->is_curved() || a->rank() < 2);
  auto iso = random_algebra_iso(rng, a);
  io::SpecDocument d = empty_doc(k, a->grading());
  d.weight_cap = 3;
  d.algebras.push_back({"A", a});
  d.algebras.push_back({"B", iso.target});
  d.morphisms.push_back({"f", iso.map});
  d.morphisms.push_back({"f_inv", iso.inverse});
  d.homotopies.push_back({"H", {"f", std::nullopt, random_homotopy(rng, *a, *iso.target, 2)}});
  return d;
}

io::SpecDocument pairs_doc(std::uint64_t seed, int count) {
  Rng rng(seed);
  RingRef k = Ring::integers_mod(7);
  io::SpecDocument d = empty_doc(k, Grading::cyclic(2));
  d.weight_cap = 3;
  for (int i = 0; i < count; ++i) {
    auto p = random_pair(rng, k, i % 2 == 0, 3);
    if (!(p.algebra->grading() == d.grading)) continue;
    std::string an = "A" + std::to_string(i), mn = "M" + std::to_string(i);
    d.algebras.push_back({an, p.algebra});
    d.modules.push_back({mn, {an, p.module}});
    auto iso = random_module_iso(rng, *p.module);
    d.modules.push_back({mn + "'", {an, iso.target}});
    d.module_maps.push_back({"phi" + std::to_string(i), {mn, mn + "'", strict_hom(p.module, iso.target, iso.map), true}});
  }
  return d;
}

void write(const std::filesystem::path& p, const io::SpecDocument& d, std::size_t cap) {
  std::ofstream out(p);
  out << io::dump(d, cap);
  std::cout << "wrote " << p.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generates example documents"};
  std::string dir = "specs";
  app.add_option("dir", dir, "output directory");
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(dir);
  std::filesystem::path out(dir);
  RingRef k = Ring::integers_mod(7);
  write(out / "inversion.json", inversion_doc(quasi_iso_fixture(k, Elem::from_int(k, 3), {Elem::from_int(k, 2), Elem::from_int(k, 5)}, Elem::one(k), 3), 3), 4);
  // ψ = 0 violates the arity-zero hypothesis 1 - φψ = [B, h].
  auto broken = quasi_iso_fixture(k, Elem::from_int(k, 2), {Elem::one(k)}, Elem::zero(k), 3);
  broken.psi = Hom::zero(broken.n, broken.m, 0);
  write(out / "broken_inverse.json", inversion_doc(broken, 3), 4);
  write(out / "homotopy.json", homotopy_doc(7), 3);
  write(out / "pairs.json", pairs_doc(11, 4), 3);
  return 0;
}
