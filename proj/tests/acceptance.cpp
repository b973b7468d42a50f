// Acceptance run: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>

#include "ainf/adjoint.hpp"
#include "ainf/fixtures.hpp"
#include "ainf/functors.hpp"
#include "ainf/homotopy.hpp"
#include "ainf/obstruction.hpp"
#include "ainf/vanishing.hpp"
#include "commands.hpp"
#include "generators.hpp"

using namespace ainf;
using namespace ainf::testgen;

namespace {

RingRef f7() { return Ring::integers_mod(7); }

std::string describe(const CheckReport& r) {
  std::string s = r.name + " " + to_string(r.verdict);
  if (!r.detail.empty()) s += " (" + r.detail + ")";
  if (r.witness) s += " at " + r.witness->input + ": expected " + r.witness->expected + ", got " + r.witness->got;
  return s;
}

// Records the first violated requirement.
struct Tally {
  bool ok = true;
  std::string failure;
  std::ostringstream summary;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
  void pass(const CheckReport& r, const std::string& context) { require(r.passed(), context + ": " + describe(r)); }
};

// ---------------------------------------------------------------------------

void cross_cancel(Tally& t) {
  Rng rng(1001);
  int rejected = 0;
  for (int i = 0; i < 100; ++i) {
    auto a = random_curved_algebra(rng, f7(), 3, true);
    std::string at = "algebra " + std::to_string(i);
    t.require(a->rank() <= 3 && a->is_curved(), at + ": not a curved algebra of rank <= 3");
    auto bb = check_relation_BB(*a, 4), bB = check_relation_bB(*a, 4);
    t.pass(bb, at);
    t.require(bb.verdict == bB.verdict, at + ": verdicts differ");
    auto m = mutate_algebra(rng, *a);
    auto mbb = check_relation_BB(*m, 4), mbB = check_relation_bB(*m, 4);
    t.require(mbb.verdict == mbB.verdict, at + " mutant: verdicts differ: " + describe(mbb) + " vs " + describe(mbB));
    if (!mbB.passed()) ++rejected;
  }
  t.require(rejected > 0, "no mutant was rejected");
  t.summary << "100 algebras and 100 mutants agree, " << rejected << " mutants rejected";
}

// Random homogeneous 𝔪-family with strict unit, degree 2 - k in arity k.
MultiOp random_m_table(Rng& rng, const GradedSpace& s, Letter unit) {
  MultiOp m(s.ring(), 0);
  for (const auto& w : all_words(s.rank(), 3)) {
    bool has_unit = std::find(w.begin(), w.end(), unit) != w.end();
    if (has_unit) continue;
    Degree target = word_degree(s, w) + 2 - static_cast<Degree>(w.size());
    Vec<Letter> out(s.ring());
    for (Letter l = 0; l < s.rank(); ++l)
      if (s.grading().same(s.degree(l), target) && rng.coin()) out.add(l, random_elem(rng, s.ring()));
    if (!out.is_zero()) m.set(w, std::move(out));
  }
  for (Letter x = 0; x < s.rank(); ++x) {
    m.set({unit, x}, Vec<Letter>(s.ring(), x));
    m.set({x, unit}, Vec<Letter>(s.ring(), x));
  }
  return m;
}

void m_b_dictionary(Tally& t) {
  Rng rng(1002);
  std::size_t entries = 0;
  for (int i = 0; i < 100; ++i) {
    auto a = random_curved_algebra(rng, f7(), 3, i % 2 == 0);
    const GradedSpace& s = a->space();
    MultiOp m = random_m_table(rng, s, a->unit());
    std::string at = "table " + std::to_string(i);
    MultiOp b = m_to_b(s, m);
    t.require(b_to_m(s, b) == m, at + ": b_to_m(m_to_b(m)) != m");
    t.require(m_to_b(s, b_to_m(s, b)) == b, at + ": m_to_b(b_to_m(b)) != b");
    entries += m.table().size();
    // b₂(η, x) = x, b₂(x, η) = -(-1)^{|sx|} x, and η kills everything else.
    const GradedSpace sh = s.shift();
    Letter e = a->unit();
    for (Letter x = 0; x < s.rank(); ++x) {
      const auto* left = b.find({e, x});
      const auto* right = b.find({x, e});
      t.require(left && *left == Vec<Letter>(s.ring(), x), at + ": b2(eta, x) != x");
      Vec<Letter> expect = Vec<Letter>(s.ring(), x).scaled(Elem::from_int(s.ring(), -sign_of(sh.degree(x))));
      t.require(right && *right == expect, at + ": b2(x, eta) has the wrong sign");
    }
    for (const auto& [w, v] : b.table())
      if (w.size() != 2 && std::find(w.begin(), w.end(), e) != w.end())
        t.require(v.is_zero(), at + ": eta enters an operation of arity " + std::to_string(w.size()));
  }
  t.summary << "100 tables, " << entries << " entries roundtrip";
}

void u_curvature(Tally& t) {
  Rng rng(1003);
  for (int i = 0; i < 20; ++i) {
    UeAlgebra u(random_curved_algebra(rng, f7(), 4, true));
    t.pass(check_u_curvature(u, 4), "algebra " + std::to_string(i));
  }
  int killed = 0;
  const int mutants = 12;
  for (int i = 0; i < mutants; ++i) {
    UeAlgebra u(random_curved_algebra(rng, f7(), 4, true), UeAlgebra::Coproduct::FullCoproduct);
    if (!check_u_curvature(u, 4).passed()) ++killed;
  }
  t.require(killed == mutants, "full-coproduct mutants survived: " + std::to_string(mutants - killed));
  t.summary << "20 algebras at weight 4; " << killed << "/" << mutants << " full-coproduct mutants killed";
}

void ideal_stability(Tally& t) {
  Rng rng(1004);
  for (int i = 0; i < 20; ++i) {
    UeAlgebra u(random_curved_algebra(rng, f7(), 4, i % 2 == 0));
    t.pass(check_ideal_stability(u, 4), "algebra " + std::to_string(i));
  }
  t.summary << "20 algebras at weight 4";
}

void module_identification(Tally& t) {
  Rng rng(1005);
  for (int i = 0; i < 20; ++i) {
    auto p = random_pair(rng, f7(), i % 2 == 0, 4);
    std::string at = "pair " + std::to_string(i) + " (" + p.family + ")";
    UeAlgebra u(p.algebra);
    auto back = ue_to_module(module_to_ue(*p.module));
    t.require(back->structure() == p.module->structure(), at + ": object roundtrip changed the table");
    auto iso = random_module_iso(rng, *p.module);
    Hom phi = strict_hom(p.module, iso.target, iso.map);
    t.pass(check_strict_morphism_identification(phi, u, 4), at);
    t.pass(check_dg_module(*p.module, u, 4), at);
    t.pass(check_dg_module(*iso.target, u, 4), at + " target");
  }
  t.summary << "20 pairs, object and strict-morphism roundtrips, dg-module axioms at weight 4";
}

void q_homotopy_criterion(Tally& t) {
  Rng rng(1006);
  int curved = 0;
  for (int i = 0; i < 10; ++i) {
    auto p = random_pair(rng, f7(), i < 4, 4);
    if (p.algebra->is_curved()) ++curved;
    t.pass(check_q_equivalence(q_module(p.module), 4), "pair " + std::to_string(i) + " (" + p.family + ")");
  }
  t.require(curved >= 3, "fewer than 3 curved pairs");
  t.summary << "10 pairs (" << curved << " curved) at weight 4";
}

void kp_vanishing(Tally& t) {
  Rng rng(1007);
  int gamma = 0;
  for (int i = 0; i < 10; ++i) {
    auto p = random_pair(rng, f7(), true, 4);
    std::string at = "pair " + std::to_string(i) + " (" + p.family + ")";
    auto s = detect_augmentation(*p.algebra);
    t.require(s.kind == AugmentationSearch::Kind::Found, at + ": no augmentation");
    if (!s.augmentation) continue;
    KpContraction kp(p.module, *s.augmentation);
    t.pass(check_kp_b0(kp, 5), at);
    t.pass(check_kp_contraction(kp, 5), at);
    if (p.family != "dual-numbers") {
      t.pass(check_gamma(kp, 5), at);
      ++gamma;
    }
  }
  t.require(gamma > 0, "gamma was never applicable");
  RingRef r = qx();
  auto mf = detect_augmentation(*potential_algebra(r, poly(r, {0, 0, 1})));
  t.require(mf.kind == AugmentationSearch::Kind::Nonexistence,
            "k[x], W = x^2: expected Nonexistence, got " + to_string(mf.kind));
  t.summary << "10 algebras at degree 5, gamma on " << gamma << "; x^2: " << to_string(mf.kind);
}

void maurer_cartan(Tally& t) {
  auto with = mc_example(f7(), true), without = mc_example(f7(), false);
  auto v = mc_criterion(*with), w = mc_criterion(*without);
  t.require(v.verdict == McVerdict::Vanishes, "m1(a) = e: got " + to_string(v.verdict));
  t.require(w.verdict == McVerdict::DoesNotVanish, "m1 = 0: got " + to_string(w.verdict));
  t.pass(check_mc_linearization(*with), "with differential");
  t.pass(check_mc_linearization(*without), "without differential");
  Rng rng(1008);
  int tested = 0;
  while (tested < 10) {
    auto a = random_curved_algebra(rng, f7(), 3, false);
    if (a->is_curved()) continue;
    t.pass(check_mc_linearization(*a), "uncurved algebra " + std::to_string(tested++));
  }
  t.summary << to_string(v.verdict) << " / " << to_string(w.verdict) << "; linearization on 12 algebras";
}

void matrix_factorizations(Tally& t) {
  RingRef r = qx();
  Elem x = poly(r, {0, 1}), x2 = poly(r, {0, 0, 1});
  auto fixture = two_by_two(r, x, x, x2);
  t.pass(mf_check(fixture), "fixture");
  t.pass(check_module(*mf_module(fixture, potential_algebra(r, x2)), 4), "fixture module");
  Rng rng(1009);
  for (int i = 0; i < 10; ++i) {
    std::string at = "factorization " + std::to_string(i);
    auto mf = random_mf(rng, r);
    auto a = mf_check(mf), b = mf_direct_check(mf);
    t.pass(a, at);
    t.require(a.verdict == b.verdict, at + ": paths disagree");
    auto mutant = mf;
    std::size_t n = mf.rank();
    std::size_t row = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    std::size_t col = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    if (i % 3 != 0)
      while (!mutant.is_odd_entry(row, col)) col = (col + 1) % n;
    mutant.d[row][col] += random_poly(rng, r, 1);
    if (mutant.d[row][col] == mf.d[row][col]) mutant.d[row][col] += Elem::one(r);
    auto ma = mf_check(mutant), mb = mf_direct_check(mutant);
    t.require(!ma.passed(), at + " mutant passed");
    t.require(ma.verdict == mb.verdict, at + " mutant: paths disagree");
  }
  t.summary << "fixture, 10 factorizations and 10 mutants";
}

void homotopy_inversion(Tally& t) {
  Rng rng(1010);
  for (int i = 0; i < 5; ++i) {
    auto f = random_quasi_iso(rng, f7(), 3);
    std::string at = f.name;
    bool phi2 = false;
    for (const auto& x : arity_inputs(f.phi.source(), 2, true))
      if (!f.phi(x).is_zero()) phi2 = true;
    t.require(phi2, at + ": phi_2 vanishes");
    auto res = invert_homotopy(f.phi, f.psi, f.h, f.l, 3);
    t.pass(res.report, at);
    t.require(res.achieved && *res.achieved == 3, at + ": stage 3 not reached");
    if (!res.psi || !res.h) continue;
    Hom one = Hom::identity(f.phi.target_ref());
    t.pass(compare_homs("1 - phi psi = [B,h]", one - compose_hom(f.phi, *res.psi), hom_differential(*res.h), 3), at);
  }
  auto bad = rank_drop_fixture(f7(), 3);
  auto res = invert_homotopy(bad.phi, bad.psi, bad.h, bad.l, 3);
  t.require(!res.report.passed() && res.report.witness && !res.psi, "rank-drop input was not witnessed");
  t.summary << "5 quasi-isomorphisms reach stage 3; rank drop fails at stage " << res.stages.size() - 1;
}

void bar_transfer(Tally& t) {
  auto r = bar_transfer_contraction(acyclic_pair_transfer(f7()), 3);
  t.pass(r.report, "acyclic pair");
  t.summary << r.basis_size << " basis words at bar weight 3";
}

void determinism(Tally& t) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(AINF_SPECS_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::size_t runs = 0;
  for (const auto& path : files) {
    io::SpecDocument doc;
    try {
      doc = io::load(path.string());
    } catch (const std::exception&) {
      continue;  // rejected documents produce no report
    }
    for (const auto& cmd : cli::command_names()) {
      cli::Options o;
      if (cmd == "base-change") o.to = doc.ring->describe();
      auto render = [&](unsigned jobs) {
        set_worker_count(jobs);
        auto reports = cli::run(cmd, doc, o);
        return cli::format_json(reports) + cli::format_text(reports);
      };
      std::string first = render(1);
      bool same = render(4) == first && render(1) == first && render(3) == first;
      t.require(same, path.filename().string() + " " + cmd + ": output depends on the run or worker count");
      ++runs;
    }
  }
  set_worker_count(1);
  t.summary << runs << " command runs, each repeated under 1, 4, 1 and 3 workers";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria = {
      {"cross-cancel equivalence", cross_cancel},
      {"m-b dictionary", m_b_dictionary},
      {"U(A) curvature identity", u_curvature},
      {"ideal stability", ideal_stability},
      {"module identification", module_identification},
      {"Q ~ 1 homotopy", q_homotopy_criterion},
      {"KP vanishing", kp_vanishing},
      {"Maurer-Cartan", maurer_cartan},
      {"matrix factorizations", matrix_factorizations},
      {"homotopy inversion", homotopy_inversion},
      {"bar transfer", bar_transfer},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(t);
    } catch (const std::exception& e) {
      t.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %-26s %s [%.2fs]\n", t.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                t.ok ? t.summary.str().c_str() : t.failure.c_str(), secs);
    std::fflush(stdout);
    if (!t.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
