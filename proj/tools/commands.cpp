#include "commands.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ainf::cli {

namespace {

using io::SpecDocument;

CheckReport single(std::string name, std::string identity, int cap, Verdict v, std::string detail) {
  CheckReport r;
  r.name = std::move(name);
  r.identity = std::move(identity);
  r.cap = cap;
  r.verdict = v;
  r.detail = std::move(detail);
  return r;
}

CheckReport labelled(const std::string& entity, CheckReport r) {
  r.name = entity + ": " + r.name;
  return r;
}

// Runs fn and converts precondition and ring failures into reports.
void guarded(std::vector<CheckReport>& out, const std::string& entity, const std::string& check, int cap,
             const std::function<void(std::vector<CheckReport>&)>& fn) {
  std::vector<CheckReport> local;
  try {
    fn(local);
  } catch (const UnsupportedRing& e) {
    local = {single(check, "", cap, Verdict::Unsupported, e.what())};
  } catch (const PreconditionFailure& e) {
    local = {single(check, "", cap, Verdict::Unsupported, e.what())};
  }
  for (auto& r : local) out.push_back(labelled(entity, std::move(r)));
}

struct Context {
  const SpecDocument& doc;
  const Options& opts;
  int cap;

  bool selected(const std::string& name) const { return !opts.name || *opts.name == name; }

  std::map<std::string, UeRef> ue_cache;
  UeRef ue(const std::string& name) {
    auto it = ue_cache.find(name);
    if (it != ue_cache.end()) return it->second;
    return ue_cache[name] = std::make_shared<const UeAlgebra>(doc.algebra(name));
  }
};

// b₁ = 0 and no operations above arity two.
bool curved_without_differential(const AInfAlgebra& a) {
  if (!a.is_dga() || !a.is_curved()) return false;
  for (const auto& [w, out] : a.b().table())
    if (w.size() == 1 && !out.is_zero()) return false;
  return true;
}

// b^M vanishes with two or more algebra letters.
bool dg_module(const TableModule& m) {
  for (const auto& [w, out] : m.structure().table())
    if (w.size() >= 3 && !out.is_zero()) return false;
  return true;
}

std::string render_vec(const GradedSpace& s, const Vec<Letter>& v) { return render_letters(s, v, ""); }

using Command = std::function<void(Context&, std::vector<CheckReport>&)>;

void check_algebras(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, a] : c.doc.algebras)
    if (c.selected(name)) guarded(out, name, "check-algebra", c.cap, [&](auto& o) { o.push_back(check_algebra(*a, c.cap)); });
}

void check_morphisms(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, f] : c.doc.morphisms)
    if (c.selected(name)) guarded(out, name, "check-morphism", c.cap, [&](auto& o) { o.push_back(check_morphism(*f, c.cap)); });
}

void check_modules(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, m] : c.doc.modules)
    if (c.selected(name))
      guarded(out, name, "check-module", c.cap, [&](auto& o) { o.push_back(check_module(*m.module, c.cap)); });
}

void check_bimodules(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, v] : c.doc.bimodules)
    if (c.selected(name))
      guarded(out, name, "check-bimodule", c.cap, [&](auto& o) { o.push_back(check_bimodule(*v.bimodule, c.cap)); });
}

void build_ue(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, a] : c.doc.algebras) {
    if (!c.selected(name)) continue;
    guarded(out, name, "build-ue", c.cap, [&](auto& o) {
      UeRef u = c.ue(name);
      std::ostringstream sizes;
      std::size_t prev = 0;
      for (int w = 0; w <= c.cap; ++w) {
        std::size_t n = u->basis(static_cast<std::size_t>(w)).size();
        sizes << (w ? ", " : "") << "weight " << w << ": " << n - prev;
        prev = n;
      }
      CheckReport r = check_normal_form_soundness(*u, c.cap);
      r.detail = "normal-form basis " + sizes.str() + (r.detail.empty() ? "" : "; " + r.detail);
      std::ostringstream curv;
      curv << "c = " << u->render(u->c());
      o.push_back(std::move(r));
      o.push_back(single("curvature", "c = -w(b0(1)) in U_e(A)", c.cap, Verdict::Pass, curv.str()));
    });
  }
}

void check_ue(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, a] : c.doc.algebras) {
    if (!c.selected(name)) continue;
    guarded(out, name, "check-ue", c.cap, [&](auto& o) {
      UeRef u = c.ue(name);
      o.push_back(check_u_curvature(*u, c.cap));
      o.push_back(check_u_derivation(*u, c.cap));
      o.push_back(check_inclusion_morphism(*u, c.cap));
    });
  }
}

void check_ideal(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, a] : c.doc.algebras) {
    if (!c.selected(name)) continue;
    guarded(out, name, "check-ideal", c.cap, [&](auto& o) {
      UeRef u = c.ue(name);
      o.push_back(check_ideal_stability(*u, c.cap));
      o.push_back(check_normal_form_soundness(*u, c.cap));
    });
  }
}

void identify_modules(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, m] : c.doc.modules) {
    if (!c.selected(name)) continue;
    guarded(out, name, "identify-modules", c.cap, [&](auto& o) {
      DgModuleTable t = module_to_ue(*m.module);
      auto back = ue_to_module(t);
      CheckReport rt = single("object-roundtrip", "ue_to_module(module_to_ue(M)) = M as tables", c.cap,
                              Verdict::Pass, "");
      rt.checked = m.module->structure().table().size();
      if (!(back->structure() == m.module->structure())) {
        rt.verdict = Verdict::Fail;
        for (const auto& [w, v] : m.module->structure().table()) {
          const Vec<Letter>* got = back->structure().find(w);
          Vec<Letter> g = got ? *got : Vec<Letter>(c.doc.ring);
          if (!(g == v)) {
            std::string in = m.module->space().name(w[0]);
            for (std::size_t i = 1; i < w.size(); ++i) in += " (x) s" + m.module->algebra().space().name(w[i]);
            rt.witness = Witness{in, render_vec(m.module->space(), v), render_vec(m.module->space(), g)};
            break;
          }
        }
        if (!rt.witness) rt.witness = Witness{"structure table", "original entries", "extra entries after roundtrip"};
      }
      o.push_back(std::move(rt));
      o.push_back(check_dg_module(*m.module, *c.ue(m.algebra), c.cap));
    });
  }
  for (const auto& [name, f] : c.doc.module_maps) {
    if (!c.selected(name) || !f.strict || f.map.degree() != 0) continue;
    guarded(out, name, "identify-modules", c.cap, [&](auto& o) {
      o.push_back(check_strict_morphism_identification(f.map, *c.ue(c.doc.module(f.source).algebra), c.cap));
    });
  }
}

void q_adjunction(Context& c, std::vector<CheckReport>& out) {
  if (!c.doc.module_maps.empty()) {
    for (const auto& [name, f] : c.doc.module_maps)
      if (c.selected(name))
        guarded(out, name, "check-q-adjunction", c.cap,
                [&](auto& o) { o.push_back(check_adjunction(f.map, q_module(f.map.source_ref()), c.cap)); });
    return;
  }
  for (const auto& [name, m] : c.doc.modules)
    if (c.selected(name))
      guarded(out, name, "check-q-adjunction", c.cap,
              [&](auto& o) { o.push_back(check_adjunction(Hom::identity(m.module), q_module(m.module), c.cap)); });
}

void q_homotopy(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, m] : c.doc.modules)
    if (c.selected(name))
      guarded(out, name, "check-q-homotopy", c.cap,
              [&](auto& o) { o.push_back(check_q_equivalence(q_module(m.module), c.cap)); });
}

std::optional<KpContraction> kp_for(const SpecDocument& doc, const ModuleRef& m, AugmentationSearch& search,
                                    const std::string& algebra) {
  search = detect_augmentation(*doc.algebra(algebra));
  if (search.kind != AugmentationSearch::Kind::Found) return std::nullopt;
  return KpContraction(m, *search.augmentation);
}

CheckReport augmentation_report(const AugmentationSearch& s, int cap) {
  Verdict v = s.kind == AugmentationSearch::Kind::Found ? Verdict::Pass : Verdict::Undecided;
  std::string detail = to_string(s.kind);
  if (s.augmentation) {
    detail += ": l =";
    for (const auto& x : s.augmentation->values) detail += " " + x.str();
  }
  if (!s.detail.empty()) detail += "; " + s.detail;
  return single("augmentation", "l(m0(1)) = 1 for an S-linear l", cap, v, detail);
}

void kp_vanish(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, a] : c.doc.algebras) {
    if (!c.selected(name)) continue;
    guarded(out, name, "kp-vanish", c.cap, [&](auto& o) {
      AugmentationSearch s = detect_augmentation(*a);
      o.push_back(augmentation_report(s, c.cap));
    });
  }
  for (const auto& [name, m] : c.doc.modules) {
    if (!c.selected(name) && !c.selected(m.algebra)) continue;
    guarded(out, name, "kp-vanish", c.cap, [&](auto& o) {
      AugmentationSearch s;
      auto kp = kp_for(c.doc, m.module, s, m.algebra);
      if (!kp) {
        o.push_back(single("kp-contraction", "[B, G] = 1", c.cap, Verdict::Undecided,
                           "no augmentation: " + to_string(s.kind)));
        return;
      }
      o.push_back(check_kp_b0(*kp, c.cap));
      o.push_back(check_kp_contraction(*kp, c.cap));
    });
  }
}

void gamma_check(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, m] : c.doc.modules) {
    if (!c.selected(name)) continue;
    guarded(out, name, "gamma-check", c.cap, [&](auto& o) {
      if (!curved_without_differential(*c.doc.algebra(m.algebra)) || !dg_module(*m.module)) {
        o.push_back(single("gamma", "gamma = G", c.cap, Verdict::Unsupported,
                           "the closed form needs a curved algebra with m1 = 0, no higher operations and a dg-module"));
        return;
      }
      AugmentationSearch s;
      auto kp = kp_for(c.doc, m.module, s, m.algebra);
      if (!kp) {
        o.push_back(single("gamma", "gamma = G", c.cap, Verdict::Undecided, "no augmentation: " + to_string(s.kind)));
        return;
      }
      o.push_back(check_gamma(*kp, c.cap));
    });
  }
}

void mc_test(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, a] : c.doc.algebras) {
    if (!c.selected(name)) continue;
    guarded(out, name, "mc-test", c.cap, [&](auto& o) {
      o.push_back(check_mc_linearization(*a));
      if (a->is_curved()) {
        o.push_back(single("mc-criterion", "e in the image of m1", c.cap, Verdict::Unsupported, "the algebra is curved"));
        return;
      }
      McResult r = mc_criterion(*a);
      std::string detail = to_string(r.verdict);
      if (!r.detail.empty()) detail += ": " + r.detail;
      o.push_back(single("mc-criterion", "e in the image of m1", c.cap,
                         r.verdict == McVerdict::Undecided ? Verdict::Undecided : Verdict::Pass, detail));
    });
  }
}

void mf_check_all(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, f] : c.doc.matrix_factorizations)
    if (c.selected(name)) guarded(out, name, "mf-check", c.cap, [&](auto& o) { o.push_back(mf_check(f)); });
}

RingMap ring_map(const Context& c) {
  RingRef from = c.doc.ring;
  RingRef to = io::parse_ring(*c.opts.to);
  if (!c.opts.at.empty()) {
    if (from->kind() != RingKind::Polynomial || from->base() != to)
      throw UsageError("--at needs a polynomial source ring and its base ring as --to");
    if (c.opts.at.size() != from->nvars()) throw UsageError("--at needs one value per variable");
    std::vector<Elem> point;
    for (const auto& s : c.opts.at) point.push_back(Elem::parse(to, s));
    return RingMap::evaluation(from, point);
  }
  if (from == to) return RingMap::identity(from);
  if (to->kind() == RingKind::Polynomial && to->base() == from) return RingMap::embedding(from, to);
  if (to->kind() == RingKind::Rationals && from->kind() == RingKind::Integers) return RingMap::into_rationals();
  if (to->kind() == RingKind::IntegersModN &&
      (from->kind() == RingKind::Integers || from->kind() == RingKind::IntegersModN))
    return RingMap::reduction(from, to);
  throw UsageError("no supported ring map " + from->describe() + " -> " + to->describe());
}

void base_change_all(Context& c, std::vector<CheckReport>& out) {
  RingMap f = [&] {
    try {
      return ring_map(c);
    } catch (const std::logic_error& e) {
      throw UsageError(e.what());
    }
  }();
  std::string tag = " over " + f.target()->describe();
  std::map<std::string, AlgebraRef> changed;
  for (const auto& [name, a] : c.doc.algebras) {
    guarded(out, name, "base-change", c.cap, [&](auto& o) {
      try {
        changed[name] = base_change(*a, f);
      } catch (const StructuralError& e) {
        o.push_back(single("base-change", "base change is an algebra", c.cap, Verdict::Fail, e.what()));
        return;
      }
      if (!c.selected(name)) return;
      CheckReport r = check_algebra(*changed[name], c.cap);
      r.name += tag;
      o.push_back(std::move(r));
    });
  }
  for (const auto& [name, m] : c.doc.modules) {
    if (!c.selected(name) || !changed.count(m.algebra)) continue;
    guarded(out, name, "base-change", c.cap, [&](auto& o) {
      CheckReport r = check_module(*base_change(*m.module, changed[m.algebra], f), c.cap);
      r.name += tag;
      o.push_back(std::move(r));
    });
  }
}

void invert(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, e] : c.doc.inversions) {
    if (!c.selected(name)) continue;
    guarded(out, name, "invert-homotopy", c.cap, [&](auto& o) {
      const Hom& phi = c.doc.module_map(e.phi).map;
      const Hom& psi = c.doc.module_map(e.psi).map;
      Hom h = e.h ? c.doc.module_map(*e.h).map : Hom::zero(phi.target_ref(), phi.target_ref(), -1);
      std::optional<Hom> l;
      if (e.l) {
        l = c.doc.module_map(*e.l).map;
      } else {
        Hom rhs = (Hom::identity(phi.source_ref()) - compose_hom(psi, phi)).truncated(0).tabulated(0);
        l = solve_stage(rhs, -1, 0);
        if (!l) {
          o.push_back(single("stage 0", "1 - psi phi = [B, l] at arity zero", c.cap, Verdict::Fail,
                             "1 - psi phi is not null-homotopic at arity zero"));
          return;
        }
      }
      InversionResult r = invert_homotopy(phi, psi, h, *l, static_cast<std::size_t>(c.cap));
      for (const auto& s : r.stages) {
        CheckReport sr = s.report;
        sr.detail += (sr.detail.empty() ? "" : "; ") + std::to_string(s.unknowns) + " unknowns" +
                     (s.psi_extended ? ", psi extended" : "");
        o.push_back(std::move(sr));
      }
      o.push_back(r.report);
    });
  }
}

void ue_contract(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, a] : c.doc.algebras) {
    if (!c.selected(name)) continue;
    guarded(out, name, "ue-contract", c.cap, [&](auto& o) {
      UeContraction r = ue_contraction(c.ue(name), c.cap);
      if (r.certificates.empty()) {
        o.push_back(std::move(r.report));
        return;
      }
      std::size_t steps = 0;
      for (const auto& cert : r.certificates) steps = std::max(steps, cert.steps);
      r.report.detail += std::string(r.report.detail.empty() ? "" : "; ") + "at most " + std::to_string(steps) + " steps of T";
      o.push_back(std::move(r.report));
    });
  }
}

std::optional<AInfHomotopy> homotopy_of(const Context& c, const io::HomotopyEntry& e) {
  auto f = c.doc.morphism(e.f);
  auto g = e.g ? c.doc.morphism(*e.g) : homotopy_flow(*f, e.h, static_cast<std::size_t>(c.cap));
  return AInfHomotopy{f, g, e.h};
}

void homotopy_check(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, e] : c.doc.homotopies) {
    if (!c.selected(name)) continue;
    guarded(out, name, "homotopy-check", c.cap, [&](auto& o) {
      AInfHomotopy h = *homotopy_of(c, e);
      o.push_back(check_ainf_homotopy(h, c.cap));
      auto src = std::make_shared<const UeAlgebra>(h.f->source_ref());
      auto tgt = std::make_shared<const UeAlgebra>(h.f->target_ref());
      o.push_back(check_homotopy_derivation(HomotopyDerivation(h, src, tgt), c.cap));
    });
  }
}

void quillen(Context& c, std::vector<CheckReport>& out) {
  for (const auto& [name, f] : c.doc.morphisms) {
    if (!c.selected(name)) continue;
    guarded(out, name, "quillen-components", c.cap, [&](auto& o) {
      std::optional<AInfHomotopy> h;
      for (const auto& [hn, e] : c.doc.homotopies)
        if (e.f == name) {
          h = homotopy_of(c, e);
          break;
        }
      o.push_back(quillen_classical_components(f, h, c.cap));
    });
  }
}

struct Entry {
  std::string name;
  Command run;
  std::string summary;
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = {
      {"check-algebra", check_algebras, "A-infinity relations and strict unit of every algebra"},
      {"check-morphism", check_morphisms, "morphism equation and unit preservation"},
      {"check-module", check_modules, "module relations and unit laws"},
      {"check-bimodule", check_bimodules, "bimodule relations and unit laws"},
      {"build-ue", build_ue, "normal forms of U_e(A) per weight"},
      {"check-ue", check_ue, "curvature, derivation and inclusion for U_e(A)"},
      {"check-ideal", check_ideal, "stability of the defining ideal of U_e(A)"},
      {"identify-modules", identify_modules, "A-infinity modules versus U_e(A) dg-modules"},
      {"check-q-adjunction", q_adjunction, "adjunction transport through Q_A"},
      {"check-q-homotopy", q_homotopy, "Q_A(M) is homotopy equivalent to M"},
      {"kp-vanish", kp_vanish, "augmentation search and the KP contraction"},
      {"gamma-check", gamma_check, "closed form of the KP homotopy"},
      {"mc-test", mc_test, "Maurer-Cartan criterion and linearization"},
      {"mf-check", mf_check_all, "matrix factorizations and their modules"},
      {"base-change", base_change_all, "re-check algebras and modules over another ring"},
      {"invert-homotopy", invert, "stage-by-stage homotopy inverse of a module map"},
      {"ue-contract", ue_contract, "contraction of U_e(A) onto A"},
      {"homotopy-check", homotopy_check, "A-infinity homotopies and their derivations"},
      {"quillen-components", quillen, "checkable components of the Quillen comparison"},
  };
  return t;
}

bool entity_exists(const SpecDocument& d, const std::string& n) {
  auto has = [&](const auto& v) {
    for (const auto& e : v)
      if (e.name == n) return true;
    return false;
  };
  return has(d.algebras) || has(d.modules) || has(d.morphisms) || has(d.module_maps) || has(d.bimodules) ||
         has(d.matrix_factorizations) || has(d.homotopies) || has(d.inversions);
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : table()) n.push_back(e.name);
    return n;
  }();
  return names;
}

std::string command_summary(const std::string& command) {
  for (const auto& e : table())
    if (e.name == command) return e.summary;
  return {};
}

std::vector<CheckReport> run(const std::string& command, const SpecDocument& doc, const Options& opts) {
  const Command* cmd = nullptr;
  for (const auto& e : table())
    if (e.name == command) cmd = &e.run;
  if (!cmd) throw UsageError("unknown command '" + command + "'");
  if (command != "base-change" && (opts.to || !opts.at.empty()))
    throw UsageError("--to and --at only apply to base-change");
  if (command == "base-change" && !opts.to) throw UsageError("base-change needs --to");
  if (opts.cap && *opts.cap < 0) throw UsageError("--cap must be nonnegative");
  if (opts.name && !entity_exists(doc, *opts.name)) throw UsageError("no entity named '" + *opts.name + "'");
  int cap = opts.cap.value_or(static_cast<int>(doc.weight_cap));
  Context ctx{doc, opts, cap, {}};
  std::vector<CheckReport> out;
  (*cmd)(ctx, out);
  return out;
}

ExitCode exit_code(const std::vector<CheckReport>& reports, bool strict) {
  bool undecided = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) return Failed;
    if (r.verdict != Verdict::Pass) undecided = true;
  }
  return undecided && strict ? Undecided : Ok;
}

std::string format_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["identity"] = r.identity;
    j["cap"] = r.cap;
    j["verdict"] = to_string(r.verdict);
    if (r.witness)
      j["witness"] = {{"input", r.witness->input}, {"expected", r.witness->expected}, {"got", r.witness->got}};
    else
      j["witness"] = nullptr;
    j["detail"] = r.detail;
    j["checked"] = r.checked;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string format_text(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << to_string(r.verdict) << "  " << r.name << "  (cap " << r.cap << ", " << r.checked << " inputs)\n";
    if (!r.identity.empty()) os << "    " << r.identity << "\n";
    if (!r.detail.empty()) os << "    " << r.detail << "\n";
    if (r.witness) {
      os << "    input:    " << r.witness->input << "\n";
      os << "    expected: " << r.witness->expected << "\n";
      os << "    got:      " << r.witness->got << "\n";
    }
  }
  return os.str();
}

}  // namespace ainf::cli
