#include "io.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace ainf::io {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& entity, const std::string& what) { throw ValidationError(entity, what); }

const json& field(const json& j, const char* key, const std::string& entity) {
  if (!j.is_object() || !j.contains(key)) invalid(entity, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key, const std::string& entity) {
  const json& v = field(j, key, entity);
  if (!v.is_string()) invalid(entity, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

template <class T>
const T& find_named(const std::vector<Named<T>>& v, const std::string& name, const char* kind) {
  for (const auto& e : v)
    if (e.name == name) return e.value;
  throw ValidationError(std::string(kind) + " '" + name + "'", "not defined");
}

// User entries must survive the imposed unit laws unchanged.
void require_unchanged(const MultiOp& given, const MultiOp& imposed, const std::function<std::string(const Word&)>& render,
                       const std::string& entity) {
  for (const auto& [w, v] : given.table()) {
    const Vec<Letter>* now = imposed.find(w);
    if (now ? !(*now == v) : !v.is_zero()) invalid(entity, "entry on " + render(w) + " contradicts the unit laws");
  }
}

std::string render_word(const std::function<std::string(std::size_t, Letter)>& name, const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + name(i, w[i]);
  return out + ")";
}

struct Loader {
  SpecDocument doc;

  Elem coefficient(const json& c, const std::string& entity) const {
    RingRef r = doc.ring;
    try {
      if (c.is_string()) return Elem::parse(r, c.get<std::string>());
      if (c.is_number_integer()) return Elem::from_int(r, c.get<long>());
      if (c.is_object() && c.contains("terms")) {
        if (r->kind() != RingKind::Polynomial) invalid(entity, "monomial terms need a polynomial ring");
        PolyTerms terms;
        for (const auto& t : c.at("terms")) {
          if (!t.is_array() || t.size() != 2) invalid(entity, "a term is [exponents, coefficient]");
          Monomial m = t[0].get<Monomial>();
          if (m.size() != r->nvars()) invalid(entity, "exponent vector has the wrong length");
          terms.emplace_back(m, mpq_class(t[1].get<std::string>()));
        }
        return Elem::from_terms(r, std::move(terms));
      }
    } catch (const std::logic_error& e) {
      invalid(entity, e.what());
    } catch (const json::exception& e) {
      invalid(entity, e.what());
    }
    invalid(entity, "a coefficient is a string, an integer or {\"terms\": ...}");
  }

  GradedSpace space(const json& gens, const std::string& entity) const {
    if (!gens.is_array() || gens.empty()) invalid(entity, "generators must be a nonempty array");
    std::vector<Generator> out;
    for (const auto& g : gens) {
      if (!g.is_array() || g.size() != 2 || !g[0].is_string() || !g[1].is_number_integer())
        invalid(entity, "a generator is [name, degree]");
      out.push_back({g[0].get<std::string>(), g[1].get<Degree>()});
    }
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (out[i].name == out[j].name) invalid(entity, "duplicate generator '" + out[i].name + "'");
    return GradedSpace(doc.ring, doc.grading, out);
  }

  Letter letter(const GradedSpace& s, const json& name, const std::string& entity) const {
    if (!name.is_string()) invalid(entity, "a letter is a generator name");
    auto l = s.index_of(name.get<std::string>());
    if (!l) invalid(entity, "unknown generator '" + name.get<std::string>() + "'");
    return *l;
  }

  Word word(const GradedSpace& s, const json& j, const std::string& entity) const {
    if (!j.is_array()) invalid(entity, "a word is an array of generator names");
    Word w;
    for (const auto& x : j) w.push_back(letter(s, x, entity));
    return w;
  }

  Vec<Letter> vec(const GradedSpace& s, const json& j, const std::string& entity) const {
    if (!j.is_object()) invalid(entity, "a vector is an object {generator: coefficient}");
    Vec<Letter> v(doc.ring);
    for (const auto& [k, c] : j.items()) v.add(letter(s, json(k), entity), coefficient(c, entity));
    return v;
  }

  // [{"in": [...], "out": {...}}] into an operation table.
  void table(MultiOp& op, const json& entries, const GradedSpace& in_space, const GradedSpace& out_space,
             const std::string& entity) const {
    if (!entries.is_array()) invalid(entity, "operations must be an array");
    std::size_t i = 0;
    for (const auto& e : entries) {
      std::string where = entity + ".operations[" + std::to_string(i++) + "]";
      Word w = word(in_space, field(e, "in", where), where);
      if (op.find(w)) invalid(where, "duplicate entry");
      op.set(w, vec(out_space, field(e, "out", where), where));
    }
  }

  void algebra(const json& j) {
    std::string name = string_field(j, "name", "algebra");
    std::string entity = "algebras." + name;
    GradedSpace s = space(field(j, "generators", entity), entity);
    std::size_t cap = j.value("arity_cap", doc.arity_cap);
    std::string form = j.value("form", std::string("m"));
    bool explicit_unit = j.value("explicit_unit", false);
    AlgebraRef a;
    try {
      if (form == "dga") {
        AssocAlgebra alg{doc.ring, doc.grading, s.generators(), {}};
        if (j.contains("unit") && j.at("unit") != s.name(0)) invalid(entity, "the unit must be the first generator");
        if (j.contains("products")) {
          std::size_t i = 0;
          for (const auto& e : j.at("products")) {
            std::string where = entity + ".products[" + std::to_string(i++) + "]";
            Word w = word(s, field(e, "in", where), where);
            if (w.size() != 2) invalid(where, "a product has two inputs");
            alg.mult[{w[0], w[1]}] = vec(s, field(e, "out", where), where);
          }
        }
        DgaData d{alg, j.contains("curvature") ? vec(s, j.at("curvature"), entity + ".curvature") : Vec<Letter>(doc.ring),
                  {}};
        if (j.contains("differential"))
          for (const auto& [k, v] : j.at("differential").items())
            d.diff[letter(s, json(k), entity)] = vec(s, v, entity + ".differential." + k);
        a = build_algebra(d, cap);
      } else if (form == "m" || form == "b") {
        Letter unit = letter(s, field(j, "unit", entity), entity);
        MultiOp b(doc.ring, 1);
        if (form == "m") {
          MultiOp m(doc.ring, 0);
          table(m, j.value("operations", json::array()), s, s, entity);
          b = m_to_b(s, m);
        } else {
          GradedSpace sh = s.shift();
          table(b, j.value("operations", json::array()), sh, sh, entity);
        }
        if (!explicit_unit) {
          MultiOp given = b;
          impose_unit_laws(s.shift(), unit, b);
          require_unchanged(given, b, [&](const Word& w) {
            return render_word([&](std::size_t, Letter l) { return s.name(l); }, w);
          }, entity);
        }
        a = std::make_shared<const AInfAlgebra>(s, unit, std::move(b), cap);
      } else {
        invalid(entity, "form must be m, b or dga");
      }
    } catch (const std::logic_error& e) {
      invalid(entity, e.what());
    }
    doc.algebras.push_back({name, a});
  }

  void module(const json& j) {
    std::string name = string_field(j, "name", "module");
    std::string entity = "modules." + name;
    std::string an = string_field(j, "algebra", entity);
    AlgebraRef a = doc.algebra(an);
    GradedSpace s = space(field(j, "generators", entity), entity);
    std::string form = j.value("form", std::string("b"));
    std::shared_ptr<TableModule> m;
    try {
      if (form == "dg") {
        DgModuleData d{s, {}, {}};
        if (j.contains("differential"))
          for (const auto& [k, v] : j.at("differential").items())
            d.d[letter(s, json(k), entity)] = vec(s, v, entity + ".differential." + k);
        std::size_t i = 0;
        for (const auto& e : j.value("action", json::array())) {
          std::string where = entity + ".action[" + std::to_string(i++) + "]";
          const json& in = field(e, "in", where);
          if (!in.is_array() || in.size() != 2) invalid(where, "an action entry is [module generator, algebra generator]");
          if (letter(a->space(), in[1], where) == a->unit()) invalid(where, "the unit acts implicitly");
          d.act[{letter(s, in[0], where), letter(a->space(), in[1], where)}] = vec(s, field(e, "out", where), where);
        }
        m = build_module(a, d, a->arity_cap());
      } else if (form == "b") {
        MultiOp op(doc.ring, 1);
        std::size_t i = 0;
        for (const auto& e : j.value("operations", json::array())) {
          std::string where = entity + ".operations[" + std::to_string(i++) + "]";
          const json& in = field(e, "in", where);
          if (!in.is_array() || in.empty()) invalid(where, "an entry starts with a module generator");
          Word w{letter(s, in[0], where)};
          for (std::size_t k = 1; k < in.size(); ++k) w.push_back(letter(a->space(), in[k], where));
          op.set(w, vec(s, field(e, "out", where), where));
        }
        if (!j.value("explicit_unit", false)) {
          MultiOp given = op;
          impose_module_unit_laws(*a, s, op);
          require_unchanged(given, op, [&](const Word& w) {
            return render_word([&](std::size_t i, Letter l) { return i == 0 ? s.name(l) : a->space().name(l); }, w);
          }, entity);
        }
        m = std::make_shared<TableModule>(a, s, std::move(op));
      } else {
        invalid(entity, "form must be b or dg");
      }
    } catch (const std::logic_error& e) {
      invalid(entity, e.what());
    }
    doc.modules.push_back({name, {an, m}});
  }

  void morphism(const json& j) {
    std::string name = string_field(j, "name", "morphism");
    std::string entity = "morphisms." + name;
    AlgebraRef s = doc.algebra(string_field(j, "source", entity));
    AlgebraRef t = doc.algebra(string_field(j, "target", entity));
    MultiOp f(doc.ring, 0);
    table(f, j.value("components", json::array()), s->space(), t->space(), entity);
    if (!j.value("explicit_unit", false) && !f.find({s->unit()})) f.set({s->unit()}, Vec<Letter>(doc.ring, t->unit()));
    try {
      doc.morphisms.push_back({name, std::make_shared<const AInfMorphism>(s, t, std::move(f))});
    } catch (const std::logic_error& e) {
      invalid(entity, e.what());
    }
  }

  void module_map(const json& j) {
    std::string name = string_field(j, "name", "module map");
    std::string entity = "module_maps." + name;
    std::string sn = string_field(j, "source", entity), tn = string_field(j, "target", entity);
    const auto& src = doc.module(sn);
    const auto& tgt = doc.module(tn);
    if (src.algebra != tgt.algebra) invalid(entity, "source and target are modules over different algebras");
    Degree degree = j.value("degree", 0);
    const auto& A = src.module->algebra();
    const auto& ss = src.module->space();
    const auto& ts = tgt.module->space();
    std::map<MElem, Vec<Key>> table;
    bool strict = true;
    std::size_t i = 0;
    for (const auto& e : j.value("components", json::array())) {
      std::string where = entity + ".components[" + std::to_string(i++) + "]";
      const json& in = field(e, "in", where);
      if (!in.is_array() || in.empty()) invalid(where, "an entry starts with a module generator");
      MElem x{Key{letter(ss, in[0], where)}, {}};
      for (std::size_t k = 1; k < in.size(); ++k) x.a.push_back(letter(A.space(), in[k], where));
      Vec<Letter> out = vec(ts, field(e, "out", where), where);
      Vec<Key> v(doc.ring);
      Degree want = static_cast<const ModuleStructure&>(*src.module).degree(x) + degree;
      for (const auto& [l, c] : out) {
        if (!doc.grading.same(ts.degree(l), want)) invalid(where, "degree-inconsistent output " + ts.name(l));
        v.add(Key{l}, c);
      }
      if (!x.a.empty() && !v.is_zero()) strict = false;
      table[x] = v;
    }
    doc.module_maps.push_back(
        {name, {sn, tn, hom_from_table(src.module, tgt.module, degree, std::move(table)), strict}});
  }

  void bimodule(const json& j) {
    std::string name = string_field(j, "name", "bimodule");
    std::string entity = "bimodules." + name;
    std::string ln = string_field(j, "left", entity), rn = string_field(j, "right", entity);
    AlgebraRef l = doc.algebra(ln), r = doc.algebra(rn);
    GradedSpace s = space(field(j, "generators", entity), entity);
    TableBimodule::Table t;
    std::size_t i = 0;
    for (const auto& e : j.value("operations", json::array())) {
      std::string where = entity + ".operations[" + std::to_string(i++) + "]";
      t[{word(l->space(), e.value("left", json::array()), where), letter(s, field(e, "element", where), where),
         word(r->space(), e.value("right", json::array()), where)}] = vec(s, field(e, "out", where), where);
    }
    try {
      doc.bimodules.push_back({name, {ln, rn, std::make_shared<TableBimodule>(l, r, s, std::move(t))}});
    } catch (const std::logic_error& e) {
      invalid(entity, e.what());
    }
  }

  void matrix_factorization(const json& j) {
    std::string name = string_field(j, "name", "matrix factorization");
    std::string entity = "matrix_factorizations." + name;
    MatrixFactorization f;
    f.ring = doc.ring;
    f.even = field(j, "even", entity).get<std::size_t>();
    f.odd = field(j, "odd", entity).get<std::size_t>();
    f.w = coefficient(field(j, "potential", entity), entity + ".potential");
    const json& d = field(j, "d", entity);
    if (!d.is_array() || d.size() != f.rank()) invalid(entity, "d must be a square matrix of size even + odd");
    for (std::size_t r = 0; r < f.rank(); ++r) {
      if (!d[r].is_array() || d[r].size() != f.rank()) invalid(entity, "d must be a square matrix of size even + odd");
      std::vector<Elem> row;
      for (std::size_t c = 0; c < f.rank(); ++c)
        row.push_back(coefficient(d[r][c], entity + ".d[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
      f.d.push_back(std::move(row));
    }
    doc.matrix_factorizations.push_back({name, f});
  }

  void homotopy(const json& j) {
    std::string name = string_field(j, "name", "homotopy");
    std::string entity = "homotopies." + name;
    HomotopyEntry h{string_field(j, "f", entity), std::nullopt, MultiOp(doc.ring, -1)};
    if (j.contains("g")) h.g = string_field(j, "g", entity);
    auto f = doc.morphism(h.f);
    table(h.h, j.value("components", json::array()), f->source().space(), f->target().space(), entity);
    for (const auto& [w, out] : h.h.table())
      for (const auto& [l, c] : out)
        if (!doc.grading.same(f->target().sdeg(l), f->source().sdeg(w) - 1))
          invalid(entity, "degree-inconsistent component with output " + f->target().space().name(l));
    if (h.g) doc.morphism(*h.g);
    doc.homotopies.push_back({name, std::move(h)});
  }

  void inversion(const json& j) {
    std::string name = string_field(j, "name", "inversion");
    std::string entity = "inversions." + name;
    InversionEntry e{string_field(j, "phi", entity), string_field(j, "psi", entity), std::nullopt, std::nullopt};
    if (j.contains("h")) e.h = string_field(j, "h", entity);
    if (j.contains("l")) e.l = string_field(j, "l", entity);
    doc.module_map(e.phi);
    doc.module_map(e.psi);
    if (e.h) doc.module_map(*e.h);
    if (e.l) doc.module_map(*e.l);
    doc.inversions.push_back({name, e});
  }

  void load(const json& j) {
    if (!j.is_object()) invalid("document", "the top level must be an object");
    const json& r = field(j, "ring", "document");
    try {
      if (r.is_string()) {
        doc.ring = parse_ring(r.get<std::string>());
      } else {
        invalid("ring", "the ring is a descriptor string such as \"ZZ/7\" or \"QQ[x]\"");
      }
    } catch (const std::logic_error& e) {
      invalid("ring", e.what());
    }
    std::string g = j.value("grading", std::string("Z"));
    if (g == "Z") {
      doc.grading = Grading::integer();
    } else if (g.rfind("Z/", 0) == 0) {
      try {
        doc.grading = Grading::cyclic(std::stol(g.substr(2)));
      } catch (const std::exception& e) {
        invalid("grading", e.what());
      }
    } else {
      invalid("grading", "expected Z or Z/n");
    }
    if (j.contains("caps")) {
      doc.weight_cap = j.at("caps").value("weight", doc.weight_cap);
      doc.arity_cap = j.at("caps").value("arity", doc.arity_cap);
    }
    auto each = [&](const char* key, auto&& fn) {
      if (!j.contains(key)) return;
      if (!j.at(key).is_array()) invalid(key, "must be an array");
      for (const auto& e : j.at(key)) fn(e);
    };
    each("algebras", [&](const json& e) { algebra(e); });
    each("modules", [&](const json& e) { module(e); });
    each("morphisms", [&](const json& e) { morphism(e); });
    each("module_maps", [&](const json& e) { module_map(e); });
    each("bimodules", [&](const json& e) { bimodule(e); });
    each("matrix_factorizations", [&](const json& e) { matrix_factorization(e); });
    each("homotopies", [&](const json& e) { homotopy(e); });
    each("inversions", [&](const json& e) { inversion(e); });
  }
};

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

AlgebraRef SpecDocument::algebra(const std::string& name) const { return find_named(algebras, name, "algebra"); }
const ModuleEntry& SpecDocument::module(const std::string& name) const { return find_named(modules, name, "module"); }
std::shared_ptr<const AInfMorphism> SpecDocument::morphism(const std::string& name) const {
  return find_named(morphisms, name, "morphism");
}
const MapEntry& SpecDocument::module_map(const std::string& name) const {
  return find_named(module_maps, name, "module map");
}

RingRef parse_ring(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto bracket = s.find('[');
  if (bracket != std::string::npos) {
    if (s.back() != ']') throw StructuralError("malformed ring '" + text + "'");
    RingRef base = parse_ring(s.substr(0, bracket));
    std::vector<std::string> vars;
    std::stringstream ss(s.substr(bracket + 1, s.size() - bracket - 2));
    for (std::string v; std::getline(ss, v, ',');) {
      if (v.empty()) throw StructuralError("empty variable name in '" + text + "'");
      vars.push_back(v);
    }
    return Ring::polynomial(base, vars);
  }
  if (s == "ZZ" || s == "Z") return Ring::integers();
  if (s == "QQ" || s == "Q") return Ring::rationals();
  for (const char* prefix : {"ZZ/", "Z/", "F_", "GF"}) {
    std::string p(prefix);
    if (s.rfind(p, 0) == 0) {
      mpz_class n;
      if (n.set_str(s.substr(p.size()), 10) != 0 || n < 2) throw StructuralError("bad modulus in '" + text + "'");
      return Ring::integers_mod(n);
    }
  }
  throw StructuralError("unknown ring '" + text + "'");
}

SpecDocument load_string(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what(), line, col);
  }
  Loader l;
  try {
    l.load(j);
  } catch (const json::exception& e) {
    throw ValidationError("document", e.what());
  }
  return std::move(l.doc);
}

namespace {

using ojson = nlohmann::ordered_json;

ojson dump_generators(const GradedSpace& s) {
  ojson g = ojson::array();
  for (const auto& x : s.generators()) g.push_back(ojson::array({x.name, x.degree}));
  return g;
}

ojson dump_vec(const GradedSpace& s, const Vec<Letter>& v) {
  ojson o = ojson::object();
  for (const auto& [l, c] : v) o[s.name(l)] = c.str();
  return o;
}

ojson dump_word(const GradedSpace& s, std::span<const Letter> w) {
  ojson a = ojson::array();
  for (Letter l : w) a.push_back(s.name(l));
  return a;
}

ojson dump_table(const MultiOp& op, const GradedSpace& in, const GradedSpace& out) {
  ojson a = ojson::array();
  for (const auto& [w, v] : op.table())
    if (!v.is_zero()) a.push_back({{"in", dump_word(in, w)}, {"out", dump_vec(out, v)}});
  return a;
}

}  // namespace

std::string dump(const SpecDocument& doc, std::size_t cap) {
  ojson j;
  j["ring"] = doc.ring->describe();
  j["grading"] = doc.grading.describe();
  j["caps"] = {{"weight", doc.weight_cap}, {"arity", doc.arity_cap}};
  auto& algebras = j["algebras"] = ojson::array();
  for (const auto& [name, a] : doc.algebras)
    algebras.push_back({{"name", name},
                        {"form", "b"},
                        {"generators", dump_generators(a->space())},
                        {"unit", a->space().name(a->unit())},
                        {"arity_cap", a->arity_cap()},
                        {"explicit_unit", true},
                        {"operations", dump_table(a->b(), a->space(), a->space())}});
  auto& modules = j["modules"] = ojson::array();
  for (const auto& [name, e] : doc.modules) {
    const auto& m = *e.module;
    ojson ops = ojson::array();
    for (const auto& [w, v] : m.structure().table()) {
      if (v.is_zero()) continue;
      ojson in = ojson::array({m.space().name(w[0])});
      for (std::size_t i = 1; i < w.size(); ++i) in.push_back(m.algebra().space().name(w[i]));
      ops.push_back({{"in", in}, {"out", dump_vec(m.space(), v)}});
    }
    modules.push_back({{"name", name},
                       {"algebra", e.algebra},
                       {"form", "b"},
                       {"generators", dump_generators(m.space())},
                       {"explicit_unit", true},
                       {"operations", ops}});
  }
  auto& morphisms = j["morphisms"] = ojson::array();
  for (const auto& [name, f] : doc.morphisms) {
    std::string src, tgt;
    for (const auto& [n, a] : doc.algebras) {
      if (a == f->source_ref()) src = n;
      if (a == f->target_ref()) tgt = n;
    }
    morphisms.push_back({{"name", name},
                         {"source", src},
                         {"target", tgt},
                         {"explicit_unit", true},
                         {"components", dump_table(f->f(), f->source().space(), f->target().space())}});
  }
  auto& maps = j["module_maps"] = ojson::array();
  for (const auto& [name, e] : doc.module_maps) {
    const auto& src = *doc.module(e.source).module;
    const auto& tgt = *doc.module(e.target).module;
    ojson comps = ojson::array();
    for (const auto& x : e.map.source().inputs(cap)) {
      Vec<Key> v = e.map(x);
      if (v.is_zero()) continue;
      ojson in = ojson::array({src.space().name(x.m.at(0))});
      for (Letter l : x.a) in.push_back(src.algebra().space().name(l));
      ojson out = ojson::object();
      for (const auto& [k, c] : v) out[tgt.space().name(k.at(0))] = c.str();
      comps.push_back({{"in", in}, {"out", out}});
    }
    maps.push_back({{"name", name},
                    {"source", e.source},
                    {"target", e.target},
                    {"degree", e.map.degree()},
                    {"components", comps}});
  }
  auto& bimodules = j["bimodules"] = ojson::array();
  for (const auto& [name, e] : doc.bimodules) {
    const auto& v = *e.bimodule;
    ojson ops = ojson::array();
    for (const auto& [k, out] : v.table()) {
      if (out.is_zero()) continue;
      const auto& [l, x, r] = k;
      ops.push_back({{"left", dump_word(v.left().space(), l)},
                     {"element", v.space().name(x)},
                     {"right", dump_word(v.right().space(), r)},
                     {"out", dump_vec(v.space(), out)}});
    }
    bimodules.push_back({{"name", name},
                         {"left", e.left},
                         {"right", e.right},
                         {"generators", dump_generators(v.space())},
                         {"operations", ops}});
  }
  auto& mfs = j["matrix_factorizations"] = ojson::array();
  for (const auto& [name, f] : doc.matrix_factorizations) {
    ojson d = ojson::array();
    for (const auto& row : f.d) {
      ojson r = ojson::array();
      for (const auto& x : row) r.push_back(x.str());
      d.push_back(r);
    }
    mfs.push_back({{"name", name}, {"even", f.even}, {"odd", f.odd}, {"potential", f.w.str()}, {"d", d}});
  }
  auto& homotopies = j["homotopies"] = ojson::array();
  for (const auto& [name, e] : doc.homotopies) {
    auto f = doc.morphism(e.f);
    ojson h{{"name", name}, {"f", e.f}};
    if (e.g) h["g"] = *e.g;
    h["components"] = dump_table(e.h, f->source().space(), f->target().space());
    homotopies.push_back(h);
  }
  auto& inversions = j["inversions"] = ojson::array();
  for (const auto& [name, e] : doc.inversions) {
    ojson i{{"name", name}, {"phi", e.phi}, {"psi", e.psi}};
    if (e.h) i["h"] = *e.h;
    if (e.l) i["l"] = *e.l;
    inversions.push_back(i);
  }
  return j.dump(2) + "\n";
}

SpecDocument load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_string(ss.str(), path.string());
}

}  // namespace ainf::io
