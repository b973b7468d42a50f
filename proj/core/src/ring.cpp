#include "ainf/ring.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

namespace ainf {

namespace {

struct Registry {
  std::mutex mu;
  std::deque<Ring> rings;
  std::map<std::string, RingRef> by_key;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::string key_of(RingKind kind, const mpz_class& n, RingRef base,
                   const std::vector<std::string>& vars) {
  std::ostringstream os;
  os << static_cast<int>(kind) << ':' << n.get_str() << ':' << base << ':';
  for (const auto& v : vars) os << v << ',';
  return os.str();
}

RingRef intern(RingKind kind, mpz_class n, RingRef base, std::vector<std::string> vars) {
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto key = key_of(kind, n, base, vars);
  if (auto it = reg.by_key.find(key); it != reg.by_key.end()) return it->second;
  reg.rings.emplace_back(kind, std::move(n), base, std::move(vars));
  RingRef r = &reg.rings.back();
  reg.by_key.emplace(std::move(key), r);
  return r;
}

std::int64_t mod_norm(std::int64_t v, std::int64_t n) {
  v %= n;
  return v < 0 ? v + n : v;
}

mpz_class mpz_mod_norm(const mpz_class& v, const mpz_class& n) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

Ring::Ring(RingKind kind, mpz_class modulus, RingRef base, std::vector<std::string> vars)
    : kind_(kind), modulus_(std::move(modulus)), base_(base), vars_(std::move(vars)) {
  switch (kind_) {
    case RingKind::Rationals:
      field_ = true;
      break;
    case RingKind::IntegersModN:
      field_ = mpz_probab_prime_p(modulus_.get_mpz_t(), 40) != 0;
      if (modulus_ < (mpz_class(1) << 31)) small_mod_ = modulus_.get_si();
      break;
    default:
      break;
  }
}

RingRef Ring::integers() {
  static RingRef r = intern(RingKind::Integers, 0, nullptr, {});
  return r;
}

RingRef Ring::rationals() {
  static RingRef r = intern(RingKind::Rationals, 0, nullptr, {});
  return r;
}

RingRef Ring::integers_mod(const mpz_class& n) {
  if (n < 2) throw StructuralError("IntegersModN requires n >= 2");
  return intern(RingKind::IntegersModN, n, nullptr, {});
}

RingRef Ring::polynomial(RingRef base, std::vector<std::string> variables) {
  if (base->kind() == RingKind::Polynomial)
    throw StructuralError("polynomial base ring must not be a polynomial ring");
  if (!(base->is_field() || base->kind() == RingKind::Integers))
    throw StructuralError("polynomial base ring must be a field or Z");
  if (variables.empty()) throw StructuralError("polynomial ring needs at least one variable");
  auto sorted = variables;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw StructuralError("duplicate polynomial variable");
  return intern(RingKind::Polynomial, 0, base, std::move(variables));
}

std::string Ring::describe() const {
  switch (kind_) {
    case RingKind::Integers:
      return "ZZ";
    case RingKind::Rationals:
      return "QQ";
    case RingKind::IntegersModN:
      return "ZZ/" + modulus_.get_str();
    case RingKind::Polynomial: {
      std::string s = base_->describe() + "[";
      for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
      return s + "]";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------

mpq_class normalize_coefficient(RingRef base, const mpq_class& c) {
  switch (base->kind()) {
    case RingKind::Integers:
      if (c.get_den() != 1) throw StructuralError("non-integral coefficient over ZZ");
      return c;
    case RingKind::Rationals:
      return c;
    case RingKind::IntegersModN: {
      const auto& n = base->modulus();
      mpz_class num = mpz_mod_norm(c.get_num(), n);
      if (c.get_den() == 1) return mpq_class(num);
      mpz_class inv;
      if (!mpz_invert(inv.get_mpz_t(), c.get_den().get_mpz_t(), n.get_mpz_t()))
        throw StructuralError("denominator not invertible modulo " + n.get_str());
      return mpq_class(mpz_mod_norm(num * inv, n));
    }
    case RingKind::Polynomial:
      break;
  }
  throw StructuralError("invalid coefficient ring");
}

Elem Elem::make_poly(RingRef r, PolyTerms t) {
  if (t.empty()) return Elem(r, PolyPtr{});
  return Elem(r, std::make_shared<const PolyTerms>(std::move(t)));
}

Elem Elem::zero(RingRef r) { return from_int(r, 0); }
Elem Elem::one(RingRef r) { return from_int(r, 1); }

Elem Elem::from_int(RingRef r, long v) { return from_mpz(r, mpz_class(v)); }

Elem Elem::from_mpz(RingRef r, const mpz_class& v) {
  switch (r->kind()) {
    case RingKind::Integers:
      return Elem(r, v);
    case RingKind::Rationals:
      return Elem(r, mpq_class(v));
    case RingKind::IntegersModN:
      if (r->small_modulus()) {
        mpz_class m = mpz_mod_norm(v, r->modulus());
        return Elem(r, static_cast<std::int64_t>(m.get_si()));
      }
      return Elem(r, mpz_mod_norm(v, r->modulus()));
    case RingKind::Polynomial: {
      mpq_class c = normalize_coefficient(r->base(), mpq_class(v));
      if (c == 0) return make_poly(r, {});
      return make_poly(r, {{Monomial(r->nvars(), 0u), c}});
    }
  }
  throw StructuralError("bad ring");
}

Elem Elem::from_mpq(RingRef r, const mpq_class& v) {
  switch (r->kind()) {
    case RingKind::Integers:
      if (v.get_den() != 1) throw StructuralError("non-integral value over ZZ");
      return Elem(r, v.get_num());
    case RingKind::Rationals:
      return Elem(r, v);
    case RingKind::IntegersModN:
      return from_mpz(r, normalize_coefficient(r, v).get_num());
    case RingKind::Polynomial: {
      mpq_class c = normalize_coefficient(r->base(), v);
      if (c == 0) return make_poly(r, {});
      return make_poly(r, {{Monomial(r->nvars(), 0u), c}});
    }
  }
  throw StructuralError("bad ring");
}

Elem Elem::variable(RingRef r, std::size_t index) {
  if (r->kind() != RingKind::Polynomial || index >= r->nvars())
    throw StructuralError("no such polynomial variable");
  Monomial m(r->nvars(), 0u);
  m[index] = 1;
  return make_poly(r, {{m, mpq_class(1)}});
}

Elem Elem::from_terms(RingRef r, PolyTerms terms) {
  if (r->kind() != RingKind::Polynomial) throw StructuralError("from_terms needs a polynomial ring");
  std::map<Monomial, mpq_class, std::greater<>> acc;
  for (auto& [m, c] : terms) {
    if (m.size() != r->nvars()) throw StructuralError("monomial arity mismatch");
    acc[m] += c;
  }
  PolyTerms out;
  for (auto& [m, c] : acc) {
    mpq_class n = normalize_coefficient(r->base(), c);
    if (n != 0) out.emplace_back(m, n);
  }
  return make_poly(r, std::move(out));
}

namespace {

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw StructuralError("empty scalar");
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw StructuralError("malformed scalar '" + std::string(text) + "'");
  if (q.get_den() == 0) throw StructuralError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Elem Elem::parse(RingRef r, std::string_view text) {
  if (r->kind() != RingKind::Polynomial) return from_mpq(r, parse_rational(text));
  // Polynomial: sum of terms c*x^k*y, e.g. "3*x^2*y - 1/2".
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw StructuralError("empty polynomial");
  PolyTerms terms;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw StructuralError("malformed polynomial '" + std::string(text) + "'");
    mpq_class coeff(sign);
    Monomial mono(r->nvars(), 0u);
    std::size_t k = 0;
    while (k <= term.size()) {
      std::size_t e = term.find('*', k);
      if (e == std::string::npos) e = term.size();
      std::string factor = term.substr(k, e - k);
      if (factor.empty()) throw StructuralError("malformed polynomial '" + std::string(text) + "'");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        coeff *= parse_rational(factor);
      } else {
        std::string name = factor;
        unsigned power = 1;
        if (auto caret = factor.find('^'); caret != std::string::npos) {
          name = factor.substr(0, caret);
          power = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
        }
        const auto& vars = r->variables();
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw StructuralError("unknown variable '" + name + "'");
        mono[static_cast<std::size_t>(it - vars.begin())] += power;
      }
      k = e + 1;
    }
    terms.emplace_back(std::move(mono), coeff);
    i = j;
  }
  return from_terms(r, std::move(terms));
}

namespace {

const PolyTerms kEmptyTerms;

PolyTerms poly_add(RingRef base, const PolyTerms& a, const PolyTerms& b, int sign) {
  PolyTerms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : mpq_class(-b[j].second));
      out.back().second = normalize_coefficient(base, out.back().second);
      ++j;
    } else {
      mpq_class c = sign > 0 ? mpq_class(a[i].second + b[j].second) : mpq_class(a[i].second - b[j].second);
      c = normalize_coefficient(base, c);
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

class ElemAccess {
 public:
  static const PolyTerms& terms(const Elem& e) {
    const auto& p = std::get<Elem::PolyPtr>(e.v_);
    return p ? *p : kEmptyTerms;
  }
};

bool Elem::is_zero() const {
  switch (v_.index()) {
    case 0:
      return std::get<0>(v_) == 0;
    case 1:
      return std::get<1>(v_) == 0;
    case 2:
      return std::get<2>(v_) == 0;
    default:
      return !std::get<3>(v_) || std::get<3>(v_)->empty();
  }
}

bool Elem::is_one() const {
  if (!ring_) return false;
  return *this == one(ring_);
}

const PolyTerms& Elem::terms() const {
  if (!ring_ || ring_->kind() != RingKind::Polynomial) throw StructuralError("not a polynomial");
  return ElemAccess::terms(*this);
}

bool Elem::is_constant() const {
  if (ring_->kind() != RingKind::Polynomial) return true;
  const auto& t = terms();
  return t.empty() ||
         (t.size() == 1 && std::all_of(t[0].first.begin(), t[0].first.end(),
                                       [](unsigned e) { return e == 0; }));
}

mpq_class Elem::rational() const {
  switch (v_.index()) {
    case 0:
      return mpq_class(static_cast<long>(std::get<0>(v_)));
    case 1:
      return mpq_class(std::get<1>(v_));
    case 2:
      return std::get<2>(v_);
    default:
      throw StructuralError("rational() on a polynomial");
  }
}

static void check_same(const Elem& a, const Elem& b) {
  if (a.ring() != b.ring()) throw StructuralError("ring mismatch");
}

Elem Elem::operator+(const Elem& o) const {
  check_same(*this, o);
  switch (v_.index()) {
    case 0:
      return Elem(ring_, mod_norm(std::get<0>(v_) + std::get<0>(o.v_), ring_->small_mod()));
    case 1:
      if (ring_->kind() == RingKind::IntegersModN)
        return Elem(ring_, mpz_mod_norm(std::get<1>(v_) + std::get<1>(o.v_), ring_->modulus()));
      return Elem(ring_, mpz_class(std::get<1>(v_) + std::get<1>(o.v_)));
    case 2:
      return Elem(ring_, mpq_class(std::get<2>(v_) + std::get<2>(o.v_)));
    default:
      return make_poly(ring_, poly_add(ring_->base(), ElemAccess::terms(*this),
                                       ElemAccess::terms(o), 1));
  }
}

Elem Elem::operator-(const Elem& o) const {
  check_same(*this, o);
  switch (v_.index()) {
    case 0:
      return Elem(ring_, mod_norm(std::get<0>(v_) - std::get<0>(o.v_), ring_->small_mod()));
    case 1:
      if (ring_->kind() == RingKind::IntegersModN)
        return Elem(ring_, mpz_mod_norm(std::get<1>(v_) - std::get<1>(o.v_), ring_->modulus()));
      return Elem(ring_, mpz_class(std::get<1>(v_) - std::get<1>(o.v_)));
    case 2:
      return Elem(ring_, mpq_class(std::get<2>(v_) - std::get<2>(o.v_)));
    default:
      return make_poly(ring_, poly_add(ring_->base(), ElemAccess::terms(*this),
                                       ElemAccess::terms(o), -1));
  }
}

Elem Elem::operator-() const { return zero(ring_) - *this; }

Elem& Elem::operator+=(const Elem& o) { return *this = *this + o; }
Elem& Elem::operator-=(const Elem& o) { return *this = *this - o; }

Elem Elem::operator*(const Elem& o) const {
  check_same(*this, o);
  switch (v_.index()) {
    case 0: {
      auto p = static_cast<__int128>(std::get<0>(v_)) * std::get<0>(o.v_);
      return Elem(ring_, static_cast<std::int64_t>(p % ring_->small_mod()));
    }
    case 1:
      if (ring_->kind() == RingKind::IntegersModN)
        return Elem(ring_, mpz_mod_norm(std::get<1>(v_) * std::get<1>(o.v_), ring_->modulus()));
      return Elem(ring_, mpz_class(std::get<1>(v_) * std::get<1>(o.v_)));
    case 2:
      return Elem(ring_, mpq_class(std::get<2>(v_) * std::get<2>(o.v_)));
    default: {
      const auto& a = ElemAccess::terms(*this);
      const auto& b = ElemAccess::terms(o);
      std::map<Monomial, mpq_class, std::greater<>> acc;
      for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
          Monomial m(ma.size());
          for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
          acc[m] += ca * cb;
        }
      PolyTerms out;
      for (auto& [m, c] : acc) {
        mpq_class n = normalize_coefficient(ring_->base(), c);
        if (n != 0) out.emplace_back(m, n);
      }
      return make_poly(ring_, std::move(out));
    }
  }
}

Elem Elem::pow(unsigned e) const {
  Elem r = one(ring_), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

bool Elem::operator==(const Elem& o) const {
  if (ring_ != o.ring_) return false;
  if (v_.index() == 3) return ElemAccess::terms(*this) == ElemAccess::terms(o);
  return v_ == o.v_;
}

bool Elem::is_unit() const { return inverse().has_value(); }

std::optional<Elem> Elem::inverse() const {
  switch (ring_->kind()) {
    case RingKind::Integers: {
      const auto& v = std::get<1>(v_);
      if (v == 1 || v == -1) return *this;
      return std::nullopt;
    }
    case RingKind::Rationals:
      if (is_zero()) return std::nullopt;
      return Elem(ring_, mpq_class(1 / std::get<2>(v_)));
    case RingKind::IntegersModN: {
      mpz_class v = rational().get_num(), inv;
      if (!mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), ring_->modulus().get_mpz_t()))
        return std::nullopt;
      return from_mpz(ring_, inv);
    }
    case RingKind::Polynomial: {
      // Base is Z or a field, so the units are the constant base units.
      if (!is_constant() || is_zero()) return std::nullopt;
      Elem c = from_mpq(ring_->base(), terms()[0].second);
      auto ci = c.inverse();
      if (!ci) return std::nullopt;
      return from_mpq(ring_, ci->rational());
    }
  }
  return std::nullopt;
}

std::string Elem::str() const {
  if (!ring_) return "<null>";
  if (ring_->kind() != RingKind::Polynomial) return rational().get_str();
  const auto& t = terms();
  if (t.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& [m, c] = t[i];
    bool constant = std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
    mpq_class a = abs(c);
    if (i == 0)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    std::string mono;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->variables()[v];
      if (m[v] > 1) mono += "^" + std::to_string(m[v]);
    }
    if (constant)
      s += a.get_str();
    else if (a == 1)
      s += mono;
    else
      s += a.get_str() + "*" + mono;
  }
  return s;
}

// ---------------------------------------------------------------------------

RingMap RingMap::identity(RingRef r) {
  RingMap m;
  m.kind_ = Kind::Identity;
  m.source_ = m.target_ = r;
  return m;
}

RingMap RingMap::reduction(RingRef source, RingRef target) {
  if (target->kind() != RingKind::IntegersModN)
    throw UnsupportedRing("reduction target must be ZZ/n");
  bool ok = source->kind() == RingKind::Integers ||
            (source->kind() == RingKind::IntegersModN &&
             mpz_divisible_p(source->modulus().get_mpz_t(), target->modulus().get_mpz_t()));
  if (!ok) throw UnsupportedRing("unsupported reduction " + source->describe() + " -> " +
                                 target->describe());
  RingMap m;
  m.kind_ = Kind::Reduction;
  m.source_ = source;
  m.target_ = target;
  return m;
}

RingMap RingMap::into_rationals() {
  RingMap m;
  m.kind_ = Kind::IntoRationals;
  m.source_ = Ring::integers();
  m.target_ = Ring::rationals();
  return m;
}

RingMap RingMap::evaluation(RingRef poly, std::vector<Elem> point) {
  if (poly->kind() != RingKind::Polynomial) throw UnsupportedRing("evaluation needs a polynomial ring");
  if (point.size() != poly->nvars()) throw StructuralError("evaluation point has wrong arity");
  for (const auto& p : point)
    if (p.ring() != poly->base()) throw StructuralError("evaluation point not in the base ring");
  RingMap m;
  m.kind_ = Kind::Evaluation;
  m.source_ = poly;
  m.target_ = poly->base();
  m.point_ = std::move(point);
  return m;
}

RingMap RingMap::embedding(RingRef base, RingRef poly) {
  if (poly->kind() != RingKind::Polynomial || poly->base() != base)
    throw UnsupportedRing("embedding must be base -> base[vars]");
  RingMap m;
  m.kind_ = Kind::Embedding;
  m.source_ = base;
  m.target_ = poly;
  return m;
}

Elem RingMap::operator()(const Elem& a) const {
  if (a.ring() != source_) throw StructuralError("ring map applied outside its source");
  switch (kind_) {
    case Kind::Identity:
      return a;
    case Kind::Reduction:
      return Elem::from_mpz(target_, a.rational().get_num());
    case Kind::IntoRationals:
      return Elem::from_mpq(target_, a.rational());
    case Kind::Embedding:
      return Elem::from_mpq(target_, a.rational());
    case Kind::Evaluation: {
      Elem acc = Elem::zero(target_);
      for (const auto& [m, c] : a.terms()) {
        Elem t = Elem::from_mpq(target_, c);
        for (std::size_t i = 0; i < m.size(); ++i) t *= point_[i].pow(m[i]);
        acc += t;
      }
      return acc;
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// Linear algebra

std::vector<Elem> mat_vec(RingRef r, std::size_t ncols, const Matrix& a,
                          const std::vector<Elem>& x) {
  if (x.size() != ncols) throw StructuralError("mat_vec: size mismatch");
  std::vector<Elem> out;
  out.reserve(a.size());
  for (const auto& row : a) {
    Elem acc = Elem::zero(r);
    for (std::size_t j = 0; j < ncols; ++j)
      if (!row[j].is_zero() && !x[j].is_zero()) acc += row[j] * x[j];
    out.push_back(acc);
  }
  return out;
}

namespace {

void check_shape(RingRef r, std::size_t ncols, const Matrix& a, const std::vector<Elem>* rhs) {
  for (const auto& row : a) {
    if (row.size() != ncols) throw StructuralError("ragged matrix");
    for (const auto& e : row)
      if (e.ring() != r) throw StructuralError("matrix entry in wrong ring");
  }
  if (rhs && rhs->size() != a.size()) throw StructuralError("rhs length mismatch");
}

// Row-reduces over a field; returns pivot columns and reduces `aug` in place.
std::vector<std::size_t> rref(RingRef r, std::size_t ncols, Matrix& m, std::vector<Elem>* rhs) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    if (rhs) std::swap((*rhs)[p], (*rhs)[row]);
    Elem inv = *m[row][col].inverse();
    for (auto& e : m[row]) e *= inv;
    if (rhs) (*rhs)[row] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Elem f = m[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        if (!m[row][j].is_zero()) m[i][j] -= f * m[row][j];
      if (rhs) (*rhs)[i] -= f * (*rhs)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  (void)r;
  return pivots;
}

LinearSolution solve_field(RingRef r, std::size_t ncols, Matrix m, std::vector<Elem> b) {
  auto pivots = rref(r, ncols, m, &b);
  for (std::size_t i = pivots.size(); i < m.size(); ++i)
    if (!b[i].is_zero())
      return NoSolution{"inconsistent system: rank " + std::to_string(pivots.size()) +
                        ", residual in row " + std::to_string(i)};
  std::vector<Elem> x(ncols, Elem::zero(r));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = b[i];
  return x;
}

// Diagonalizes A by unimodular row and column operations, then solves.
std::variant<std::vector<mpz_class>, NoSolution> integer_solve(
    std::size_t ncols, std::vector<std::vector<mpz_class>> a, std::vector<mpz_class> b) {
  std::size_t nrows = a.size();
  std::vector<std::vector<mpz_class>> v(ncols, std::vector<mpz_class>(ncols, 0));
  for (std::size_t i = 0; i < ncols; ++i) v[i][i] = 1;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(b[i], b[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  };

  std::size_t t = 0;
  for (; t < std::min(nrows, ncols); ++t) {
    bool found = false;
    std::size_t pi = 0, pj = 0;
    for (std::size_t i = t; i < nrows; ++i)
      for (std::size_t j = t; j < ncols; ++j)
        if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < nrows; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = 0; j < ncols; ++j) a[i][j] -= q * a[t][j];
        b[i] -= q * b[t];
        if (a[i][t] != 0) {
          swap_rows(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < ncols; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = 0; i < nrows; ++i) a[i][j] -= q * a[i][t];
        for (std::size_t i = 0; i < ncols; ++i) v[i][j] -= q * v[i][t];
        if (a[t][j] != 0) {
          swap_cols(t, j);
          dirty = true;
        }
      }
      if (!dirty) break;
    }
  }
  std::size_t rank = t;
  std::vector<mpz_class> y(ncols, 0);
  for (std::size_t i = 0; i < nrows; ++i) {
    if (i < rank) {
      if (!mpz_divisible_p(b[i].get_mpz_t(), a[i][i].get_mpz_t()))
        return NoSolution{"invariant factor " + a[i][i].get_str() + " does not divide " +
                          b[i].get_str()};
      y[i] = b[i] / a[i][i];
    } else if (b[i] != 0) {
      return NoSolution{"inconsistent system: rank " + std::to_string(rank)};
    }
  }
  std::vector<mpz_class> x(ncols, 0);
  for (std::size_t i = 0; i < ncols; ++i)
    for (std::size_t j = 0; j < rank; ++j) x[i] += v[i][j] * y[j];
  return x;
}

}  // namespace

LinearSolution solve_linear(RingRef r, std::size_t ncols, const Matrix& a,
                            const std::vector<Elem>& rhs) {
  check_shape(r, ncols, a, &rhs);
  for (const auto& e : rhs)
    if (e.ring() != r) throw StructuralError("rhs entry in wrong ring");
  switch (r->kind()) {
    case RingKind::Polynomial:
      throw UnsupportedRing("linear solving over " + r->describe() + " is not supported");
    case RingKind::Rationals:
      return solve_field(r, ncols, a, rhs);
    case RingKind::IntegersModN:
      if (r->is_field()) return solve_field(r, ncols, a, rhs);
      [[fallthrough]];
    case RingKind::Integers: {
      // Over Z/n solve [A | n I] (x, z) = b over Z and reduce.
      bool modular = r->kind() == RingKind::IntegersModN;
      std::size_t extra = modular ? a.size() : 0;
      std::vector<std::vector<mpz_class>> za(a.size(), std::vector<mpz_class>(ncols + extra, 0));
      std::vector<mpz_class> zb(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < ncols; ++j) za[i][j] = a[i][j].rational().get_num();
        if (modular) za[i][ncols + i] = r->modulus();
        zb[i] = rhs[i].rational().get_num();
      }
      auto sol = integer_solve(ncols + extra, std::move(za), std::move(zb));
      if (auto* ns = std::get_if<NoSolution>(&sol)) return *ns;
      const auto& zx = std::get<std::vector<mpz_class>>(sol);
      std::vector<Elem> x;
      x.reserve(ncols);
      for (std::size_t j = 0; j < ncols; ++j) x.push_back(Elem::from_mpz(r, zx[j]));
      return x;
    }
  }
  throw StructuralError("bad ring");
}

std::vector<std::vector<Elem>> kernel_basis(RingRef r, std::size_t ncols, const Matrix& a) {
  check_shape(r, ncols, a, nullptr);
  if (!r->is_field()) throw UnsupportedRing("kernel_basis requires a field");
  Matrix m = a;
  auto pivots = rref(r, ncols, m, nullptr);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Elem> v(ncols, Elem::zero(r));
    v[f] = Elem::one(r);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ainf
