#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ainf {

struct StructuralError : std::logic_error {
  using std::logic_error::logic_error;
};

// An operation was called on input violating its documented precondition.
struct PreconditionFailure : std::logic_error {
  using std::logic_error::logic_error;
};

struct UnsupportedRing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RingKind { Integers, Rationals, IntegersModN, Polynomial };

class Ring;
using RingRef = const Ring*;

// Ring descriptors are interned: two structurally equal rings share one
// address, so ring equality is pointer equality.
class Ring {
 public:
  static RingRef integers();
  static RingRef rationals();
  static RingRef integers_mod(const mpz_class& n);
  static RingRef integers_mod(long n) { return integers_mod(mpz_class(n)); }
  static RingRef polynomial(RingRef base, std::vector<std::string> variables);

  RingKind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }
  bool small_modulus() const { return small_mod_ != 0; }
  std::int64_t small_mod() const { return small_mod_; }
  RingRef base() const { return base_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }

  bool is_field() const { return field_; }
  std::string describe() const;

  Ring(RingKind kind, mpz_class modulus, RingRef base, std::vector<std::string> vars);

 private:
  RingKind kind_;
  mpz_class modulus_;
  std::int64_t small_mod_ = 0;
  RingRef base_ = nullptr;
  std::vector<std::string> vars_;
  bool field_ = false;
};

using Monomial = std::vector<unsigned>;

// Terms sorted by descending lex order of exponent vectors, no zero
// coefficients. Coefficients live in the base ring, stored as rationals.
using PolyTerms = std::vector<std::pair<Monomial, mpq_class>>;

class Elem {
 public:
  Elem() = default;

  static Elem zero(RingRef r);
  static Elem one(RingRef r);
  static Elem from_int(RingRef r, long v);
  static Elem from_mpz(RingRef r, const mpz_class& v);
  // Requires the denominator to be invertible in r.
  static Elem from_mpq(RingRef r, const mpq_class& v);
  static Elem variable(RingRef r, std::size_t index);
  static Elem from_terms(RingRef r, PolyTerms terms);
  static Elem parse(RingRef r, std::string_view text);

  RingRef ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  std::optional<Elem> inverse() const;

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator-() const;
  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o) { return *this = *this * o; }
  Elem pow(unsigned e) const;

  bool operator==(const Elem& o) const;

  std::string str() const;

  // Residue, integer or rational value for non-polynomial rings.
  mpq_class rational() const;
  // Terms of a polynomial element (empty for zero).
  const PolyTerms& terms() const;
  bool is_constant() const;

 private:
  using PolyPtr = std::shared_ptr<const PolyTerms>;
  using Rep = std::variant<std::int64_t, mpz_class, mpq_class, PolyPtr>;

  Elem(RingRef r, Rep v) : ring_(r), v_(std::move(v)) {}
  static Elem make_poly(RingRef r, PolyTerms t);

  RingRef ring_ = nullptr;
  Rep v_ = std::int64_t{0};

  friend class ElemAccess;
};

// Reduces a base-ring coefficient to canonical form (residue, integer).
mpq_class normalize_coefficient(RingRef base, const mpq_class& c);

// A ring homomorphism among the supported kinds.
class RingMap {
 public:
  enum class Kind { Identity, Reduction, IntoRationals, Evaluation, Embedding };

  static RingMap identity(RingRef r);
  // Z -> Z/n, or Z/n -> Z/m with m | n.
  static RingMap reduction(RingRef source, RingRef target);
  static RingMap into_rationals();
  // P = base[x_1..x_n] -> base at the given point.
  static RingMap evaluation(RingRef poly, std::vector<Elem> point);
  // base -> base[vars]
  static RingMap embedding(RingRef base, RingRef poly);

  Elem operator()(const Elem& a) const;
  RingRef source() const { return source_; }
  RingRef target() const { return target_; }
  Kind kind() const { return kind_; }

 private:
  Kind kind_ = Kind::Identity;
  RingRef source_ = nullptr;
  RingRef target_ = nullptr;
  std::vector<Elem> point_;
};

using Matrix = std::vector<std::vector<Elem>>;

struct NoSolution {
  std::string reason;
};

using LinearSolution = std::variant<std::vector<Elem>, NoSolution>;

// Solves A x = b over a field (Gaussian elimination), over Z (diagonal
// reduction by unimodular row and column operations) or over Z/n (lifted to
// Z). Polynomial rings throw UnsupportedRing.
LinearSolution solve_linear(RingRef r, std::size_t ncols, const Matrix& a,
                            const std::vector<Elem>& rhs);

// Basis of the right kernel of A over a field.
std::vector<std::vector<Elem>> kernel_basis(RingRef r, std::size_t ncols, const Matrix& a);

std::vector<Elem> mat_vec(RingRef r, std::size_t ncols, const Matrix& a,
                          const std::vector<Elem>& x);

}  // namespace ainf
