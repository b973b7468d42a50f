#pragma once

#include <map>
#include <utility>

#include "ainf/ring.hpp"

namespace ainf {

// Finite formal linear combination of basis keys with no zero coefficients.
// Ordered storage keeps every traversal deterministic.
template <class Key>
class Vec {
 public:
  using Terms = std::map<Key, Elem>;

  Vec() = default;
  explicit Vec(RingRef r) : ring_(r) {}
  Vec(RingRef r, const Key& k) : ring_(r) { terms_.emplace(k, Elem::one(r)); }

  RingRef ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Elem coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Elem::zero(ring_) : it->second;
  }

  void add(const Key& k, const Elem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(Key&& k, const Elem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  // Adds sign * c with sign = +1 or -1.
  void add(const Key& k, const Elem& c, int sign) { add(k, sign < 0 ? -c : c); }
  void add(Key&& k, const Elem& c, int sign) { add(std::move(k), sign < 0 ? -c : c); }

  void add_scaled(const Vec& o, const Elem& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : o.terms_) add(k, v * c);
  }
  void add_signed(const Vec& o, int sign) {
    for (const auto& [k, v] : o.terms_) add(k, v, sign);
  }

  Vec& operator+=(const Vec& o) {
    for (const auto& [k, v] : o.terms_) add(k, v);
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (const auto& [k, v] : o.terms_) add(k, -v);
    return *this;
  }
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  Vec operator-() const {
    Vec r(ring_);
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
  }
  Vec scaled(const Elem& c) const {
    Vec r(ring_);
    r.add_scaled(*this, c);
    return r;
  }

  friend bool operator==(const Vec& a, const Vec& b) { return a.terms_ == b.terms_; }

  // Applies a linear map given on basis keys.
  template <class Out, class Fn>
  Vec<Out> map_linear(RingRef target, Fn&& fn) const {
    Vec<Out> out(target);
    for (const auto& [k, c] : terms_) out.add_scaled(fn(k), c);
    return out;
  }

 private:
  RingRef ring_ = nullptr;
  Terms terms_;
};

}  // namespace ainf
