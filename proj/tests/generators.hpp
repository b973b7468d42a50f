#pragma once

// Hand-rolled generators shared by the unit tests and the acceptance run.

#include "ainf/fixtures.hpp"
#include "ainf/vanishing.hpp"

namespace ainf::testgen {

inline RingRef qx() { return Ring::polynomial(Ring::rationals(), {"x"}); }

inline Elem poly(RingRef r, std::initializer_list<long> coeffs) {
  Elem x = Elem::variable(r, 0), out = Elem::zero(r), p = Elem::one(r);
  for (long c : coeffs) {
    out += Elem::from_int(r, c) * p;
    p = p * x;
  }
  return out;
}

inline MatrixFactorization two_by_two(RingRef r, Elem p, Elem q, Elem w) {
  Elem z = Elem::zero(r);
  return {r, 1, 1, {{z, p}, {q, z}}, w};
}

inline Elem random_poly(Rng& rng, RingRef r, long max_degree) {
  Elem x = Elem::variable(r, 0), out = Elem::zero(r), p = Elem::one(r);
  for (long d = 0; d <= max_degree; ++d) {
    out += Elem::from_int(r, rng.uniform(-3, 3)) * p;
    p = p * x;
  }
  return out.is_zero() ? Elem::one(r) : out;
}

// d = [[0, P], [Q, 0]] with P = U diag(f, fg) V and Q = V⁻¹ diag(gh, h) U⁻¹
// for elementary U, V, so that PQ = QP = fgh·1.
inline MatrixFactorization random_mf(Rng& rng, RingRef r) {
  Elem f = random_poly(rng, r, 1), g = random_poly(rng, r, 1), h = random_poly(rng, r, 1);
  if (rng.coin()) return two_by_two(r, f * g, h, f * g * h);
  Elem u = random_poly(rng, r, 1), v = random_poly(rng, r, 1);
  Elem one = Elem::one(r), z = Elem::zero(r);
  using M2 = std::vector<std::vector<Elem>>;
  auto mul = [](const M2& a, const M2& b) {
    M2 c(2, std::vector<Elem>(2, Elem::zero(a[0][0].ring())));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  M2 U{{one, u}, {z, one}}, Ui{{one, -u}, {z, one}};
  M2 V{{one, z}, {v, one}}, Vi{{one, z}, {-v, one}};
  M2 P = mul(mul(U, M2{{f, z}, {z, f * g}}), V);
  M2 Q = mul(mul(Vi, M2{{g * h, z}, {z, h}}), Ui);
  MatrixFactorization mf{r, 2, 2, std::vector<std::vector<Elem>>(4, std::vector<Elem>(4, z)), f * g * h};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      mf.d[i][2 + j] = P[i][j];
      mf.d[2 + i][j] = Q[i][j];
    }
  return mf;
}

}  // namespace ainf::testgen
