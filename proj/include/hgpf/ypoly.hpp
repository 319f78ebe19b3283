#pragma once

#include <vector>

#include "hgpf/lattice.hpp"

namespace hgpf {

struct RadicalPair {
  IntPoly X, Y, Delta;
};

namespace detail {

// Element u + v s of Z[z][s]/(s^2 - Delta).
struct QuadElem {
  IntPoly u, v;
};

inline QuadElem qmul(const QuadElem& x, const QuadElem& y, const IntPoly& delta) {
  return {x.u * y.u + x.v * y.v * delta, x.u * y.v + x.v * y.u};
}

inline QuadElem qpow(QuadElem b, long e, const IntPoly& delta) {
  QuadElem r{IntPoly::constant(Int(1)), IntPoly()};
  while (e > 0) {
    if (e & 1) r = qmul(r, b, delta);
    b = qmul(b, b, delta);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

inline IntPoly delta_poly(const Triple& t) {
  long p = t.p, q = t.q, r = t.r;
  return IntPoly({Int(r * r), Int(-2 * ((p + q) * r - 2 * p * q)), Int((p - q) * (p - q))});
}

// Z+ = {r+(p-q)z+s}^p {r-(p-q)z+s}^q {(2r-p-q)z-r-s}^{r-p-q} = X + Y s.
inline RadicalPair build_XY(const Triple& t) {
  if (!t.in_domain()) throw Error(ErrorCode::NotInDomain, "triple " + t.to_text() + " is not in D-_A");
  long p = t.p, q = t.q, r = t.r;
  IntPoly delta = delta_poly(t);
  IntPoly one = IntPoly::constant(Int(1));
  detail::QuadElem f1{IntPoly({Int(r), Int(p - q)}), one};
  detail::QuadElem f2{IntPoly({Int(r), Int(q - p)}), one};
  detail::QuadElem f3{IntPoly({Int(-r), Int(2 * r - p - q)}), -one};
  detail::QuadElem z = detail::qpow(f1, p, delta);
  z = detail::qmul(z, detail::qpow(f2, q, delta), delta);
  z = detail::qmul(z, detail::qpow(f3, t.rcheck(), delta), delta);
  return {z.u, z.v, delta};
}

// Z+ Z- expanded factor by factor without radicals.
inline IntPoly conjugate_product(const Triple& t) {
  long p = t.p, q = t.q, r = t.r;
  IntPoly delta = delta_poly(t);
  auto norm = [&](const IntPoly& u, const IntPoly& v) { return u * u - v * v * delta; };
  IntPoly one = IntPoly::constant(Int(1));
  IntPoly n1 = norm(IntPoly({Int(r), Int(p - q)}), one);
  IntPoly n2 = norm(IntPoly({Int(r), Int(q - p)}), one);
  IntPoly n3 = norm(IntPoly({Int(-r), Int(2 * r - p - q)}), one);
  IntPoly out = one;
  for (long i = 0; i < p; ++i) out = out * n1;
  for (long i = 0; i < q; ++i) out = out * n2;
  for (long i = 0; i < t.rcheck(); ++i) out = out * n3;
  return out;
}

// Primitive Y with positive leading coefficient.
inline IntPoly normalized_Y(const Triple& t) { return primitive_int(build_XY(t).Y); }

inline std::vector<AlgReal> x_candidates(const Triple& t) {
  IntPoly y = normalized_Y(t);
  auto roots = isolate_roots(to_rat(y), Rat(0), Rat(1));
  if (roots.empty())
    throw Error(ErrorCode::EmptyRootSet, "Y has no root in (0,1) for " + t.to_text());
  return roots;
}

}  // namespace hgpf
