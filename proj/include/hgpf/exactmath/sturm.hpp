#pragma once

#include <utility>
#include <vector>

#include "hgpf/exactmath/poly.hpp"

namespace hgpf {

// Sign of f(x) for integer f and rational x, via homogeneous Horner.
inline int sign_at(const IntPoly& f, const Rat& x) {
  if (f.zero()) return 0;
  const Int& n = x.get_num();
  const Int& d = x.get_den();
  Int acc = f.lead();
  Int dpow = d;
  for (int i = f.degree() - 1; i >= 0; --i) {
    acc = acc * n + f[i] * dpow;
    dpow *= d;
  }
  return sgn(acc);
}

inline int sign_at(const RatPoly& f, const Rat& x) { return sgn(f(x)); }

// Positive rescaling to a primitive integer polynomial, sign preserved.
inline IntPoly positive_primitive(const RatPoly& p) {
  if (p.zero()) return IntPoly();
  IntPoly q = primitive_int(p);
  if (sgn(q.lead()) != sgn(p.lead())) q = -q;
  return q;
}

class SturmSequence {
 public:
  explicit SturmSequence(const IntPoly& f) {
    RatPoly a = to_rat(f), b = a.derivative();
    seq_.push_back(positive_primitive(a));
    while (!b.zero()) {
      seq_.push_back(positive_primitive(b));
      RatPoly r = -(a % b);
      a = std::move(b);
      b = std::move(r);
    }
  }

  int variations(const Rat& x) const {
    int v = 0, last = 0;
    for (const auto& p : seq_) {
      int s = sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  // Distinct roots in (lo,hi); caller guarantees f(lo), f(hi) != 0.
  int count(const Rat& lo, const Rat& hi) const { return variations(lo) - variations(hi); }

  const IntPoly& base() const { return seq_.front(); }

 private:
  std::vector<IntPoly> seq_;
};

inline int sturm_count(const RatPoly& f, const Rat& lo, const Rat& hi) {
  if (f.zero()) throw Error(ErrorCode::InvariantViolation, "sturm_count of zero polynomial");
  if (!(lo < hi)) throw Error(ErrorCode::InvariantViolation, "sturm_count needs lo < hi");
  if (sign_at(f, lo) == 0 || sign_at(f, hi) == 0)
    throw Error(ErrorCode::EndpointRoot, "f vanishes at an interval endpoint");
  return SturmSequence(positive_primitive(f)).count(lo, hi);
}

inline Rat cauchy_bound(const IntPoly& f) {
  Rat m(0);
  for (int i = 0; i < f.degree(); ++i) {
    Rat q = abs_rat(Rat(f[i]) / Rat(f.lead()));
    if (q > m) m = q;
  }
  return m + 1;
}

// Picks a point strictly inside (a,b) where f does not vanish.
inline Rat split_point(const IntPoly& f, const Rat& a, const Rat& b) {
  for (long den = 2;; ++den) {
    for (long k = den / 2; k >= 1; --k) {
      for (long num : {k, den - k}) {
        Rat m = a + (b - a) * make_rat(num, den);
        if (sign_at(f, m) != 0) return m;
      }
    }
  }
}

// Isolating intervals (lo_i, hi_i) for the distinct real roots of squarefree f in (lo,hi).
// Endpoints of the returned intervals are never roots. Requires f(lo), f(hi) != 0.
inline std::vector<std::pair<Rat, Rat>> isolate_intervals(const IntPoly& f, const Rat& lo,
                                                          const Rat& hi) {
  std::vector<std::pair<Rat, Rat>> out;
  if (f.degree() <= 0) return out;
  SturmSequence s(f);
  struct Item {
    Rat a, b;
    int va, vb;
  };
  std::vector<Item> stack{{lo, hi, s.variations(lo), s.variations(hi)}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    int n = it.va - it.vb;
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(it.a, it.b);
      continue;
    }
    Rat m = split_point(f, it.a, it.b);
    int vm = s.variations(m);
    stack.push_back({m, it.b, vm, it.vb});
    stack.push_back({it.a, m, it.va, vm});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

}  // namespace hgpf
