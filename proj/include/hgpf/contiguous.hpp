#pragma once

#include <algorithm>
#include <vector>

#include "hgpf/radexpr.hpp"
#include "hgpf/ypoly.hpp"

namespace hgpf {

// Polynomial in w whose coefficients are polynomials in x: by_w[nu] = V_nu(x).
struct BiPoly {
  std::vector<RatPoly> by_w;

  int w_degree() const {
    for (int i = static_cast<int>(by_w.size()) - 1; i >= 0; --i)
      if (!by_w[i].zero()) return i;
    return -1;
  }
  Rat coeff(size_t nu, size_t k) const { return nu < by_w.size() ? by_w[nu].coeff(k) : Rat(0); }
};

namespace detail {

// (alpha w + beta)_n as a polynomial in w, n >= 0.
inline RatPoly poch_w(const Rat& alpha, const Rat& beta, long n) {
  RatPoly out = RatPoly::constant(Rat(1));
  for (long i = 0; i < n; ++i) out = out * RatPoly{Rat(beta + i), alpha};
  return out;
}

inline Rat factorial(long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

// (r w)_{len} * <F(alpha*(w); z) F(top - alpha*(w+1); z)>_k, top = (1,1;gamma_top).
inline BiPoly truncated_product(const Triple& t, const Rat& a, const Rat& b, long gamma_top, long len) {
  long p = t.p, q = t.q, r = t.r;
  long k = std::max(r - p - 1, r - q - 1);
  Rat rp(r - p), rq(r - q), rr(r);
  // first series: alpha = (r-p)w - a, beta = (r-q)w - b, gamma = r w
  // second: 1 - alpha(w+1), 1 - beta(w+1), gamma_top - r(w+1)
  Rat a2c = 1 - rp + a, b2c = 1 - rq + b, g2c = Rat(gamma_top) - rr;
  std::vector<RatPoly> num1(k + 1), den1(k + 1), num2(k + 1), den2(k + 1);
  for (long n = 0; n <= k; ++n) {
    num1[n] = poch_w(rp, Rat(-a), n) * poch_w(rq, Rat(-b), n);
    den1[n] = poch_w(rr, Rat(0), n);
    num2[n] = poch_w(Rat(-rp), a2c, n) * poch_w(Rat(-rq), b2c, n);
    den2[n] = poch_w(Rat(-rr), g2c, n);
  }
  RatPoly pre = poch_w(rr, Rat(0), len);
  BiPoly out;
  for (long n = 0; n <= k; ++n) {
    for (long m = 0; n + m <= k; ++m) {
      auto [quot, rem] = divmod(pre, den1[n] * den2[m]);
      if (!rem.zero())
        throw Error(ErrorCode::DenominatorSurvives,
                    "w-denominator does not cancel for " + t.to_text() + " at (n,m)=(" + std::to_string(n) +
                        "," + std::to_string(m) + ")");
      RatPoly term = quot * num1[n] * num2[m] * (1 / (factorial(n) * factorial(m)));
      if (out.by_w.size() < term.size()) out.by_w.resize(term.size());
      for (size_t nu = 0; nu < term.size(); ++nu) out.by_w[nu] += RatPoly::monomial(term[nu], n + m);
    }
  }
  while (!out.by_w.empty() && out.by_w.back().zero()) out.by_w.pop_back();
  return out;
}

}  // namespace detail

inline BiPoly truncated_V(const Triple& t, const Rat& a, const Rat& b) {
  if (!t.in_domain()) throw Error(ErrorCode::NotInDomain, "triple " + t.to_text() + " is not in D-_A");
  BiPoly v = detail::truncated_product(t, a, b, 2, t.r - 1);
  if (v.w_degree() > t.r - 1)
    throw Error(ErrorCode::InvariantViolation, "V has w-degree above r-1 for " + t.to_text());
  v.by_w.resize(t.r);
  return v;
}

// P over Q[x] before substitution.
inline BiPoly truncated_P_poly(const Triple& t, const Rat& a, const Rat& b) {
  if (!t.in_domain()) throw Error(ErrorCode::NotInDomain, "triple " + t.to_text() + " is not in D-_A");
  BiPoly pp = detail::truncated_product(t, a, b, 1, t.r);
  if (pp.w_degree() > t.r)
    throw Error(ErrorCode::InvariantViolation, "P has w-degree above r for " + t.to_text());
  return pp;
}

struct SimultaneousRoots {
  bool all_zero = false;
  std::vector<AlgReal> roots;
};

inline SimultaneousRoots simultaneous_root(const std::vector<RatPoly>& vs) {
  if (vs.empty()) throw Error(ErrorCode::InvariantViolation, "simultaneous_root of an empty list");
  RatPoly g;
  bool any = false;
  for (const auto& v : vs) {
    if (v.zero()) continue;
    g = any ? poly_gcd(g, v) : monic(v);
    any = true;
    if (g.degree() == 0) break;
  }
  SimultaneousRoots out;
  if (!any) {
    out.all_zero = true;
    return out;
  }
  out.roots = isolate_roots(g, Rat(0), Rat(1));
  return out;
}

using FieldPoly = Poly<FieldElem>;

inline FieldPoly truncated_P(const Triple& t, const Rat& a, const Rat& b, const AlgReal& x) {
  BiPoly pp = truncated_P_poly(t, a, b);
  FieldPtr k = make_field(x);
  FieldElem gx = FieldElem::generator(k);
  std::vector<FieldElem> c;
  for (const auto& coef : pp.by_w) {
    FieldElem v = FieldElem(k, RatPoly());
    v = coef.eval<FieldElem>(gx);
    c.push_back(v);
  }
  FieldPoly out(std::move(c));
  if (out.degree() != t.r)
    throw Error(ErrorCode::DegreeDrop, "P has w-degree " + std::to_string(out.degree()) + " < r for " + t.to_text());
  return out;
}

// Roots of a monic rational polynomial, with multiplicity; fails unless all are rational.
inline std::vector<Rat> rational_roots_with_multiplicity(RatPoly f) {
  std::vector<Rat> out;
  while (f.degree() > 0) {
    auto roots = rational_roots(primitive_int(f));
    if (roots.empty()) break;
    for (const Rat& x : roots) {
      RatPoly lin{Rat(-x), Rat(1)};
      for (;;) {
        auto [q, rem] = divmod(f, lin);
        if (!rem.zero()) break;
        out.push_back(x);
        f = q;
      }
    }
  }
  if (f.degree() > 0) throw Error(ErrorCode::IrrationalShift, "P has an irrational root in w");
  std::sort(out.begin(), out.end());
  return out;
}

struct RatioR {
  RadExpr scale_d;
  FieldElem d_exact;
  std::vector<Rat> numer_shifts;
  std::vector<Rat> denom_shifts;  // ascending
};

inline RatioR ratio_R(const Triple& t, const Rat& a, const Rat& b, const AlgReal& x, const FieldPoly& P) {
  const FieldElem& lead = P.lead();
  std::vector<Rat> monic_coeffs;
  for (const auto& c : P.coeffs()) {
    FieldElem m = c / lead;
    if (!m.is_rational()) throw Error(ErrorCode::IrrationalShift, "P/lead(P) has irrational coefficients");
    monic_coeffs.push_back(m.rational());
  }
  std::vector<Rat> roots = rational_roots_with_multiplicity(RatPoly(monic_coeffs));
  RatioR out;
  for (const Rat& v : roots) out.denom_shifts.push_back(-v);
  std::sort(out.denom_shifts.begin(), out.denom_shifts.end());
  for (long i = 0; i < t.r; ++i) out.numer_shifts.push_back(make_rat(i, t.r));
  FieldPtr k = lead.field() ? lead.field() : make_field(x);
  FieldElem one_minus = FieldElem(Rat(1)) - FieldElem::generator(k);
  out.d_exact = FieldElem(rat_pow(Rat(t.r), t.r)) * one_minus.pow(t.rcheck() - 1) / lead;
  Lambda l = make_lambda(Rat(t.p), Rat(t.q), Rat(t.r), a, b, x);
  out.scale_d = compute_d(l);
  if (!(out.scale_d.scalar(k) == AlgScalar::of(out.d_exact)))
    throw Error(ErrorCode::InvariantViolation, "d from P differs from the closed form for " + l.to_text());
  return out;
}

// scalar * prod (w + numer_i) / prod (w + denom_j)
struct FactoredRational {
  AlgScalar scalar = AlgScalar::of(Rat(1));
  std::vector<Rat> numer, denom;

  void canonicalize() {
    std::sort(numer.begin(), numer.end());
    std::sort(denom.begin(), denom.end());
    std::vector<Rat> n2, d2;
    size_t i = 0, j = 0;
    while (i < numer.size() || j < denom.size()) {
      if (j == denom.size() || (i < numer.size() && numer[i] < denom[j])) n2.push_back(numer[i++]);
      else if (i == numer.size() || denom[j] < numer[i]) d2.push_back(denom[j++]);
      else {
        ++i;
        ++j;
      }
    }
    numer = std::move(n2);
    denom = std::move(d2);
  }

  friend FactoredRational operator*(const FactoredRational& x, const FactoredRational& y) {
    FactoredRational o{x.scalar * y.scalar, x.numer, x.denom};
    o.numer.insert(o.numer.end(), y.numer.begin(), y.numer.end());
    o.denom.insert(o.denom.end(), y.denom.begin(), y.denom.end());
    o.canonicalize();
    return o;
  }
  FactoredRational inverse() const {
    FactoredRational o{scalar.inverse(), denom, numer};
    o.canonicalize();
    return o;
  }
  // w -> sigma w + c, sigma = +-1
  FactoredRational substitute(int sigma, const Rat& c) const {
    FactoredRational o = *this;
    auto map = [&](std::vector<Rat>& v) {
      for (auto& s : v) s = sigma > 0 ? Rat(s + c) : Rat(-(s + c));
    };
    map(o.numer);
    map(o.denom);
    if (sigma < 0 && (numer.size() + denom.size()) % 2 == 1) o.scalar = o.scalar * AlgScalar::of(Rat(-1));
    o.canonicalize();
    return o;
  }

  friend bool operator==(const FactoredRational& x, const FactoredRational& y) {
    return x.numer == y.numer && x.denom == y.denom && x.scalar == y.scalar;
  }
};

// (alpha w + beta)_n with n of either sign.
inline FactoredRational pochhammer_factor(const Rat& alpha, const Rat& beta, long n) {
  FactoredRational o;
  if (n >= 0) {
    o.scalar = AlgScalar::of(rat_pow(alpha, n));
    for (long i = 0; i < n; ++i) o.numer.push_back((beta + i) / alpha);
  } else {
    o.scalar = AlgScalar::of(rat_pow(alpha, n));
    for (long i = n; i <= -1; ++i) o.denom.push_back((beta + i) / alpha);
  }
  o.canonicalize();
  return o;
}

inline FactoredRational psi_g(const Lambda& l) {
  if (!l.integral()) throw Error(ErrorCode::NotInDomain, "psi_g needs integral p,q,r");
  long p = to_long(l.p), q = to_long(l.q), r = to_long(l.r), rc = r - p - q;
  FactoredRational o;
  o.scalar = AlgScalar::of(Rat(rc % 2 == 0 ? 1 : -1));
  o = o * pochhammer_factor(l.p, l.a, p) * pochhammer_factor(l.q, l.b, q) *
      pochhammer_factor(Rat(r - p), Rat(-l.a), r - p) * pochhammer_factor(Rat(r - q), Rat(-l.b), r - q);
  FactoredRational den = pochhammer_factor(l.r, Rat(-1), r) * pochhammer_factor(l.r, Rat(0), r);
  return o * den.inverse();
}

inline FactoredRational psi_h(const Lambda& l) {
  if (!l.integral()) throw Error(ErrorCode::NotInDomain, "psi_h needs integral p,q,r");
  long p = to_long(l.p), q = to_long(l.q), r = to_long(l.r), rc = r - p - q;
  FactoredRational o;
  o.scalar = AlgScalar::of(Rat(rc % 2 == 0 ? 1 : -1));
  o = o * pochhammer_factor(l.p, l.a, p) * pochhammer_factor(l.q, l.b, q) *
      pochhammer_factor(Rat(rc), Rat(1 - l.a - l.b), rc);
  return o * pochhammer_factor(l.r, Rat(0), r).inverse();
}

// Raw factor counts before cancellation, for display and tests.
inline std::pair<long, long> psi_g_lengths(const Lambda& l) {
  long p = to_long(l.p), q = to_long(l.q), r = to_long(l.r);
  return {std::abs(p) + std::abs(q) + std::abs(r - p) + std::abs(r - q), 2 * r};
}

}  // namespace hgpf
