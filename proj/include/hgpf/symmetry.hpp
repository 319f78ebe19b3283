#pragma once

#include <optional>
#include <vector>

#include "hgpf/gpf.hpp"

namespace hgpf {

inline Lambda dual(const Lambda& l) {
  if (sgn(l.r) == 0) throw Error(ErrorCode::NotInDomain, "duality needs r != 0");
  return Lambda{l.p, l.q, l.r, 1 - 2 * l.p / l.r - l.a, 1 - 2 * l.q / l.r - l.b, l.x};
}

inline Lambda reciprocal(const Lambda& l) {
  Rat rc = l.rcheck();
  if (sgn(l.r) == 0 || sgn(rc) == 0)
    throw Error(ErrorCode::DegenerateReciprocal, "reciprocity needs r (r-p-q) != 0");
  Rat a2 = ((l.r - l.q) * (1 - l.a) - l.p * l.b) / rc;
  Rat b2 = ((l.r - l.p) * (1 - l.b) - l.q * l.a) / rc;
  std::optional<AlgReal> x;
  if (l.x) x = l.x->one_minus();
  return Lambda{-l.p, -l.q, rc, a2, b2, x};
}

namespace detail {

// Removes sub from whole as multisets; false if sub is not contained.
inline bool multiset_minus(std::vector<Rat> whole, std::vector<Rat> sub, std::vector<Rat>& out) {
  std::sort(whole.begin(), whole.end());
  std::sort(sub.begin(), sub.end());
  out.clear();
  size_t j = 0;
  for (const Rat& w : whole) {
    if (j < sub.size() && sub[j] == w) ++j;
    else out.push_back(w);
  }
  return j == sub.size();
}

inline std::vector<Rat> progression(const Rat& a, long p) {
  std::vector<Rat> out;
  for (long i = 0; i < p; ++i) out.push_back((i + a) / p);
  return out;
}

inline long integral_long(const Rat& v, const char* what) {
  if (!is_integer(v)) throw Error(ErrorCode::NotInDomain, std::string(what) + " must be an integer");
  return to_long(v);
}

inline SolutionKind kind_for(const Lambda& l) {
  bool integral = is_integer(l.p) && is_integer(l.q);
  if (classify_region(l) == Region::Fminus) return integral ? SolutionKind::FIntegral : SolutionKind::FRational;
  return integral ? SolutionKind::A : SolutionKind::B;
}

}  // namespace detail

// {(i+a)/p} u {(i+b)/q} u {(j-a)/(r-p)} u {(j-b)/(r-q)}, all ranges from 0.
inline std::vector<Rat> fourfold_multiset(const Lambda& l) {
  long p = detail::integral_long(l.p, "p"), q = detail::integral_long(l.q, "q"),
       r = detail::integral_long(l.r, "r");
  std::vector<Rat> m = detail::progression(l.a, p);
  auto add = [&](const std::vector<Rat>& v) { m.insert(m.end(), v.begin(), v.end()); };
  add(detail::progression(l.b, q));
  add(detail::progression(Rat(-l.a), r - p));
  add(detail::progression(Rat(-l.b), r - q));
  std::sort(m.begin(), m.end());
  return m;
}

// R as a factored rational function with its scalar in k; flip reads d with x and 1-x exchanged.
inline FactoredRational ratio_in(const GpfSolution& s, const FieldPtr& k, bool flip = false) {
  RadExpr d = flip ? s.d.flipped() : s.d;
  FactoredRational f{d.scalar(k), s.numer_shifts, s.v};
  f.canonicalize();
  return f;
}

// R(w; dual) = x^{-r} (1-x)^{r-p-q} / (Psi_g(w') R(w')), w' = 2/r - 1 - w.
inline bool check_duality_identity(const GpfSolution& s, const GpfSolution& sd) {
  FieldPtr k = make_field(s.lambda.xv());
  const Lambda& l = s.lambda;
  FieldElem x = FieldElem::generator(k), om = FieldElem(Rat(1)) - x;
  long r = to_long(l.r), rc = to_long(l.rcheck());
  FactoredRational rhs = (psi_g(l) * ratio_in(s, k)).substitute(-1, 2 / l.r - 1).inverse();
  rhs.scalar = rhs.scalar * AlgScalar::of(x.pow(-r) * om.pow(rc));
  return ratio_in(sd, k) == rhs;
}

// R(w; recip) = x^r (1-x)^{p+q-r} Psi_h(w-c) R(w-c), with the D- side solution sD.
inline bool check_reciprocity_identity(const GpfSolution& sD, const GpfSolution& sF) {
  FieldPtr k = make_field(sD.lambda.xv());
  const Lambda& l = sD.lambda;
  FieldElem x = FieldElem::generator(k), om = FieldElem(Rat(1)) - x;
  long r = to_long(l.r), rc = to_long(l.rcheck());
  Rat c = c_shift(l);
  FactoredRational rhs = (psi_h(l) * ratio_in(sD, k)).substitute(1, -c);
  rhs.scalar = rhs.scalar * AlgScalar::of(x.pow(r) * om.pow(-rc));
  return ratio_in(sF, k, true) == rhs;
}

// d of the reciprocal, (d-c) read on the D- side, equals (d-F) on the F- side.
inline bool check_d_reciprocal(const Lambda& lD) {
  Lambda lF = reciprocal(lD);
  return rad_equal(compute_d_reciprocal(lD).flipped(), compute_d(lF), lF.xv());
}

inline GpfSolution dual_gpf(const GpfSolution& s) {
  if (s.kind != SolutionKind::A) throw Error(ErrorCode::UnsupportedRegion, "dual_gpf needs an (A)-solution");
  const Lambda& l = s.lambda;
  std::vector<Rat> vstar;
  if (!detail::multiset_minus(fourfold_multiset(l), s.v, vstar))
    throw Error(ErrorCode::ComplementFailure, "v is not a sub-multiset of the four-fold product for " + l.to_text());
  GpfSolution out;
  out.lambda = dual(l);
  out.kind = SolutionKind::A;
  out.d = s.d;
  Rat shift = 1 - 2 / l.r;
  for (const Rat& v : vstar) out.v.push_back(shift - v);
  std::sort(out.v.begin(), out.v.end());
  out.numer_shifts = s.numer_shifts;
  out.provenance = "dual of " + l.to_text();
  check_solution(out);
  if (!rad_equal(compute_d(out.lambda), compute_d(l), l.xv()))
    throw Error(ErrorCode::InvariantViolation, "duality changed d for " + l.to_text());
  if (!check_duality_identity(s, out))
    throw Error(ErrorCode::InvariantViolation, "duality R-identity fails for " + l.to_text());
  return out;
}

inline GpfSolution reciprocal_gpf(const GpfSolution& s) {
  if (s.kind == SolutionKind::A) {
    const Lambda& l = s.lambda;
    long p = to_long(l.p), q = to_long(l.q);
    std::vector<Rat> tail = detail::progression(l.a, p), head;
    auto tb = detail::progression(l.b, q);
    tail.insert(tail.end(), tb.begin(), tb.end());
    if (!detail::multiset_minus(s.v, tail, head))
      throw Error(ErrorCode::ConventionFailure, "tail shifts {(i+a)/p, (i+b)/q} absent for " + l.to_text());
    Rat c = c_shift(l);
    GpfSolution out;
    out.lambda = reciprocal(l);
    out.kind = detail::kind_for(out.lambda);
    for (const Rat& v : head) out.v.push_back(v - c);
    std::sort(out.v.begin(), out.v.end());
    out.numer_shifts = unit_shifts(to_long(out.lambda.r));
    out.d = compute_d_reciprocal(l).flipped();
    out.provenance = "reciprocal of " + l.to_text();
    check_solution(out);
    if (!check_reciprocity_identity(s, out))
      throw Error(ErrorCode::InvariantViolation, "reciprocity R-identity fails for " + l.to_text());
    return out;
  }
  if (s.kind == SolutionKind::FIntegral) {
    const Lambda& lF = s.lambda;
    Lambda lD = reciprocal(lF);
    long p = to_long(lD.p), q = to_long(lD.q);
    Rat c = c_shift(lD);
    GpfSolution out;
    out.lambda = lD;
    out.kind = detail::kind_for(lD);
    for (const Rat& v : s.v) out.v.push_back(v + c);
    auto ta = detail::progression(lD.a, p), tb = detail::progression(lD.b, q);
    out.v.insert(out.v.end(), ta.begin(), ta.end());
    out.v.insert(out.v.end(), tb.begin(), tb.end());
    std::sort(out.v.begin(), out.v.end());
    out.numer_shifts = unit_shifts(to_long(lD.r));
    out.d = compute_d(lD);
    out.provenance = "reciprocal of " + lF.to_text();
    if (!rad_equal(compute_d_reciprocal(lD).flipped(), s.d, lF.xv()))
      throw Error(ErrorCode::InvariantViolation, "(d-c) disagrees with the F- d for " + lF.to_text());
    check_solution(out);
    if (!check_reciprocity_identity(out, s))
      throw Error(ErrorCode::InvariantViolation, "reciprocity R-identity fails for " + lF.to_text());
    return out;
  }
  throw Error(ErrorCode::UnsupportedRegion, "reciprocal_gpf needs an (A)- or integral F- solution");
}

// lambda -> k lambda; Gauss multiplication leaves C unchanged since both sides have r shifts.
inline GpfSolution multiply(const GpfSolution& s, long k) {
  if (k < 1) throw Error(ErrorCode::NotInDomain, "multiplier must be positive");
  if (k == 1) return s;
  GpfSolution out = s;
  const Lambda& l = s.lambda;
  out.lambda = Lambda{k * l.p, k * l.q, k * l.r, l.a, l.b, l.x};
  out.v.clear();
  for (const Rat& v : s.v)
    for (long j = 0; j < k; ++j) out.v.push_back((v + j) / k);
  std::sort(out.v.begin(), out.v.end());
  out.numer_shifts = unit_shifts(to_long(out.lambda.r));
  out.d = s.d.power(k);
  out.kind = detail::kind_for(out.lambda);
  out.provenance = "multiplication by " + std::to_string(k) + " of " + l.to_text();
  check_solution(out);
  return out;
}

// Groups v into k-term progressions {(w+j)/k}; the smallest remaining entry always starts a group.
inline std::optional<std::vector<Rat>> divide_pattern(const std::vector<Rat>& v, long k) {
  std::vector<Rat> rest(v);
  std::sort(rest.begin(), rest.end());
  std::vector<Rat> reps;
  while (!rest.empty()) {
    Rat w = rest.front() * k;
    std::vector<Rat> group, left;
    for (long j = 0; j < k; ++j) group.push_back((w + j) / k);
    if (!detail::multiset_minus(rest, group, left)) return std::nullopt;
    reps.push_back(w);
    rest = std::move(left);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

inline std::optional<GpfSolution> divide(const GpfSolution& s, long k) {
  if (k < 2) throw Error(ErrorCode::NotInDomain, "divisor must be at least 2");
  const Lambda& l = s.lambda;
  if (!l.integral()) throw Error(ErrorCode::NotInDomain, "divide needs an integral solution");
  if (to_long(l.r) % k != 0) return std::nullopt;
  auto reps = divide_pattern(s.v, k);
  if (!reps) return std::nullopt;
  GpfSolution out = s;
  out.lambda = Lambda{l.p / k, l.q / k, l.r / k, l.a, l.b, l.x};
  out.v = *reps;
  out.numer_shifts = unit_shifts(to_long(out.lambda.r));
  out.d = s.d.kth_root(k);
  out.kind = detail::kind_for(out.lambda);
  out.provenance = "division by " + std::to_string(k) + " of " + l.to_text();
  check_solution(out);
  return out;
}

}  // namespace hgpf
