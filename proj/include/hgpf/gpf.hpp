#pragma once

#include <string>
#include <vector>

#include "hgpf/contiguous.hpp"
#include "hgpf/numerics/special.hpp"

namespace hgpf {

enum class SolutionKind { A, B, FIntegral, FRational };

inline const char* kind_name(SolutionKind k) {
  switch (k) {
    case SolutionKind::A: return "A";
    case SolutionKind::B: return "B";
    case SolutionKind::FIntegral: return "FIntegral";
    case SolutionKind::FRational: return "FRational";
  }
  return "A";
}

inline SolutionKind parse_kind(const std::string& s) {
  if (s == "A") return SolutionKind::A;
  if (s == "B") return SolutionKind::B;
  if (s == "FIntegral") return SolutionKind::FIntegral;
  if (s == "FRational") return SolutionKind::FRational;
  throw Error(ErrorCode::Parse, "unknown solution kind '" + s + "'");
}

// f(w) = C d^w prod Gamma(w + u_i) / prod Gamma(w + v_i)
struct GpfSolution {
  Lambda lambda;
  SolutionKind kind = SolutionKind::A;
  RadExpr d;
  std::vector<Rat> v;             // ascending
  std::vector<Rat> numer_shifts;  // i/r
  std::string C_approx;           // decimal, empty until determined
  int C_digits = 0;
  std::string provenance;
};

inline std::vector<Rat> unit_shifts(long r) {
  std::vector<Rat> u;
  for (long i = 0; i < r; ++i) u.push_back(make_rat(i, r));
  return u;
}

// Every structural invariant; throws InvariantViolation naming the failed check.
inline void check_solution(const GpfSolution& s) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::InvariantViolation, what + " for " + s.lambda.to_text());
  };
  const Lambda& l = s.lambda;
  if (!is_integer(l.r) || sgn(l.r) <= 0) fail("r must be a positive integer");
  long r = to_long(l.r);
  if (static_cast<long>(s.v.size()) != r) fail("v-list length differs from r");
  if (s.numer_shifts != unit_shifts(r)) fail("numerator shifts differ from i/r");
  if (!std::is_sorted(s.v.begin(), s.v.end())) fail("v-list not ascending");
  Rat sum(0);
  for (const Rat& v : s.v) sum += v;
  if (sum != make_rat(r - 1, 2)) fail("sum of v differs from (r-1)/2");
  Region g = classify_region(l);
  bool integral_pq = is_integer(l.p) && is_integer(l.q);
  switch (s.kind) {
    case SolutionKind::A:
    case SolutionKind::B: {
      if (g != Region::Dminus) fail("kind A/B outside D-");
      if (s.kind == SolutionKind::A && !integral_pq) fail("kind A needs integral p,q");
      if (s.kind == SolutionKind::B && (integral_pq || !is_integer(2 * l.p) || !is_integer(2 * l.q)))
        fail("kind B needs half-integral p,q");
      for (const Rat& v : s.v)
        if (sgn(v) < 0 || v >= 1) fail("v outside [0,1)");
      break;
    }
    case SolutionKind::FIntegral:
    case SolutionKind::FRational: {
      if (g != Region::Fminus) fail("kind F outside F-");
      if (s.kind == SolutionKind::FIntegral && !integral_pq) fail("kind FIntegral needs integral p,q");
      if (s.kind == SolutionKind::FRational && integral_pq) fail("kind FRational needs non-integral p or q");
      Rat c = c_shift(l);
      for (const Rat& v : s.v) {
        if (v < c || v >= c + 1) fail("v outside [c, c+1)");
        if (is_integer(v * l.r)) fail("v in (1/r)Z");
      }
      break;
    }
  }
  if (!rad_equal(s.d, compute_d(l), l.xv())) fail("d differs from the closed form");
}

inline GpfSolution assemble(const Lambda& l, const RatioR& R, SolutionKind kind, std::string provenance = "") {
  GpfSolution s;
  s.lambda = l;
  s.kind = kind;
  s.d = R.scale_d;
  s.v = R.denom_shifts;
  std::sort(s.v.begin(), s.v.end());
  s.numer_shifts = R.numer_shifts;
  s.provenance = std::move(provenance);
  check_solution(s);
  return s;
}

// Rational function R(w) = d prod(w+u)/prod(w+v) of a solution.
inline FactoredRational ratio_of(const GpfSolution& s) {
  FieldPtr k = make_field(s.lambda.xv());
  FactoredRational f{s.d.scalar(k), s.numer_shifts, s.v};
  f.canonicalize();
  return f;
}

// ---- numeric evaluation ----

inline BigF radexpr_value(const RadExpr& e, const BigF& x) {
  mpfr_prec_t prec = x.prec();
  BigF one(Rat(1), prec);
  BigF rad(one);
  for (const auto& [b, ex] : e.radicand) {
    BigF base = b.kind == BaseKind::Rational ? BigF(b.value, prec) : b.kind == BaseKind::X ? x : one - x;
    rad *= base.pow(ex);
  }
  BigF out = BigF(e.factor, prec);
  if (!e.radicand.empty()) out *= rad.root(static_cast<unsigned long>(e.root));
  return out;
}

inline BigF pow_rat(const BigF& base, const Rat& w) {
  if (is_integer(w)) return base.pow(to_long(w));
  return (base.log() * BigF(w, base.prec())).exp();
}

inline bool gamma_pole(const Rat& z) { return is_integer(z) && sgn(z) <= 0; }

// f(w; lambda) with exact rational w.
inline BigF eval_f(const Lambda& l, const Rat& w, const BigF& x, int digits) {
  return eval_2f1(l.p * w + l.a, l.q * w + l.b, l.r * w, x, digits);
}

// C(w) = f(w) prod Gamma(w+v) / (d^w prod Gamma(w+u))
inline BigF C_at(const GpfSolution& s, const Rat& w, const BigF& x, int digits) {
  BigF dval = radexpr_value(s.d, x);
  BigF num = eval_f(s.lambda, w, x, digits);
  for (const Rat& v : s.v) num *= eval_gamma(Rat(w + v), digits);
  BigF den = pow_rat(dval, w);
  for (const Rat& u : s.numer_shifts) den *= eval_gamma(Rat(w + u), digits);
  return num / den;
}

inline bool sample_ok(const GpfSolution& s, const Rat& w) {
  if (gamma_pole(s.lambda.r * w)) return false;
  for (const Rat& v : s.v)
    if (gamma_pole(w + v)) return false;
  for (const Rat& u : s.numer_shifts)
    if (gamma_pole(w + u)) return false;
  return true;
}

// Relative gap |a-b| / |a|, upper bound as log10.
inline double log10_rel_gap(const BigF& a, const BigF& b) {
  BigF diff = (a - b).abs();
  double num = diff.log10_mag();
  BigF aa = a.abs();
  double den = std::log10(std::fabs(mpfr_get_d(aa.lo(), MPFR_RNDD)));
  return num - den;
}

struct CValue {
  BigF value;
  Rat point;
  bool terminating = false;
};

inline CValue determine_C_value(const GpfSolution& s, int digits) {
  check_solution(s);
  mpfr_prec_t prec = bits_for_digits(digits + 10);
  BigF x = to_bigf(s.lambda.xv(), prec);
  // terminating evaluation point: p w0 + a or q w0 + b a non-positive integer
  std::optional<Rat> w0;
  for (long m = 0; m <= 3 && !w0; ++m) {
    for (const auto& [pp, aa] : {std::pair{s.lambda.p, s.lambda.a}, std::pair{s.lambda.q, s.lambda.b}}) {
      if (sgn(pp) == 0) continue;
      Rat w = (Rat(-m) - aa) / pp;
      if (sgn(w) > 0 && sample_ok(s, w)) {
        w0 = w;
        break;
      }
    }
  }
  double tol = -(digits - 8.0);
  if (w0) {
    BigF c0 = C_at(s, *w0, x, digits + 10);
    Rat w1 = sample_ok(s, Rat(1)) ? Rat(1) : make_rat(3, 2);
    BigF c1 = C_at(s, w1, x, digits + 10);
    if (log10_rel_gap(c0, c1) > tol)
      throw Error(ErrorCode::Disagreement, "C at the terminating point disagrees for " + s.lambda.to_text());
    if (!c0.positive()) throw Error(ErrorCode::NonPositiveC, "C is not positive for " + s.lambda.to_text());
    return {c0, *w0, true};
  }
  std::vector<Rat> pts;
  for (const Rat& w : {Rat(1), make_rat(3, 2), Rat(2), make_rat(5, 2), Rat(3)})
    if (sample_ok(s, w)) pts.push_back(w);
  if (pts.empty()) throw Error(ErrorCode::PoleProximity, "no usable sample point for " + s.lambda.to_text());
  std::vector<BigF> cs;
  for (const Rat& w : pts) cs.push_back(C_at(s, w, x, digits + 10));
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j)
      if (log10_rel_gap(cs[i], cs[j]) > tol)
        throw Error(ErrorCode::Disagreement, "C(w) varies with w for " + s.lambda.to_text() + " (w=" +
                                                 to_string(pts[i]) + " vs " + to_string(pts[j]) + ")");
  if (!cs[0].positive()) throw Error(ErrorCode::NonPositiveC, "C is not positive for " + s.lambda.to_text());
  return {cs[0], pts[0], false};
}

inline BigF determine_C(const GpfSolution& s, int digits) { return determine_C_value(s, digits).value; }

// Fills C_approx / C_digits.
inline GpfSolution with_C(GpfSolution s, int digits) {
  BigF c = determine_C(s, digits);
  s.C_approx = c.to_decimal(digits);
  s.C_digits = digits;
  return s;
}

}  // namespace hgpf
