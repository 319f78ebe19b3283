#pragma once

#include <cmath>

#include "hgpf/numerics/bigfloat.hpp"

namespace hgpf {

namespace detail {

// Interval nearest-integer test: does v come within its width of an integer <= 0?
inline bool near_nonpositive_integer(const BigF& v) {
  mpfr_t c;
  mpfr_init2(c, v.prec());
  mpfr_ceil(c, v.lo());
  bool hit = mpfr_lessequal_p(c, v.hi()) && mpfr_sgn(c) <= 0;
  mpfr_clear(c);
  return hit;
}

// Exact nonpositive integer value -m, if v is a point there.
inline long exact_nonpositive_integer(const BigF& v) {
  if (!v.is_point() || !mpfr_integer_p(v.lo()) || mpfr_sgn(v.lo()) > 0) return -1;
  return -mpfr_get_si(v.lo(), MPFR_RNDN);
}

// max(|lo|, |hi|) rounded up, as a double
inline double mag_up(const BigF& v) {
  double a = std::fabs(mpfr_get_d(v.lo(), MPFR_RNDD)), b = std::fabs(mpfr_get_d(v.hi(), MPFR_RNDU));
  return std::nextafter(std::max(a, b), INFINITY);
}

// B_{2k} from zeta: (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}
inline BigF bernoulli_even(long k, mpfr_prec_t prec) {
  BigF z(prec);
  mpfr_zeta_ui(z.lo_mut(), static_cast<unsigned long>(2 * k), MPFR_RNDD);
  mpfr_zeta_ui(z.hi_mut(), static_cast<unsigned long>(2 * k), MPFR_RNDU);
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * k));
  BigF twopi = BigF::pi(prec) * BigF(Rat(2), prec);
  BigF out = BigF(Rat(2 * f), prec) * z / twopi.pow(2 * k);
  return k % 2 == 1 ? out : -out;
}

}  // namespace detail

// Sum of (alpha)_n (beta)_n / ((gamma)_n n!) x^n with a geometric tail bound.
inline BigF eval_2f1(const BigF& alpha, const BigF& beta, const BigF& gamma, const BigF& x, int digits) {
  mpfr_prec_t prec = std::max({alpha.prec(), beta.prec(), gamma.prec(), x.prec(), bits_for_digits(digits)});
  long ma = detail::exact_nonpositive_integer(alpha), mb = detail::exact_nonpositive_integer(beta);
  long term_limit = -1;
  if (ma >= 0) term_limit = ma;
  if (mb >= 0) term_limit = term_limit < 0 ? mb : std::min(term_limit, mb);
  if (detail::near_nonpositive_integer(gamma)) {
    long mg = detail::exact_nonpositive_integer(gamma);
    if (term_limit < 0 || mg < 0 || mg < term_limit)
      throw Error(ErrorCode::PoleProximity, "gamma parameter within error of a non-positive integer");
  }
  double xm = detail::mag_up(x);
  if (term_limit < 0 && !(xm < 1)) throw Error(ErrorCode::PoleProximity, "|x| >= 1 in series");
  double am = detail::mag_up(alpha), bm = detail::mag_up(beta), gm = detail::mag_up(gamma);

  BigF one(Rat(1), prec);
  BigF sum(one), term(one);
  // target: tail below 10^-(digits+5)
  double log_target = -(digits + 5.0);
  for (long n = 0;; ++n) {
    if (term_limit >= 0 && n >= term_limit) break;
    BigF nn(Rat(n), prec);
    term = term * (alpha + nn) * (beta + nn) / ((gamma + nn) * BigF(Rat(n + 1), prec)) * x;
    sum += term;
    long m = n + 1;  // next index
    if (term_limit >= 0) continue;
    if (m <= gm + 1) continue;
    double md = static_cast<double>(m);
    double rho = (1 + am / md) * (1 + bm / md) / (1 - gm / md) * xm;
    rho = std::nextafter(rho, INFINITY);
    if (!(rho < 1)) continue;
    // |T_m| / (1 - rho) bounds the tail from index m on
    double lt = term.log10_mag();
    double bound = lt - std::log10(1 - rho);
    if (bound < log_target || std::isinf(lt)) {
      // rigorous widening by the tail bound
      BigF tail(prec);
      mpfr_t t;
      mpfr_init2(t, 64);
      mpfr_set_d(t, std::nextafter(bound + 1e-9, INFINITY), MPFR_RNDU);
      mpfr_exp10(t, t, MPFR_RNDU);
      mpfr_set(tail.hi_mut(), t, MPFR_RNDU);
      mpfr_set(tail.lo_mut(), t, MPFR_RNDD);
      mpfr_clear(t);
      if (!std::isinf(lt)) sum = sum.widened(tail);
      break;
    }
    if (n > 2000000) throw Error(ErrorCode::PoleProximity, "series did not converge");
  }
  return sum;
}

inline BigF eval_2f1(const Rat& alpha, const Rat& beta, const Rat& gamma, const BigF& x, int digits) {
  mpfr_prec_t prec = std::max(x.prec(), bits_for_digits(digits));
  return eval_2f1(BigF(alpha, prec), BigF(beta, prec), BigF(gamma, prec), x, digits);
}

// log Gamma for z > 0 large enough, Stirling with the first-omitted-term bound.
inline BigF log_gamma_stirling(const BigF& z, long K) {
  mpfr_prec_t prec = z.prec();
  BigF half(make_rat(1, 2), prec);
  BigF twopi = BigF::pi(prec) * BigF(Rat(2), prec);
  BigF s = (z - half) * z.log() - z + twopi.log() * half;
  BigF zinv = z.reciprocal(), z2inv = zinv * zinv;
  BigF zp = zinv;
  for (long k = 1; k <= K; ++k) {
    BigF b = detail::bernoulli_even(k, prec);
    s += b * zp / BigF(Rat(2 * k * (2 * k - 1)), prec);
    zp *= z2inv;
  }
  BigF rem = detail::bernoulli_even(K + 1, prec).abs() * zp / BigF(Rat((2 * K + 2) * (2 * K + 1)), prec);
  return s.widened(rem);
}

inline BigF eval_gamma(const BigF& z, int digits) {
  mpfr_prec_t prec = std::max(z.prec(), bits_for_digits(digits));
  if (detail::near_nonpositive_integer(z))
    throw Error(ErrorCode::PoleProximity, "gamma argument within error of a non-positive integer");
  BigF zz(z);
  if (mpfr_cmp_d(z.hi(), 0.5) < 0) {
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
    BigF pi = BigF::pi(prec);
    BigF one(Rat(1), prec);
    return pi / ((pi * zz).sin() * eval_gamma(one - zz, digits));
  }
  double zlo = mpfr_get_d(z.lo(), MPFR_RNDD);
  double target = std::max(10.0, static_cast<double>(digits));
  long N = zlo < target ? static_cast<long>(std::ceil(target - zlo)) : 0;
  long K = digits / 2 + 4;
  BigF shifted = zz + BigF(Rat(N), prec);
  BigF prod(Rat(1), prec);
  for (long i = 0; i < N; ++i) prod *= zz + BigF(Rat(i), prec);
  return log_gamma_stirling(shifted, K).exp() / prod;
}

inline BigF eval_gamma(const Rat& z, int digits) { return eval_gamma(BigF(z, bits_for_digits(digits)), digits); }

}  // namespace hgpf
