#pragma once

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

#include "hgpf/exactmath.hpp"

namespace hgpf {

inline mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 64;
}

// Interval [lo, hi] with outward rounding; the radius is the error bound.
class BigF {
 public:
  explicit BigF(mpfr_prec_t prec = 256) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  BigF(const Rat& v, mpfr_prec_t prec) : BigF(prec) {
    mpfr_set_q(lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, v.get_mpq_t(), MPFR_RNDU);
  }
  BigF(const Rat& lo, const Rat& hi, mpfr_prec_t prec) : BigF(prec) {
    mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
  }
  BigF(const BigF& o) : BigF(o.prec_) {
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  BigF(BigF&& o) noexcept : BigF(o.prec_) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  BigF& operator=(BigF o) {
    prec_ = o.prec_;
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
  }
  ~BigF() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  mpfr_prec_t prec() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }

  static BigF pi(mpfr_prec_t prec) {
    BigF o(prec);
    mpfr_const_pi(o.lo_, MPFR_RNDD);
    mpfr_const_pi(o.hi_, MPFR_RNDU);
    return o;
  }

  bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool negative() const { return mpfr_sgn(hi_) < 0; }
  bool is_point() const { return mpfr_equal_p(lo_, hi_); }

  bool contains(const BigF& o) const { return mpfr_lessequal_p(lo_, o.lo_) && mpfr_lessequal_p(o.hi_, hi_); }
  bool overlaps(const BigF& o) const { return mpfr_lessequal_p(lo_, o.hi_) && mpfr_lessequal_p(o.lo_, hi_); }

  // Upper bound on the half-width.
  double radius() const {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(t, t, 1, MPFR_RNDU);
    double d = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return d;
  }

  // Upper bound on log10 of the width, -inf for a point.
  double log10_width() const {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    if (mpfr_zero_p(t)) {
      mpfr_clear(t);
      return -INFINITY;
    }
    mpfr_log10(t, t, MPFR_RNDU);
    double d = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return d;
  }

  // Upper bound on log10 of max |v|.
  double log10_mag() const {
    mpfr_t a, b;
    mpfr_init2(a, 64);
    mpfr_init2(b, 64);
    mpfr_abs(a, lo_, MPFR_RNDU);
    mpfr_abs(b, hi_, MPFR_RNDU);
    mpfr_max(a, a, b, MPFR_RNDU);
    double d = mpfr_zero_p(a) ? -INFINITY : (mpfr_log10(a, a, MPFR_RNDU), mpfr_get_d(a, MPFR_RNDU));
    mpfr_clear(a);
    mpfr_clear(b);
    return d;
  }

  double mid_d() const {
    mpfr_t t;
    mpfr_init2(t, prec_ + 1);
    mpfr_add(t, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return d;
  }

  std::string to_decimal(int digits) const {
    mpfr_t t;
    mpfr_init2(t, prec_ + 1);
    mpfr_add(t, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(t, t, 1, MPFR_RNDN);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, t);
    std::string s(buf);
    mpfr_free_str(buf);
    mpfr_clear(t);
    return s;
  }

  friend BigF operator+(const BigF& a, const BigF& b) {
    BigF o(std::max(a.prec_, b.prec_));
    mpfr_add(o.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(o.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return o;
  }
  friend BigF operator-(const BigF& a, const BigF& b) {
    BigF o(std::max(a.prec_, b.prec_));
    mpfr_sub(o.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(o.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return o;
  }
  friend BigF operator-(const BigF& a) {
    BigF o(a.prec_);
    mpfr_neg(o.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(o.hi_, a.lo_, MPFR_RNDU);
    return o;
  }
  friend BigF operator*(const BigF& a, const BigF& b) {
    mpfr_prec_t pr = std::max(a.prec_, b.prec_);
    BigF o(pr);
    mpfr_t t;
    mpfr_init2(t, pr);
    bool first = true;
    for (mpfr_srcptr x : {a.lo_, a.hi_})
      for (mpfr_srcptr y : {b.lo_, b.hi_}) {
        mpfr_mul(t, x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t, o.lo_)) mpfr_set(o.lo_, t, MPFR_RNDD);
        mpfr_mul(t, x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t, o.hi_)) mpfr_set(o.hi_, t, MPFR_RNDU);
        first = false;
      }
    mpfr_clear(t);
    return o;
  }
  BigF reciprocal() const {
    if (contains_zero()) throw Error(ErrorCode::PoleProximity, "division by an interval containing zero");
    BigF o(prec_);
    mpfr_ui_div(o.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(o.hi_, 1, lo_, MPFR_RNDU);
    return o;
  }
  friend BigF operator/(const BigF& a, const BigF& b) { return a * b.reciprocal(); }

  BigF& operator+=(const BigF& b) { return *this = *this + b; }
  BigF& operator-=(const BigF& b) { return *this = *this - b; }
  BigF& operator*=(const BigF& b) { return *this = *this * b; }
  BigF& operator/=(const BigF& b) { return *this = *this / b; }

  BigF abs() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    BigF o(prec_);
    mpfr_set_zero(o.lo_, 1);
    mpfr_neg(o.hi_, lo_, MPFR_RNDU);
    if (mpfr_greater_p(hi_, o.hi_)) mpfr_set(o.hi_, hi_, MPFR_RNDU);
    return o;
  }

  // Widens by +-e.
  BigF widened(const BigF& e) const {
    BigF o(*this);
    BigF ea = e.abs();
    mpfr_sub(o.lo_, o.lo_, ea.hi_, MPFR_RNDD);
    mpfr_add(o.hi_, o.hi_, ea.hi_, MPFR_RNDU);
    return o;
  }

  BigF pow(long n) const {
    if (n < 0) return pow(-n).reciprocal();
    BigF r(Rat(1), prec_), b(*this);
    while (n) {
      if (n & 1) r *= b;
      b *= b;
      n >>= 1;
    }
    return r;
  }

  // Monotone increasing functions evaluated at the endpoints.
  BigF exp() const {
    BigF o(prec_);
    mpfr_exp(o.lo_, lo_, MPFR_RNDD);
    mpfr_exp(o.hi_, hi_, MPFR_RNDU);
    return o;
  }
  BigF log() const {
    if (!positive()) throw Error(ErrorCode::PoleProximity, "log of a non-positive interval");
    BigF o(prec_);
    mpfr_log(o.lo_, lo_, MPFR_RNDD);
    mpfr_log(o.hi_, hi_, MPFR_RNDU);
    return o;
  }
  BigF sqrt() const {
    if (mpfr_sgn(lo_) < 0) throw Error(ErrorCode::PoleProximity, "sqrt of a negative interval");
    BigF o(prec_);
    mpfr_sqrt(o.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(o.hi_, hi_, MPFR_RNDU);
    return o;
  }
  BigF root(unsigned long k) const {
    if (mpfr_sgn(lo_) < 0) throw Error(ErrorCode::PoleProximity, "root of a negative interval");
    BigF o(prec_);
    mpfr_rootn_ui(o.lo_, lo_, k, MPFR_RNDD);
    mpfr_rootn_ui(o.hi_, hi_, k, MPFR_RNDU);
    return o;
  }
  // sin via the midpoint and the Lipschitz bound |sin'| <= 1.
  BigF sin() const {
    BigF o(prec_);
    mpfr_t m, rad;
    mpfr_init2(m, prec_ + 2);
    mpfr_init2(rad, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    mpfr_sub(rad, hi_, m, MPFR_RNDU);
    mpfr_t r2;
    mpfr_init2(r2, prec_);
    mpfr_sub(r2, m, lo_, MPFR_RNDU);
    mpfr_max(rad, rad, r2, MPFR_RNDU);
    mpfr_sin(o.lo_, m, MPFR_RNDD);
    mpfr_sin(o.hi_, m, MPFR_RNDU);
    mpfr_sub(o.lo_, o.lo_, rad, MPFR_RNDD);
    mpfr_add(o.hi_, o.hi_, rad, MPFR_RNDU);
    mpfr_clear(m);
    mpfr_clear(rad);
    mpfr_clear(r2);
    return o;
  }

  // Hull of two intervals.
  static BigF hull(const BigF& a, const BigF& b) {
    BigF o(std::max(a.prec_, b.prec_));
    mpfr_min(o.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(o.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return o;
  }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
};

inline BigF to_bigf(const AlgReal& x, mpfr_prec_t prec) {
  if (x.is_rational()) return BigF(x.rational(), prec);
  // interval width well below the working precision
  Rat eps = Rat(1) / Rat(Int(1) << static_cast<unsigned long>(prec + 8));
  auto [a, b] = x.interval_within(eps);
  return BigF(a, b, prec);
}

}  // namespace hgpf
