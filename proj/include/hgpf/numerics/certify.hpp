#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hgpf/gpf.hpp"

namespace hgpf {

struct ResidualEntry {
  Rat w;
  double log10_residual = 0;  // upper bound; -inf when exactly zero
  bool pass = false;
  std::string note;
};

struct VerifyReport {
  std::string label;
  std::vector<ResidualEntry> entries;
  bool pass = true;
  std::string C_decimal;
  std::string message;

  double worst() const {
    double m = -INFINITY;
    for (const auto& e : entries) m = std::max(m, e.log10_residual);
    return m;
  }
};

inline const std::vector<Rat>& default_samples() {
  static const std::vector<Rat> s{Rat(1), make_rat(3, 2), Rat(2), make_rat(5, 2), Rat(3), make_rat(7, 2)};
  return s;
}

// |a/b - 1| as log10 upper bound.
inline double log10_rel_residual(const BigF& lhs, const BigF& rhs) {
  BigF q = lhs / rhs - BigF(Rat(1), lhs.prec());
  return q.abs().log10_mag();
}

inline VerifyReport verify_gpf(const GpfSolution& s, const std::vector<Rat>& samples, int digits) {
  VerifyReport rep;
  rep.label = s.lambda.to_text();
  BigF C(bits_for_digits(digits));
  try {
    C = determine_C(s, digits);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Disagreement && e.code() != ErrorCode::NonPositiveC) throw;
    // report the disagreement through the residuals instead
    rep.message = e.what();
    mpfr_prec_t prec = bits_for_digits(digits + 10);
    C = C_at(s, samples.front(), to_bigf(s.lambda.xv(), prec), digits + 10);
  }
  rep.C_decimal = C.to_decimal(std::min(digits, 40));
  mpfr_prec_t prec = bits_for_digits(digits + 10);
  BigF x = to_bigf(s.lambda.xv(), prec);
  BigF dval = radexpr_value(s.d, x);
  double tol = -(digits - 10.0);
  for (const Rat& w : samples) {
    ResidualEntry e;
    e.w = w;
    if (!sample_ok(s, w)) {
      e.note = "skipped: pole";
      e.pass = true;
      rep.entries.push_back(e);
      continue;
    }
    BigF lhs = eval_f(s.lambda, w, x, digits + 10);
    BigF rhs = C * pow_rat(dval, w);
    for (const Rat& u : s.numer_shifts) rhs *= eval_gamma(Rat(w + u), digits + 10);
    for (const Rat& v : s.v) rhs /= eval_gamma(Rat(w + v), digits + 10);
    e.log10_residual = log10_rel_residual(lhs, rhs);
    e.pass = e.log10_residual < tol;
    rep.pass = rep.pass && e.pass;
    rep.entries.push_back(e);
  }
  return rep;
}

// Gamma-free check of f(w+1)/f(w) = R(w).
inline VerifyReport verify_ratio(const Lambda& l, const RatioR& R, const std::vector<Rat>& samples, int digits) {
  VerifyReport rep;
  rep.label = l.to_text();
  mpfr_prec_t prec = bits_for_digits(digits + 10);
  BigF x = to_bigf(l.xv(), prec);
  BigF dval = radexpr_value(R.scale_d, x);
  double tol = -(digits - 10.0);
  for (const Rat& w : samples) {
    ResidualEntry e;
    e.w = w;
    BigF ratio = eval_f(l, Rat(w + 1), x, digits + 10) / eval_f(l, w, x, digits + 10);
    BigF rv = dval;
    for (const Rat& u : R.numer_shifts) rv *= BigF(Rat(w + u), prec);
    for (const Rat& v : R.denom_shifts) rv /= BigF(Rat(w + v), prec);
    e.log10_residual = log10_rel_residual(ratio, rv);
    e.pass = e.log10_residual < tol;
    rep.pass = rep.pass && e.pass;
    rep.entries.push_back(e);
  }
  return rep;
}

using EParam = std::variant<Rat, AlgReal>;

// F((j-k)w+c, -(j-k)w+1-c; (j+k)w; 1/2) against its closed gamma product.
inline VerifyReport verify_E_family(long j, long k, const EParam& c_in, int digits,
                                    const std::vector<Rat>& samples = default_samples()) {
  if (!(j > k && k > 0)) throw Error(ErrorCode::NotInDomain, "verify_E_family needs j > k > 0");
  VerifyReport rep;
  mpfr_prec_t prec = bits_for_digits(digits + 10);
  BigF c = std::holds_alternative<Rat>(c_in) ? BigF(std::get<Rat>(c_in), prec)
                                              : to_bigf(std::get<AlgReal>(c_in), prec);
  rep.label = "E(" + std::to_string(j) + "," + std::to_string(k) + ")";
  BigF one(Rat(1), prec), half(make_rat(1, 2), prec), two(Rat(2), prec);
  BigF J(Rat(j), prec), K(Rat(k), prec), JK(Rat(j + k), prec);
  // sqrt2 k^{c/2} / (j^{(c-1)/2} (j+k)^{1/2})
  BigF C = two.sqrt() * (K.log() * c * half).exp() / ((J.log() * (c - one) * half).exp() * JK.sqrt());
  BigF d = BigF(Rat(rat_pow(Rat(j + k), j + k)), prec) /
           BigF(Rat(rat_pow(Rat(2), j + k) * rat_pow(Rat(j), j) * rat_pow(Rat(k), k)), prec);
  rep.C_decimal = C.to_decimal(std::min(digits, 40));
  double tol = -(digits - 10.0);
  for (const Rat& w : samples) {
    ResidualEntry e;
    e.w = w;
    BigF W(w, prec);
    BigF jk(Rat(j - k), prec);
    BigF lhs = eval_2f1(jk * W + c, one - jk * W - c, BigF(Rat((j + k) * w), prec), half, digits + 10);
    BigF rhs = C * pow_rat(d, w);
    for (long n = 0; n < j + k; ++n) rhs *= eval_gamma(Rat(w + make_rat(n, j + k)), digits + 10);
    for (long n = 0; n < j; ++n)
      rhs /= eval_gamma(W + c / BigF(Rat(2 * j), prec) + BigF(make_rat(n, j), prec), digits + 10);
    for (long n = 0; n < k; ++n)
      rhs /= eval_gamma(W + (one - c) / BigF(Rat(2 * k), prec) + BigF(make_rat(n, k), prec), digits + 10);
    e.log10_residual = log10_rel_residual(lhs, rhs);
    e.pass = e.log10_residual < tol;
    rep.pass = rep.pass && e.pass;
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace hgpf
