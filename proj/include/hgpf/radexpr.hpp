#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hgpf/model.hpp"

namespace hgpf {

// Real number known through its n-th power in Q(x) plus its sign.
struct AlgScalar {
  FieldElem pow;
  long n = 1;
  int sign = 0;

  static AlgScalar of(const FieldElem& v) { return {v, 1, v.sign()}; }
  static AlgScalar of(const Rat& v) { return of(FieldElem(v)); }

  friend AlgScalar operator*(const AlgScalar& a, const AlgScalar& b) {
    long L = std::lcm(a.n, b.n);
    return {a.pow.pow(L / a.n) * b.pow.pow(L / b.n), L, a.sign * b.sign};
  }
  AlgScalar inverse() const {
    if (sign == 0) throw Error(ErrorCode::ZeroDivisor, "inverse of zero scalar");
    return {pow.inverse(), n, sign};
  }
  friend AlgScalar operator/(const AlgScalar& a, const AlgScalar& b) { return a * b.inverse(); }
  AlgScalar power(long k) const {
    int s = (k % 2 == 0) ? (sign == 0 ? 0 : 1) : sign;
    return {pow.pow(k), n, s};
  }
  friend bool operator==(const AlgScalar& a, const AlgScalar& b) {
    if (a.sign != b.sign) return false;
    if (a.sign == 0) return true;
    long L = std::lcm(a.n, b.n);
    return a.pow.pow(L / a.n) == b.pow.pow(L / b.n);
  }
  friend bool operator!=(const AlgScalar& a, const AlgScalar& b) { return !(a == b); }
};

enum class BaseKind { Rational, X, OneMinusX };

struct RadBase {
  BaseKind kind = BaseKind::Rational;
  Rat value;  // used when kind == Rational

  std::string to_text() const {
    switch (kind) {
      case BaseKind::X: return "x";
      case BaseKind::OneMinusX: return "1-x";
      default: return to_nd(value);
    }
  }
  friend bool operator==(const RadBase& a, const RadBase& b) {
    return a.kind == b.kind && (a.kind != BaseKind::Rational || a.value == b.value);
  }
};

inline RadBase parse_radbase(const std::string& s) {
  if (s == "x") return {BaseKind::X, Rat(0)};
  if (s == "1-x") return {BaseKind::OneMinusX, Rat(0)};
  return {BaseKind::Rational, parse_rat(s)};
}

namespace detail {

// Splits v = s^n * rest, pulling out prime powers found by trial division.
inline Int extract_power(Int v, long n, Int& rest) {
  Int s(1);
  rest = 1;
  if (v < 0) throw Error(ErrorCode::InvariantViolation, "negative radicand");
  for (unsigned long pr = 2; pr < 20000 && v > 1; ++pr) {
    if (!mpz_divisible_ui_p(v.get_mpz_t(), pr)) continue;
    long e = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), pr)) {
      v /= pr;
      ++e;
    }
    Int prz(pr);
    s *= int_pow(prz, e / n);
    rest *= int_pow(prz, e % n);
  }
  if (v > 1) {
    Int root;
    if (exact_root(v, n, root)) s *= root;
    else rest *= v;
  }
  return s;
}

}  // namespace detail

// value = factor * (prod base^exp)^(1/root); the radicand is positive.
struct RadExpr {
  Rat factor{1};
  std::vector<std::pair<RadBase, long>> radicand;
  long root = 2;

  static RadExpr rational(const Rat& v) { return RadExpr{v, {}, 2}; }

  bool is_rational() const { return radicand.empty(); }

  void normalize() {
    if (root < 1) throw Error(ErrorCode::InvariantViolation, "radical root index < 1");
    Rat rat(1);
    long ex = 0, e1 = 0;
    for (const auto& [b, e] : radicand) {
      if (b.kind == BaseKind::Rational) rat *= rat_pow(b.value, e);
      else if (b.kind == BaseKind::X) ex += e;
      else e1 += e;
    }
    if (sgn(rat) <= 0) throw Error(ErrorCode::InvariantViolation, "non-positive rational radicand");
    Int rn, rd;
    Int sn = detail::extract_power(rat.get_num(), root, rn);
    Int sd = detail::extract_power(rat.get_den(), root, rd);
    factor *= make_rat(sn, sd);
    if (root == 1) {
      factor *= make_rat(rn, rd);
      rn = rd = 1;
    }
    radicand.clear();
    if (rn != 1 || rd != 1) radicand.push_back({{BaseKind::Rational, make_rat(rn, rd)}, 1});
    if (ex != 0) radicand.push_back({{BaseKind::X, Rat(0)}, ex});
    if (e1 != 0) radicand.push_back({{BaseKind::OneMinusX, Rat(0)}, e1});
    if (radicand.empty()) root = 2;
  }

  // Exchanges the roles of x and 1-x (used when comparing across reciprocity).
  RadExpr flipped() const {
    RadExpr out = *this;
    for (auto& [b, e] : out.radicand) {
      if (b.kind == BaseKind::X) b.kind = BaseKind::OneMinusX;
      else if (b.kind == BaseKind::OneMinusX) b.kind = BaseKind::X;
    }
    return out;
  }

  RadExpr power(long k) const {
    RadExpr out{rat_pow(factor, k), radicand, root};
    for (auto& [b, e] : out.radicand) e *= k;
    out.normalize();
    return out;
  }

  // Positive k-th root.
  RadExpr kth_root(long k) const {
    if (sgn(factor) <= 0) throw Error(ErrorCode::InvariantViolation, "root of non-positive value");
    RadExpr out = *this;
    Int rn, rd;
    Int sn = detail::extract_power(factor.get_num(), k, rn);
    Int sd = detail::extract_power(factor.get_den(), k, rd);
    bool exact = rn == 1 && rd == 1;
    if (exact && radicand.empty()) return RadExpr::rational(make_rat(sn, sd));
    out.factor = 1;
    if (!(factor == 1)) out.radicand.push_back({{BaseKind::Rational, factor}, root});
    out.root = root * k;
    out.normalize();
    return out;
  }

  AlgScalar scalar(const FieldPtr& k) const {
    FieldElem v = FieldElem(factor).pow(root);
    FieldElem g = FieldElem::generator(k);
    for (const auto& [b, e] : radicand) {
      FieldElem base = b.kind == BaseKind::Rational ? FieldElem(b.value)
                       : b.kind == BaseKind::X      ? g
                                                    : FieldElem(Rat(1)) - g;
      v *= base.pow(e);
    }
    return {v, root, sgn(factor)};
  }

  std::string to_text() const {
    std::string s = to_string(factor);
    if (radicand.empty()) return s;
    s += " * (";
    bool first = true;
    for (const auto& [b, e] : radicand) {
      if (!first) s += " * ";
      first = false;
      s += "(" + b.to_text() + ")^" + std::to_string(e);
    }
    s += ")^(1/" + std::to_string(root) + ")";
    return s;
  }

  friend bool operator==(const RadExpr& a, const RadExpr& b) {
    if (!(a.factor == b.factor) || a.root != b.root || a.radicand.size() != b.radicand.size()) return false;
    for (size_t i = 0; i < a.radicand.size(); ++i)
      if (!(a.radicand[i].first == b.radicand[i].first) || a.radicand[i].second != b.radicand[i].second)
        return false;
    return true;
  }
};

// Exact value equality of two radical expressions attached to the same x.
inline bool rad_equal(const RadExpr& a, const RadExpr& b, const AlgReal& x) {
  FieldPtr k = make_field(x);
  return a.scalar(k) == b.scalar(k);
}

namespace detail {

// factor * (prod base^(exp))^(sign/2) with rational exponents, packed into a RadExpr.
inline RadExpr pack_half_power(const Rat& factor, const std::vector<std::pair<RadBase, Rat>>& terms,
                               int sign, const AlgReal& x) {
  Int m(1);
  for (const auto& [b, e] : terms) m = lcm_int(m, e.get_den());
  long M = to_long(m);
  RadExpr out{factor, {}, 2 * M};
  for (const auto& [b, e] : terms) {
    long ee = to_long(Rat(e * Rat(M)));
    RadBase base = b;
    if (x.is_rational() && b.kind != BaseKind::Rational) {
      Rat xv = x.rational();
      base = {BaseKind::Rational, b.kind == BaseKind::X ? xv : Rat(1 - xv)};
    }
    out.radicand.push_back({base, sign * ee});
  }
  out.normalize();
  return out;
}

// t^t for rational t > 0 as a term (t, t); integer t^t goes into the factor by the caller if wanted.
inline void push_pow(std::vector<std::pair<RadBase, Rat>>& terms, const Rat& base, const Rat& e) {
  if (sgn(e) == 0) return;
  terms.push_back({{BaseKind::Rational, base}, e});
}

}  // namespace detail

// d from the closed formulas: D- form, F- form.
inline RadExpr compute_d(const Lambda& l) {
  Region g = classify_region(l);
  const Rat &p = l.p, &q = l.q, &r = l.r;
  const AlgReal& x = l.xv();
  std::vector<std::pair<RadBase, Rat>> t;
  if (g == Region::Dminus) {
    // r^r / sqrt(p^p q^q (r-p)^(r-p) (r-q)^(r-q) x^r (1-x)^(p+q-r))
    detail::push_pow(t, r, 2 * r);
    for (const auto& [b, e] : std::vector<std::pair<Rat, Rat>>{{p, -p}, {q, -q}, {r - p, -(r - p)}, {r - q, -(r - q)}})
      detail::push_pow(t, b, e);
    t.push_back({{BaseKind::X, Rat(0)}, -r});
    t.push_back({{BaseKind::OneMinusX, Rat(0)}, -(p + q - r)});
    return detail::pack_half_power(Rat(1), t, 1, x);
  }
  if (g == Region::Fminus) {
    // r^r sqrt(|p|^|p| |q|^|q| (1-x)^(r-p-q) / ((r-p)^(r-p) (r-q)^(r-q) x^r))
    Rat ap = -p, aq = -q;
    detail::push_pow(t, r, 2 * r);
    detail::push_pow(t, ap, ap);
    detail::push_pow(t, aq, aq);
    detail::push_pow(t, r - p, -(r - p));
    detail::push_pow(t, r - q, -(r - q));
    t.push_back({{BaseKind::OneMinusX, Rat(0)}, r - p - q});
    t.push_back({{BaseKind::X, Rat(0)}, -r});
    return detail::pack_half_power(Rat(1), t, 1, x);
  }
  throw Error(ErrorCode::UnsupportedRegion, std::string("compute_d in region ") + region_name(g));
}

// d-check of reciprocity, expressed with the D- data (x of the D- side).
inline RadExpr compute_d_reciprocal(const Lambda& l) {
  const Rat &p = l.p, &q = l.q, &r = l.r;
  Rat rc = r - p - q;
  std::vector<std::pair<RadBase, Rat>> t;
  detail::push_pow(t, rc, 2 * rc);
  detail::push_pow(t, p, p);
  detail::push_pow(t, q, q);
  detail::push_pow(t, r - p, -(r - p));
  detail::push_pow(t, r - q, -(r - q));
  t.push_back({{BaseKind::X, Rat(0)}, r});
  t.push_back({{BaseKind::OneMinusX, Rat(0)}, -rc});
  return detail::pack_half_power(Rat(1), t, 1, l.xv());
}

}  // namespace hgpf
