#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hgpf/exactmath/factor.hpp"

namespace hgpf {

// Decimal rendering of a rational, truncated toward zero after `digits` places.
inline std::string rat_to_decimal(const Rat& v, int digits) {
  Rat a = abs_rat(v);
  Int scale = int_pow(Int(10), digits);
  Int n = floor_rat(a * Rat(scale));
  std::string s = n.get_str();
  if (static_cast<int>(s.size()) <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return (sgn(v) < 0 ? "-" : "") + out;
}

// Real algebraic number: integer defining polynomial plus an isolating open interval.
class AlgReal {
 public:
  AlgReal() : AlgReal(Rat(0)) {}

  explicit AlgReal(const Rat& v) : poly_(primitive_int(RatPoly{Rat(-v), Rat(1)})), lo_(v - 1), hi_(v + 1), exact_(v) {}

  AlgReal(const IntPoly& f, const Rat& lo, const Rat& hi, bool irreducible = true)
      : poly_(primitive_int(f)), lo_(lo), hi_(hi), irreducible_(irreducible) {
    if (poly_.degree() < 1) throw Error(ErrorCode::InvariantViolation, "AlgReal needs a nonconstant polynomial");
    if (sturm_count(to_rat(poly_), lo_, hi_) != 1)
      throw Error(ErrorCode::InvariantViolation, "AlgReal interval does not isolate one root");
    if (poly_.degree() == 1) exact_ = Rat(-poly_[0]) / Rat(poly_[1]);
  }

  const IntPoly& poly() const { return poly_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  int degree() const { return poly_.degree(); }
  bool irreducible() const { return irreducible_; }
  bool is_rational() const { return exact_.has_value(); }
  const Rat& rational() const {
    if (!exact_) throw Error(ErrorCode::InvariantViolation, "AlgReal is irrational");
    return *exact_;
  }

  // Isolating interval of width < eps (degenerate when rational).
  std::pair<Rat, Rat> interval_within(const Rat& eps) const {
    if (exact_) return {*exact_, *exact_};
    RatPoly f = to_rat(poly_);
    Rat a = lo_, b = hi_;
    Rat fa = f(a), fb = f(b);
    Int N(16);
    while (b - a >= eps) {
      // secant guess snapped to a grid of N cells; success squares N, failure bisects
      Rat s = a + (b - a) * fa / (fa - fb);
      Rat w = (b - a) / Rat(N);
      Int k = floor_rat((s - a) / w + Rat(1, 2));
      if (k < 0) k = 0;
      if (k > N) k = N;
      Rat m = a + Rat(k) * w;
      Rat l = m - w, h = m + w;
      if (l < a) l = a;
      if (h > b) h = b;
      Rat fl = f(l), fm = f(m), fh = f(h);
      if (sgn(fm) == 0 || sgn(fl) == 0 || sgn(fh) == 0)
        throw Error(ErrorCode::InvariantViolation, "rational root met while refining");
      if (l < m && sgn(fl) != sgn(fm)) {
        a = l; b = m; fa = fl; fb = fm;
        if (N < (Int(1) << 64)) N = N * N;
        continue;
      }
      if (m < h && sgn(fm) != sgn(fh)) {
        a = m; b = h; fa = fm; fb = fh;
        if (N < (Int(1) << 64)) N = N * N;
        continue;
      }
      Rat mid = (a + b) / 2;
      Rat fmid = f(mid);
      if (sgn(fmid) == 0) throw Error(ErrorCode::InvariantViolation, "rational root met while refining");
      if (sgn(fmid) == sgn(fa)) {
        a = mid; fa = fmid;
      } else {
        b = mid; fb = fmid;
      }
      Int r;
      mpz_sqrt(r.get_mpz_t(), N.get_mpz_t());
      N = r < 4 ? Int(4) : r;
    }
    return {a, b};
  }

  std::pair<Rat, Rat> refine(int digits) const {
    return interval_within(Rat(1) / Rat(int_pow(Int(10), digits)));
  }

  AlgReal narrowed(int digits) const {
    if (exact_) return *this;
    auto [a, b] = refine(digits);
    AlgReal out = *this;
    out.lo_ = a;
    out.hi_ = b;
    return out;
  }

  // Sign of g(this) for rational g.
  int sign_of(const RatPoly& g) const {
    if (g.zero()) return 0;
    if (exact_) return sgn(g(*exact_));
    RatPoly f = to_rat(poly_);
    if (irreducible_) {
      if ((g % f).zero()) return 0;
    } else {
      RatPoly h = poly_gcd(f, g);
      if (h.degree() >= 1 && sturm_count(h, lo_, hi_) == 1) return 0;
    }
    Rat eps = (hi_ - lo_) / 2;
    for (;;) {
      auto [a, b] = interval_within(eps);
      if (sign_at(g, a) != 0 && sign_at(g, b) != 0 && sturm_count(g, a, b) == 0) return sign_at(g, a);
      eps /= 1024;
    }
  }

  int compare(const AlgReal& o) const {
    if (exact_ && o.exact_) return cmp(*exact_, *o.exact_);
    if (exact_) return -o.sign_of(RatPoly{Rat(-*exact_), Rat(1)});
    if (o.exact_) return sign_of(RatPoly{Rat(-*o.exact_), Rat(1)});
    if (same_root(o)) return 0;
    Rat eps = std::min(hi_ - lo_, o.hi_ - o.lo_);
    for (;;) {
      auto [a, b] = interval_within(eps);
      auto [c, d] = o.interval_within(eps);
      if (b <= c) return -1;
      if (d <= a) return 1;
      eps /= 1024;
    }
  }

  friend bool operator==(const AlgReal& x, const AlgReal& y) { return x.compare(y) == 0; }
  friend bool operator!=(const AlgReal& x, const AlgReal& y) { return x.compare(y) != 0; }
  friend bool operator<(const AlgReal& x, const AlgReal& y) { return x.compare(y) < 0; }

  AlgReal one_minus() const {
    if (exact_) return AlgReal(Rat(1 - *exact_));
    RatPoly g = to_rat(poly_).scale(Rat(-1)).shift(Rat(-1));  // f(1 - z)
    return AlgReal(primitive_int(g), 1 - hi_, 1 - lo_, irreducible_);
  }

  // y = x/(x-1); defined when x < 1.
  AlgReal pfaff() const {
    if (exact_) return AlgReal(Rat(*exact_ / (*exact_ - 1)));
    auto [a, b] = interval_within(Rat(1, 2));
    Rat c = a, d = b;
    if (!(d < 1)) {
      if (!(c < 1)) throw Error(ErrorCode::InvariantViolation, "pfaff map needs x < 1");
      Rat eps = (d - c) / 2;
      while (!(d < 1)) {
        std::tie(c, d) = interval_within(eps);
        eps /= 16;
      }
    }
    // f(y/(y-1)) (y-1)^n
    int n = poly_.degree();
    RatPoly num{Rat(0), Rat(1)}, den{Rat(-1), Rat(1)};
    RatPoly acc;
    for (int i = 0; i <= n; ++i) {
      RatPoly term = RatPoly::constant(Rat(poly_[i]));
      for (int j = 0; j < i; ++j) term *= num;
      for (int j = i; j < n; ++j) term *= den;
      acc += term;
    }
    Rat l = d / (d - 1), h = c / (c - 1);
    return AlgReal(primitive_int(acc), l, h, irreducible_);
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "{poly:[";
    for (size_t i = 0; i < poly_.size(); ++i) os << (i ? "," : "") << poly_[i].get_str();
    os << "];lo:" << to_nd(lo_) << ";hi:" << to_nd(hi_) << "}";
    return os.str();
  }

  // Short display: the rational value or the decimal approximation.
  std::string display(int digits = 20) const {
    if (exact_) return to_string(*exact_);
    auto [a, b] = refine(digits + 2);
    return rat_to_decimal(a, digits) + "...";
  }

  std::string decimal(int digits) const {
    if (exact_) return rat_to_decimal(*exact_, digits);
    auto [a, b] = refine(digits + 2);
    return rat_to_decimal(a, digits);
  }

  double approx() const {
    if (exact_) return exact_->get_d();
    auto [a, b] = refine(20);
    return a.get_d();
  }

 private:
  bool same_root(const AlgReal& o) const {
    Rat a = std::max(lo_, o.lo_), b = std::min(hi_, o.hi_);
    if (!(a < b)) return false;
    RatPoly f = to_rat(poly_), g = to_rat(o.poly_);
    RatPoly h = poly_gcd(f, g);
    if (h.degree() < 1) return false;
    if (sign_at(h, a) == 0 || sign_at(h, b) == 0) {
      // endpoints come from one of the two intervals so they are not roots of that polynomial;
      // shrink until they are not roots of h either
      auto [c, d] = interval_within((hi_ - lo_) / 4);
      auto [e, g2] = o.interval_within((o.hi_ - o.lo_) / 4);
      a = std::max(c, e);
      b = std::min(d, g2);
      if (!(a < b)) return false;
      if (sign_at(h, a) == 0 || sign_at(h, b) == 0) return false;
    }
    return sturm_count(h, a, b) == 1 && sturm_count(f, a, b) == 1 && sturm_count(g, a, b) == 1;
  }

  IntPoly poly_;
  Rat lo_, hi_;
  bool irreducible_ = true;
  std::optional<Rat> exact_;
};

inline AlgReal parse_algreal(const std::string& text);

// One AlgReal per distinct real root of f in (lo,hi), each carrying its irreducible factor.
inline std::vector<AlgReal> isolate_roots(const RatPoly& f, const Rat& lo, const Rat& hi) {
  std::vector<AlgReal> out;
  if (f.degree() < 1 || !(lo < hi)) return out;
  RatPoly g = squarefree_part(f);
  // drop roots sitting exactly on the endpoints
  for (const Rat& e : {lo, hi})
    if (sign_at(g, e) == 0) g = g / RatPoly{Rat(-e), Rat(1)};
  if (g.degree() < 1) return out;
  IntPoly gi = primitive_int(g);
  auto boxes = isolate_intervals(gi, lo, hi);
  if (boxes.empty()) return out;
  Factorization fac = factor_squarefree(gi);
  for (const auto& [a, b] : boxes) {
    bool placed = false;
    for (size_t i = 0; i < fac.factors.size(); ++i) {
      const IntPoly& h = fac.factors[i];
      if (sign_at(h, a) == 0 || sign_at(h, b) == 0) continue;
      if (SturmSequence(h).count(a, b) == 1) {
        bool irr = fac.complete || h.degree() <= kFactorDegreeLimit;
        out.emplace_back(h, a, b, irr);
        placed = true;
        break;
      }
    }
    if (!placed) throw Error(ErrorCode::InvariantViolation, "root not attributed to any factor");
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline AlgReal parse_algreal(const std::string& text) {
  // {poly:[c0,...];lo:n/d;hi:n/d}
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    return AlgReal(parse_rat(t));
  auto field = [&](const std::string& key) {
    auto k = t.find(key + ":");
    if (k == std::string::npos) throw Error(ErrorCode::Parse, "missing " + key + " in " + text);
    auto start = k + key.size() + 1;
    auto end = t.find_first_of(";}", start);
    if (key == "poly") end = t.find(']', start) + 1;
    return t.substr(start, end - start);
  };
  std::string poly = field("poly");
  if (poly.size() < 2 || poly.front() != '[' || poly.back() != ']')
    throw Error(ErrorCode::Parse, "bad poly in " + text);
  std::vector<Int> c;
  std::stringstream ss(poly.substr(1, poly.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      c.emplace_back(item);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::Parse, "bad coefficient '" + item + "'");
    }
  }
  IntPoly f(std::move(c));
  Rat lo = parse_rat(field("lo")), hi = parse_rat(field("hi"));
  auto fac = factor_squarefree(primitive_int(squarefree_part(to_rat(f))));
  for (const auto& h : fac.factors) {
    if (sign_at(h, lo) == 0 || sign_at(h, hi) == 0) continue;
    if (SturmSequence(h).count(lo, hi) == 1) return AlgReal(h, lo, hi, fac.complete);
  }
  throw Error(ErrorCode::Parse, "interval does not isolate a root: " + text);
}

}  // namespace hgpf
