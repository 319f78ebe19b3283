#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hgpf/exactmath/rational.hpp"

namespace hgpf {

template <class T>
class Poly;

template <class T>
bool is_zero(const Poly<T>& p);

// Dense univariate polynomial, coefficients lowest degree first.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
  Poly(std::initializer_list<T> c) : c_(c) { trim(); }

  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly monomial(const T& v, size_t deg) {
    std::vector<T> c(deg + 1);
    c[deg] = v;
    return Poly(std::move(c));
  }
  // z - root
  static Poly linear_root(const T& root, const T& one) { return Poly(std::vector<T>{-root, one}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const T& lead() const { return c_.back(); }
  const std::vector<T>& coeffs() const { return c_; }
  size_t size() const { return c_.size(); }

  T coeff(size_t i) const { return i < c_.size() ? c_[i] : T{}; }
  const T& operator[](size_t i) const { return c_[i]; }

  void set_coeff(size_t i, const T& v) {
    if (i >= c_.size()) c_.resize(i + 1);
    c_[i] = v;
    trim();
  }

  template <class U>
  U eval(const U& x) const {
    if (c_.empty()) return U{};
    U acc = U(c_.back());
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }

  T operator()(const T& x) const { return eval<T>(x); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(Poly a, const T& s) { return a *= s; }
  friend Poly operator*(const T& s, Poly a) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // p(z + s)
  Poly shift(const T& s) const {
    Poly out;
    Poly lin(std::vector<T>{s, T(1)});
    for (size_t i = c_.size(); i-- > 0;) out = out * lin + Poly::constant(c_[i]);
    return out;
  }

  // p(s z)
  Poly scale(const T& s) const {
    std::vector<T> c = c_;
    T pw(1);
    for (auto& v : c) {
      v *= pw;
      pw *= s;
    }
    return Poly(std::move(c));
  }

  // z^deg p(1/z)
  Poly reversed(size_t deg) const {
    std::vector<T> c(deg + 1);
    for (size_t i = 0; i < c_.size() && i <= deg; ++i) c[deg - i] = c_[i];
    return Poly(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

template <class T>
bool is_zero(const Poly<T>& p) {
  return p.zero();
}

using RatPoly = Poly<Rat>;
using IntPoly = Poly<Int>;

// Quotient and remainder over a field.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.zero()) throw Error(ErrorCode::InvariantViolation, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<T>(), a};
  std::vector<T> r = a.coeffs();
  std::vector<T> q(a.size() - b.size() + 1);
  T inv = T(1) / b.lead();
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(r[i])) continue;
    T f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  r.resize(db);
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).second;
}

template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).first;
}

template <class T>
Poly<T> monic(const Poly<T>& p) {
  if (p.zero()) return p;
  return p * (T(1) / p.lead());
}

inline RatPoly poly_gcd(RatPoly f, RatPoly g) {
  while (!g.zero()) {
    RatPoly r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  return monic(f);
}

// Returns g = gcd(a,b) monic with s*a + t*b = g.
template <class T>
Poly<T> ext_gcd(const Poly<T>& a, const Poly<T>& b, Poly<T>& s, Poly<T>& t) {
  Poly<T> r0 = a, r1 = b;
  Poly<T> s0 = Poly<T>::constant(T(1)), s1;
  Poly<T> t0, t1 = Poly<T>::constant(T(1));
  while (!r1.zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<T> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  T inv = T(1) / r0.lead();
  s = s0 * inv;
  t = t0 * inv;
  return r0 * inv;
}

inline RatPoly squarefree_part(const RatPoly& f) {
  if (f.degree() <= 0) return monic(f);
  RatPoly g = poly_gcd(f, f.derivative());
  return monic(f / g);
}

inline RatPoly to_rat(const IntPoly& p) {
  std::vector<Rat> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

inline Int content(const IntPoly& p) {
  Int g(0);
  for (const auto& v : p.coeffs()) g = gcd_int(g, v);
  return g;
}

// Scales to a primitive integer polynomial with positive leading coefficient.
inline IntPoly primitive_int(const RatPoly& p) {
  if (p.zero()) return IntPoly();
  Int den(1);
  for (const auto& v : p.coeffs()) den = lcm_int(den, v.get_den());
  std::vector<Int> c;
  c.reserve(p.size());
  for (const auto& v : p.coeffs()) c.emplace_back(v.get_num() * (den / v.get_den()));
  IntPoly out(std::move(c));
  Int g = content(out);
  if (sgn(out.lead()) < 0) g = -g;
  std::vector<Int> d = out.coeffs();
  for (auto& v : d) v /= g;
  return IntPoly(std::move(d));
}

inline IntPoly primitive_int(const IntPoly& p) { return primitive_int(to_rat(p)); }

template <class T>
std::string poly_to_string(const Poly<T>& p, const std::string& var = "z") {
  if (p.zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const T& c = p[i];
    if (is_zero(c)) continue;
    std::string s = c.get_str();
    bool neg = s[0] == '-';
    if (neg) s = s.substr(1);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = s == "1";
    if (i == 0 || !unit) os << s;
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace hgpf
