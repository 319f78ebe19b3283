#pragma once

#include <memory>

#include "hgpf/exactmath/algreal.hpp"

namespace hgpf {

// Q(x) for a real algebraic x, elements stored as residues modulo the defining polynomial.
struct NumberField {
  AlgReal root;
  RatPoly modulus;  // monic

  explicit NumberField(const AlgReal& x) : root(x), modulus(monic(to_rat(x.poly()))) {}
};

using FieldPtr = std::shared_ptr<const NumberField>;

inline FieldPtr make_field(const AlgReal& x) { return std::make_shared<const NumberField>(x); }

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const Rat& v) : v_(RatPoly::constant(v)) {}  // NOLINT: rationals embed implicitly
  FieldElem(long v) : FieldElem(Rat(v)) {}               // NOLINT
  FieldElem(FieldPtr k, RatPoly v) : k_(std::move(k)), v_(std::move(v)) { reduce(); }

  static FieldElem generator(const FieldPtr& k) { return FieldElem(k, RatPoly{Rat(0), Rat(1)}); }

  const RatPoly& residue() const { return v_; }
  const FieldPtr& field() const { return k_; }

  bool is_zero() const {
    if (v_.zero()) return true;
    if (!k_ || k_->root.irreducible()) return false;
    return k_->root.sign_of(v_) == 0;
  }

  int sign() const {
    if (v_.zero()) return 0;
    if (!k_) return sgn(v_[0]);
    return k_->root.sign_of(v_);
  }

  bool is_rational() const { return v_.degree() <= 0; }
  Rat rational() const {
    if (!is_rational()) throw Error(ErrorCode::InvariantViolation, "field element is irrational");
    return v_.zero() ? Rat(0) : v_[0];
  }

  FieldElem inverse() const {
    if (v_.zero()) throw Error(ErrorCode::ZeroDivisor, "inverse of zero");
    if (!k_ || v_.degree() == 0) return FieldElem(k_, RatPoly::constant(1 / v_[0]));
    RatPoly s, t;
    RatPoly g = ext_gcd(v_, k_->modulus, s, t);
    if (g.degree() != 0) throw Error(ErrorCode::ZeroDivisor, "element shares a factor with the modulus");
    return FieldElem(k_, s);
  }

  FieldElem& operator+=(const FieldElem& o) {
    adopt(o);
    v_ += o.v_;
    return *this;
  }
  FieldElem& operator-=(const FieldElem& o) {
    adopt(o);
    v_ -= o.v_;
    return *this;
  }
  FieldElem& operator*=(const FieldElem& o) {
    adopt(o);
    v_ = v_ * o.v_;
    reduce();
    return *this;
  }
  FieldElem& operator/=(const FieldElem& o) {
    adopt(o);
    return *this *= o.inverse();
  }

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend FieldElem operator-(FieldElem a) {
    a.v_ = -a.v_;
    return a;
  }
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return (a - b).is_zero(); }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  FieldElem pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem r(k_, RatPoly::constant(Rat(1))), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

 private:
  void adopt(const FieldElem& o) {
    if (!k_) {
      k_ = o.k_;
      reduce();
    }
  }
  void reduce() {
    if (k_ && v_.degree() >= k_->modulus.degree()) v_ = v_ % k_->modulus;
  }

  FieldPtr k_;
  RatPoly v_;
};

inline bool is_zero(const FieldElem& e) { return e.is_zero(); }

}  // namespace hgpf
