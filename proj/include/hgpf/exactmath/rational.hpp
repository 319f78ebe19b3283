#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "hgpf/errors.hpp"

namespace hgpf {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& n, const Int& d) {
  if (d == 0) throw Error(ErrorCode::InvariantViolation, "zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long n, long d = 1) { return make_rat(Int(n), Int(d)); }

inline bool is_zero(const Int& v) { return sgn(v) == 0; }
inline bool is_zero(const Rat& v) { return sgn(v) == 0; }

inline bool is_integer(const Rat& v) { return v.get_den() == 1; }

inline Int floor_rat(const Rat& v) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

inline Int ceil_rat(const Rat& v) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

// Fractional part in [0,1).
inline Rat frac(const Rat& v) { return v - Rat(floor_rat(v)); }

inline Rat rat_pow(const Rat& base, long e) {
  Rat out(1);
  Rat b = base;
  bool neg = e < 0;
  unsigned long n = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), n);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), n);
  out.canonicalize();
  if (neg) {
    if (out == 0) throw Error(ErrorCode::InvariantViolation, "zero to negative power");
    out = 1 / out;
  }
  return out;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::InvariantViolation, "integer out of range");
  return v.get_si();
}

inline long to_long(const Rat& v) {
  if (!is_integer(v)) throw Error(ErrorCode::InvariantViolation, "not an integer: " + v.get_str());
  return to_long(v.get_num());
}

// "n/d" with d omitted when 1.
inline std::string to_string(const Rat& v) { return v.get_str(); }
inline std::string to_string(const Int& v) { return v.get_str(); }

// Always "n/d", used by the catalog.
inline std::string to_nd(const Rat& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Rat parse_rat(std::string_view s) {
  std::string t;
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '+') t += c;
  if (t.empty()) throw Error(ErrorCode::Parse, "empty rational");
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      auto dot = t.find('.');
      if (dot == std::string::npos) return Rat(Int(t));
      bool neg = t[0] == '-';
      std::string digits = t.substr(neg ? 1 : 0);
      dot = digits.find('.');
      std::string whole = digits.substr(0, dot), part = digits.substr(dot + 1);
      Int den = int_pow(Int(10), part.size());
      Int num(whole.empty() ? std::string("0") : whole);
      num = num * den + (part.empty() ? Int(0) : Int(part));
      return make_rat(neg ? Int(-num) : num, den);
    }
    return make_rat(Int(t.substr(0, slash)), Int(t.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::Parse, "bad rational '" + std::string(s) + "'");
  }
}

inline Rat abs_rat(const Rat& v) { return sgn(v) < 0 ? Rat(-v) : v; }

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Exact integer k-th root if one exists.
inline bool exact_root(const Int& v, unsigned long k, Int& out) {
  if (sgn(v) < 0 && k % 2 == 0) return false;
  return mpz_root(out.get_mpz_t(), v.get_mpz_t(), k) != 0;
}

}  // namespace hgpf
