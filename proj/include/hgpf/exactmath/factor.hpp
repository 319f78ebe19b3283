#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hgpf/exactmath/sturm.hpp"

namespace hgpf {

namespace modp {

using u64 = std::uint64_t;
using MPoly = std::vector<u64>;  // lowest degree first, trimmed

inline void trim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((unsigned __int128)a * b % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 inv(u64 a, u64 p) { return powmod(a, p - 2, p); }

inline MPoly from_int(const IntPoly& f, u64 p) {
  MPoly out(f.size());
  Int pp(static_cast<unsigned long>(p)), r;
  for (size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r(r.get_mpz_t(), f[i].get_mpz_t(), pp.get_mpz_t());
    out[i] = r.get_ui();
  }
  trim(out);
  return out;
}

inline MPoly sub(MPoly a, const MPoly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline MPoly mul(const MPoly& a, const MPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  MPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(out);
  return out;
}

inline void divmod(const MPoly& a, const MPoly& b, u64 p, MPoly& q, MPoly& r) {
  r = a;
  q.clear();
  if (a.size() < b.size()) return;
  q.assign(a.size() - b.size() + 1, 0);
  u64 li = inv(b.back(), p);
  size_t db = b.size() - 1;
  for (size_t i = a.size() - 1;; --i) {
    u64 c = mulmod(r[i], li, p);
    q[i - db] = c;
    if (c != 0)
      for (size_t j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - mulmod(c, b[j], p)) % p;
    if (i == db) break;
  }
  trim(q);
  trim(r);
}

inline MPoly rem(const MPoly& a, const MPoly& b, u64 p) {
  MPoly q, r;
  divmod(a, b, p, q, r);
  return r;
}

inline MPoly quo(const MPoly& a, const MPoly& b, u64 p) {
  MPoly q, r;
  divmod(a, b, p, q, r);
  return q;
}

inline MPoly make_monic(MPoly a, u64 p) {
  if (a.empty()) return a;
  u64 li = inv(a.back(), p);
  for (auto& v : a) v = mulmod(v, li, p);
  return a;
}

inline MPoly gcd(MPoly a, MPoly b, u64 p) {
  while (!b.empty()) {
    MPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

// s*a + t*b = 1 for coprime a, b.
inline void bezout(const MPoly& a, const MPoly& b, u64 p, MPoly& s, MPoly& t) {
  MPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    MPoly q, r;
    divmod(r0, r1, p, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    MPoly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    MPoly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 li = inv(r0.back(), p);
  for (auto& v : s0) v = mulmod(v, li, p);
  for (auto& v : t0) v = mulmod(v, li, p);
  s = s0;
  t = t0;
}

inline MPoly powmod_poly(MPoly base, const Int& e, const MPoly& m, u64 p) {
  MPoly r{1};
  base = rem(base, m, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, p), m, p);
  }
  return r;
}

struct DegreeFactor {
  MPoly g;
  int d;
};

// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<DegreeFactor> ddf(MPoly f, u64 p) {
  std::vector<DegreeFactor> out;
  MPoly z{0, 1}, h = z;
  Int pe(static_cast<unsigned long>(p));
  for (int d = 1; static_cast<int>(f.size()) - 1 >= 2 * d; ++d) {
    h = powmod_poly(h, pe, f, p);
    MPoly g = gcd(f, sub(h, z, p), p);
    if (g.size() > 1) {
      out.push_back({g, d});
      f = quo(f, g, p);
      h = rem(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back({f, static_cast<int>(f.size()) - 1});
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus), p odd.
inline void edf(const MPoly& g, int d, u64 p, std::mt19937_64& rng, std::vector<MPoly>& out) {
  int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Int e = int_pow(Int(static_cast<unsigned long>(p)), d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (;;) {
    MPoly a(n);
    for (auto& v : a) v = dist(rng);
    trim(a);
    if (a.size() < 2) continue;
    MPoly b = powmod_poly(a, e, g, p);
    b = sub(b, MPoly{1}, p);
    MPoly h = gcd(g, b, p);
    int dh = static_cast<int>(h.size()) - 1;
    if (dh > 0 && dh < n) {
      edf(h, d, p, rng, out);
      edf(quo(g, h, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace modp

namespace detail {

inline Int mod_pos(const Int& v, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline IntPoly reduce(const IntPoly& f, const Int& m) {
  std::vector<Int> c = f.coeffs();
  for (auto& v : c) v = mod_pos(v, m);
  return IntPoly(std::move(c));
}

inline IntPoly symmetric(const IntPoly& f, const Int& m) {
  std::vector<Int> c = f.coeffs();
  Int half = m / 2;
  for (auto& v : c) {
    v = mod_pos(v, m);
    if (v > half) v -= m;
  }
  return IntPoly(std::move(c));
}

inline IntPoly to_intpoly(const modp::MPoly& a) {
  std::vector<Int> c;
  for (auto v : a) c.emplace_back(static_cast<unsigned long>(v));
  return IntPoly(std::move(c));
}

// Remainder of a by monic b modulo m.
inline IntPoly rem_monic(const IntPoly& a, const IntPoly& b, const Int& m, IntPoly* quot = nullptr) {
  std::vector<Int> r = reduce(a, m).coeffs();
  int db = b.degree();
  std::vector<Int> q(r.size() > static_cast<size_t>(db) ? r.size() - db : 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    Int c = mod_pos(r[i], m);
    if (i - db < static_cast<int>(q.size())) q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = mod_pos(r[i - db + j] - c * b[j], m);
  }
  r.resize(std::min<size_t>(r.size(), db));
  if (quot) *quot = IntPoly(std::move(q));
  return IntPoly(std::move(r));
}

inline Int inverse_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorCode::InvariantViolation, "non-invertible leading coefficient");
  return r;
}

// Lift f = g*h mod p to mod p^k; h monic. g, h are updated in place.
inline void hensel_two(const IntPoly& f, IntPoly& g, IntPoly& h, modp::u64 p, int k) {
  modp::MPoly s, t;
  modp::bezout(modp::from_int(g, p), modp::from_int(h, p), p, s, t);
  IntPoly S = to_intpoly(s), T = to_intpoly(t);
  Int P(static_cast<unsigned long>(p)), m = P;
  for (int i = 1; i < k; ++i) {
    IntPoly e = f - g * h;
    std::vector<Int> ec = e.coeffs();
    for (auto& v : ec) {
      if (!mpz_divisible_p(v.get_mpz_t(), m.get_mpz_t()))
        throw Error(ErrorCode::InvariantViolation, "Hensel lift lost congruence");
      v /= m;
    }
    IntPoly ep = reduce(IntPoly(std::move(ec)), P);
    IntPoly q;
    IntPoly sigma = rem_monic(S * ep, h, P, &q);
    IntPoly tau = reduce(T * ep + q * g, P);
    g = g + tau * m;
    h = h + sigma * m;
    m *= P;
  }
  g = reduce(g, m);
  h = reduce(h, m);
}

// Monic modular factors u_i with f = lc * prod u_i mod p, lifted to p^k.
inline std::vector<IntPoly> hensel_multi(const IntPoly& f, std::vector<IntPoly> u, modp::u64 p,
                                         int k) {
  Int pk = int_pow(Int(static_cast<unsigned long>(p)), k);
  if (u.size() == 1) {
    Int li = inverse_mod(mod_pos(f.lead(), pk), pk);
    return {reduce(f * li, pk)};
  }
  size_t half = u.size() / 2;
  Int P(static_cast<unsigned long>(p));
  IntPoly g = IntPoly::constant(mod_pos(f.lead(), P)), h = IntPoly::constant(Int(1));
  for (size_t i = 0; i < half; ++i) g = reduce(g * u[i], P);
  for (size_t i = half; i < u.size(); ++i) h = reduce(h * u[i], P);
  hensel_two(f, g, h, p, k);
  // g and h are now lifted but g carries lc(f); lift each side separately over pk.
  std::vector<IntPoly> left(u.begin(), u.begin() + half), right(u.begin() + half, u.end());
  auto lift_side = [&](const IntPoly& side, std::vector<IntPoly> fac) {
    return hensel_multi(side, std::move(fac), p, k);
  };
  std::vector<IntPoly> out = lift_side(g, left);
  std::vector<IntPoly> r = lift_side(h, right);
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

inline bool is_small_prime(modp::u64 n) {
  if (n < 2) return false;
  for (modp::u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline bool divides_exactly(const IntPoly& g, const IntPoly& f, IntPoly& quotient) {
  auto [q, r] = divmod(to_rat(f), to_rat(g));
  if (!r.zero()) return false;
  std::vector<Int> c;
  for (const auto& v : q.coeffs()) {
    if (!is_integer(v)) return false;
    c.push_back(v.get_num());
  }
  quotient = IntPoly(std::move(c));
  return true;
}

}  // namespace detail

// Factors a primitive squarefree integer polynomial of degree >= 2 over Z.
inline std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  using namespace detail;
  int n = f.degree();
  if (n <= 1) return {f};
  // prime choice: fewest modular factors among the first few good primes
  modp::u64 best_p = 0;
  std::vector<modp::DegreeFactor> best;
  size_t best_count = 0;
  int good = 0;
  for (modp::u64 p = 3; good < 5; p += 2) {
    if (!is_small_prime(p)) continue;
    Int P(static_cast<unsigned long>(p));
    if (mpz_divisible_p(f.lead().get_mpz_t(), P.get_mpz_t())) continue;
    modp::MPoly fp = modp::from_int(f, p);
    modp::MPoly dfp = modp::from_int(f.derivative(), p);
    if (modp::gcd(fp, dfp, p).size() != 1) continue;
    ++good;
    auto dd = modp::ddf(modp::make_monic(fp, p), p);
    size_t count = 0;
    for (const auto& x : dd) count += (x.g.size() - 1) / x.d;
    if (count == 1) return {f};
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best = dd;
      best_count = count;
    }
  }
  modp::u64 p = best_p;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::vector<modp::MPoly> mf;
  for (const auto& x : best) modp::edf(x.g, x.d, p, rng, mf);
  std::vector<IntPoly> u;
  for (const auto& x : mf) u.push_back(to_intpoly(x));

  // coefficient bound for factors (times lc), Mignotte-style
  Int norm2(0);
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Int norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Int lc = abs(f.lead());
  Int bound = 2 * lc * int_pow(Int(2), n) * norm + 1;
  Int P(static_cast<unsigned long>(p)), pk = P;
  int k = 1;
  while (pk <= bound) {
    pk *= P;
    ++k;
  }
  std::vector<IntPoly> lifted = hensel_multi(f, u, p, k);

  std::vector<IntPoly> factors;
  IntPoly rest = f;
  std::vector<IntPoly> T = lifted;
  size_t s = 1;
  while (2 * s <= T.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      IntPoly g = IntPoly::constant(rest.lead());
      for (size_t i : idx) g = reduce(g * T[i], pk);
      g = symmetric(g, pk);
      IntPoly gp = primitive_int(g);
      IntPoly q;
      if (gp.degree() > 0 && divides_exactly(gp, rest, q)) {
        factors.push_back(gp);
        rest = q;
        std::vector<IntPoly> keep;
        for (size_t i = 0, j = 0; i < T.size(); ++i) {
          if (j < idx.size() && idx[j] == i) {
            ++j;
            continue;
          }
          keep.push_back(T[i]);
        }
        T = std::move(keep);
        found = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(s) - 1;
      while (pos >= 0 && idx[pos] == T.size() - s + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) factors.push_back(primitive_int(rest));
  return factors;
}

struct Factorization {
  std::vector<IntPoly> factors;  // primitive, positive leading coefficient
  bool complete = true;          // false if some factor is only known to be squarefree
};

inline constexpr int kFactorDegreeLimit = 8;

// Rational roots via root isolation: a root n/d has d | lead, so lead*root is an integer.
inline std::vector<Rat> rational_roots(const IntPoly& f) {
  std::vector<Rat> out;
  if (f.degree() < 1) return out;
  IntPoly g = primitive_int(squarefree_part(to_rat(f)));
  if (sign_at(g, Rat(0)) == 0) {
    out.push_back(Rat(0));
    g = primitive_int(to_rat(g) / RatPoly{Rat(0), Rat(1)});
    if (g.degree() < 1) return out;
  }
  Rat B = cauchy_bound(g);
  Rat L(abs(g.lead()));
  Rat eps = 1 / (4 * L);
  for (const auto& side : {std::pair<Rat, Rat>(-B, Rat(0)), std::pair<Rat, Rat>(Rat(0), B)}) {
    const Rat& lo = side.first;
    const Rat& hi = side.second;
    for (auto [a, b] : isolate_intervals(g, lo, hi)) {
      int sa = sign_at(g, a);
      while (b - a > eps) {
        Rat m = (a + b) / 2;
        int sm = sign_at(g, m);
        if (sm == 0) {
          a = b = m;
          break;
        }
        if (sm == sa) a = m; else b = m;
      }
      Int lo_n = ceil_rat(a * L), hi_n = floor_rat(b * L);
      for (Int c = lo_n; c <= hi_n; ++c) {
        Rat cand = make_rat(c, L.get_num());
        if (sign_at(g, cand) == 0) out.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Irreducible factorization of a squarefree polynomial: linear factors from rational roots,
// Zassenhaus on the rest when its degree is within the limit.
inline Factorization factor_squarefree(const IntPoly& f_in) {
  Factorization out;
  IntPoly f = primitive_int(f_in);
  if (f.degree() <= 1) {
    if (f.degree() == 1) out.factors.push_back(f);
    return out;
  }
  RatPoly rest = to_rat(f);
  for (const Rat& r : rational_roots(f)) {
    IntPoly lin = primitive_int(RatPoly{Rat(-r), Rat(1)});
    out.factors.push_back(lin);
    rest = rest / to_rat(lin);
  }
  IntPoly g = primitive_int(rest);
  if (g.degree() >= 1) {
    if (g.degree() <= kFactorDegreeLimit) {
      for (auto& h : zassenhaus(g)) out.factors.push_back(primitive_int(h));
    } else {
      out.factors.push_back(g);
      out.complete = false;
    }
  }
  return out;
}

}  // namespace hgpf
