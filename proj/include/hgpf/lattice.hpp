#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "hgpf/model.hpp"

namespace hgpf {

struct TripleEntry {
  Triple t;
  bool canonical;  // p >= q
};

inline bool check_division_relations(const Triple& t) {
  if (!t.in_domain()) throw Error(ErrorCode::NotInDomain, "triple " + t.to_text() + " is not in D-_A");
  long rc = t.rcheck();
  auto ok = [&](long s) { return t.r % s == 0 || rc % s == 0; };
  return ok(t.p) && ok(t.q);
}

inline bool within_bounds(const Triple& t) {
  long rc = t.rcheck();
  return t.p >= 1 && t.q >= 1 && t.p <= 3 * rc && t.q <= 3 * rc && t.p + t.q >= 2 &&
         t.p + t.q <= 5 * rc && t.r >= 4 && t.r <= 6 * rc;
}

// Admissible triples with r - p - q <= rcheck_max (or r <= r_max), lexicographic in (p,q,r).
inline std::vector<TripleEntry> enumerate_triples(long rcheck_max, std::optional<long> r_max = std::nullopt) {
  std::vector<TripleEntry> out;
  long rc_hi = rcheck_max;
  if (r_max) rc_hi = *r_max;  // r <= r_max forces r - p - q <= r_max - 2
  for (long rc = 2; rc <= rc_hi; rc += 2) {
    for (long p = 1; p <= 3 * rc; ++p) {
      for (long q = 1; q <= 3 * rc; ++q) {
        Triple t{p, q, p + q + rc};
        if (r_max && t.r > *r_max) continue;
        if (!within_bounds(t)) continue;
        if (!check_division_relations(t)) continue;
        out.push_back({t, p >= q});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const TripleEntry& x, const TripleEntry& y) { return x.t < y.t; });
  return out;
}

struct ZLinearSystem {
  std::array<long, 4> mu{};
  long mu5 = 0;
  std::array<long, 4> nu{};
  long nu5 = 0;
};

using Witness = std::array<long, 4>;  // (i, j, i', j')

inline std::vector<Witness> solve_zlinear(const ZLinearSystem& s) {
  std::vector<Witness> out;
  std::array<long, 4> bound{};
  for (int k = 0; k < 4; ++k) {
    if (s.mu[k] < 0 || s.nu[k] < 0 || (s.mu[k] == 0 && s.nu[k] == 0))
      throw Error(ErrorCode::InvariantViolation, "z-linear system has an unbounded variable");
    long b = -1;
    if (s.mu[k] > 0) b = s.mu5 >= 0 ? s.mu5 / s.mu[k] : -1;
    if (s.nu[k] > 0) {
      long c = s.nu5 >= 0 ? s.nu5 / s.nu[k] : -1;
      b = (s.mu[k] > 0) ? std::min(b, c) : c;
    }
    bound[k] = b;
  }
  if (s.mu5 < 0 || s.nu5 < 0) return out;
  Witness v{};
  for (v[0] = 0; v[0] <= bound[0]; ++v[0])
    for (v[1] = 0; v[1] <= bound[1]; ++v[1])
      for (v[2] = 0; v[2] <= bound[2]; ++v[2])
        for (v[3] = 0; v[3] <= bound[3]; ++v[3]) {
          long m = 0, n = 0;
          for (int k = 0; k < 4; ++k) {
            m += s.mu[k] * v[k];
            n += s.nu[k] * v[k];
          }
          if (m == s.mu5 && n == s.nu5) out.push_back(v);
        }
  return out;
}

struct AbCandidate {
  Rat a, b, a_dual, b_dual;
  int case_id = 0;
  Witness witness{};
};

namespace detail {

// s_t, defined only when t | s
inline std::optional<long> sub(long s, long t) {
  if (t == 0 || s % t != 0) return std::nullopt;
  return s / t;
}

struct RawCandidate {
  int case_id;
  Witness w;
  Rat a, b, a2, b2;
};

// Candidate rows for one column orientation (p, q).
inline std::vector<RawCandidate> candidate_cases(long p, long q, long r) {
  std::vector<RawCandidate> res;
  long rc = r - p - q;
  auto rp = sub(r, p), rq = sub(r, q), cp = sub(rc, p), cq = sub(rc, q);
  auto R = [](long n, long d) { return make_rat(n, d); };

  if (rp && rq) {
    for (const auto& w : solve_zlinear({{1, 0, 1, 0}, *rp - 2, {0, 1, 0, 1}, *rq - 2}))
      res.push_back({1, w, R(w[0], *rp), R(w[1], *rq), R(w[2], *rp), R(w[3], *rq)});
  }
  if (cp && cq) {
    for (const auto& w : solve_zlinear({{1, 0, 1, 0}, *cp, {0, 1, 0, 1}, *cq}))
      res.push_back({2, w, R((r - p) * w[0] - q * w[1], r * *cp), R((r - q) * w[1] - p * w[0], r * *cq),
                     R((r - p) * w[2] - q * w[3], r * *cp), R((r - q) * w[3] - p * w[2], r * *cq)});
  }
  if (rp && cq) {
    if (auto rpq = sub(r - p, q)) {
      for (const auto& w : solve_zlinear({{1, 0, 1, 0}, *rp - 2, {0, 1, 0, 1}, *cq}))
        res.push_back({3, w, R(w[0], *rp), R(*rp * w[1] - w[0], *rp * *rpq), R(w[2], *rp),
                       R(*rp * w[3] - w[2], *rp * *rpq)});
    }
  }
  if (rp) {
    auto rhs = sub(*rp * rc, q), den = sub(*rp * (r - p), q);
    if (rhs && den) {
      for (const auto& w : solve_zlinear({{1, 0, 1, 0}, *rp - 2, {1, *rp - 1, 0, *rp}, *rhs}))
        res.push_back({4, w, R(w[0], *rp), R(q * w[1], r), R(w[2], *rp), R(*rp * w[3] - w[2], *den)});
    }
  }
  if (cp) {
    auto rqp = sub(r - q, p), rhs = cp ? sub((r - q) * *cp, q) : std::nullopt, den = sub(r * *cp, q);
    if (rqp && rhs && den) {
      for (const auto& w : solve_zlinear({{1, 0, 1, 0}, *cp, {0, *rqp, 1, *cp}, *rhs}))
        res.push_back({5, w, R((r - p) * w[0] - q * w[1], r * *cp), R(*rqp * w[1] - w[0], *den),
                       R(r * w[2] - q * w[3], r * *rqp), R(q * w[3], r)});
    }
  }
  if (sub(r * rc, p) && sub(r * rc, q)) {
    auto A = sub((r - p) * rc, p), B = sub((r - q) * rc, q), d1 = sub(r * (r - p), q), d2 = sub(r * (r - q), p);
    if (A && B && d1 && d2) {
      for (const auto& w : solve_zlinear({{rc, q, r - p, 0}, *A, {0, r - q, p, rc}, *B}))
        res.push_back({6, w, R(p * w[0], r), R(r * w[1] - p * w[0], *d1), R(r * w[2] - q * w[3], *d2),
                       R(q * w[3], r)});
    }
  }
  return res;
}

inline bool unit_range(const Rat& v) { return sgn(v) >= 0 && v < 1; }

}  // namespace detail

// Dual-pair candidates over all four matrix orientations, deduplicated by (a,b) and sorted.
inline std::vector<AbCandidate> candidate_ab(const Triple& t) {
  if (!check_division_relations(t))
    throw Error(ErrorCode::NotInDomain, "triple " + t.to_text() + " fails the division relations");
  std::map<std::pair<Rat, Rat>, AbCandidate> out;
  Rat da = 1 - make_rat(2 * t.p, t.r), db = 1 - make_rat(2 * t.q, t.r);
  for (bool swap : {false, true}) {
    auto raw = swap ? detail::candidate_cases(t.q, t.p, t.r) : detail::candidate_cases(t.p, t.q, t.r);
    for (auto c : raw) {
      if (swap) {
        std::swap(c.a, c.b);
        std::swap(c.a2, c.b2);
      }
      if (c.a + c.a2 != da || c.b + c.b2 != db)
        throw Error(ErrorCode::InvariantViolation, "dual-pair candidate violates the duality sums");
      for (bool dual : {false, true}) {
        AbCandidate k{dual ? c.a2 : c.a, dual ? c.b2 : c.b, dual ? c.a : c.a2, dual ? c.b : c.b2,
                      c.case_id, c.w};
        if (!detail::unit_range(k.a) || !detail::unit_range(k.b) || !detail::unit_range(k.a_dual) ||
            !detail::unit_range(k.b_dual))
          continue;
        auto key = std::make_pair(k.a, k.b);
        auto it = out.find(key);
        // keep the first case (lowest id, then smallest witness) for determinism
        if (it == out.end() || std::tie(k.case_id, k.witness) < std::tie(it->second.case_id, it->second.witness))
          out[key] = k;
      }
    }
  }
  std::vector<AbCandidate> v;
  for (auto& [key, c] : out) v.push_back(c);
  return v;
}

}  // namespace hgpf
