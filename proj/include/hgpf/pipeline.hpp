#pragma once

#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "hgpf/lattice.hpp"
#include "hgpf/symmetry.hpp"

namespace hgpf {

struct TripleOutcome {
  Triple t;
  std::vector<GpfSolution> solutions;  // (A)-solutions found directly
  std::vector<std::string> log;
  bool all_zero = false;
};

// Swap-symmetric p = q data keep a <= b.
inline GpfSolution canonical_swap(GpfSolution s) {
  if (s.lambda.p == s.lambda.q && s.lambda.b < s.lambda.a) std::swap(s.lambda.a, s.lambda.b);
  return s;
}

inline bool solution_less(const GpfSolution& x, const GpfSolution& y) {
  const Lambda &a = x.lambda, &b = y.lambda;
  if (a.p != b.p) return a.p < b.p;
  if (a.q != b.q) return a.q < b.q;
  if (a.r != b.r) return a.r < b.r;
  if (a.a != b.a) return a.a < b.a;
  if (a.b != b.b) return a.b < b.b;
  return static_cast<int>(x.kind) < static_cast<int>(y.kind);
}

inline bool same_solution(const GpfSolution& x, const GpfSolution& y) {
  return x.kind == y.kind && x.lambda == y.lambda && x.v == y.v;
}

// Candidates -> Y roots -> V criterion -> P/R -> assembled (A)-solutions of one triple.
inline TripleOutcome solve_triple(const Triple& t) {
  TripleOutcome out{t, {}, {}, false};
  auto cands = candidate_ab(t);
  auto yroots = x_candidates(t);
  out.log.push_back(t.to_text() + ": " + std::to_string(cands.size()) + " candidates, " +
                    std::to_string(yroots.size()) + " Y-roots");
  for (const auto& c : cands) {
    if (t.p == t.q && c.b < c.a) continue;  // swap image of another candidate
    auto V = truncated_V(t, c.a, c.b);
    auto sr = simultaneous_root(V.by_w);
    if (sr.all_zero) {
      out.all_zero = true;
      out.log.push_back(t.to_text() + " (a,b)=(" + to_string(c.a) + "," + to_string(c.b) + "): AllZero");
      continue;
    }
    for (const AlgReal& x : sr.roots) {
      bool on_y = std::any_of(yroots.begin(), yroots.end(), [&](const AlgReal& y) { return y == x; });
      if (!on_y) throw Error(ErrorCode::InvariantViolation, "simultaneous root of V is not a Y-root for " + t.to_text());
      Lambda l = make_lambda(Rat(t.p), Rat(t.q), Rat(t.r), c.a, c.b, x);
      try {
        auto P = truncated_P(t, c.a, c.b, x);
        auto R = ratio_R(t, c.a, c.b, x, P);
        std::string prov = "candidate case " + std::to_string(c.case_id) + " witness (" +
                           std::to_string(c.witness[0]) + "," + std::to_string(c.witness[1]) + "," +
                           std::to_string(c.witness[2]) + "," + std::to_string(c.witness[3]) + ")";
        out.solutions.push_back(assemble(l, R, SolutionKind::A, prov));
        out.log.push_back(t.to_text() + ": solution " + l.to_text());
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegreeDrop && e.code() != ErrorCode::IrrationalShift) throw;
        out.log.push_back(t.to_text() + " " + l.to_text() + ": rejected, " + e.what());
      }
    }
  }
  if (out.solutions.empty()) out.log.push_back(t.to_text() + ": candidates exhausted, no solution");
  return out;
}

// Runs fn(i) for i in [0, n) over a pool of jobs threads.
inline void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errs(n);
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs && j < static_cast<int>(n); ++j)
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          fn(i);
        } catch (...) {
          errs[i] = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

struct EnumerateParams {
  std::optional<long> rcheck;
  std::optional<long> r_max;
  int digits = 60;
  int jobs = 1;
  bool with_C = true;
};

struct EnumerateResult {
  std::vector<TripleOutcome> outcomes;  // canonical triples, in order
  std::vector<GpfSolution> solutions;   // full sorted catalog content
  size_t a_count = 0;
};

inline std::vector<long> divisors_from_two(long r) {
  std::vector<long> out;
  for (long k = 2; k <= r; ++k)
    if (r % k == 0) out.push_back(k);
  return out;
}

// A-solutions plus duals, reciprocals (F-) and divisions (B- and rational F-).
inline std::vector<GpfSolution> derived_family(const GpfSolution& s) {
  std::vector<GpfSolution> out{s, dual_gpf(s)};
  GpfSolution f = reciprocal_gpf(s);
  out.push_back(f);
  for (long k : divisors_from_two(to_long(s.lambda.r)))
    if (auto dv = divide(s, k); dv && dv->kind == SolutionKind::B) out.push_back(*dv);
  for (long k : divisors_from_two(to_long(f.lambda.r)))
    if (auto dv = divide(f, k); dv && dv->kind == SolutionKind::FRational) out.push_back(*dv);
  return out;
}

inline EnumerateResult run_enumerate(const EnumerateParams& prm) {
  if (prm.rcheck.has_value() == prm.r_max.has_value())
    throw Error(ErrorCode::Parse, "exactly one of rcheck / r_max is required");
  std::vector<Triple> triples;
  for (const auto& e : enumerate_triples(prm.rcheck.value_or(0), prm.r_max))
    if (e.canonical) triples.push_back(e.t);
  EnumerateResult res;
  res.outcomes.resize(triples.size());
  std::vector<std::vector<GpfSolution>> fam(triples.size());
  parallel_for(triples.size(), prm.jobs, [&](size_t i) {
    res.outcomes[i] = solve_triple(triples[i]);
    for (const auto& s : res.outcomes[i].solutions)
      for (auto& d : derived_family(s))
        fam[i].push_back(d.kind == SolutionKind::A || d.kind == SolutionKind::B ? canonical_swap(d) : d);
  });
  std::vector<GpfSolution> all;
  for (size_t i = 0; i < triples.size(); ++i) {
    res.a_count += res.outcomes[i].solutions.size();
    all.insert(all.end(), fam[i].begin(), fam[i].end());
  }
  std::sort(all.begin(), all.end(), solution_less);
  for (auto& s : all)
    if (res.solutions.empty() || !same_solution(res.solutions.back(), s)) res.solutions.push_back(s);
  if (prm.with_C)
    parallel_for(res.solutions.size(), prm.jobs,
                 [&](size_t i) { res.solutions[i] = with_C(res.solutions[i], prm.digits); });
  return res;
}

}  // namespace hgpf
