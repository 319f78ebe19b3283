#include <gtest/gtest.h>

#include <random>

#include "hgpf/exactmath.hpp"

using namespace hgpf;

namespace {

RatPoly P(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(std::move(v));
}

RatPoly lin(const Rat& root) { return RatPoly{Rat(-root), Rat(1)}; }

// Root count by adaptive bisection: cells are discarded when a Lipschitz bound
// excludes a root, otherwise split down to width 1e-12 and checked for a sign change.
int bisection_count(const RatPoly& f, const Rat& lo, const Rat& hi) {
  RatPoly df = f.derivative();
  Rat res(1, 1000000000000L);
  std::vector<std::pair<Rat, Rat>> stack{{lo, hi}};
  int count = 0;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    Rat m = (a + b) / 2, w = b - a;
    Rat M = std::max(abs_rat(a), abs_rat(b));
    Rat L(0);
    for (int i = 1; i <= f.degree(); ++i) L += abs_rat(f[i]) * Rat(i) * rat_pow(M, i - 1);
    if (abs_rat(f(m)) > L * w / 2) continue;
    if (w < res) {
      if (sgn(f(a)) != sgn(f(b))) ++count;
      continue;
    }
    stack.emplace_back(a, m);
    stack.emplace_back(m, b);
  }
  return count;
}

}  // namespace

TEST(PolyGcd, SharedLinearFactor) {
  EXPECT_EQ(poly_gcd(P({-1, 0, 1}), P({-1, 1})), P({-1, 1}));
}

TEST(PolyGcd, Coprime) {
  EXPECT_EQ(poly_gcd(lin(Rat(1, 2)), lin(Rat(1, 3))), P({1}));
}

TEST(PolyGcd, YFactorAgainstProduct) {
  RatPoly y = P({512, -960, 432});
  RatPoly g = P({-8, 9}) * P({1, 1});
  EXPECT_EQ(poly_gcd(y, g), lin(Rat(8, 9)));
}

TEST(PolyGcd, WithZero) {
  EXPECT_EQ(poly_gcd(P({2, 4}), RatPoly()), lin(Rat(-1, 2)));
}

TEST(PolyGcd, DividesBothRandom) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-9, 9);
  std::uniform_int_distribution<int> deg(0, 4);
  for (int it = 0; it < 200; ++it) {
    auto rnd = [&](int d) {
      std::vector<Rat> v(d + 1);
      for (auto& x : v) x = c(rng);
      if (v.back() == 0) v.back() = 1;
      return RatPoly(v);
    };
    RatPoly common = rnd(deg(rng));
    RatPoly f = common * rnd(deg(rng)), g = common * rnd(deg(rng));
    RatPoly h = poly_gcd(f, g);
    if (h.zero()) continue;
    EXPECT_TRUE((f % h).zero());
    EXPECT_TRUE((g % h).zero());
    EXPECT_TRUE((h % monic(common)).zero() || common.degree() <= 0);
  }
}

TEST(Sturm, Examples) {
  EXPECT_EQ(sturm_count(lin(Rat(1, 2)), Rat(0), Rat(1)), 1);
  EXPECT_EQ(sturm_count(P({1, 0, 1}), Rat(0), Rat(1)), 0);
  EXPECT_EQ(sturm_count(P({512, -960, 432}), Rat(0), Rat(1)), 1);
}

TEST(Sturm, EndpointRootThrows) {
  try {
    sturm_count(P({0, -1, 1}), Rat(0), Rat(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EndpointRoot);
  }
}

TEST(Sturm, MatchesBisectionOnRandomPolynomials) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> c(-20, 20);
  std::uniform_int_distribution<int> deg(1, 8);
  int checked = 0;
  while (checked < 60) {
    int d = deg(rng);
    std::vector<Rat> v(d + 1);
    for (auto& x : v) x = c(rng);
    if (v.back() == 0) continue;
    RatPoly f(v);
    if (poly_gcd(f, f.derivative()).degree() > 0) continue;
    Rat lo(-3), hi(Rat(29, 10));
    if (sgn(f(lo)) == 0 || sgn(f(hi)) == 0) continue;
    EXPECT_EQ(sturm_count(f, lo, hi), bisection_count(f, lo, hi)) << poly_to_string(f);
    ++checked;
  }
}

TEST(IsolateRoots, Examples) {
  auto r = isolate_roots(lin(Rat(1, 2)), Rat(0), Rat(1));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].is_rational());
  EXPECT_EQ(r[0].rational(), Rat(1, 2));

  auto y = isolate_roots(P({512, -960, 432}), Rat(0), Rat(1));
  ASSERT_EQ(y.size(), 1u);
  EXPECT_EQ(y[0].poly(), IntPoly({Int(-8), Int(9)}));
  EXPECT_EQ(y[0].rational(), Rat(8, 9));

  EXPECT_TRUE(isolate_roots(P({0, -1, 1}), Rat(0), Rat(1)).empty());
}

TEST(IsolateRoots, IrreducibleFactorAndOrder) {
  // (z^2 - 2)(3z - 1)(z^2 + 1) on (0, 2)
  RatPoly f = P({-2, 0, 1}) * P({-1, 3}) * P({1, 0, 1});
  auto r = isolate_roots(f * f, Rat(0), Rat(2));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].rational(), Rat(1, 3));
  EXPECT_EQ(r[1].poly(), IntPoly({Int(-2), Int(0), Int(1)}));
  for (const auto& x : r) EXPECT_EQ(sturm_count(to_rat(x.poly()), x.lo(), x.hi()), 1);
}

TEST(Factor, SwinnertonDyerIrreducible) {
  IntPoly f({Int(1), Int(0), Int(-10), Int(0), Int(1)});
  auto fac = factor_squarefree(f);
  ASSERT_EQ(fac.factors.size(), 1u);
  EXPECT_EQ(fac.factors[0], f);
}

TEST(Factor, SplitsProducts) {
  RatPoly f = P({-2, 0, 1}) * P({-3, 0, 1}) * P({5, 1}) * P({1, 1, 1});
  auto fac = factor_squarefree(primitive_int(f));
  EXPECT_EQ(fac.factors.size(), 4u);
  RatPoly prod = P({1});
  for (const auto& g : fac.factors) {
    EXPECT_LE(g.degree(), 2);
    prod = prod * to_rat(g);
  }
  EXPECT_EQ(monic(prod), monic(f));
}

TEST(Factor, NonMonicRecombination) {
  // (6z^2 - 1)(10z^3 + 3z - 7)(15z^2 + 2)
  RatPoly f = P({-1, 0, 6}) * P({-7, 3, 0, 10}) * P({2, 0, 15});
  auto fac = factor_squarefree(primitive_int(f));
  std::vector<int> degs;
  for (const auto& g : fac.factors) degs.push_back(g.degree());
  std::sort(degs.begin(), degs.end());
  EXPECT_EQ(degs, (std::vector<int>{2, 2, 3}));
}

TEST(Refine, RationalIsExact) {
  AlgReal h(Rat(1, 2));
  auto [a, b] = h.refine(10);
  EXPECT_EQ(a, Rat(1, 2));
  EXPECT_EQ(b, Rat(1, 2));
  AlgReal e(IntPoly({Int(-8), Int(9)}), Rat(0), Rat(1));
  EXPECT_EQ(e.decimal(30), "0.888888888888888888888888888888");
}

TEST(Refine, SqrtTwoNested) {
  AlgReal s(IntPoly({Int(-2), Int(0), Int(1)}), Rat(1), Rat(2));
  auto [a5, b5] = s.refine(5);
  EXPECT_LT(b5 - a5, Rat(1, 100000));
  EXPECT_EQ(rat_to_decimal(a5, 4), "1.4142");
  Rat la = a5, lb = b5;
  for (int d : {10, 20, 40, 60}) {
    AlgReal n = s.narrowed(d);
    auto [a, b] = n.refine(d);
    EXPECT_LE(la, a);
    EXPECT_LE(b, lb);
    EXPECT_LT(a * a, Rat(2));
    EXPECT_GT(b * b, Rat(2));
    EXPECT_LT(b - a, Rat(1) / Rat(int_pow(Int(10), d)));
    s = n;
    la = a;
    lb = b;
  }
}

TEST(AlgRealOps, CompareOneMinusPfaff) {
  AlgReal s(IntPoly({Int(-2), Int(0), Int(1)}), Rat(1), Rat(2));
  AlgReal t(IntPoly({Int(-3), Int(0), Int(1)}), Rat(1), Rat(2));
  EXPECT_LT(s, t);
  EXPECT_EQ(s, s.narrowed(30));
  EXPECT_GT(s.compare(AlgReal(Rat(7, 5))), 0);
  // 9 - 4 sqrt5 and its complement
  AlgReal x(IntPoly({Int(1), Int(-18), Int(1)}), Rat(0), Rat(1));
  AlgReal y = x.one_minus();
  EXPECT_EQ(y.one_minus(), x);
  EXPECT_EQ(y.poly(), IntPoly({Int(-16), Int(16), Int(1)}));
  AlgReal z = x.pfaff();
  EXPECT_LT(z.compare(AlgReal(Rat(0))), 0);
  EXPECT_EQ(z.pfaff(), x);
  EXPECT_EQ(AlgReal(Rat(8, 9)).pfaff().rational(), Rat(-8));
}

TEST(AlgRealOps, TextRoundTrip) {
  AlgReal x(IntPoly({Int(1), Int(-18), Int(1)}), Rat(0), Rat(1));
  AlgReal y = parse_algreal(x.to_text());
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.to_text(), y.to_text());
}

TEST(NumberFieldOps, Arithmetic) {
  AlgReal s(IntPoly({Int(-2), Int(0), Int(1)}), Rat(1), Rat(2));
  FieldPtr k = make_field(s);
  FieldElem r = FieldElem::generator(k);
  EXPECT_EQ(r * r, FieldElem(Rat(2)));
  FieldElem u = r + FieldElem(Rat(1));
  EXPECT_EQ(u * u.inverse(), FieldElem(Rat(1)));
  EXPECT_EQ((r - FieldElem(Rat(3, 2))).sign(), -1);
  EXPECT_EQ((r - FieldElem(Rat(7, 5))).sign(), 1);
  EXPECT_EQ(u.pow(2), FieldElem(Rat(3)) + FieldElem(Rat(2)) * r);
}
