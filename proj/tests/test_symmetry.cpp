#include <gtest/gtest.h>

#include <random>

#include "hgpf/pipeline.hpp"

using namespace hgpf;

namespace {

Lambda L(const std::string& s) { return parse_lambda(s); }

Rat rnd_rat(std::mt19937& g, int span) {
  std::uniform_int_distribution<int> n(-span * 24, span * 24), d(1, 24);
  return make_rat(n(g), d(g));
}

GpfSolution find(const Triple& t, const Rat& a, const Rat& b) {
  for (const auto& s : solve_triple(t).solutions)
    if (s.lambda.a == a && s.lambda.b == b) return s;
  ADD_FAILURE() << "no solution " << t.to_text();
  return {};
}

Rat vsum(const GpfSolution& s) {
  Rat t(0);
  for (const Rat& v : s.v) t += v;
  return t;
}

bool same(const GpfSolution& a, const GpfSolution& b) {
  return a.kind == b.kind && a.lambda == b.lambda && a.v == b.v && rad_equal(a.d, b.d, a.lambda.xv());
}

const std::vector<GpfSolution>& census() {
  static const std::vector<GpfSolution> all = [] {
    EnumerateParams prm;
    prm.rcheck = 4;
    prm.with_C = false;
    return run_enumerate(prm).solutions;
  }();
  return all;
}

}  // namespace

TEST(Symmetry, DataMaps) {
  EXPECT_EQ(dual(L("1,1,4;0,1/4;8/9")), L("1,1,4;1/2,1/4;8/9"));
  EXPECT_EQ(reciprocal(L("1,1,4;0,1/4;8/9")), L("-1,-1,2;11/8,9/8;1/9"));
  EXPECT_THROW(reciprocal(L("1,1,2;0,0;1/2")), Error);
}

TEST(Symmetry, InvolutionsOnRandomData) {
  std::mt19937 g(2024);
  std::uniform_int_distribution<int> xs(1, 98);
  int checked = 0;
  while (checked < 1000) {
    Lambda l{rnd_rat(g, 5), rnd_rat(g, 5), rnd_rat(g, 8), rnd_rat(g, 2), rnd_rat(g, 2), AlgReal(make_rat(xs(g), 99))};
    if (sgn(l.r) == 0 || sgn(l.rcheck()) == 0) continue;
    EXPECT_EQ(dual(dual(l)), l);
    EXPECT_EQ(reciprocal(reciprocal(l)), l);
    ++checked;
  }
}

TEST(Symmetry, DualOfKnownSolution) {
  GpfSolution s = find({1, 1, 4}, Rat(0), make_rat(1, 4));
  GpfSolution d = dual_gpf(s);
  EXPECT_EQ(d.lambda, L("1,1,4;1/2,1/4;8/9"));
  EXPECT_EQ(d.v, (std::vector<Rat>{make_rat(1, 6), make_rat(1, 4), make_rat(1, 2), make_rat(7, 12)}));
  EXPECT_TRUE(check_duality_identity(s, d));
  EXPECT_TRUE(same(dual_gpf(d), s));
}

TEST(Symmetry, ReciprocalOfKnownSolution) {
  GpfSolution s = find({1, 1, 4}, Rat(0), make_rat(1, 4));
  GpfSolution f = reciprocal_gpf(s);
  EXPECT_EQ(f.kind, SolutionKind::FIntegral);
  EXPECT_EQ(f.lambda, L("-1,-1,2;11/8,9/8;1/9"));
  EXPECT_EQ(f.v, (std::vector<Rat>{make_rat(5, 24), make_rat(7, 24)}));
  EXPECT_TRUE(rad_equal(f.d, RadExpr::rational(make_rat(256, 243)), f.lambda.xv()));
  EXPECT_TRUE(same(reciprocal_gpf(f), s));
}

TEST(Symmetry, FailureModes) {
  GpfSolution s = find({1, 1, 4}, Rat(0), make_rat(1, 4));
  GpfSolution bad = s;
  bad.v = {make_rat(1, 12), make_rat(1, 4), make_rat(1, 2), make_rat(2, 3)};
  try {
    reciprocal_gpf(bad);
    ADD_FAILURE() << "expected ConventionFailure";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConventionFailure);
  }
  bad.v = {make_rat(1, 13), make_rat(1, 4), make_rat(1, 2), make_rat(2, 3) - make_rat(1, 13) + make_rat(1, 12)};
  try {
    dual_gpf(bad);
    ADD_FAILURE() << "expected ComplementFailure";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ComplementFailure);
  }
  GpfSolution f = reciprocal_gpf(s);
  EXPECT_THROW(dual_gpf(f), Error);
  auto h = divide(reciprocal_gpf(find({1, 1, 6}, Rat(0), make_rat(1, 2))), 2);
  ASSERT_TRUE(h.has_value());
  EXPECT_THROW(reciprocal_gpf(*h), Error);
}

TEST(Symmetry, IdentitiesOnEveryCatalogedSolution) {
  size_t a = 0, f = 0;
  for (const auto& s : census()) {
    EXPECT_EQ(vsum(s), make_rat(static_cast<long>(s.v.size()) - 1, 2)) << s.lambda.to_text();
    if (s.kind == SolutionKind::A) {
      ++a;
      GpfSolution d = dual_gpf(s), r = reciprocal_gpf(s);
      EXPECT_TRUE(check_duality_identity(s, d)) << s.lambda.to_text();
      EXPECT_TRUE(check_reciprocity_identity(s, r)) << s.lambda.to_text();
      EXPECT_TRUE(check_d_reciprocal(s.lambda)) << s.lambda.to_text();
      EXPECT_TRUE(same(dual_gpf(d), s));
      EXPECT_TRUE(same(reciprocal_gpf(r), s));
      for (const auto& t : {d, r}) EXPECT_EQ(vsum(t), make_rat(static_cast<long>(t.v.size()) - 1, 2));
    }
    if (s.kind == SolutionKind::FIntegral) ++f;
  }
  EXPECT_GT(a, 7u);
  EXPECT_EQ(a, f);
}

TEST(Symmetry, IdentityRejectsWrongPartner) {
  GpfSolution s = find({1, 1, 4}, Rat(0), make_rat(1, 4));
  GpfSolution other = find({1, 1, 4}, Rat(0), make_rat(1, 2));
  EXPECT_FALSE(check_duality_identity(s, other));
  GpfSolution r = reciprocal_gpf(other);
  EXPECT_FALSE(check_reciprocity_identity(s, r));
}

TEST(Symmetry, MultiplyDivideRoundTrip) {
  for (const auto& s : census()) {
    if (s.kind != SolutionKind::A && s.kind != SolutionKind::FIntegral) continue;
    for (long k : {2L, 3L}) {
      GpfSolution m = multiply(s, k);
      EXPECT_EQ(vsum(m), make_rat(static_cast<long>(m.v.size()) - 1, 2));
      auto back = divide(m, k);
      ASSERT_TRUE(back.has_value()) << s.lambda.to_text();
      EXPECT_TRUE(same(*back, s)) << s.lambda.to_text();
    }
  }
}

TEST(Symmetry, DivideHalves) {
  GpfSolution f = reciprocal_gpf(find({1, 1, 6}, Rat(0), make_rat(1, 2)));
  EXPECT_EQ(f.lambda, L("-1,-1,4;9/8,5/8;1/5"));
  auto h = divide(f, 2);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->kind, SolutionKind::FRational);
  EXPECT_EQ(h->lambda, L("-1/2,-1/2,2;9/8,5/8;1/5"));
  EXPECT_EQ(h->v, (std::vector<Rat>{make_rat(3, 20), make_rat(7, 20)}));
  EXPECT_TRUE(rad_equal(h->d, RadExpr::rational(make_rat(128, 125)), h->lambda.xv()));
  EXPECT_FALSE(divide(f, 4).has_value());
  EXPECT_FALSE(divide(f, 3).has_value());
  EXPECT_FALSE(divide(reciprocal_gpf(find({1, 1, 4}, Rat(0), make_rat(1, 4))), 2).has_value());
}

TEST(Symmetry, DividePattern) {
  EXPECT_EQ(divide_pattern({Rat(0), make_rat(1, 2)}, 2), (std::vector<Rat>{Rat(0)}));
  EXPECT_FALSE(divide_pattern({Rat(0), make_rat(1, 4)}, 2).has_value());
  auto p = divide_pattern({make_rat(1, 6), make_rat(1, 3), make_rat(2, 3), make_rat(5, 6)}, 2);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, (std::vector<Rat>{make_rat(1, 3), make_rat(2, 3)}));
}
