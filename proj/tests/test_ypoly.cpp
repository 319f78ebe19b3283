#include <gtest/gtest.h>

#include "hgpf/lattice.hpp"
#include "hgpf/ypoly.hpp"

using namespace hgpf;

namespace {
IntPoly ip(std::initializer_list<long> c) {
  std::vector<Int> v;
  for (long x : c) v.push_back(Int(x));
  return IntPoly(v);
}
}  // namespace

TEST(Ypoly, OneOneFour) {
  auto xy = build_XY({1, 1, 4});
  EXPECT_EQ(xy.Delta, ip({16, -12}));
  EXPECT_EQ(xy.Y, ip({512, -960, 432}));
  EXPECT_EQ(xy.X, ip({2048, -4608, 3024, -432}));
  auto xs = x_candidates({1, 1, 4});
  ASSERT_EQ(xs.size(), 1u);
  ASSERT_TRUE(xs[0].is_rational());
  EXPECT_EQ(xs[0].rational(), make_rat(8, 9));
}

TEST(Ypoly, QuadraticRoots) {
  // 1 - x = (3 sqrt 3 - 5)/4 for (2,2;6); 1 - x = 17 - 12 sqrt 2 for (4,2;8)
  auto a = x_candidates({2, 2, 6});
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].degree(), 2);
  AlgReal want(ip({-1, 20, 8}), Rat(0), Rat(1));  // 8y^2+20y-1, y = (3 sqrt 3 - 5)/4
  EXPECT_EQ(a[0].one_minus(), want);
  auto b = x_candidates({4, 2, 8});
  ASSERT_EQ(b.size(), 1u);
  AlgReal want2(ip({1, -34, 1}), Rat(0), Rat(1));
  EXPECT_EQ(b[0].one_minus(), want2);
}

TEST(Ypoly, NotInDomain) {
  EXPECT_THROW(build_XY({1, 1, 3}), Error);
  EXPECT_THROW(x_candidates({1, 1, 5}), Error);
}

TEST(Ypoly, ConjugateProductAndShape) {
  int n = 0;
  for (const auto& e : enumerate_triples(8)) {
    if (n >= 20) break;
    const Triple& t = e.t;
    if (t.r > 20) continue;
    ++n;
    auto xy = build_XY(t);
    EXPECT_EQ(xy.X * xy.X - xy.Y * xy.Y * xy.Delta, conjugate_product(t)) << t.to_text();
    EXPECT_LE(xy.Y.degree(), t.r - 1);
    for (const auto& x : x_candidates(t)) {
      EXPECT_GT(x.compare(AlgReal(Rat(0))), 0);
      EXPECT_LT(x.compare(AlgReal(Rat(1))), 0);
    }
  }
  EXPECT_EQ(n, 20);
}
