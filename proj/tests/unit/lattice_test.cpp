#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "parallelo/error.hpp"
#include "parallelo/checks.hpp"
#include "parallelo/exact_math.hpp"
#include "parallelo/lattice.hpp"

namespace parallelo {
namespace {

std::vector<oracle::Point> as_oracle(const std::vector<LatticePoint>& pts) {
  std::vector<oracle::Point> out;
  for (const auto& p : pts) out.push_back({p.x, p.y});
  std::sort(out.begin(), out.end(), [](auto l, auto r) { return std::pair(l.x, l.y) < std::pair(r.x, r.y); });
  return out;
}

TEST(IsVisible, Examples) {
  EXPECT_TRUE(is_visible({1, 0}));
  EXPECT_FALSE(is_visible({2, 2}));
  EXPECT_TRUE(is_visible({2, 3}));
  EXPECT_FALSE(is_visible({0, 0}));
  EXPECT_TRUE(is_visible({-3, 4}));
}

TEST(CanonicalParallelogram, ValidatesInvariants) {
  EXPECT_NO_THROW(CanonicalParallelogram(1, 2));
  try {
    CanonicalParallelogram(4, 8);
    FAIL() << "expected InvalidArgument";
  } catch (const InvalidArgument& e) {
    EXPECT_STREQ(e.what(), "gcd(a,n) must be 1");
  }
  EXPECT_THROW(CanonicalParallelogram(0, 5), InvalidArgument);
  EXPECT_THROW(CanonicalParallelogram(5, 5), InvalidArgument);
  EXPECT_THROW(CanonicalParallelogram(1, 1), InvalidArgument);
  EXPECT_EQ(canonical_violation(2, 5), "");
  EXPECT_FALSE(canonical_violation(6, 9).empty());
}

TEST(UnimodularMap, Basics) {
  EXPECT_THROW(UnimodularMap(2, 0, 0, 1), InvalidArgument);
  UnimodularMap shear(1, 1, 0, 1);
  EXPECT_EQ(apply_map(UnimodularMap::identity(), {5, 7}), (LatticePoint{5, 7}));
  EXPECT_EQ(apply_map(shear, {0, 1}), (LatticePoint{1, 1}));
  EXPECT_EQ(apply_map(UnimodularMap(0, 1, -1, 3), {3, 1}), (LatticePoint{1, 0}));
  EXPECT_EQ(shear.compose(shear.inverse()), UnimodularMap::identity());
  UnimodularMap flip(0, 1, 1, 0);
  EXPECT_EQ(flip.determinant(), -1);
  EXPECT_EQ(flip.compose(shear).determinant(), -1);
}

TEST(UnimodularMap, ComposeAppliesRightOperandFirst) {
  UnimodularMap m1(2, 1, 1, 1), m2(1, 3, 0, 1);
  LatticePoint p{4, -7};
  EXPECT_EQ(apply_map(m1.compose(m2), p), apply_map(m1, apply_map(m2, p)));
}

TEST(UnimodularMap, PreservesVisibility) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> coef(-5, 5), coord(-200, 200);
  int maps = 0;
  while (maps < 50) {
    std::int64_t a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
    if (a * d - b * c != 1 && a * d - b * c != -1) continue;
    ++maps;
    UnimodularMap m(a, b, c, d);
    for (int i = 0; i < 200; ++i) {
      LatticePoint p{coord(rng), coord(rng)};
      ASSERT_EQ(is_visible(p), is_visible(apply_map(m, p)));
      ASSERT_EQ(apply_map(m.inverse(), apply_map(m, p)), p);
    }
  }
}

TEST(InteriorPoints, Examples) {
  EXPECT_EQ(interior_points(CanonicalParallelogram(2, 3)), (std::vector<LatticePoint>{{1, 1}, {2, 2}}));
  EXPECT_EQ(interior_points(CanonicalParallelogram(1, 4)), (std::vector<LatticePoint>{{1, 1}, {1, 2}, {1, 3}}));
  EXPECT_EQ(interior_points(CanonicalParallelogram(4, 5)),
            (std::vector<LatticePoint>{{1, 1}, {2, 2}, {3, 3}, {4, 4}}));
}

TEST(InteriorPoints, MatchBruteForceMembership) {
  for (std::int64_t n = 2; n <= 60; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      if (oracle::euclid_gcd(a, n) != 1) continue;
      auto pts = interior_points(CanonicalParallelogram(a, n));
      ASSERT_EQ(pts.size(), static_cast<std::size_t>(n - 1));
      ASSERT_EQ(as_oracle(pts), oracle::interior({1, 0}, {a, n})) << a << " " << n;
    }
  }
}

TEST(VerifyClean, Examples) {
  EXPECT_TRUE(verify_clean(CanonicalParallelogram(2, 5)));
  EXPECT_TRUE(verify_clean(CanonicalParallelogram(1, 2)));
  EXPECT_TRUE(verify_clean(CanonicalParallelogram(3, 100)));
}

TEST(Reduce, AlreadyCanonical) {
  auto r = reduce_to_canonical({1, 0}, {7, 10});
  EXPECT_EQ(r.canonical, CanonicalParallelogram(7, 10));
  EXPECT_EQ(r.map, UnimodularMap::identity());
  EXPECT_FALSE(r.swapped);
}

TEST(Reduce, SwapsNegativeOrientation) {
  auto r = reduce_to_canonical({1, 2}, {3, 1});
  EXPECT_TRUE(r.swapped);
  EXPECT_EQ(r.canonical, CanonicalParallelogram(2, 5));
  EXPECT_EQ(r.map.determinant(), 1);
  EXPECT_EQ(apply_map(r.map, {3, 1}), (LatticePoint{1, 0}));
  EXPECT_EQ(apply_map(r.map, {1, 2}), (LatticePoint{2, 5}));
}

TEST(Reduce, Errors) {
  try {
    reduce_to_canonical({2, 4}, {1, 1});
    FAIL() << "expected ReductionError";
  } catch (const ReductionError& e) {
    EXPECT_EQ(e.kind(), ReductionErrorKind::NotPrimitive);
    EXPECT_STREQ(to_string(e.kind()), "NotPrimitive");
  }
  EXPECT_THROW(reduce_to_canonical({1, 0}, {3, 6}), ReductionError);  // v not primitive
  try {
    reduce_to_canonical({1, 0}, {1, 1});
    FAIL() << "expected ReductionError";
  } catch (const ReductionError& e) {
    EXPECT_EQ(e.kind(), ReductionErrorKind::DegenerateArea);
  }
}

TEST(Reduce, RandomPrimitiveBasesRoundTrip) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> coord(-40, 40);
  int done = 0;
  while (done < 300) {
    LatticePoint u{coord(rng), coord(rng)}, v{coord(rng), coord(rng)};
    std::int64_t det = cross(u, v);
    if (!is_visible(u) || !is_visible(v) || det == 0 || det * det < 4 || det * det > 250'000) continue;
    ++done;
    auto r = reduce_to_canonical(u, v);
    LatticePoint first = r.swapped ? v : u, second = r.swapped ? u : v;
    ASSERT_EQ(r.map.determinant(), 1);
    ASSERT_EQ(apply_map(r.map, first), (LatticePoint{1, 0}));
    ASSERT_EQ(apply_map(r.map, second), (LatticePoint{r.canonical.a(), r.canonical.n()}));
    ASSERT_EQ(r.canonical.n(), det < 0 ? -det : det);
    ASSERT_EQ(brute_force_visible(u, v), oracle::visible_interior({u.x, u.y}, {v.x, v.y}));
  }
}

}  // namespace
}  // namespace parallelo
