#include "fank/cone.hpp"
#include "fank/error.hpp"
#include "fank/polyhedral.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace fank;
using fank::testing::Rng;

namespace {

std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> out;
  for (auto r : rows) out.push_back(make_vector(r));
  return out;
}

IntVector cross(const IntVector& a, const IntVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Facets of a full-dimensional cone in R^3 by checking every pair of rays as a candidate plane.
std::set<RaySet> brute_force_facets_3d(const std::vector<IntVector>& rays) {
  std::set<RaySet> out;
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      IntVector nrm = cross(rays[i], rays[j]);
      if (is_zero(nrm)) continue;
      bool pos = true, neg = true;
      RaySet zero;
      for (std::size_t k = 0; k < rays.size(); ++k) {
        Integer s = dot(nrm, rays[k]);
        if (s == 0) zero.push_back(k);
        if (s < 0) pos = false;
        if (s > 0) neg = false;
      }
      if (pos || neg) out.insert(zero);
    }
  return out;
}

}  // namespace

TEST(ConeFromRays, Quadrant) {
  Cone c = Cone::from_rays(2, vecs({{1, 0}, {0, 1}}));
  EXPECT_EQ(c.dim(), 2u);
  EXPECT_TRUE(c.is_smooth());
  auto f = c.facets();
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].rays().size(), 1u);
  EXPECT_EQ(f[1].rays().size(), 1u);
}

TEST(ConeFromRays, NotStronglyConvex) {
  try {
    Cone::from_rays(2, vecs({{1, 0}, {-1, 0}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotStronglyConvex);
    EXPECT_NE(std::string(e.what()).find("(-1,0)"), std::string::npos);
  }
  EXPECT_THROW(Cone::from_rays(2, vecs({{1, 0}, {0, 1}, {-1, -1}})), Error);
  EXPECT_THROW(Cone::from_rays(2, vecs({{0, 0}})), Error);
}

TEST(ConeFromRays, SquarePyramid) {
  Cone c = Cone::from_rays(3, vecs({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}));
  EXPECT_EQ(c.dim(), 3u);
  EXPECT_EQ(c.facet_data().size(), 4u);
  EXPECT_FALSE(c.is_simplicial());
  EXPECT_FALSE(c.is_smooth());
  std::size_t two = 0, one = 0;
  for (const auto& f : c.face_sets()) {
    two += f.size() == 2;
    one += f.size() == 1;
  }
  EXPECT_EQ(two, 4u);
  EXPECT_EQ(one, 4u);
  EXPECT_EQ(c.face_sets().size(), 10u);
}

TEST(ConeFromRays, NormalizesAndDropsRedundant) {
  Cone c = Cone::from_rays(2, vecs({{2, 0}, {0, 3}, {1, 1}, {1, 0}}));
  EXPECT_EQ(c.rays(), vecs({{0, 1}, {1, 0}}));
}

TEST(Faces, SmoothThreeCone) {
  Cone c = Cone::from_rays(3, vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(c.facets().size(), 3u);
  EXPECT_EQ(c.face_sets().size(), 8u);
  std::size_t rays = 0, zero = 0;
  for (const auto& f : c.face_sets()) {
    rays += f.size() == 1;
    zero += f.empty();
  }
  EXPECT_EQ(rays, 3u);
  EXPECT_EQ(zero, 1u);
}

TEST(Faces, TwoCone) {
  Cone c = Cone::from_rays(3, vecs({{1, 2, 0}, {0, 1, 5}}));
  EXPECT_EQ(c.dim(), 2u);
  auto f = c.facets();
  ASSERT_EQ(f.size(), 2u);
  for (const auto& x : f) EXPECT_EQ(x.dim(), 1u);
  for (const auto& facet : c.facet_data()) {
    for (std::size_t i = 0; i < c.rays().size(); ++i) {
      bool on = std::find(facet.rays.begin(), facet.rays.end(), i) != facet.rays.end();
      EXPECT_EQ(dot(facet.normal, c.rays()[i]) == 0, on);
      EXPECT_GE(dot(facet.normal, c.rays()[i]), 0);
    }
  }
}

TEST(Smoothness, Examples) {
  EXPECT_FALSE(Cone::from_rays(3, vecs({{1, 0, 2}, {0, 1, 2}, {-1, -1, 1}})).is_smooth());
  EXPECT_TRUE(Cone::from_rays(3, vecs({{1, 0, 2}, {0, 1, 2}, {0, 0, 1}})).is_smooth());
  EXPECT_FALSE(Cone::from_rays(2, vecs({{1, 0}, {1, 2}})).is_smooth());
  EXPECT_TRUE(Cone::zero(3).is_smooth());
}

TEST(Intersect, Examples) {
  // Hirzebruch adjacent cones share the ray (0,1)
  Cone a = Cone::from_rays(2, vecs({{1, 0}, {0, 1}})), b = Cone::from_rays(2, vecs({{0, 1}, {-1, 1}}));
  Cone m = intersect(a, b);
  EXPECT_EQ(m.rays(), vecs({{0, 1}}));
  EXPECT_EQ(intersect(a, a), a);
  Cone opp = Cone::from_rays(2, vecs({{-1, 0}, {0, -1}}));
  EXPECT_EQ(intersect(a, opp).dim(), 0u);
  // overlapping cones: not a face
  Cone over = Cone::from_rays(2, vecs({{1, 1}, {-1, 2}}));
  try {
    intersect(a, over);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAFace);
  }
}

TEST(ExtremeRays, PositiveOrthant) {
  ExtremeRays er = extreme_rays(3, vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
  EXPECT_EQ(er.rays.size(), 3u);
}

TEST(LinearProgram, FeasibilityExamples) {
  LinearSystem sys;
  sys.nvars = 2;
  sys.add_ge({1, 1}, 3);
  sys.add_ge({-1, 0}, -5);
  sys.add_eq({1, -1}, 0);
  auto x = feasible_point(sys);
  ASSERT_TRUE(x);
  EXPECT_GE((*x)[0] + (*x)[1], 3);
  EXPECT_EQ((*x)[0], (*x)[1]);
  EXPECT_LE((*x)[0], 5);
  sys.add_ge({-1, 0}, -1);
  EXPECT_FALSE(feasible_point(sys));
}

TEST(LinearProgram, Infeasible) {
  LinearSystem sys;
  sys.nvars = 1;
  sys.add_ge({1}, 2);
  sys.add_ge({-1}, -1);
  EXPECT_FALSE(feasible_point(sys));
}

TEST(ConeProperties, FacetsMatchBruteForce) {
  Rng rng(41);
  int tested = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<IntVector> rays;
    for (long k = rng.uniform(3, 7); k > 0; --k) {
      IntVector r = rng.nonzero_vector(3, -3, 3);
      r[2] = rng.uniform(1, 3);
      rays.push_back(r);
    }
    Cone c = Cone::from_rays(3, rays);
    if (c.dim() != 3) continue;
    std::set<RaySet> got;
    for (const auto& f : c.facet_data()) got.insert(f.rays);
    EXPECT_EQ(got, brute_force_facets_3d(c.rays()));
    ++tested;
    // every face of a face is a face; smooth implies simplicial
    for (const auto& f : c.face_sets()) {
      Cone face = c.face(f);
      for (const auto& g : face.face_sets()) {
        RaySet back;
        for (auto i : g) back.push_back(c.ray_index(face.rays()[i]));
        std::sort(back.begin(), back.end());
        EXPECT_TRUE(c.is_face(back));
      }
    }
    if (c.is_smooth()) EXPECT_TRUE(c.is_simplicial());
  }
  EXPECT_GT(tested, 100);
}

TEST(ConeProperties, FacetsOfFacesAreCodimensionOne) {
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = rng.uniform(2, 5);
    std::vector<IntVector> rays;
    for (long k = rng.uniform(1, 6); k > 0; --k) {
      IntVector r = rng.nonzero_vector(n, -2, 2);
      r[n - 1] = rng.uniform(1, 2);
      rays.push_back(r);
    }
    Cone c = Cone::from_rays(n, rays);
    for (const auto& f : c.facets()) EXPECT_EQ(f.dim() + 1, c.dim());
    for (const auto& r : c.rays()) EXPECT_TRUE(c.contains(r));
    EXPECT_FALSE(c.contains(-c.rays()[0]));
  }
}
