#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rodsim/geometry.hpp"

using namespace rodsim;

TEST(Mesh, UniformVertices) {
  const Mesh m = uniform_mesh(3);
  ASSERT_EQ(m.n_vertices(), 3u);
  EXPECT_DOUBLE_EQ(m.vertex(0), 0.0);
  EXPECT_DOUBLE_EQ(m.vertex(1), 0.5);
  EXPECT_DOUBLE_EQ(m.vertex(2), 1.0);
}

TEST(Mesh, UniformSpacing) {
  const Mesh m = uniform_mesh(16);
  ASSERT_EQ(m.n_elements(), 15u);
  for (std::size_t e = 0; e < m.n_elements(); ++e) EXPECT_NEAR(m.h(e), 1.0 / 15.0, 1e-15);
}

TEST(Mesh, RejectsInvalidPartitions) {
  EXPECT_THROW(uniform_mesh(2), InvalidMeshError);
  EXPECT_THROW(Mesh({0.0, 0.5, 0.5, 1.0}), InvalidMeshError);
  EXPECT_THROW(Mesh({0.1, 0.5, 1.0}), InvalidMeshError);
  EXPECT_THROW(Mesh({0.0, 0.5, 0.9}), InvalidMeshError);
}

TEST(ElementTangents, StraightRod) {
  const Mesh m = uniform_mesh(5);
  std::vector<Vec3> x;
  for (double u : m.vertices()) x.emplace_back(u, 0.0, 0.0);
  const auto t = element_tangents(x, m);
  for (std::size_t e = 0; e < 4; ++e) {
    EXPECT_NEAR((t.tau[e] - Vec3(1, 0, 0)).norm(), 0.0, 1e-15);
    EXPECT_NEAR(t.s[e], 1.0, 1e-15);
  }
}

TEST(ElementTangents, Corner) {
  const Mesh m = uniform_mesh(3);
  const std::vector<Vec3> x = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}};
  const auto t = element_tangents(x, m);
  EXPECT_EQ(t.tau[0], Vec3(1, 0, 0));
  EXPECT_EQ(t.tau[1], Vec3(0, 1, 0));
  EXPECT_DOUBLE_EQ(t.s[0], 2.0);
  EXPECT_DOUBLE_EQ(t.s[1], 2.0);
}

TEST(ElementTangents, CoincidentVerticesThrow) {
  const Mesh m = uniform_mesh(3);
  const std::vector<Vec3> x = {{0, 0, 0}, {1, 0, 0}, {1, 0, 0}};
  EXPECT_THROW(element_tangents(x, m), DegenerateGeometryError);
}

TEST(AveragedTangent, ConstantAndCorner) {
  const std::vector<Vec3> c = {{1, 0, 0}, {1, 0, 0}, {1, 0, 0}};
  for (const auto& t : averaged_tangent(c)) EXPECT_EQ(t, Vec3(1, 0, 0));

  const std::vector<Vec3> corner = {{1, 0, 0}, {0, 1, 0}};
  const auto tt = averaged_tangent(corner);
  ASSERT_EQ(tt.size(), 3u);
  EXPECT_EQ(tt[0], Vec3(1, 0, 0));
  EXPECT_NEAR((tt[1] - Vec3(1, 1, 0) / std::sqrt(2.0)).norm(), 0.0, 1e-15);
  EXPECT_EQ(tt[2], Vec3(0, 1, 0));
}

TEST(AveragedTangent, AntipodalThrows) {
  const std::vector<Vec3> t = {{1, 0, 0}, {-1, 0, 0}};
  EXPECT_THROW(averaged_tangent(t), DegenerateGeometryError);
}

TEST(LumpedWeight, StraightUnitRod) {
  const Mesh m = uniform_mesh(3);
  const std::vector<double> s = {1.0, 1.0};
  const auto w = lumped_weight(m, s);
  EXPECT_DOUBLE_EQ(w[0], 0.25);
  EXPECT_DOUBLE_EQ(w[1], 0.5);
  EXPECT_DOUBLE_EQ(w[2], 0.25);

  const std::vector<double> f = {1.0, 2.0, 3.0}, zero = {0.0, 0.0, 0.0};
  EXPECT_DOUBLE_EQ(lumped_inner(w, f, f), 0.25 + 2.0 + 2.25);
  EXPECT_DOUBLE_EQ(lumped_inner(w, f, zero), 0.0);
}

TEST(VertexCurvature, StraightRodIsZero) {
  const Mesh m = uniform_mesh(8);
  std::vector<Vec3> x;
  for (double u : m.vertices()) x.emplace_back(0.0, 2.0 * u, 0.0);
  for (const auto& k : vertex_curvature(x, m, {Vec3::Zero(), Vec3::Zero()})) {
    EXPECT_LT(k.norm(), 1e-14);
  }
}

TEST(VertexCurvature, Corner) {
  const Mesh m = uniform_mesh(3);
  const std::vector<Vec3> x = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}};
  const auto k = vertex_curvature(x, m, {Vec3(7, 0, 0), Vec3(0, 0, 9)});
  EXPECT_NEAR((k[1] - Vec3(-1, 1, 0)).norm(), 0.0, 1e-15);
  EXPECT_EQ(k[0], Vec3(7, 0, 0));
  EXPECT_EQ(k[2], Vec3(0, 0, 9));
}

namespace {

// Max interior error of |kappa| against 1/R for a circle sampled at the
// parameters of `m`.
double circle_curvature_error(const Mesh& m, double R) {
  std::vector<Vec3> x;
  for (double u : m.vertices()) {
    const double th = 1.5 * std::numbers::pi * u;
    x.emplace_back(R * std::cos(th), R * std::sin(th), 0.0);
  }
  const auto k = vertex_curvature(x, m, {Vec3::Zero(), Vec3::Zero()});
  double err = 0.0;
  for (std::size_t i = 1; i + 1 < m.n_vertices(); ++i) {
    err = std::max(err, std::abs(k[i].norm() - 1.0 / R));
  }
  return err;
}

Mesh graded_mesh(int n) {
  std::vector<double> u;
  for (int i = 0; i < n; ++i) {
    const double xi = static_cast<double>(i) / (n - 1);
    u.push_back(xi - 0.3 * std::sin(2.0 * std::numbers::pi * xi) / (2.0 * std::numbers::pi));
  }
  return Mesh(u);
}

}  // namespace

TEST(VertexCurvature, RegularPolygonIsExact) {
  for (int n : {16, 32, 64}) EXPECT_LT(circle_curvature_error(uniform_mesh(n), 0.5), 1e-10);
}

TEST(VertexCurvature, CircleConvergesQuadraticallyOnGradedMesh) {
  std::vector<double> errs;
  for (int n : {16, 32, 64}) errs.push_back(circle_curvature_error(graded_mesh(n), 0.5));
  EXPECT_GT(std::log2(errs[0] / errs[1]), 1.9);
  EXPECT_GT(std::log2(errs[1] / errs[2]), 1.9);
}

namespace {

struct Helix {
  std::vector<Vec3> x, e1, e2;
};

Helix helical_frame(const Mesh& m) {
  Helix h;
  const double tp = 2.0 * std::numbers::pi;
  for (double u : m.vertices()) {
    h.x.emplace_back(0.0, 0.0, u);
    h.e1.emplace_back(std::cos(tp * u), std::sin(tp * u), 0.0);
    h.e2.emplace_back(-std::sin(tp * u), std::cos(tp * u), 0.0);
  }
  return h;
}

}  // namespace

TEST(ElementTwist, ConstantFrameIsZero) {
  const Mesh m = uniform_mesh(6);
  std::vector<Vec3> x, e1(6, Vec3(1, 0, 0)), e2(6, Vec3(0, 1, 0));
  for (double u : m.vertices()) x.emplace_back(0.0, 0.0, u);
  for (double g : element_twist(e1, e2, x, m)) EXPECT_EQ(g, 0.0);
}

TEST(ElementTwist, HelicalFrameQuarterElement) {
  const Mesh m = uniform_mesh(5);  // h = 0.25
  const auto h = helical_frame(m);
  const auto g = element_twist(h.e1, h.e2, h.x, m);
  EXPECT_NEAR(g[0], 4.0, 1e-14);
}

TEST(ElementTwist, ConvergesToTwistRate) {
  const Mesh m = uniform_mesh(2049);
  const auto h = helical_frame(m);
  const auto g = element_twist(h.e1, h.e2, h.x, m);
  for (double v : g) EXPECT_NEAR(v, 2.0 * std::numbers::pi, 1e-5);
}
