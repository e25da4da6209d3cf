#include <gtest/gtest.h>

#include <cmath>

#include "rodsim/diagnostics.hpp"
#include "rodsim/initial_data.hpp"

using namespace rodsim;

namespace {

RodState3D straight_state(int n) {
  const Mesh m = uniform_mesh(n);
  const auto d = straight_rod(m, 1.0, Vec3(1, 0, 0), Vec3(0, 1, 0));
  return make_initial_state(d.x0, d.e1, d.e2, m);
}

}  // namespace

TEST(Energy, RelaxationInitialEnergyTendsTo19) {
  const Scenario s = find_scenario("relaxation");
  double prev = 1e9;
  for (int n : {64, 256}) {
    const Mesh m = uniform_mesh(n);
    const double e = elastic_energy(straight_state(n), m, s.material, s, 0.0);
    const double err = std::abs(e - 19.0);
    EXPECT_LT(err, 0.05);
    EXPECT_LE(err, prev);
    prev = err;
  }
}

TEST(Energy, ZeroWhenFieldsMatchPreferred) {
  Scenario s = find_scenario("relaxation");
  s.alpha0.terms.clear();
  s.beta0.terms.clear();
  s.gamma0.terms.clear();
  const Mesh m = uniform_mesh(10);
  EXPECT_EQ(elastic_energy(straight_state(10), m, s.material, s, 0.0), 0.0);
}

TEST(LengthError, ExactAndScaled) {
  const Mesh m = uniform_mesh(11);
  RodState3D s = straight_state(11);
  EXPECT_NEAR(length_error(s, m, 1.0), 0.0, 1e-15);
  const double delta = 0.01;
  for (auto& x : s.x) x *= 1.0 + delta;
  EXPECT_NEAR(length_error(s, m, 1.0), delta, 1e-14);
}

TEST(Eoc, ReferenceRow) {
  const std::vector<double> err = {5.64486e-3, 4.89655e-4};
  const std::vector<double> dt = {0.25, 0.0625};
  const auto r = eoc(err, dt);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0], 1.76355, 5e-5);
}

TEST(Eoc, ExactOrders) {
  const std::vector<double> dt = {1.0, 0.5, 0.25};
  EXPECT_NEAR(eoc(std::vector<double>{3, 3, 3}, dt)[1], 0.0, 1e-15);
  EXPECT_NEAR(eoc(std::vector<double>{4, 1, 0.25}, dt)[1], 2.0, 1e-15);
  EXPECT_NEAR(eoc(std::vector<double>{4, 2, 1}, dt)[0], 1.0, 1e-15);
  EXPECT_TRUE(eoc(std::vector<double>{1.0}, std::vector<double>{1.0}).empty());
}

TEST(CurvatureComponents, ProjectsOnFrame) {
  RodState3D s = straight_state(5);
  s.kappa[2] = 2.0 * s.e1[2];
  const auto c = curvature_components(s);
  EXPECT_EQ(c.alpha[2], 2.0);
  EXPECT_EQ(c.beta[2], 0.0);
}

TEST(CenterOfMass, StraightRod) {
  const Mesh m = uniform_mesh(3);
  const auto c = center_of_mass(straight_state(3), m);
  EXPECT_NEAR((c - Vec3(0.5, 0, 0)).norm(), 0.0, 1e-15);
}

TEST(CenterOfMass, SymmetricVShape) {
  const Mesh m = uniform_mesh(5);
  RodState3D s = straight_state(5);
  s.x = {Vec3(-2, 2, 0), Vec3(-1, 1, 0), Vec3(0, 0, 0), Vec3(1, 1, 0), Vec3(2, 2, 0)};
  const auto c = center_of_mass(s, m);
  EXPECT_NEAR(c.x(), 0.0, 1e-15);
  EXPECT_NEAR(c.y(), 1.0, 1e-15);
}

TEST(Record, CollectsFunctionals) {
  const Scenario s = find_scenario("relaxation");
  const Mesh m = uniform_mesh(16);
  const RodState3D st = straight_state(16);
  const auto r0 = make_record(st, m, s.material, s, 0.0, 1.0, -1.0);
  EXPECT_EQ(r0.f2_increment, 0.0);
  EXPECT_NEAR(r0.total_length, 1.0, 1e-15);
  EXPECT_NEAR(r0.s_min, 1.0, 1e-14);
  EXPECT_NEAR(r0.s_max, 1.0, 1e-14);
  const auto r1 = make_record(st, m, s.material, s, 0.0, 1.0, 1e-3);
  EXPECT_NEAR(r1.f2_increment, r1.f2 - 1e-3, 1e-18);
}

TEST(Kymograph, SamplesVerticesAndMidpoints) {
  const Mesh m = uniform_mesh(4);
  RodState3D s = straight_state(4);
  s.t = 2.5;
  s.gamma = {1.0, 2.0, 3.0};
  const auto k = kymograph_slice(s, m);
  EXPECT_EQ(k.t, 2.5);
  ASSERT_EQ(k.u.size(), 4u);
  ASSERT_EQ(k.u_mid.size(), 3u);
  EXPECT_NEAR(k.u_mid[1], 0.5, 1e-15);
  EXPECT_EQ(k.gamma[2], 3.0);
}
