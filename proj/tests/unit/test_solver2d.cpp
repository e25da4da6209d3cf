#include <gtest/gtest.h>

#include <cmath>

#include "rodsim/solver2d.hpp"

using namespace rodsim;

TEST(DofLayout2D, Count) {
  EXPECT_EQ(DofLayout2D(16).total(), 103u);
  EXPECT_EQ(DofLayout2D(3).total(), 12u);
}

TEST(Solver2D, StraightRodIsStationary) {
  Scenario s = find_scenario("worm2d");
  s.alpha0.terms.clear();
  const Mesh m = uniform_mesh(16);
  const auto st = straight_initial_state_2d(m, 1.0);
  const auto sys = assemble_step_2d(st, m, s.material, s.drag, s, 0.0, 1.0);
  EXPECT_EQ(sys.matrix.dim(), 103u);
  const auto sol = solve_step_2d(sys);
  EXPECT_LT(sol.residual, 1e-13);
  for (std::size_t i = 0; i < 16; ++i) EXPECT_LT((sol.x[i] - st.x[i]).norm(), 1e-14);
  for (double p : sol.p) EXPECT_LT(std::abs(p), 1e-14);
}

TEST(Solver2D, PerpRotatesCounterClockwise) {
  EXPECT_EQ(perp(Vec2(1, 0)), Vec2(0, 1));
  EXPECT_EQ(perp(Vec2(0, 1)), Vec2(-1, 0));
}

TEST(Solver2D, FirstCoarseStepLengthError) {
  SimConfig c = SimConfig::at_level(find_scenario("worm2d"), 0);
  c.scenario.spin_up = 0.0;
  const Mesh m = uniform_mesh(16);
  const Stepper2D stepper(m, c);
  const auto s1 = stepper.step(straight_initial_state_2d(m, 1.0), 1.0);
  double len = 0.0;
  for (int i = 0; i + 1 < 16; ++i) len += (s1.x[i + 1] - s1.x[i]).norm();
  EXPECT_LT(std::abs(len - 1.0), 3.0 * 6.93355e-1);
}

TEST(Solver2D, EmbeddingOfStraightRod) {
  const Mesh m = uniform_mesh(6);
  const auto e = embed_2d_in_3d(straight_initial_state_2d(m, 1.0), m);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(e.e2[i], Vec3(0, 0, 1));
    EXPECT_NEAR((e.e1[i] - Vec3(0, 1, 0)).norm(), 0.0, 1e-15);
    EXPECT_EQ(e.x[i].z(), 0.0);
  }
  for (double g : e.gamma) EXPECT_EQ(g, 0.0);
}

TEST(Solver2D, MatchesThreeDimensionalEngine) {
  for (int level : {0, 1}) {
    const auto c = SimConfig::at_level(find_scenario("worm2d"), level);
    const auto r2 = run_2d(c);
    const auto r3 = run(c);
    ASSERT_EQ(r2.records.size(), r3.records.size());
    for (std::size_t k = 0; k < r2.records.size(); ++k) {
      EXPECT_LE((r2.records[k].com - r3.records[k].com).norm(), 1e-9);
      EXPECT_NEAR(r2.records[k].f1, r3.records[k].f1, 1e-9);
    }
  }
}

TEST(Solver2D, RejectsNonPlanarScenario) {
  const auto c = SimConfig::at_level(find_scenario("worm3d"), 0);
  EXPECT_THROW(run_2d(c), ConfigError);
}
