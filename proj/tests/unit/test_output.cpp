#include <gtest/gtest.h>

#include <fstream>

#include "rodsim/output.hpp"

using namespace rodsim;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("rodsim_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::vector<std::string> lines_of(const fs::path& p) {
  std::ifstream f(p);
  std::vector<std::string> out;
  for (std::string l; std::getline(f, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Output, SeventeenDigits) {
  EXPECT_EQ(fmt17(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(fmt17(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Output, DiagnosticsCsv) {
  const auto dir = scratch("diag");
  DiagnosticsRecord r;
  r.step = 3;
  r.t = 0.75;
  r.com = Vec3(1, 2, 3);
  write_diagnostics_csv(dir / "d.csv", {r, r});
  const auto l = lines_of(dir / "d.csv");
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "step,t,energy,f1,f2,f2_increment,total_length,com_x,com_y,com_z,s_min,s_max");
  EXPECT_EQ(l[1].substr(0, 7), "3,0.75,");
}

TEST(Output, SnapshotRoundTripAllowsExactRestart) {
  SimConfig c = SimConfig::at_level(find_scenario("worm3d"), 0);
  const Mesh m = uniform_mesh(c.n_vertices);
  const auto start = spin_up(c, m);
  const auto mid = run_from(c, m, start, 10).final_state;
  const auto dir = scratch("snap");
  write_snapshot(dir, mid, m);
  EXPECT_TRUE(fs::exists(dir / "snap_10.csv"));
  EXPECT_TRUE(fs::exists(dir / "snapel_10.csv"));
  const auto header = lines_of(dir / "snap_10.csv").front();
  EXPECT_EQ(header.rfind("u,x,y,z,e1x,e1y,e1z,e2x,e2y,e2z,kappa_x,kappa_y,kappa_z,m", 0), 0u);
  EXPECT_EQ(lines_of(dir / "snapel_10.csv").front().rfind("u_mid,gamma,z_moment,p", 0), 0u);

  const auto back = read_snapshot(dir, 10, c.dt, m);
  EXPECT_EQ(back.t, mid.t);
  for (std::size_t i = 0; i < m.n_vertices(); ++i) {
    EXPECT_EQ(back.x[i], mid.x[i]);
    EXPECT_EQ(back.e2[i], mid.e2[i]);
    EXPECT_EQ(back.y[i], mid.y[i]);
    EXPECT_EQ(back.m[i], mid.m[i]);
  }
  const auto a = run_from(c, m, mid, 15).final_state;
  const auto b = run_from(c, m, back, 15).final_state;
  for (std::size_t i = 0; i < m.n_vertices(); ++i) EXPECT_EQ(a.x[i], b.x[i]);
}

TEST(Output, SnapshotReaderRejectsWrongMesh) {
  const Mesh m = uniform_mesh(5);
  const auto s = straight_initial_state(m, 1.0);
  const auto dir = scratch("snap_mesh");
  write_snapshot(dir, s, m);
  EXPECT_THROW(read_snapshot(dir, 0, 1.0, uniform_mesh(6)), ConfigError);
  EXPECT_THROW(read_snapshot(dir, 1, 1.0, m), ConfigError);
}

TEST(Output, Kymograph) {
  const auto dir = scratch("kymo");
  const Mesh m = uniform_mesh(4);
  {
    KymographWriter w(dir);
    w.add(kymograph_slice(straight_initial_state(m, 1.0), m));
  }
  EXPECT_EQ(lines_of(dir / "kymograph_vertex.csv").size(), 5u);
  EXPECT_EQ(lines_of(dir / "kymograph_element.csv").size(), 4u);
}
