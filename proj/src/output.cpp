#include "rodsim/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace rodsim {

const char* const kDiagnosticsHeader =
    "step,t,energy,f1,f2,f2_increment,total_length,com_x,com_y,com_z,s_min,s_max";
const char* const kSnapshotHeader =
    "u,x,y,z,e1x,e1y,e1z,e2x,e2y,e2z,kappa_x,kappa_y,kappa_z,m,ymom_x,ymom_y,ymom_z";
const char* const kElementSnapshotHeader = "u_mid,gamma,z_moment,p,s0";

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path);
  if (!f) throw RodError("cannot write '" + path.string() + "'");
  return f;
}

std::vector<std::vector<double>> read_csv(const fs::path& path, const std::string& header) {
  std::ifstream f(path);
  if (!f) throw ConfigError("snapshot: cannot read '" + path.string() + "'");
  std::string line;
  std::getline(f, line);
  if (line != header) throw ConfigError("snapshot: unexpected header in '" + path.string() + "'");
  std::vector<std::vector<double>> rows;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string snapshot_name(long step) { return "snap_" + std::to_string(step) + ".csv"; }
std::string element_snapshot_name(long step) { return "snapel_" + std::to_string(step) + ".csv"; }

void write_diagnostics_csv(const fs::path& path, const std::vector<DiagnosticsRecord>& records) {
  auto f = open_out(path);
  f << kDiagnosticsHeader << '\n';
  for (const auto& r : records) {
    f << r.step << ',' << fmt17(r.t) << ',' << fmt17(r.energy) << ',' << fmt17(r.f1) << ','
      << fmt17(r.f2) << ',' << fmt17(r.f2_increment) << ',' << fmt17(r.total_length) << ','
      << fmt17(r.com.x()) << ',' << fmt17(r.com.y()) << ',' << fmt17(r.com.z()) << ','
      << fmt17(r.s_min) << ',' << fmt17(r.s_max) << '\n';
  }
}

void write_snapshot(const fs::path& dir, const RodState3D& s, const Mesh& mesh) {
  {
    auto f = open_out(dir / snapshot_name(s.step));
    f << kSnapshotHeader << '\n';
    for (std::size_t i = 0; i < mesh.n_vertices(); ++i) {
      f << fmt17(mesh.vertex(i));
      for (const Vec3* v : {&s.x[i], &s.e1[i], &s.e2[i], &s.kappa[i]}) {
        for (int c = 0; c < 3; ++c) f << ',' << fmt17((*v)[c]);
      }
      f << ',' << fmt17(s.m[i]);
      for (int c = 0; c < 3; ++c) f << ',' << fmt17(s.y[i][c]);
      f << '\n';
    }
  }
  auto f = open_out(dir / element_snapshot_name(s.step));
  f << kElementSnapshotHeader << '\n';
  for (std::size_t e = 0; e < mesh.n_elements(); ++e) {
    f << fmt17(mesh.midpoint(e)) << ',' << fmt17(s.gamma[e]) << ',' << fmt17(s.z[e]) << ','
      << fmt17(s.p[e]) << ',' << fmt17(s.s0[e]) << '\n';
  }
}

RodState3D read_snapshot(const fs::path& dir, long step, double dt, const Mesh& mesh) {
  const auto v = read_csv(dir / snapshot_name(step), kSnapshotHeader);
  const auto el = read_csv(dir / element_snapshot_name(step), kElementSnapshotHeader);
  if (v.size() != mesh.n_vertices() || el.size() != mesh.n_elements()) {
    throw ConfigError("snapshot: row count does not match the mesh");
  }
  RodState3D s;
  s.step = step;
  s.t = static_cast<double>(step) * dt;
  const std::size_t n = mesh.n_vertices();
  s.x.resize(n);
  s.e1.resize(n);
  s.e2.resize(n);
  s.kappa.resize(n);
  s.y.resize(n);
  s.m.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = v[i];
    if (r.size() != 17) throw ConfigError("snapshot: expected 17 vertex columns");
    s.x[i] = Vec3(r[1], r[2], r[3]);
    s.e1[i] = Vec3(r[4], r[5], r[6]);
    s.e2[i] = Vec3(r[7], r[8], r[9]);
    s.kappa[i] = Vec3(r[10], r[11], r[12]);
    s.m[i] = r[13];
    s.y[i] = Vec3(r[14], r[15], r[16]);
  }
  for (const auto& r : el) {
    if (r.size() != 5) throw ConfigError("snapshot: expected 5 element columns");
    s.gamma.push_back(r[1]);
    s.z.push_back(r[2]);
    s.p.push_back(r[3]);
    s.s0.push_back(r[4]);
  }
  return s;
}

KymographWriter::KymographWriter(const fs::path& dir)
    : vertex_(open_out(dir / "kymograph_vertex.csv")),
      element_(open_out(dir / "kymograph_element.csv")) {
  vertex_ << "u,t,alpha,beta\n";
  element_ << "u_mid,t,gamma\n";
}

void KymographWriter::add(const KymographSlice& k) {
  for (std::size_t i = 0; i < k.u.size(); ++i) {
    vertex_ << fmt17(k.u[i]) << ',' << fmt17(k.t) << ',' << fmt17(k.alpha[i]) << ','
             << fmt17(k.beta[i]) << '\n';
  }
  for (std::size_t e = 0; e < k.u_mid.size(); ++e) {
    element_ << fmt17(k.u_mid[e]) << ',' << fmt17(k.t) << ',' << fmt17(k.gamma[e]) << '\n';
  }
}

}  // namespace rodsim
