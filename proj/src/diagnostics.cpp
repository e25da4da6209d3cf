#include "rodsim/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rodsim/frame.hpp"

namespace rodsim {

double elastic_energy(const RodState3D& state, const Mesh& mesh,
                      const MaterialParams& mat, const Scenario& scn, double t_fields) {
  const auto t = element_tangents(state.x, mesh);
  const auto w = lumped_weight(mesh, t.s);
  double bend = 0.0;
  for (std::size_t i = 0; i < mesh.n_vertices(); ++i) {
    const double u = mesh.vertex(i);
    const Vec3 d = state.kappa[i] - scn.alpha0(u, t_fields) * state.e1[i] -
                   scn.beta0(u, t_fields) * state.e2[i];
    bend += w[i] * mat.A(u) * d.squaredNorm();
  }
  double twist = 0.0;
  for (std::size_t e = 0; e < mesh.n_elements(); ++e) {
    const double u = mesh.midpoint(e);
    const double d = state.gamma[e] - scn.gamma0(u, t_fields);
    twist += mesh.h(e) * t.s[e] * mat.C(u) * d * d;
  }
  return bend + twist;
}

double total_length(const RodState3D& state, const Mesh& mesh) {
  double len = 0.0;
  for (std::size_t e = 0; e < mesh.n_elements(); ++e) len += (state.x[e + 1] - state.x[e]).norm();
  return len;
}

double length_error(const RodState3D& state, const Mesh& mesh, double L) {
  return std::abs(total_length(state, mesh) - L);
}

std::vector<double> eoc(std::span<const double> errors, std::span<const double> dts) {
  if (errors.size() != dts.size()) throw InvalidParameterError("eoc: size mismatch");
  std::vector<double> out;
  for (std::size_t l = 1; l < errors.size(); ++l) {
    out.push_back(std::log(errors[l] / errors[l - 1]) / std::log(dts[l] / dts[l - 1]));
  }
  return out;
}

CurvatureComponents curvature_components(const RodState3D& state) {
  CurvatureComponents c;
  const std::size_t n = state.kappa.size();
  c.alpha.resize(n);
  c.beta.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.alpha[i] = state.kappa[i].dot(state.e1[i]);
    c.beta[i] = state.kappa[i].dot(state.e2[i]);
  }
  return c;
}

Vec3 center_of_mass(const RodState3D& state, const Mesh& mesh) {
  Vec3 acc = Vec3::Zero();
  double len = 0.0;
  for (std::size_t e = 0; e < mesh.n_elements(); ++e) {
    const double l = (state.x[e + 1] - state.x[e]).norm();
    acc += l * 0.5 * (state.x[e] + state.x[e + 1]);
    len += l;
  }
  return acc / len;
}

DiagnosticsRecord make_record(const RodState3D& state, const Mesh& mesh,
                              const MaterialParams& mat, const Scenario& scn,
                              double t_fields, double L, double prev_f2) {
  DiagnosticsRecord r;
  r.step = state.step;
  r.t = state.t;
  r.energy = elastic_energy(state, mesh, mat, scn, t_fields);
  r.total_length = total_length(state, mesh);
  r.f1 = std::abs(r.total_length - L);
  r.f2 = frame_error(state, mesh);
  r.f2_increment = prev_f2 < 0.0 ? 0.0 : r.f2 - prev_f2;
  r.com = center_of_mass(state, mesh);
  const auto t = element_tangents(state.x, mesh);
  r.s_min = *std::min_element(t.s.begin(), t.s.end());
  r.s_max = *std::max_element(t.s.begin(), t.s.end());
  return r;
}

KymographSlice kymograph_slice(const RodState3D& state, const Mesh& mesh) {
  KymographSlice k;
  k.t = state.t;
  k.u = mesh.vertices();
  auto c = curvature_components(state);
  k.alpha = std::move(c.alpha);
  k.beta = std::move(c.beta);
  for (std::size_t e = 0; e < mesh.n_elements(); ++e) k.u_mid.push_back(mesh.midpoint(e));
  k.gamma = state.gamma;
  return k;
}

}  // namespace rodsim
