#pragma once

#include <array>
#include <ostream>

#include "rodsim/assembly3d.hpp"

namespace rodsim {

struct DiagnosticsRecord {
  long step = 0;
  double t = 0.0;
  double energy = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double f2_increment = 0.0;
  double total_length = 0.0;
  Vec3 com = Vec3::Zero();
  double s_min = 0.0;
  double s_max = 0.0;
};

/// Elastic energy: lumped A|kappa - alpha0 e1 - beta0 e2|^2 at vertices plus
/// elementwise C(gamma - gamma0)^2, both weighted by the current |x_u|.
double elastic_energy(const RodState3D& state, const Mesh& mesh,
                      const MaterialParams& mat, const Scenario& scn, double t_fields);

double total_length(const RodState3D& state, const Mesh& mesh);

/// |sum_e h_e s_e - L|.
double length_error(const RodState3D& state, const Mesh& mesh, double L);

/// eoc_l = log(err_l / err_{l-1}) / log(dt_l / dt_{l-1}) for l >= 1.
std::vector<double> eoc(std::span<const double> errors, std::span<const double> dts);

struct CurvatureComponents {
  P1Field alpha;
  P1Field beta;
};

CurvatureComponents curvature_components(const RodState3D& state);

/// Arc-length weighted average of element midpoints.
Vec3 center_of_mass(const RodState3D& state, const Mesh& mesh);

/// All per-step functionals. `prev_f2` is the frame error of the previous
/// record (for the increment column); pass a negative value at t = 0.
DiagnosticsRecord make_record(const RodState3D& state, const Mesh& mesh,
                              const MaterialParams& mat, const Scenario& scn,
                              double t_fields, double L, double prev_f2);

/// Kymograph samples of one time level.
struct KymographSlice {
  double t = 0.0;
  std::vector<double> u;
  P1Field alpha, beta;
  std::vector<double> u_mid;
  P0Field gamma;
};

KymographSlice kymograph_slice(const RodState3D& state, const Mesh& mesh);

}  // namespace rodsim
