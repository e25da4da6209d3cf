#include "rodsim/initial_data.hpp"

#include <cmath>
#include <numbers>

namespace rodsim {

InitialData straight_rod(const Mesh& mesh, double L, const Vec3& direction,
                         const Vec3& normal) {
  if (!(L > 0.0)) throw InvalidParameterError("straight_rod: L must be > 0");
  if (std::abs(direction.norm() - 1.0) > 1e-12 ||
      std::abs(normal.norm() - 1.0) > 1e-12) {
    throw InvalidParameterError("straight_rod: direction and normal must be unit");
  }
  if (std::abs(direction.dot(normal)) > 1e-12) {
    throw InvalidParameterError("straight_rod: direction and normal must be orthogonal");
  }
  InitialData d;
  const std::size_t n = mesh.n_vertices();
  d.x0.resize(n);
  d.e1.assign(n, normal);
  d.e2.assign(n, direction.cross(normal));
  for (std::size_t i = 0; i < n; ++i) d.x0[i] = L * mesh.vertex(i) * direction;
  return d;
}

InitialData circle_arc(const Mesh& mesh, double R, double angle) {
  if (!(R > 0.0)) throw InvalidParameterError("circle_arc: R must be > 0");
  if (!(angle > 0.0 && angle < 2.0 * std::numbers::pi)) {
    throw InvalidParameterError("circle_arc: angle must lie in (0, 2 pi)");
  }
  const std::size_t n = mesh.n_vertices();
  InitialData d;
  d.x0.resize(n);
  d.e1.resize(n);
  d.e2.assign(n, Vec3::UnitZ());
  for (std::size_t i = 0; i < n; ++i) {
    const double th = angle * mesh.vertex(i);
    d.x0[i] = Vec3(R * std::sin(th), R * (1.0 - std::cos(th)), 0.0);
  }
  // The frame must be orthonormal against the discrete vertex tangent, so
  // build e1 from it rather than from the analytic normal.
  const auto t = element_tangents(d.x0, mesh);
  const auto tt = averaged_tangent(t.tau);
  for (std::size_t i = 0; i < n; ++i) d.e1[i] = Vec3::UnitZ().cross(tt[i]).normalized();
  return d;
}

}  // namespace rodsim
