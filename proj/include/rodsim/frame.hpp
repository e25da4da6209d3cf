#pragma once

#include "rodsim/assembly3d.hpp"

namespace rodsim {

struct Frame {
  P1Vec3Field e1;
  P1Vec3Field e2;
};

/// Per-vertex data of the two-stage frame update.
struct FrameRotation {
  Vec3 k;      // tau~^{n-1} x tau~^n
  Vec3 l;      // tau~^n
  double phi;  // dt m^n, radians
  double c;    // tau~^{n-1} . tau~^n
};

constexpr double kAntipodalTol = 1e-8;

/// Moves each vertex frame along with the vertex tangent: a minimal
/// rotation taking tau~^{n-1} to tau~^n, then a spin by dt m^n about
/// tau~^n. Throws FrameTransportError, naming the vertex, when the two
/// tangents are (nearly) antipodal.
Frame transport_frame(const Frame& prev, std::span<const Vec3> tau_tilde_prev,
                      std::span<const Vec3> tau_tilde_new, std::span<const double> m,
                      double dt, double antipodal_tol = kAntipodalTol);

/// Rotation of a single vector with precomputed per-vertex data.
Vec3 rotate_vertex(const Vec3& e, const FrameRotation& r);

/// Orthonormality defect (sum over 0 <= j1 <= j2 <= 2 of
/// |e^j1 . e^j2 - delta|^2, integrated with lumped quadrature)^{1/2},
/// with e^0 the vertex tangent.
double frame_error(const RodState3D& state, const Mesh& mesh);
double frame_error(std::span<const Vec3> e1, std::span<const Vec3> e2,
                   std::span<const Vec3> tau_tilde, std::span<const double> w);

/// Largest per-vertex defect over the six orthonormality conditions.
double max_vertex_frame_defect(std::span<const Vec3> e1, std::span<const Vec3> e2,
                               std::span<const Vec3> tau_tilde);

/// Gram-Schmidt against the vertex tangent: e1 <- normalise(e1 - (e1.t)t),
/// e2 <- t x e1.
Frame renormalize(const Frame& frame, std::span<const Vec3> tau_tilde);

}  // namespace rodsim
