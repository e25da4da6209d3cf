#pragma once

#include "rodsim/geometry.hpp"

namespace rodsim {

struct InitialData {
  P1Vec3Field x0;
  P1Vec3Field e1;
  P1Vec3Field e2;
};

/// Straight rod x0(u) = L u direction with constant frame e1 = normal,
/// e2 = direction x normal.
InitialData straight_rod(const Mesh& mesh, double L, const Vec3& direction,
                         const Vec3& normal);

/// Planar circular arc of radius R subtending `angle`, in the x-y plane.
/// Frame: e1 is the inward normal at the vertex, e2 = +z.
InitialData circle_arc(const Mesh& mesh, double R, double angle);

}  // namespace rodsim
