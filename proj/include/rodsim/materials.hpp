#pragma once

#include <functional>
#include <span>
#include <variant>

#include "rodsim/types.hpp"

namespace rodsim {

/// Moduli profile as a function of the material parameter u.
using Profile = std::function<double(double)>;

Profile constant_profile(double value);

/// Stiffness of a tapered body with uniform shell elasticity:
/// 8((eps+u)(eps+1-u))^{3/2} / (1+2 eps)^3. Equals 1 at u = 1/2.
double taper_profile(double u, double eps);
Profile taper(double eps);

/// Bending (A) and twisting (C) stiffness, bending (B) and twisting (D)
/// viscosity, and rotational drag coefficient.
///
/// A and B are sampled at vertices, C and D at element midpoints, matching
/// where each enters the discrete equations.
struct MaterialParams {
  Profile A = constant_profile(1.0);
  Profile B = constant_profile(1.0);
  Profile C = constant_profile(1.0);
  Profile D = constant_profile(1.0);
  double K_rot = 1.0;
  double taper_eps = 0.05;

  /// Spot-checks the positivity assumptions on the given sample points.
  void validate(std::span<const double> samples) const;
};

struct IsotropicDrag {
  Mat3 K = Mat3::Identity();
};

/// Resistive force theory: unit tangential and K normal drag coefficient.
struct ResistiveForceDrag {
  double K = 40.0;
};

using DragModel = std::variant<IsotropicDrag, ResistiveForceDrag>;

void validate_drag(const DragModel& model);

/// Drag tensor for an element with unit tangent tau.
Mat3 drag_matrix(const DragModel& model, const Vec3& tau);

}  // namespace rodsim
