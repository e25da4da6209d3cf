#include "rodsim/materials.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace rodsim {

Profile constant_profile(double value) {
  return [value](double) { return value; };
}

double taper_profile(double u, double eps) {
  if (!(eps > 0.0)) {
    throw InvalidParameterError("taper epsilon must be > 0, got " +
                                std::to_string(eps));
  }
  const double r = (eps + u) * (eps + 1.0 - u);
  const double d = 1.0 + 2.0 * eps;
  return 8.0 * std::pow(r, 1.5) / (d * d * d);
}

Profile taper(double eps) {
  if (!(eps > 0.0)) {
    throw InvalidParameterError("taper epsilon must be > 0, got " +
                                std::to_string(eps));
  }
  return [eps](double u) { return taper_profile(u, eps); };
}

void MaterialParams::validate(std::span<const double> samples) const {
  if (!(K_rot > 0.0)) throw InvalidParameterError("K_rot must be > 0");
  for (double u : samples) {
    if (!(A(u) > 0.0)) throw InvalidParameterError("bending modulus A must be > 0");
    if (!(C(u) > 0.0)) throw InvalidParameterError("twisting modulus C must be > 0");
    if (!(B(u) >= 0.0)) throw InvalidParameterError("bending viscosity B must be >= 0");
    if (!(D(u) >= 0.0)) throw InvalidParameterError("twisting viscosity D must be >= 0");
  }
}

void validate_drag(const DragModel& model) {
  if (const auto* iso = std::get_if<IsotropicDrag>(&model)) {
    if (!iso->K.isApprox(iso->K.transpose(), 1e-14)) {
      throw InvalidParameterError("isotropic drag matrix must be symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Mat3> eig(iso->K);
    if (!(eig.eigenvalues().minCoeff() > 0.0)) {
      throw InvalidParameterError("isotropic drag matrix must be positive definite");
    }
  } else {
    const auto& rft = std::get<ResistiveForceDrag>(model);
    if (!(rft.K > 0.0)) {
      throw InvalidParameterError("resistive force coefficient K must be > 0");
    }
  }
}

Mat3 drag_matrix(const DragModel& model, const Vec3& tau) {
  if (const auto* iso = std::get_if<IsotropicDrag>(&model)) return iso->K;
  const double K = std::get<ResistiveForceDrag>(model).K;
  if (std::abs(tau.norm() - 1.0) > 1e-12) {
    throw InvalidParameterError("resistive force drag needs a unit tangent");
  }
  const Mat3 tt = tau * tau.transpose();
  return tt + K * (Mat3::Identity() - tt);
}

}  // namespace rodsim
