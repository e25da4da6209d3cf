#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace rodsim {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Continuous piecewise-affine field: one value per mesh vertex.
using P1Field = std::vector<double>;
using P1Vec3Field = std::vector<Vec3>;
using P1Vec2Field = std::vector<Vec2>;

/// Piecewise-constant field: one value per element.
using P0Field = std::vector<double>;
using P0Vec3Field = std::vector<Vec3>;
using P0Vec2Field = std::vector<Vec2>;

// Error hierarchy. Every failure raised by the library derives from RodError.
struct RodError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidMeshError : RodError {
  using RodError::RodError;
};
struct DegenerateGeometryError : RodError {
  using RodError::RodError;
};
struct InvalidParameterError : RodError {
  using RodError::RodError;
};
struct ConfigError : RodError {
  using RodError::RodError;
};
struct AssemblyError : RodError {
  using RodError::RodError;
};
struct SingularMatrixError : RodError {
  using RodError::RodError;
};
struct SolverError : RodError {
  using RodError::RodError;
};
struct FrameTransportError : RodError {
  using RodError::RodError;
};

}  // namespace rodsim
