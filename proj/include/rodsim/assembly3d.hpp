#pragma once

#include "rodsim/geometry.hpp"
#include "rodsim/materials.hpp"
#include "rodsim/scenarios.hpp"
#include "rodsim/sparse.hpp"

namespace rodsim {

/// State of the 3-D rod at one time level.
struct RodState3D {
  double t = 0.0;
  long step = 0;
  P1Vec3Field x;
  P1Vec3Field e1, e2;
  P1Vec3Field kappa;  // includes the end values
  P0Field gamma;
  P0Field s0;         // reference length element |x_u| at t = 0
  // Auxiliaries from the last solve.
  P1Vec3Field y;
  P1Field m;
  P0Field z;
  P0Field p;
};

/// Unknown numbering for one semi-implicit step. Unknowns are interleaved
/// along the rod: vertex i carries x (3), y and kappa (3 + 3, interior
/// vertices only) and m (1); element e = [u_e, u_{e+1}] follows vertex e
/// and carries z, gamma and p. Each equation shares the index of the
/// unknown it is paired with.
class DofLayout {
 public:
  explicit DofLayout(std::size_t n_vertices);

  std::size_t n_vertices() const { return n_; }
  std::size_t total() const { return total_; }

  std::size_t x(std::size_t i, int c) const { return vbase_[i] + c; }
  /// Interior vertices only.
  std::size_t y(std::size_t i, int c) const { return vbase_[i] + 3 + c; }
  std::size_t kappa(std::size_t i, int c) const { return vbase_[i] + 6 + c; }
  std::size_t m(std::size_t i) const { return vbase_[i] + (interior(i) ? 9 : 3); }
  std::size_t z(std::size_t e) const { return ebase_[e]; }
  std::size_t gamma(std::size_t e) const { return ebase_[e] + 1; }
  std::size_t p(std::size_t e) const { return ebase_[e] + 2; }
  bool interior(std::size_t i) const { return i > 0 && i + 1 < n_; }

 private:
  std::size_t n_;
  std::size_t total_;
  std::vector<std::size_t> vbase_, ebase_;
};

/// Assembled linear system of one step. The end values of the new curvature
/// are not unknowns; they are carried here for re-attachment after the solve.
struct StepSystem {
  SparseMatrix matrix;
  std::vector<double> rhs;
  DofLayout layout{3};
  std::pair<Vec3, Vec3> kappa_boundary;
};

/// Geometry of the previous time level, frozen for the step.
struct FrozenGeometry {
  P0Vec3Field tau;
  P0Field s;
  P1Vec3Field tau_tilde;
  P1Field w;  // lumped weights with s
};

FrozenGeometry freeze_geometry(const RodState3D& state, const Mesh& mesh);

/// Assembles the coupled system for the step t_{n-1} -> t_n = t_{n-1} + dt.
/// `t_fields` is the time at which the preferred fields are evaluated
/// (t_n for the plain scheme; frozen during spin-up).
StepSystem assemble_step(const RodState3D& state, const Mesh& mesh,
                         const MaterialParams& mat, const DragModel& drag,
                         const Scenario& scn, double t_fields, double dt);

struct StepSolution {
  P1Vec3Field x, y, kappa;
  P1Field m;
  P0Field z, gamma, p;
  double residual = 0.0;
};

struct SolverOptions {
  double residual_tol = 1e-10;
};

/// Factorises and solves; throws SolverError when the relative residual
/// exceeds the tolerance.
StepSolution solve_step(const StepSystem& sys, const SolverOptions& opts = {});

/// Sets up kappa, gamma, s0 from the initial midline and frame; auxiliaries
/// are zero. Checks the frame against the vertex tangent to `frame_tol`.
RodState3D make_initial_state(const P1Vec3Field& x0, const P1Vec3Field& e1,
                              const P1Vec3Field& e2, const Mesh& mesh,
                              double frame_tol = 1e-8);

}  // namespace rodsim
