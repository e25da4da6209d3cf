#pragma once

#include "rodsim/engine3d.hpp"

namespace rodsim {

/// Planar, twist-free rod. The frame is implied: e1 = nu = rotate(tau~, pi/2),
/// e2 = +z.
struct RodState2D {
  double t = 0.0;
  long step = 0;
  P1Vec2Field x;
  P1Vec2Field kappa;  // includes the end values
  P0Field s0;
  P1Vec2Field y;
  P0Field p;
};

/// Vertex i carries x (2) and, at interior vertices, y and kappa (2 + 2);
/// element e follows vertex e and carries p. Total 7N - 9.
class DofLayout2D {
 public:
  explicit DofLayout2D(std::size_t n_vertices);

  std::size_t n_vertices() const { return n_; }
  std::size_t total() const { return total_; }
  std::size_t x(std::size_t i, int c) const { return vbase_[i] + c; }
  std::size_t y(std::size_t i, int c) const { return vbase_[i] + 2 + c; }
  std::size_t kappa(std::size_t i, int c) const { return vbase_[i] + 4 + c; }
  std::size_t p(std::size_t e) const { return ebase_[e]; }
  bool interior(std::size_t i) const { return i > 0 && i + 1 < n_; }

 private:
  std::size_t n_;
  std::size_t total_;
  std::vector<std::size_t> vbase_, ebase_;
};

struct StepSystem2D {
  SparseMatrix matrix;
  std::vector<double> rhs;
  DofLayout2D layout{3};
  std::pair<Vec2, Vec2> kappa_boundary;
};

/// Rotation by +pi/2 in the plane.
inline Vec2 perp(const Vec2& v) { return {-v.y(), v.x()}; }

StepSystem2D assemble_step_2d(const RodState2D& state, const Mesh& mesh,
                              const MaterialParams& mat, const DragModel& drag,
                              const Scenario& scn, double t_fields, double dt);

struct StepSolution2D {
  P1Vec2Field x, y, kappa;
  P0Field p;
  double residual = 0.0;
};

StepSolution2D solve_step_2d(const StepSystem2D& sys, const SolverOptions& opts = {});

RodState2D straight_initial_state_2d(const Mesh& mesh, double length);

class Stepper2D {
 public:
  Stepper2D(const Mesh& mesh, const SimConfig& cfg);
  RodState2D step(const RodState2D& state, double t_fields) const;

 private:
  const Mesh& mesh_;
  const SimConfig& cfg_;
};

RodState2D spin_up_2d(const SimConfig& cfg, const Mesh& mesh);

/// x -> (x, 0), e1 = (nu, 0), e2 = +z, gamma = 0; other auxiliaries zero.
RodState3D embed_2d_in_3d(const RodState2D& state, const Mesh& mesh);

struct RunResult2D {
  std::vector<DiagnosticsRecord> records;
  RodState2D final_state;
};

using StepObserver2D = std::function<void(const RodState2D&, const DiagnosticsRecord&)>;

/// Planar counterpart of run(); diagnostics are evaluated on the embedded
/// state. The scenario must not prescribe beta0 or gamma0.
RunResult2D run_2d(const SimConfig& cfg, const StepObserver2D& observer = {});

}  // namespace rodsim
