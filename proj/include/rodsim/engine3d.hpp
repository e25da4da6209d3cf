#pragma once

#include <functional>
#include <optional>

#include "rodsim/diagnostics.hpp"
#include "rodsim/frame.hpp"
#include "rodsim/initial_data.hpp"

namespace rodsim {

/// Raised when a time step fails; carries the step index.
struct StepFailure : RodError {
  StepFailure(long step, const std::string& reason)
      : RodError("step " + std::to_string(step) + ": " + reason), step(step) {}
  long step;
};

struct RenormalizePolicy {
  int every = 0;            // renormalise every k steps; 0 disables
  double threshold = 0.0;   // renormalise when the vertex defect exceeds this; 0 disables
};

struct OutputPolicy {
  int snapshot_stride = 0;     // 0: no snapshots
  int diagnostics_stride = 1;
};

struct SimConfig {
  Scenario scenario;
  int n_vertices = 16;
  double dt = 1.0;
  double horizon = 25.0;
  double length = 1.0;
  SolverOptions solver;
  RenormalizePolicy renormalize;
  OutputPolicy output;
  bool freeze_preferred = false;  // evaluate the preferred fields at t = 0 throughout

  void validate() const;
  long n_steps() const;

  /// Refinement level l: dt = 4^{-l}, N = 2^{4+l}.
  static SimConfig at_level(const Scenario& scn, int level);
};

RodState3D init_state(const P1Vec3Field& x0, const P1Vec3Field& e1, const P1Vec3Field& e2,
                      const Mesh& mesh);

/// One semi-implicit step followed by the frame update.
class Stepper3D {
 public:
  Stepper3D(const Mesh& mesh, const SimConfig& cfg);

  /// Advances one step; `t_fields` is the evaluation time of the preferred
  /// fields. Throws StepFailure.
  RodState3D step(const RodState3D& state, double t_fields) const;

  const Mesh& mesh() const { return mesh_; }

 private:
  const Mesh& mesh_;
  const SimConfig& cfg_;
};

/// Straight rod along +x with e1 = +y of the configured length.
RodState3D straight_initial_state(const Mesh& mesh, double length);

/// Sees every step, spin-up included, as (previous state, new state).
using StepHook = std::function<void(const RodState3D&, const RodState3D&)>;

/// Relaxes a straight rod under the preferred fields frozen at t = 0 for the
/// scenario's spin-up duration; the returned state has its clock reset to 0.
/// With no spin-up this is the straight initial state.
RodState3D spin_up(const SimConfig& cfg, const Mesh& mesh, const StepHook& hook = {});

struct RunResult {
  std::vector<DiagnosticsRecord> records;
  std::vector<RodState3D> snapshots;
  RodState3D final_state;
};

/// Called after every step (and once for the initial state).
using StepObserver = std::function<void(const RodState3D&, const DiagnosticsRecord&)>;

/// Spin-up (if any) followed by n_steps() steps.
RunResult run(const SimConfig& cfg, const StepObserver& observer = {},
              const StepHook& hook = {});

/// Continues from an existing state for `steps` steps.
RunResult run_from(const SimConfig& cfg, const Mesh& mesh, const RodState3D& start,
                   long steps, const StepObserver& observer = {},
                   const StepHook& hook = {});

}  // namespace rodsim
