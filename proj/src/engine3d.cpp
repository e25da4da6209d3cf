#include "rodsim/engine3d.hpp"

#include <cmath>

namespace rodsim {

void SimConfig::validate() const {
  if (!(dt > 0.0)) throw ConfigError("run.dt: time step must be > 0");
  if (!(horizon >= dt)) throw ConfigError("run.horizon: must be >= run.dt");
  if (n_vertices < 3) throw ConfigError("run.n_vertices: must be >= 3");
  if (!(length > 0.0)) throw ConfigError("run.length: must be > 0");
  if (output.diagnostics_stride < 1) throw ConfigError("output.diagnostics_stride: must be >= 1");
  if (output.snapshot_stride < 0) throw ConfigError("output.snapshot_stride: must be >= 0");
  if (renormalize.every < 0) throw ConfigError("frame.renormalize_every: must be >= 0");
  validate_drag(scenario.drag);
}

long SimConfig::n_steps() const { return std::lround(horizon / dt); }

SimConfig SimConfig::at_level(const Scenario& scn, int level) {
  SimConfig c;
  c.scenario = scn;
  c.dt = std::ldexp(1.0, -2 * level);
  c.n_vertices = 1 << (4 + level);
  c.horizon = scn.horizon;
  return c;
}

RodState3D init_state(const P1Vec3Field& x0, const P1Vec3Field& e1, const P1Vec3Field& e2,
                      const Mesh& mesh) {
  return make_initial_state(x0, e1, e2, mesh);
}

Stepper3D::Stepper3D(const Mesh& mesh, const SimConfig& cfg) : mesh_(mesh), cfg_(cfg) {}

RodState3D Stepper3D::step(const RodState3D& state, double t_fields) const {
  const long n = state.step + 1;
  try {
    const Scenario& scn = cfg_.scenario;
    const StepSystem sys =
        assemble_step(state, mesh_, scn.material, scn.drag, scn, t_fields, cfg_.dt);
    StepSolution sol = solve_step(sys, cfg_.solver);

    const auto tau_old = averaged_tangent(element_tangents(state.x, mesh_).tau);
    const auto tau_new = averaged_tangent(element_tangents(sol.x, mesh_).tau);
    Frame frame = transport_frame({state.e1, state.e2}, tau_old, tau_new, sol.m, cfg_.dt);

    const auto& rp = cfg_.renormalize;
    const bool periodic = rp.every > 0 && n % rp.every == 0;
    const bool triggered =
        rp.threshold > 0.0 && max_vertex_frame_defect(frame.e1, frame.e2, tau_new) > rp.threshold;
    if (periodic || triggered) frame = renormalize(frame, tau_new);

    RodState3D next;
    next.t = state.t + cfg_.dt;
    next.step = n;
    next.x = std::move(sol.x);
    next.e1 = std::move(frame.e1);
    next.e2 = std::move(frame.e2);
    next.kappa = std::move(sol.kappa);
    next.gamma = std::move(sol.gamma);
    next.s0 = state.s0;
    next.y = std::move(sol.y);
    next.m = std::move(sol.m);
    next.z = std::move(sol.z);
    next.p = std::move(sol.p);
    return next;
  } catch (const StepFailure&) {
    throw;
  } catch (const RodError& err) {
    throw StepFailure(n, err.what());
  }
}

RodState3D straight_initial_state(const Mesh& mesh, double length) {
  const auto d = straight_rod(mesh, length, Vec3::UnitX(), Vec3::UnitY());
  return init_state(d.x0, d.e1, d.e2, mesh);
}

RodState3D spin_up(const SimConfig& cfg, const Mesh& mesh, const StepHook& hook) {
  RodState3D state = straight_initial_state(mesh, cfg.length);
  if (!(cfg.scenario.spin_up > 0.0)) return state;
  const Stepper3D stepper(mesh, cfg);
  const long steps = std::lround(cfg.scenario.spin_up / cfg.dt);
  for (long k = 0; k < steps; ++k) {
    RodState3D next = stepper.step(state, 0.0);
    if (hook) hook(state, next);
    state = std::move(next);
  }
  state.t = 0.0;
  state.step = 0;
  return state;
}

RunResult run_from(const SimConfig& cfg, const Mesh& mesh, const RodState3D& start,
                   long steps, const StepObserver& observer, const StepHook& hook) {
  const Scenario& scn = cfg.scenario;
  const Stepper3D stepper(mesh, cfg);
  auto fields_time = [&](double t) { return cfg.freeze_preferred ? 0.0 : t; };

  RunResult res;
  RodState3D state = start;
  DiagnosticsRecord rec =
      make_record(state, mesh, scn.material, scn, fields_time(state.t), cfg.length, -1.0);
  res.records.push_back(rec);
  const int snap = cfg.output.snapshot_stride;
  if (snap > 0) res.snapshots.push_back(state);
  if (observer) observer(state, rec);

  for (long k = 1; k <= steps; ++k) {
    RodState3D next = stepper.step(state, fields_time(state.t + cfg.dt));
    if (hook) hook(state, next);
    state = std::move(next);
    rec = make_record(state, mesh, scn.material, scn, fields_time(state.t), cfg.length, rec.f2);
    if (k % cfg.output.diagnostics_stride == 0 || k == steps) res.records.push_back(rec);
    if (snap > 0 && (k % snap == 0 || k == steps)) res.snapshots.push_back(state);
    if (observer) observer(state, rec);
  }
  res.final_state = std::move(state);
  return res;
}

RunResult run(const SimConfig& cfg, const StepObserver& observer, const StepHook& hook) {
  cfg.validate();
  const Mesh mesh = uniform_mesh(cfg.n_vertices);
  const RodState3D start = spin_up(cfg, mesh, hook);
  return run_from(cfg, mesh, start, cfg.n_steps(), observer, hook);
}

}  // namespace rodsim
