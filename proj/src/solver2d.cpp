#include "rodsim/solver2d.hpp"

#include <cmath>

#include "assembly_kernels.hpp"
#include "rodsim/linsolve.hpp"

namespace rodsim {

DofLayout2D::DofLayout2D(std::size_t n_vertices) : n_(n_vertices) {
  if (n_ < 3) throw InvalidMeshError("DofLayout2D needs at least 3 vertices");
  vbase_.resize(n_);
  ebase_.resize(n_ - 1);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    vbase_[i] = k;
    k += interior(i) ? 6 : 2;
    if (i + 1 < n_) ebase_[i] = k++;
  }
  total_ = k;
}

namespace {

P1Vec3Field lift(const P1Vec2Field& v) {
  P1Vec3Field out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Vec3(v[i].x(), v[i].y(), 0.0);
  return out;
}

Vec2 drop(const Vec3& v) { return {v.x(), v.y()}; }

}  // namespace

StepSystem2D assemble_step_2d(const RodState2D& state, const Mesh& mesh,
                              const MaterialParams& mat, const DragModel& drag,
                              const Scenario& scn, double t_fields, double dt) {
  if (!(dt > 0.0)) throw AssemblyError("time step must be positive");
  const std::size_t n = mesh.n_vertices();
  const std::size_t ne = mesh.n_elements();
  if (state.x.size() != n || state.kappa.size() != n || state.s0.size() != ne) {
    throw AssemblyError("state fields do not match the mesh");
  }
  // Geometry is evaluated on the lifted curve so that both schemes share
  // the same tangent arithmetic.
  const auto t = element_tangents(lift(state.x), mesh);
  const auto tt = averaged_tangent(t.tau);

  StepSystem2D sys;
  sys.layout = DofLayout2D(n);
  TripletList T(sys.layout.total());
  sys.rhs.assign(sys.layout.total(), 0.0);

  detail::SharedBlockInputs<2> in;
  in.mesh = &mesh;
  in.dt = dt;
  in.x_prev = state.x;
  in.kappa_prev = state.kappa;
  in.s = t.s;
  in.s0 = state.s0;
  in.w = lumped_weight(mesh, t.s);
  in.tau.resize(ne);
  in.drag.resize(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    in.tau[e] = drop(t.tau[e]);
    in.drag[e] = drag_matrix(drag, t.tau[e]).topLeftCorner<2, 2>();
  }
  in.tau_tilde.resize(n);
  in.A.resize(n);
  in.B.resize(n);
  in.kappa_pref.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = mesh.vertex(i);
    in.tau_tilde[i] = drop(tt[i]);
    in.A[i] = mat.A(u);
    in.B[i] = mat.B(u);
    in.kappa_pref[i] = scn.alpha0(u, t_fields) * perp(in.tau_tilde[i]);
  }
  sys.kappa_boundary = {in.kappa_pref.front(), in.kappa_pref.back()};

  detail::assemble_shared_blocks<2>(in, sys.layout, T, sys.rhs);
  sys.matrix = SparseMatrix(T);
  for (double v : sys.matrix.values()) {
    if (!std::isfinite(v)) throw AssemblyError("non-finite coefficient in step matrix");
  }
  return sys;
}

StepSolution2D solve_step_2d(const StepSystem2D& sys, const SolverOptions& opts) {
  const auto& L = sys.layout;
  const std::size_t n = L.n_vertices();
  const BandedLU lu = factorize(sys.matrix);
  const auto sol = solve(lu, sys.rhs);
  StepSolution2D out;
  out.residual = relative_residual(sys.matrix, sol, sys.rhs);
  if (!(out.residual <= opts.residual_tol)) {
    throw SolverError("step solve residual " + std::to_string(out.residual) +
                      " exceeds tolerance");
  }
  out.x.resize(n);
  out.y.assign(n, Vec2::Zero());
  out.kappa.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < 2; ++c) out.x[i][c] = sol[L.x(i, c)];
    if (L.interior(i)) {
      for (int c = 0; c < 2; ++c) {
        out.y[i][c] = sol[L.y(i, c)];
        out.kappa[i][c] = sol[L.kappa(i, c)];
      }
    }
  }
  out.kappa.front() = sys.kappa_boundary.first;
  out.kappa.back() = sys.kappa_boundary.second;
  out.p.resize(n - 1);
  for (std::size_t e = 0; e + 1 < n; ++e) out.p[e] = sol[L.p(e)];
  return out;
}

RodState2D straight_initial_state_2d(const Mesh& mesh, double length) {
  const std::size_t n = mesh.n_vertices();
  RodState2D s;
  s.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.x[i] = Vec2(length * mesh.vertex(i), 0.0);
  const auto k3 = vertex_curvature(lift(s.x), mesh, {Vec3::Zero(), Vec3::Zero()});
  s.kappa.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.kappa[i] = drop(k3[i]);
  s.s0 = element_tangents(lift(s.x), mesh).s;
  s.y.assign(n, Vec2::Zero());
  s.p.assign(n - 1, 0.0);
  return s;
}

Stepper2D::Stepper2D(const Mesh& mesh, const SimConfig& cfg) : mesh_(mesh), cfg_(cfg) {}

RodState2D Stepper2D::step(const RodState2D& state, double t_fields) const {
  const long n = state.step + 1;
  try {
    const Scenario& scn = cfg_.scenario;
    const auto sys = assemble_step_2d(state, mesh_, scn.material, scn.drag, scn, t_fields, cfg_.dt);
    auto sol = solve_step_2d(sys, cfg_.solver);
    RodState2D next;
    next.t = state.t + cfg_.dt;
    next.step = n;
    next.x = std::move(sol.x);
    next.kappa = std::move(sol.kappa);
    next.s0 = state.s0;
    next.y = std::move(sol.y);
    next.p = std::move(sol.p);
    return next;
  } catch (const RodError& err) {
    throw StepFailure(n, err.what());
  }
}

RodState2D spin_up_2d(const SimConfig& cfg, const Mesh& mesh) {
  RodState2D state = straight_initial_state_2d(mesh, cfg.length);
  if (!(cfg.scenario.spin_up > 0.0)) return state;
  const Stepper2D stepper(mesh, cfg);
  const long steps = std::lround(cfg.scenario.spin_up / cfg.dt);
  for (long k = 0; k < steps; ++k) state = stepper.step(state, 0.0);
  state.t = 0.0;
  state.step = 0;
  return state;
}

RodState3D embed_2d_in_3d(const RodState2D& state, const Mesh& mesh) {
  const std::size_t n = mesh.n_vertices();
  RodState3D s;
  s.t = state.t;
  s.step = state.step;
  s.x = lift(state.x);
  const auto tt = averaged_tangent(element_tangents(s.x, mesh).tau);
  s.e1.resize(n);
  s.e2.assign(n, Vec3::UnitZ());
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 nu = perp(drop(tt[i]));
    s.e1[i] = Vec3(nu.x(), nu.y(), 0.0);
  }
  s.kappa = lift(state.kappa);
  s.gamma.assign(n - 1, 0.0);
  s.s0 = state.s0;
  s.y = lift(state.y);
  s.m.assign(n, 0.0);
  s.z.assign(n - 1, 0.0);
  s.p = state.p;
  return s;
}

RunResult2D run_2d(const SimConfig& cfg, const StepObserver2D& observer) {
  cfg.validate();
  const Scenario& scn = cfg.scenario;
  if (!scn.beta0.is_zero() || !scn.gamma0.is_zero()) {
    throw ConfigError("scenario.name: the planar solver needs beta0 = gamma0 = 0");
  }
  const Mesh mesh = uniform_mesh(cfg.n_vertices);
  const Stepper2D stepper(mesh, cfg);
  auto fields_time = [&](double t) { return cfg.freeze_preferred ? 0.0 : t; };

  RunResult2D res;
  RodState2D state = spin_up_2d(cfg, mesh);
  DiagnosticsRecord rec = make_record(embed_2d_in_3d(state, mesh), mesh, scn.material, scn,
                                      fields_time(state.t), cfg.length, -1.0);
  res.records.push_back(rec);
  if (observer) observer(state, rec);
  const long steps = cfg.n_steps();
  for (long k = 1; k <= steps; ++k) {
    state = stepper.step(state, fields_time(state.t + cfg.dt));
    rec = make_record(embed_2d_in_3d(state, mesh), mesh, scn.material, scn,
                      fields_time(state.t), cfg.length, rec.f2);
    if (k % cfg.output.diagnostics_stride == 0 || k == steps) res.records.push_back(rec);
    if (observer) observer(state, rec);
  }
  res.final_state = std::move(state);
  return res;
}

}  // namespace rodsim
