#include "rodsim/assembly3d.hpp"

#include <cmath>
#include <string>

#include "assembly_kernels.hpp"
#include "rodsim/linsolve.hpp"

namespace rodsim {

DofLayout::DofLayout(std::size_t n_vertices) : n_(n_vertices) {
  if (n_ < 3) throw InvalidMeshError("DofLayout needs at least 3 vertices");
  vbase_.resize(n_);
  ebase_.resize(n_ - 1);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    vbase_[i] = k;
    k += interior(i) ? 10 : 4;
    if (i + 1 < n_) {
      ebase_[i] = k;
      k += 3;
    }
  }
  total_ = k;
}

namespace {

Mat3 cross_matrix(const Vec3& a) {
  Mat3 m;
  m << 0.0, -a.z(), a.y(),
       a.z(), 0.0, -a.x(),
       -a.y(), a.x(), 0.0;
  return m;
}

void check_finite(const StepSystem& sys) {
  for (double v : sys.matrix.values()) {
    if (!std::isfinite(v)) throw AssemblyError("non-finite coefficient in step matrix");
  }
  for (double v : sys.rhs) {
    if (!std::isfinite(v)) throw AssemblyError("non-finite entry in step right-hand side");
  }
}

}  // namespace

FrozenGeometry freeze_geometry(const RodState3D& state, const Mesh& mesh) {
  FrozenGeometry g;
  auto t = element_tangents(state.x, mesh);
  g.tau = std::move(t.tau);
  g.s = std::move(t.s);
  g.tau_tilde = averaged_tangent(g.tau);
  g.w = lumped_weight(mesh, g.s);
  return g;
}

StepSystem assemble_step(const RodState3D& state, const Mesh& mesh,
                         const MaterialParams& mat, const DragModel& drag,
                         const Scenario& scn, double t_fields, double dt) {
  if (!(dt > 0.0)) throw AssemblyError("time step must be positive");
  const std::size_t n = mesh.n_vertices();
  const std::size_t ne = mesh.n_elements();
  if (state.x.size() != n || state.kappa.size() != n || state.e1.size() != n ||
      state.e2.size() != n || state.gamma.size() != ne || state.s0.size() != ne) {
    throw AssemblyError("state fields do not match the mesh");
  }
  const FrozenGeometry g = freeze_geometry(state, mesh);

  StepSystem sys;
  sys.layout = DofLayout(n);
  const DofLayout& L = sys.layout;
  TripletList T(L.total());
  sys.rhs.assign(L.total(), 0.0);
  auto& b = sys.rhs;

  detail::SharedBlockInputs<3> in;
  in.mesh = &mesh;
  in.dt = dt;
  in.x_prev = state.x;
  in.kappa_prev = state.kappa;
  in.tau = g.tau;
  in.s = g.s;
  in.s0 = state.s0;
  in.tau_tilde = g.tau_tilde;
  in.w = g.w;
  in.drag.resize(ne);
  for (std::size_t e = 0; e < ne; ++e) in.drag[e] = drag_matrix(drag, g.tau[e]);
  in.A.resize(n);
  in.B.resize(n);
  in.kappa_pref.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = mesh.vertex(i);
    in.A[i] = mat.A(u);
    in.B[i] = mat.B(u);
    const PreferredShape ps = preferred_shape(scn, u, t_fields);
    in.kappa_pref[i] = ps.alpha0 * state.e1[i] + ps.beta0 * state.e2[i];
  }
  sys.kappa_boundary = {in.kappa_pref.front(), in.kappa_pref.back()};

  detail::assemble_shared_blocks<3>(in, L, T, b);

  // Elementwise averages of tau x kappa^{n-1}; kappa is affine per element.
  std::vector<Vec3> tk(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    tk[e] = g.tau[e].cross(0.5 * (state.kappa[e] + state.kappa[e + 1]));
  }

  // Momentum: twisting moment term z tau x kappa against phi_u.
  for (std::size_t e = 0; e < ne; ++e) {
    for (int c = 0; c < 3; ++c) {
      if (tk[e][c] == 0.0) continue;
      T.add(L.x(e, c), L.z(e), tk[e][c]);
      T.add(L.x(e + 1, c), L.z(e), -tk[e][c]);
    }
  }

  // Bending constitutive law: frame rotation term + B m^{n-1} tau~ x kappa^n.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double coef = g.w[i] * in.B[i] * state.m[i];
    if (coef == 0.0) continue;
    const Mat3 X = coef * cross_matrix(g.tau_tilde[i]);
    for (int c = 0; c < 3; ++c) {
      for (int d = 0; d < 3; ++d) {
        if (X(c, d) != 0.0) T.add(L.y(i, c), L.kappa(i, d), X(c, d));
      }
    }
  }

  // Tangential angular velocity: -K_rot m - z_{i-1} + z_i = -y.(tau~ x kappa).
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t row = L.m(i);
    T.add(row, L.m(i), -mat.K_rot * g.w[i]);
    if (i > 0) T.add(row, L.z(i - 1), -1.0);
    if (i + 1 < n) T.add(row, L.z(i), 1.0);
    b[row] -= g.w[i] * state.y[i].dot(g.tau_tilde[i].cross(state.kappa[i]));
  }

  for (std::size_t e = 0; e < ne; ++e) {
    const double u = mesh.midpoint(e);
    const double hs = mesh.h(e) * g.s[e];
    const double C = mat.C(u);
    const double D = mat.D(u);
    const double g0 = scn.gamma0(u, t_fields);

    // Twist constitutive law.
    const std::size_t rz = L.z(e);
    T.add(rz, L.z(e), hs);
    T.add(rz, L.gamma(e), -hs * (C + D / dt));
    b[rz] += hs * (-C * g0 - (D / dt) * state.gamma[e]);

    // Twist transport: gamma_t s - m_u + (tau x kappa) . x_tu = 0.
    const std::size_t rg = L.gamma(e);
    T.add(rg, L.gamma(e), hs / dt);
    T.add(rg, L.m(e + 1), -1.0);
    T.add(rg, L.m(e), 1.0);
    for (int c = 0; c < 3; ++c) {
      if (tk[e][c] == 0.0) continue;
      T.add(rg, L.x(e + 1, c), tk[e][c] / dt);
      T.add(rg, L.x(e, c), -tk[e][c] / dt);
    }
    b[rg] += hs * state.gamma[e] / dt + tk[e].dot(state.x[e + 1] - state.x[e]) / dt;
  }

  sys.matrix = SparseMatrix(T);
  check_finite(sys);
  return sys;
}

StepSolution solve_step(const StepSystem& sys, const SolverOptions& opts) {
  const DofLayout& L = sys.layout;
  const std::size_t n = L.n_vertices();
  const BandedLU lu = factorize(sys.matrix);
  const std::vector<double> sol = solve(lu, sys.rhs);
  StepSolution out;
  out.residual = relative_residual(sys.matrix, sol, sys.rhs);
  if (!(out.residual <= opts.residual_tol)) {
    throw SolverError("step solve residual " + std::to_string(out.residual) +
                      " exceeds tolerance (pivots in [" +
                      std::to_string(lu.min_abs_pivot()) + ", " +
                      std::to_string(lu.max_abs_pivot()) + "])");
  }
  out.x.resize(n);
  out.y.assign(n, Vec3::Zero());
  out.kappa.resize(n);
  out.m.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < 3; ++c) out.x[i][c] = sol[L.x(i, c)];
    if (L.interior(i)) {
      for (int c = 0; c < 3; ++c) {
        out.y[i][c] = sol[L.y(i, c)];
        out.kappa[i][c] = sol[L.kappa(i, c)];
      }
    }
    out.m[i] = sol[L.m(i)];
  }
  out.kappa.front() = sys.kappa_boundary.first;
  out.kappa.back() = sys.kappa_boundary.second;
  out.z.resize(n - 1);
  out.gamma.resize(n - 1);
  out.p.resize(n - 1);
  for (std::size_t e = 0; e + 1 < n; ++e) {
    out.z[e] = sol[L.z(e)];
    out.gamma[e] = sol[L.gamma(e)];
    out.p[e] = sol[L.p(e)];
  }
  return out;
}

RodState3D make_initial_state(const P1Vec3Field& x0, const P1Vec3Field& e1,
                              const P1Vec3Field& e2, const Mesh& mesh,
                              double frame_tol) {
  const std::size_t n = mesh.n_vertices();
  if (x0.size() != n || e1.size() != n || e2.size() != n) {
    throw InvalidParameterError("initial data sizes (" + std::to_string(x0.size()) +
                                ", " + std::to_string(e1.size()) + ", " +
                                std::to_string(e2.size()) + ") do not match " +
                                std::to_string(n) + " vertices");
  }
  const auto t = element_tangents(x0, mesh);
  const auto tt = averaged_tangent(t.tau);
  for (std::size_t i = 0; i < n; ++i) {
    const double defect = std::max({std::abs(e1[i].norm() - 1.0), std::abs(e2[i].norm() - 1.0),
                                    std::abs(e1[i].dot(e2[i])), std::abs(e1[i].dot(tt[i])),
                                    std::abs(e2[i].dot(tt[i]))});
    if (defect > frame_tol) {
      throw InvalidParameterError("initial frame not orthonormal at vertex " +
                                  std::to_string(i) + " (defect " +
                                  std::to_string(defect) + ")");
    }
  }
  RodState3D s;
  s.x = x0;
  s.e1 = e1;
  s.e2 = e2;
  s.kappa = vertex_curvature(x0, mesh, {Vec3::Zero(), Vec3::Zero()});
  s.gamma = element_twist(e1, e2, x0, mesh);
  s.s0 = t.s;
  s.y.assign(n, Vec3::Zero());
  s.m.assign(n, 0.0);
  s.z.assign(n - 1, 0.0);
  s.p.assign(n - 1, 0.0);
  return s;
}

}  // namespace rodsim
