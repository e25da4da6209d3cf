#pragma once

// Blocks shared by the 3-D and planar step systems: drag, tension and
// bending-moment terms of the momentum equation, the bending constitutive
// law without the frame-rotation term, the discrete curvature identity and
// the length constraint. Templated on the ambient dimension so that both
// schemes evaluate the in-plane equations with the same arithmetic.

#include <concepts>

#include <Eigen/Core>

#include "rodsim/geometry.hpp"
#include "rodsim/sparse.hpp"

namespace rodsim::detail {

template <int D>
struct SharedBlockInputs {
  using Vec = Eigen::Matrix<double, D, 1>;
  using Mat = Eigen::Matrix<double, D, D>;

  const Mesh* mesh = nullptr;
  double dt = 0.0;
  std::vector<Vec> x_prev;
  std::vector<Vec> kappa_prev;  // all vertices
  std::vector<Vec> tau;         // per element, level n-1
  std::vector<double> s;        // per element, level n-1
  std::vector<double> s0;       // per element, reference
  std::vector<Vec> tau_tilde;   // per vertex, level n-1
  std::vector<double> w;        // lumped weights from s
  std::vector<Mat> drag;        // per element
  std::vector<double> A, B;     // per vertex
  std::vector<Vec> kappa_pref;  // alpha0 e1 + beta0 e2 per vertex
};

// Index maps supplied by each layout.
template <class L>
concept SharedLayout = requires(const L& l, std::size_t i, int c) {
  { l.x(i, c) } -> std::convertible_to<std::size_t>;
  { l.y(i, c) } -> std::convertible_to<std::size_t>;
  { l.kappa(i, c) } -> std::convertible_to<std::size_t>;
  { l.p(i) } -> std::convertible_to<std::size_t>;
  { l.interior(i) } -> std::convertible_to<bool>;
};

template <int D, SharedLayout L>
void assemble_shared_blocks(const SharedBlockInputs<D>& in, const L& layout,
                            TripletList& A, std::vector<double>& b) {
  using Vec = typename SharedBlockInputs<D>::Vec;
  using Mat = typename SharedBlockInputs<D>::Mat;
  const Mesh& mesh = *in.mesh;
  const std::size_t n = mesh.n_vertices();
  const std::size_t ne = mesh.n_elements();
  const double dt = in.dt;

  // Momentum: lumped drag with elementwise drag tensor.
  for (std::size_t i = 0; i < n; ++i) {
    Mat M = Mat::Zero();
    if (i > 0) M += (0.5 * mesh.h(i - 1) * in.s[i - 1] / dt) * in.drag[i - 1];
    if (i + 1 < n) M += (0.5 * mesh.h(i) * in.s[i] / dt) * in.drag[i];
    const Vec rhs = M * in.x_prev[i];
    for (int c = 0; c < D; ++c) {
      for (int d = 0; d < D; ++d) A.add(layout.x(i, c), layout.x(i, d), M(c, d));
      b[layout.x(i, c)] += rhs[c];
    }
  }

  // Momentum: tension p tau and projected bending moment derivative; the
  // sign is +1 at the left end of an element and -1 at the right end.
  for (std::size_t e = 0; e < ne; ++e) {
    const Vec& t = in.tau[e];
    const Mat P = Mat::Identity() - t * t.transpose();
    const double inv_hs = 1.0 / (mesh.h(e) * in.s[e]);
    for (int side = 0; side < 2; ++side) {
      const std::size_t i = e + side;
      const double sign = side == 0 ? 1.0 : -1.0;
      for (int c = 0; c < D; ++c) {
        const std::size_t row = layout.x(i, c);
        A.add(row, layout.p(e), sign * t[c]);
        for (int d = 0; d < D; ++d) {
          const double coef = sign * P(c, d) * inv_hs;
          if (coef == 0.0) continue;
          if (layout.interior(e + 1)) A.add(row, layout.y(e + 1, d), coef);
          if (layout.interior(e)) A.add(row, layout.y(e, d), -coef);
        }
      }
    }
  }

  // Bending constitutive law and curvature identity at interior vertices.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double w = in.w[i];
    const Vec& tt = in.tau_tilde[i];
    const Mat Pt = Mat::Identity() - tt * tt.transpose();
    const Mat K = w * (-in.A[i] * Mat::Identity() - (in.B[i] / dt) * Pt);
    const Vec rhs = w * (-in.A[i] * in.kappa_pref[i] - (in.B[i] / dt) * (Pt * in.kappa_prev[i]));
    for (int c = 0; c < D; ++c) {
      const std::size_t row = layout.y(i, c);
      A.add(row, layout.y(i, c), w);
      for (int d = 0; d < D; ++d) {
        if (K(c, d) != 0.0) A.add(row, layout.kappa(i, d), K(c, d));
      }
      b[row] += rhs[c];
    }

    const double left = 1.0 / (mesh.h(i - 1) * in.s[i - 1]);
    const double right = 1.0 / (mesh.h(i) * in.s[i]);
    for (int c = 0; c < D; ++c) {
      const std::size_t row = layout.kappa(i, c);
      A.add(row, layout.kappa(i, c), w);
      A.add(row, layout.x(i - 1, c), -left);
      A.add(row, layout.x(i, c), left + right);
      A.add(row, layout.x(i + 1, c), -right);
    }
  }

  // Length constraint integrated forward in time: tau^{n-1} . x^n_u = s0.
  for (std::size_t e = 0; e < ne; ++e) {
    const std::size_t row = layout.p(e);
    for (int c = 0; c < D; ++c) {
      A.add(row, layout.x(e + 1, c), in.tau[e][c]);
      A.add(row, layout.x(e, c), -in.tau[e][c]);
    }
    b[row] += mesh.h(e) * in.s0[e];
  }
}

}  // namespace rodsim::detail
