#include "rodsim/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rodsim {

Vec3 rotate_vertex(const Vec3& e, const FrameRotation& r) {
  // Minimal rotation carrying the old tangent onto the new one.
  const Vec3 et = e * r.c + r.k.cross(e) + (e.dot(r.k) / (1.0 + r.c)) * r.k;
  // Spin about the new tangent.
  const double cp = std::cos(r.phi);
  const double sp = std::sin(r.phi);
  return et * cp + r.l.cross(et) * sp + (et.dot(r.l) * (1.0 - cp)) * r.l;
}

Frame transport_frame(const Frame& prev, std::span<const Vec3> tau_tilde_prev,
                      std::span<const Vec3> tau_tilde_new, std::span<const double> m,
                      double dt, double antipodal_tol) {
  const std::size_t n = prev.e1.size();
  if (prev.e2.size() != n || tau_tilde_prev.size() != n || tau_tilde_new.size() != n ||
      m.size() != n) {
    throw FrameTransportError("transport_frame: field size mismatch");
  }
  Frame out;
  out.e1.resize(n);
  out.e2.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    FrameRotation r;
    r.c = tau_tilde_prev[i].dot(tau_tilde_new[i]);
    if (!(1.0 + r.c > antipodal_tol)) {
      throw FrameTransportError("antipodal vertex tangents at vertex " + std::to_string(i) +
                                " (1 + c = " + std::to_string(1.0 + r.c) + ")");
    }
    r.k = tau_tilde_prev[i].cross(tau_tilde_new[i]);
    r.l = tau_tilde_new[i];
    r.phi = dt * m[i];
    out.e1[i] = rotate_vertex(prev.e1[i], r);
    out.e2[i] = rotate_vertex(prev.e2[i], r);
  }
  return out;
}

double frame_error(std::span<const Vec3> e1, std::span<const Vec3> e2,
                   std::span<const Vec3> tau_tilde, std::span<const double> w) {
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Vec3* e[3] = {&tau_tilde[i], &e1[i], &e2[i]};
    double local = 0.0;
    for (int a = 0; a < 3; ++a) {
      for (int b = a; b < 3; ++b) {
        const double d = e[a]->dot(*e[b]) - (a == b ? 1.0 : 0.0);
        local += d * d;
      }
    }
    acc += w[i] * local;
  }
  return std::sqrt(acc);
}

double frame_error(const RodState3D& state, const Mesh& mesh) {
  const auto t = element_tangents(state.x, mesh);
  const auto tt = averaged_tangent(t.tau);
  const auto w = lumped_weight(mesh, t.s);
  return frame_error(state.e1, state.e2, tt, w);
}

double max_vertex_frame_defect(std::span<const Vec3> e1, std::span<const Vec3> e2,
                               std::span<const Vec3> tau_tilde) {
  double worst = 0.0;
  for (std::size_t i = 0; i < e1.size(); ++i) {
    const Vec3* e[3] = {&tau_tilde[i], &e1[i], &e2[i]};
    for (int a = 0; a < 3; ++a) {
      for (int b = a; b < 3; ++b) {
        worst = std::max(worst, std::abs(e[a]->dot(*e[b]) - (a == b ? 1.0 : 0.0)));
      }
    }
  }
  return worst;
}

Frame renormalize(const Frame& frame, std::span<const Vec3> tau_tilde) {
  const std::size_t n = frame.e1.size();
  Frame out;
  out.e1.resize(n);
  out.e2.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& t = tau_tilde[i];
    const Vec3 v = frame.e1[i] - frame.e1[i].dot(t) * t;
    const double len = v.norm();
    if (!(len > 1e-12)) {
      throw FrameTransportError("renormalize: e1 parallel to the tangent at vertex " +
                                std::to_string(i));
    }
    out.e1[i] = v / len;
    out.e2[i] = t.cross(out.e1[i]);
  }
  return out;
}

}  // namespace rodsim
