#include "rodsim/geometry.hpp"

#include <cmath>
#include <string>

namespace rodsim {

Mesh::Mesh(std::vector<double> vertices) : u_(std::move(vertices)) {
  if (u_.size() < 3) {
    throw InvalidMeshError("mesh needs at least 3 vertices, got " +
                           std::to_string(u_.size()));
  }
  if (u_.front() != 0.0 || u_.back() != 1.0) {
    throw InvalidMeshError("mesh must start at u = 0 and end at u = 1");
  }
  h_.resize(u_.size() - 1);
  for (std::size_t e = 0; e < h_.size(); ++e) {
    h_[e] = u_[e + 1] - u_[e];
    if (!(h_[e] > 0.0)) {
      throw InvalidMeshError("mesh vertices must increase strictly (element " +
                             std::to_string(e) + ")");
    }
  }
}

Mesh uniform_mesh(int n_vertices) {
  if (n_vertices < 3) {
    throw InvalidMeshError("uniform_mesh: n_vertices must be >= 3, got " +
                           std::to_string(n_vertices));
  }
  std::vector<double> u(static_cast<std::size_t>(n_vertices));
  const double n_el = static_cast<double>(n_vertices - 1);
  for (int i = 0; i < n_vertices; ++i) u[i] = static_cast<double>(i) / n_el;
  u.back() = 1.0;
  return Mesh(std::move(u));
}

ElementTangents element_tangents(std::span<const Vec3> x, const Mesh& mesh) {
  if (x.size() != mesh.n_vertices()) {
    throw DegenerateGeometryError("element_tangents: position field has " +
                                  std::to_string(x.size()) + " values for " +
                                  std::to_string(mesh.n_vertices()) +
                                  " vertices");
  }
  ElementTangents out;
  const std::size_t ne = mesh.n_elements();
  out.tau.resize(ne);
  out.s.resize(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    const Vec3 xu = (x[e + 1] - x[e]) / mesh.h(e);
    const double len = xu.norm();
    if (!(len > 0.0) || !std::isfinite(len)) {
      throw DegenerateGeometryError("zero-length or non-finite element " +
                                    std::to_string(e));
    }
    out.tau[e] = xu / len;
    out.s[e] = len;
  }
  return out;
}

P1Vec3Field averaged_tangent(std::span<const Vec3> tau) {
  if (tau.empty()) throw DegenerateGeometryError("averaged_tangent: no elements");
  const std::size_t ne = tau.size();
  P1Vec3Field out(ne + 1);
  out.front() = tau.front();
  out.back() = tau.back();
  for (std::size_t i = 1; i < ne; ++i) {
    const Vec3 sum = tau[i - 1] + tau[i];
    const double len = sum.norm();
    // Antipodal neighbours leave the vertex tangent undefined.
    if (!(len > 1e-12)) {
      throw DegenerateGeometryError("antipodal element tangents at vertex " +
                                    std::to_string(i));
    }
    out[i] = sum / len;
  }
  return out;
}

P1Field lumped_weight(const Mesh& mesh, std::span<const double> s) {
  P1Field w(mesh.n_vertices(), 0.0);
  for (std::size_t e = 0; e < mesh.n_elements(); ++e) {
    const double half = 0.5 * mesh.h(e) * s[e];
    w[e] += half;
    w[e + 1] += half;
  }
  return w;
}

double lumped_inner(std::span<const double> w, std::span<const double> f,
                    std::span<const double> g) {
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * f[i] * g[i];
  return acc;
}

double lumped_inner(std::span<const double> w, std::span<const Vec3> f,
                    std::span<const Vec3> g) {
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * f[i].dot(g[i]);
  return acc;
}

P1Vec3Field vertex_curvature(std::span<const Vec3> x, const Mesh& mesh,
                             const std::pair<Vec3, Vec3>& boundary) {
  const ElementTangents t = element_tangents(x, mesh);
  const std::size_t n = mesh.n_vertices();
  P1Vec3Field kappa(n);
  kappa.front() = boundary.first;
  kappa.back() = boundary.second;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double w = 0.5 * (mesh.h(i - 1) * t.s[i - 1] + mesh.h(i) * t.s[i]);
    kappa[i] = (t.tau[i] - t.tau[i - 1]) / w;
  }
  return kappa;
}

P0Field element_twist(std::span<const Vec3> e1, std::span<const Vec3> e2,
                      std::span<const Vec3> x, const Mesh& mesh) {
  const std::size_t n = mesh.n_vertices();
  if (e1.size() != n || e2.size() != n) {
    throw DegenerateGeometryError("element_twist: frame field size mismatch");
  }
  const ElementTangents t = element_tangents(x, mesh);
  P0Field gamma(mesh.n_elements());
  for (std::size_t e = 0; e < mesh.n_elements(); ++e) {
    // e1_u is constant on the element and e2 is affine, so the element
    // integral is exact with the midpoint value of e2.
    const Vec3 de1 = e1[e + 1] - e1[e];
    const Vec3 e2_mid = 0.5 * (e2[e] + e2[e + 1]);
    gamma[e] = de1.dot(e2_mid) / (mesh.h(e) * t.s[e]);
  }
  return gamma;
}

}  // namespace rodsim
