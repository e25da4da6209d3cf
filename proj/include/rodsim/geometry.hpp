#pragma once

#include <span>
#include <utility>

#include "rodsim/types.hpp"

namespace rodsim {

/// Partition 0 = u_1 < ... < u_N = 1 of the parameter interval.
class Mesh {
 public:
  /// Throws InvalidMeshError unless the vertices start at 0, end at 1,
  /// increase strictly and number at least three.
  explicit Mesh(std::vector<double> vertices);

  std::size_t n_vertices() const { return u_.size(); }
  std::size_t n_elements() const { return h_.size(); }
  double vertex(std::size_t i) const { return u_[i]; }
  /// Parameter length of element e = [u_e, u_{e+1}].
  double h(std::size_t e) const { return h_[e]; }
  double midpoint(std::size_t e) const { return 0.5 * (u_[e] + u_[e + 1]); }
  const std::vector<double>& vertices() const { return u_; }
  const std::vector<double>& element_lengths() const { return h_; }

 private:
  std::vector<double> u_;
  std::vector<double> h_;
};

Mesh uniform_mesh(int n_vertices);

/// Per-element unit tangents and length elements s_e = |x_u|.
struct ElementTangents {
  P0Vec3Field tau;
  P0Field s;
};

ElementTangents element_tangents(std::span<const Vec3> x, const Mesh& mesh);

/// Vertex tangent: normalised sum of the adjacent element tangents. End
/// vertices copy their single adjacent element.
P1Vec3Field averaged_tangent(std::span<const Vec3> tau);

/// Lumped vertex weights w_i = 1/2 sum_{e ~ i} h_e s_e.
P1Field lumped_weight(const Mesh& mesh, std::span<const double> s);

/// Lumped L2 inner product sum_i w_i f_i g_i.
double lumped_inner(std::span<const double> w, std::span<const double> f,
                    std::span<const double> g);
double lumped_inner(std::span<const double> w, std::span<const Vec3> f,
                    std::span<const Vec3> g);

/// Solution of the lumped curvature identity with hat test functions:
/// kappa_i = (tau_i^+ - tau_i^-) / (1/2 (h_- s_- + h_+ s_+)) at interior
/// vertices, prescribed values at the two ends.
P1Vec3Field vertex_curvature(std::span<const Vec3> x, const Mesh& mesh,
                             const std::pair<Vec3, Vec3>& boundary);

/// Elementwise twist gamma_e = (1/(h_e s_e)) int_e e1_u . e2 du.
P0Field element_twist(std::span<const Vec3> e1, std::span<const Vec3> e2,
                      std::span<const Vec3> x, const Mesh& mesh);

}  // namespace rodsim
