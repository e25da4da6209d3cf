#pragma once

#include <string>
#include <vector>

#include "rodsim/materials.hpp"

namespace rodsim {

enum class Wave { Constant, Sin, Cos };

/// One term of a preferred-shape field:
///   poly(u) * wave(k_u u + k_t t + phase) * chi_[support_lo, support_hi](u)
/// The indicator is closed on both ends, so a vertex exactly at the jump
/// counts as inside.
struct FieldTerm {
  std::vector<double> poly{1.0};  // coefficients of 1, u, u^2, ...
  Wave wave = Wave::Constant;
  double k_u = 0.0;
  double k_t = 0.0;
  double phase = 0.0;
  double support_lo = 0.0;
  double support_hi = 1.0;

  double operator()(double u, double t) const;
};

/// Sum of terms; an empty field is identically zero.
struct PreferredField {
  std::vector<FieldTerm> terms;

  double operator()(double u, double t) const;
  bool is_zero() const { return terms.empty(); }
  bool is_time_dependent() const;
};

struct PreferredShape {
  double alpha0;
  double beta0;
  double gamma0;
};

struct Scenario {
  std::string name;
  PreferredField alpha0;
  PreferredField beta0;
  PreferredField gamma0;
  MaterialParams material;
  DragModel drag;
  double horizon = 25.0;
  double spin_up = 0.0;
  bool planar = false;  // forcing keeps the rod in the x-y plane
};

PreferredShape preferred_shape(const Scenario& s, double u, double t);

/// The relaxation test and the two undulatory locomotion scenarios.
std::vector<Scenario> builtin_scenarios(double taper_eps = 0.05);

/// Throws ConfigError for unknown names.
Scenario find_scenario(const std::string& name, double taper_eps = 0.05);

}  // namespace rodsim
