#include "rodsim/scenarios.hpp"

#include <cmath>
#include <numbers>

namespace rodsim {

double FieldTerm::operator()(double u, double t) const {
  if (u < support_lo || u > support_hi) return 0.0;
  double amp = 0.0;
  for (std::size_t k = poly.size(); k-- > 0;) amp = amp * u + poly[k];
  switch (wave) {
    case Wave::Constant:
      return amp;
    case Wave::Sin:
      return amp * std::sin(k_u * u + k_t * t + phase);
    case Wave::Cos:
      return amp * std::cos(k_u * u + k_t * t + phase);
  }
  return amp;
}

double PreferredField::operator()(double u, double t) const {
  double v = 0.0;
  for (const auto& term : terms) v += term(u, t);
  return v;
}

bool PreferredField::is_time_dependent() const {
  for (const auto& term : terms) {
    if (term.wave != Wave::Constant && term.k_t != 0.0) return true;
  }
  return false;
}

PreferredShape preferred_shape(const Scenario& s, double u, double t) {
  return {s.alpha0(u, t), s.beta0(u, t), s.gamma0(u, t)};
}

namespace {

constexpr double pi = std::numbers::pi;

Scenario relaxation() {
  Scenario s;
  s.name = "relaxation";
  s.alpha0.terms = {FieldTerm{{2.0}, Wave::Sin, 1.5 * pi}};
  s.beta0.terms = {FieldTerm{{3.0}, Wave::Cos, 1.5 * pi}};
  s.gamma0.terms = {FieldTerm{{5.0}, Wave::Cos, 2.0 * pi}};
  s.drag = IsotropicDrag{};
  s.horizon = 25.0;
  s.spin_up = 0.0;
  return s;
}

// Travelling bending wave with amplitude rising linearly from 8 at the head
// to 10 at the tail.
FieldTerm worm_wave() {
  FieldTerm w;
  w.poly = {8.0, 2.0};
  w.wave = Wave::Sin;
  w.k_u = 2.0 * pi / 0.65;
  w.k_t = -0.6 * pi;
  return w;
}

Scenario worm_base(double eps) {
  Scenario s;
  s.material.A = taper(eps);
  s.material.C = taper(eps);
  s.material.B = constant_profile(0.0);
  s.material.D = constant_profile(0.0);
  s.material.K_rot = 1.0;
  s.material.taper_eps = eps;
  s.drag = ResistiveForceDrag{40.0};
  s.horizon = 25.0;
  s.spin_up = 5.0;
  s.alpha0.terms = {worm_wave()};
  return s;
}

}  // namespace

std::vector<Scenario> builtin_scenarios(double taper_eps) {
  Scenario w2 = worm_base(taper_eps);
  w2.name = "worm2d";
  w2.planar = true;

  Scenario w3 = worm_base(taper_eps);
  w3.name = "worm3d";
  FieldTerm head;
  head.poly = {6.0};
  head.support_lo = 0.0;
  head.support_hi = 1.0 / 3.0;
  w3.beta0.terms = {head};

  return {relaxation(), w2, w3};
}

Scenario find_scenario(const std::string& name, double taper_eps) {
  for (auto& s : builtin_scenarios(taper_eps)) {
    if (s.name == name) return s;
  }
  throw ConfigError("scenario.name: unknown scenario '" + name + "'");
}

}  // namespace rodsim
