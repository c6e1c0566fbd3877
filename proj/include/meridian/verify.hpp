// meridian - black-box numerical oracles over Green's evaluators and charts,
// plus the per-class verification suite behind the CLI verify command
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "meridian/greens.hpp"

namespace meridian {

// Finite-difference Laplace-Beltrami: sigma^-2 (d11 + d22), 5-point stencil.
double fd_laplace_beltrami(const std::function<double(ChartPoint)>& field,
                           const CylindricalChart& chart, const ChartPoint& x, double h);

// Same stencil with a caller-supplied conformal factor (for chartless checks).
double fd_laplace_flat(const std::function<double(ChartPoint)>& field, const ChartPoint& x,
                       double h);

// Circulation of -*dG around a chart circle of radius eps at x0, counterclockwise
// in the chart plane. For closed classes the background -1/|M| flux through the
// disc is added back, so the value estimates the delta coefficient.
double circulation(const GreensEvaluator& ev, const ChartPoint& x0, double eps, int n_samples);

// Circulation of -*dG over the loop x1 = level, one full x2 period, oriented
// counterclockwise in the z-plane. Inner ends (large x1) measured clockwise by
// callers negate this value.
double end_circulation(const GreensEvaluator& ev, double level, const ChartPoint& x0,
                       int n_samples);

double symmetry_residual(const GreensEvaluator& ev,
                         const std::vector<std::pair<ChartPoint, ChartPoint>>& pairs);

struct EndBehavior {
  double fitted_limit = 0.0;
  double deviation = 0.0;   // last Cauchy increment (parabolic) or oscillation (hyperbolic)
  bool cauchy_ok = false;
};

enum class EndKind { Parabolic, Hyperbolic };

// Behavior of G(., x0) approaching an end along a ray: parabolic ends compare
// G - (gamma/2pi) log|z|; hyperbolic ends sample the boundary circle.
EndBehavior end_behavior(const GreensEvaluator& ev, EndKind kind, double gamma,
                         const ChartPoint& x0, int n_samples);

struct CheckResult {
  std::string id;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string to_text() const;  // flat key = value document
};

// Class-appropriate oracle battery over an assembled evaluator.
VerificationReport run_suite(const GreensEvaluator& ev, std::uint64_t seed = 20240801);

}  // namespace meridian
