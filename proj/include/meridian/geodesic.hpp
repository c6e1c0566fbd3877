// meridian - geodesics of radially symmetric conformal metrics and the
// horizontal-geodesic extraction feeding chart construction
#pragma once

#include <vector>

#include "meridian/surface.hpp"

namespace meridian {

struct GeodesicState {
  double x1 = 0.0, x2 = 0.0;  // position in the flat model, identified with R^2
  double v1 = 0.0, v2 = 0.0;
};

struct GeodesicDeriv {
  double dx1, dx2, dv1, dv2;
};

enum class Termination { RangeExhausted, SingularPoint, ClosedLoop, DomainEdge };

struct GeodesicTrajectory {
  std::vector<double> s;
  std::vector<GeodesicState> states;
  double h = 0.0;
  Termination reason = Termination::RangeExhausted;
};

// Right-hand side of the geodesic system for the metric sigma(|x|)^2 |dx|^2.
// Connection terms are computed radially; on {x2 = 0} this is the reduced
// two-equation system, off the axis the mirrored d/dx2 terms enter as well.
GeodesicDeriv geodesic_rhs(const RadialConformalFactor& sigma, const GeodesicState& state);

// Classical fixed-step RK4. Stops early at singular points of the Killing
// field (orbit radius below threshold) or at the edge of sigma's radial range.
// Throws StepTooLarge when the per-step metric-energy drift exceeds 1e-6.
GeodesicTrajectory integrate_geodesic(const RadialConformalFactor& sigma,
                                      const GeodesicState& state0, double s_max, double h);

// Horizontal geodesic based at radius o on the positive real axis, normalized
// to metric unit speed, with f(s) = (2pi/tau) sigma(r(s)) r(s). Since |dr/ds| =
// 1/sigma never vanishes, the trace is computed by radial quadrature rather
// than by time stepping; integrate_geodesic reproduces it (tested).
WarpedProfile horizontal_geodesic(const RadialConformalFactor& sigma, double o, int direction,
                                  double tau = num::two_pi, double s_span = 50.0);

// Meridian of a surface of revolution: a = r, f = R1, no integration.
WarpedProfile meridian_of_revolution(const Generatrix& g);

// CSV rows (s, x1, x2, v1, v2).
std::string trajectory_csv(const GeodesicTrajectory& t);

inline constexpr double singular_orbit_threshold = 1e-9;

}  // namespace meridian
