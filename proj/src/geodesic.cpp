#include "meridian/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace meridian {

GeodesicDeriv geodesic_rhs(const RadialConformalFactor& sigma, const GeodesicState& st) {
  const double r = std::hypot(st.x1, st.x2);
  if (r <= sigma.r_min + 1e-14 || r >= sigma.r_max)
    fail(Err::OutOfDomain, "geodesic state outside the radial range");
  const double L = sigma.dlog(r);  // d/dr log sigma
  const double g1 = L * st.x1 / r;
  const double g2 = L * st.x2 / r;
  const double a1 = -(g1 * (st.v1 * st.v1 - st.v2 * st.v2) + 2.0 * g2 * st.v1 * st.v2);
  const double a2 = -(g2 * (st.v2 * st.v2 - st.v1 * st.v1) + 2.0 * g1 * st.v1 * st.v2);
  return {st.v1, st.v2, a1, a2};
}

namespace {

GeodesicState rk4_step(const RadialConformalFactor& sigma, const GeodesicState& y, double h) {
  auto add = [](const GeodesicState& a, const GeodesicDeriv& k, double c) {
    return GeodesicState{a.x1 + c * k.dx1, a.x2 + c * k.dx2, a.v1 + c * k.dv1, a.v2 + c * k.dv2};
  };
  const GeodesicDeriv k1 = geodesic_rhs(sigma, y);
  const GeodesicDeriv k2 = geodesic_rhs(sigma, add(y, k1, 0.5 * h));
  const GeodesicDeriv k3 = geodesic_rhs(sigma, add(y, k2, 0.5 * h));
  const GeodesicDeriv k4 = geodesic_rhs(sigma, add(y, k3, h));
  return GeodesicState{
      y.x1 + h / 6.0 * (k1.dx1 + 2.0 * k2.dx1 + 2.0 * k3.dx1 + k4.dx1),
      y.x2 + h / 6.0 * (k1.dx2 + 2.0 * k2.dx2 + 2.0 * k3.dx2 + k4.dx2),
      y.v1 + h / 6.0 * (k1.dv1 + 2.0 * k2.dv1 + 2.0 * k3.dv1 + k4.dv1),
      y.v2 + h / 6.0 * (k1.dv2 + 2.0 * k2.dv2 + 2.0 * k3.dv2 + k4.dv2)};
}

double metric_energy(const RadialConformalFactor& sigma, const GeodesicState& y) {
  const double r = std::hypot(y.x1, y.x2);
  const double s = sigma.value(std::clamp(r, sigma.r_min, sigma.r_max));
  return s * s * (y.v1 * y.v1 + y.v2 * y.v2);
}

bool inside_range(const RadialConformalFactor& sigma, const GeodesicState& y) {
  const double r = std::hypot(y.x1, y.x2);
  return r > sigma.r_min + 1e-14 && r < sigma.r_max;
}

}  // namespace

GeodesicTrajectory integrate_geodesic(const RadialConformalFactor& sigma,
                                      const GeodesicState& state0, double s_max, double h) {
  if (!(h > 0.0)) fail(Err::InvalidSpec, "step must be positive");
  if (!inside_range(sigma, state0)) fail(Err::OutOfDomain, "initial state outside domain");

  GeodesicTrajectory traj;
  traj.h = h;
  traj.reason = Termination::RangeExhausted;
  traj.s.push_back(0.0);
  traj.states.push_back(state0);

  const double e0 = metric_energy(sigma, state0);
  const long n_steps = std::lround(std::floor(s_max / h + 1e-12));
  GeodesicState y = state0;
  for (long k = 0; k < n_steps; ++k) {
    GeodesicState y_next;
    try {
      y_next = rk4_step(sigma, y, h);
    } catch (const Error& e) {
      if (e.code() == Err::OutOfDomain) {
        traj.reason = Termination::DomainEdge;
        return traj;
      }
      throw;
    }
    if (!std::isfinite(y_next.x1) || !std::isfinite(y_next.x2) || !std::isfinite(y_next.v1) ||
        !std::isfinite(y_next.v2) || !inside_range(sigma, y_next)) {
      traj.reason = Termination::DomainEdge;
      return traj;
    }
    const double e1 = metric_energy(sigma, y_next);
    if (std::abs(e1 - e0) > 1e-6 * e0) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "energy drift %.3e over one step at s=%.6g",
                    std::abs(e1 - e0) / e0, double(k + 1) * h);
      fail(Err::StepTooLarge, buf);
    }
    y = y_next;
    traj.s.push_back(double(k + 1) * h);
    traj.states.push_back(y);

    const double r = std::hypot(y.x1, y.x2);
    if (sigma.value(r) * r < singular_orbit_threshold) {
      traj.reason = Termination::SingularPoint;
      return traj;
    }
    if (k > 2) {
      const GeodesicState& s0 = state0;
      if (std::abs(y.x1 - s0.x1) < 1e-9 && std::abs(y.x2 - s0.x2) < 1e-9 &&
          std::abs(y.v1 - s0.v1) < 1e-9 && std::abs(y.v2 - s0.v2) < 1e-9) {
        traj.reason = Termination::ClosedLoop;
        return traj;
      }
    }
  }
  return traj;
}

WarpedProfile horizontal_geodesic(const RadialConformalFactor& sigma, double o, int direction,
                                  double tau, double s_span) {
  if (!(o > sigma.r_min) || !(o < sigma.r_max))
    fail(Err::OutOfDomain, "base radius outside the factor's range");
  if (sigma.value(o) * o < singular_orbit_threshold)
    fail(Err::BaseAtSingularPoint, "base lies at a singular point of the Killing field");

  // Unit metric speed along the axis: ds = sigma(r) dr. Build s(r) over the
  // reachable radii, then sample f(s) = (2pi/tau) sigma(r(s)) r(s) on a grid
  // uniform in s for the profile spline.
  const double scale = num::two_pi / tau;
  auto g = [&](double r) { return sigma.value(std::clamp(r, sigma.r_min, sigma.r_max)); };

  // orbit radius sigma(r)*r -> 0 marks a singular end; stop a bit before
  auto orbit = [&](double r) { return sigma.value(r) * r; };

  // march s(r) from o outward both ways until s_span or a stopping condition.
  num::MonotoneMap s_of_r = num::MonotoneMap::build(
      g, o, std::max(sigma.r_min, sigma.r_min + 1e-300), sigma.r_max, 1e-2, s_span, s_span);

  // trim ends where the orbit radius has dropped below threshold
  double s_lo = s_of_r.x_lo(), s_hi = s_of_r.x_hi();
  bool sing_lo = false, sing_hi = false;
  {
    const double r_lo = s_of_r.s_of_x(s_lo);
    const double r_hi = s_of_r.s_of_x(s_hi);
    if (orbit(std::max(r_lo, sigma.r_min + 1e-300)) < singular_orbit_threshold) sing_lo = true;
    if (r_hi < sigma.r_max && orbit(r_hi) < singular_orbit_threshold) sing_hi = true;
    if (s_of_r.hit_domain_lo() && orbit(r_lo) < 1e-6) sing_lo = true;
    if (s_of_r.hit_domain_hi() && orbit(r_hi) < 1e-6) sing_hi = true;
  }

  WarpedProfile w;
  w.a = 1.0;
  w.s_base = 0.0;
  w.s_min = s_lo;
  w.s_max = s_hi;
  w.singular_lo = sing_lo;
  w.singular_hi = sing_hi;
  // closed-form through the map: f, f', f'' from sigma and ds/dr = sigma
  auto r_at = [s_of_r](double s) { return s_of_r.s_of_x(s); };
  auto f_val = [r_at, sigma, scale](double s) {
    const double r = r_at(s);
    return scale * sigma.value(r) * r;
  };
  auto f_d1 = [r_at, sigma, scale](double s) {
    // d/ds [sigma(r) r] = (sigma' r + sigma) / sigma
    const double r = r_at(s);
    const double sg = sigma.value(r);
    return scale * (sigma.sigma.deriv(r) * r + sg) / sg;
  };
  auto f_d2 = [r_at, sigma, scale](double s) {
    const double r = r_at(s);
    const double sg = sigma.value(r), d1 = sigma.sigma.deriv(r), d2 = sigma.sigma.deriv2(r);
    // d/ds of (sigma' r + sigma)/sigma with dr/ds = 1/sigma
    const double u = d1 * r + sg;
    const double du = d2 * r + 2.0 * d1;
    return scale * (du * sg - u * d1) / (sg * sg * sg);
  };
  w.f = num::Func1::closed_form(f_val, f_d1, f_d2, s_lo, s_hi);
  if (direction < 0) {
    // reflected parametrization: s -> -s
    w.s_min = -s_hi;
    w.s_max = -s_lo;
    w.singular_lo = sing_hi;
    w.singular_hi = sing_lo;
    w.f = num::Func1::closed_form([f_val](double s) { return f_val(-s); },
                                  [f_d1](double s) { return -f_d1(-s); },
                                  [f_d2](double s) { return f_d2(-s); }, -s_hi, -s_lo);
  }
  return w;
}

WarpedProfile meridian_of_revolution(const Generatrix& g) {
  WarpedProfile w;
  w.a = g.speed;
  w.f = g.R1;
  w.s_min = g.theta_min;
  w.s_max = g.theta_max;
  w.periodic = g.closed;
  w.period = g.closed ? (g.theta_max - g.theta_min) : 0.0;
  w.singular_lo = g.touches_axis_lo();
  w.singular_hi = g.touches_axis_hi();
  if (g.closed) {
    w.s_base = g.theta_min;
  } else if (g.theta_min < 0.0 && g.theta_max > 0.0 && g.R1.value(0.0) > axis_contact_rtol * g.speed) {
    w.s_base = 0.0;
  } else {
    // base at the widest point; coarse scan then golden refinement is overkill,
    // the chart only needs any interior base with f > 0
    const int n = 512;
    double best_s = 0.5 * (g.theta_min + g.theta_max), best_f = -1.0;
    for (int k = 1; k < n; ++k) {
      const double t = g.theta_min + (g.theta_max - g.theta_min) * k / n;
      const double f = g.R1.value(t);
      if (f > best_f) {
        best_f = f;
        best_s = t;
      }
    }
    w.s_base = best_s;
  }
  return w;
}

std::string trajectory_csv(const GeodesicTrajectory& t) {
  std::string out = "s,x1,x2,v1,v2\n";
  char line[160];
  for (std::size_t k = 0; k < t.s.size(); ++k) {
    const auto& y = t.states[k];
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", t.s[k], y.x1, y.x2, y.v1,
                  y.v2);
    out += line;
  }
  return out;
}

}  // namespace meridian
