#include "meridian/surface.hpp"

#include <algorithm>
#include <cmath>

namespace meridian {

// ------------------------------------------------------------ class metadata

void SurfaceClassIndex::validate() const {
  if (i < 0 || i > 12) fail(Err::InvalidSpec, "class index must be in 0..12");
  if (!(tau > 0.0)) fail(Err::InvalidSpec, "tau must be positive");
  if (rho_allowed(i)) {
    if (!rho) fail(Err::InvalidSpec, "rho required for class " + std::to_string(i));
    if (!(*rho > 0.0 && *rho < 1.0)) fail(Err::InvalidSpec, "rho must lie in (0,1)");
  } else if (rho) {
    fail(Err::InvalidSpec, "rho not meaningful for class " + std::to_string(i));
  }
  if (gamma_end && !gamma_allowed(i))
    fail(Err::InvalidSpec, "gamma_end not meaningful for class " + std::to_string(i));
  if (varpi) {
    if (i != 3) fail(Err::InvalidSpec, "varpi only meaningful for class 3");
    if (!(*varpi >= 0.0 && *varpi < tau)) fail(Err::InvalidSpec, "varpi must lie in [0,tau)");
  }
}

// --------------------------------------------------------------- generatrices

bool Generatrix::touches_axis_lo() const {
  return R1.value(theta_min) < axis_contact_rtol * speed;
}
bool Generatrix::touches_axis_hi() const {
  return R1.value(theta_max) < axis_contact_rtol * speed;
}

Generatrix sphere_generatrix() {
  Generatrix g;
  g.R1 = num::Func1::closed_form([](double t) { return std::sin(t); },
                                 [](double t) { return std::cos(t); },
                                 [](double t) { return -std::sin(t); }, 0.0, num::pi);
  g.R2 = num::Func1::closed_form([](double t) { return std::cos(t); },
                                 [](double t) { return -std::sin(t); },
                                 [](double t) { return -std::cos(t); }, 0.0, num::pi);
  g.theta_min = 0.0;
  g.theta_max = num::pi;
  g.speed = 1.0;
  return g;
}

Generatrix torus_generatrix(double ring_radius) {
  if (!(ring_radius > 1.0)) fail(Err::NonPositiveRadius, "torus needs ring radius > 1");
  const double R = ring_radius;
  Generatrix g;
  g.R1 = num::Func1::closed_form([R](double t) { return R + std::cos(t); },
                                 [](double t) { return -std::sin(t); },
                                 [](double t) { return -std::cos(t); }, 0.0, num::two_pi);
  g.R2 = num::Func1::closed_form([](double t) { return std::sin(t); },
                                 [](double t) { return std::cos(t); },
                                 [](double t) { return -std::sin(t); }, 0.0, num::two_pi);
  g.theta_min = 0.0;
  g.theta_max = num::two_pi;
  g.speed = 1.0;
  g.closed = true;
  return g;
}

Generatrix cylinder_generatrix(double half_length) {
  Generatrix g;
  g.R1 = num::Func1::closed_form([](double) { return 1.0; }, [](double) { return 0.0; },
                                 [](double) { return 0.0; }, -half_length, half_length);
  g.R2 = num::Func1::closed_form([](double t) { return t; }, [](double) { return 1.0; },
                                 [](double) { return 0.0; }, -half_length, half_length);
  g.theta_min = -half_length;
  g.theta_max = half_length;
  g.speed = 1.0;
  return g;
}

Generatrix catenoid_generatrix(double half_length) {
  // (cosh t, t) has speed cosh t; normalization brings it to constant speed
  Generatrix g;
  g.R1 = num::Func1::closed_form([](double t) { return std::cosh(t); },
                                 [](double t) { return std::sinh(t); },
                                 [](double t) { return std::cosh(t); }, -half_length, half_length);
  g.R2 = num::Func1::closed_form([](double t) { return t; }, [](double) { return 1.0; },
                                 [](double) { return 0.0; }, -half_length, half_length);
  g.theta_min = -half_length;
  g.theta_max = half_length;
  g.speed = 1.0;  // placeholder; callers should normalize
  return g;
}

Generatrix cone_generatrix(double slope_angle, double length) {
  const double sa = std::sin(slope_angle), ca = std::cos(slope_angle);
  Generatrix g;
  g.R1 = num::Func1::closed_form([sa](double t) { return sa * t; },
                                 [sa](double) { return sa; }, [](double) { return 0.0; }, 0.0,
                                 length);
  g.R2 = num::Func1::closed_form([ca](double t) { return ca * t; },
                                 [ca](double) { return ca; }, [](double) { return 0.0; }, 0.0,
                                 length);
  g.theta_min = 0.0;
  g.theta_max = length;
  g.speed = 1.0;
  return g;
}

Generatrix generatrix_from_samples(std::vector<std::array<double, 3>> triples) {
  if (triples.size() < 3) fail(Err::InvalidSpec, "generatrix needs >= 3 samples");
  std::sort(triples.begin(), triples.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  std::vector<double> th, r1, r2;
  th.reserve(triples.size());
  for (const auto& t : triples) {
    th.push_back(t[0]);
    r1.push_back(t[1]);
    r2.push_back(t[2]);
  }
  // closed-curve detection: endpoints coincide and tangents align
  bool closed = false;
  {
    const double d1 = std::abs(r1.front() - r1.back());
    const double d2 = std::abs(r2.front() - r2.back());
    if (d1 < 1e-9 && d2 < 1e-9) {
      const double tx0 = r1[1] - r1[0], ty0 = r2[1] - r2[0];
      const std::size_t n = r1.size();
      const double tx1 = r1[n - 1] - r1[n - 2], ty1 = r2[n - 1] - r2[n - 2];
      const double n0 = std::hypot(tx0, ty0), n1 = std::hypot(tx1, ty1);
      // secant directions differ by O(step) even on a smooth closed curve;
      // the alignment gate only needs to reject corners and reversals
      if (n0 > 0 && n1 > 0 && (tx0 * tx1 + ty0 * ty1) / (n0 * n1) > 0.9) closed = true;
    }
  }
  Generatrix g;
  g.R1 = num::Func1::from_samples(th, r1, closed);
  g.R2 = num::Func1::from_samples(th, r2, closed);
  g.theta_min = th.front();
  g.theta_max = th.back();
  g.closed = closed;
  g.samples = std::move(triples);
  // provisional speed = mean parametric speed
  double len = 0.0;
  for (std::size_t k = 0; k + 1 < th.size(); ++k)
    len += std::hypot(r1[k + 1] - r1[k], r2[k + 1] - r2[k]);
  g.speed = len / (g.theta_max - g.theta_min);
  return g;
}

Generatrix arc_length_normalize(const Generatrix& g, int n_samples) {
  const double span = g.theta_max - g.theta_min;
  if (!(span > 0.0)) fail(Err::DegenerateCurve, "generatrix parameter span is zero");

  auto point_speed = [&](double t) {
    return std::hypot(g.R1.deriv(t), g.R2.deriv(t));
  };
  // interior positivity check, and constant-speed detection in one sweep
  const int n_probe = std::max(n_samples, 257);
  double smin = 1e300, smax = 0.0;
  for (int k = 0; k <= n_probe; ++k) {
    const double t = g.theta_min + span * k / n_probe;
    if (k > 0 && k < n_probe && g.R1.value(t) <= 0.0)
      fail(Err::NonPositiveRadius, "R1 <= 0 inside the generatrix domain");
    const double sp = point_speed(t);
    smin = std::min(smin, sp);
    smax = std::max(smax, sp);
  }
  const double mean_probe = 0.5 * (smin + smax);
  if (!(mean_probe > 0.0)) fail(Err::DegenerateCurve, "generatrix has zero speed");
  if ((smax - smin) <= 1e-8 * mean_probe) {
    Generatrix out = g;
    out.speed = mean_probe;
    return out;  // already constant speed
  }

  // cumulative length on a fine grid, then resample at equal arc increments
  const double total =
      num::integrate([&](double t) { return point_speed(t); }, g.theta_min, g.theta_max, 1e-12);
  if (!(total > 0.0)) fail(Err::DegenerateCurve, "generatrix has zero length");
  const double r = total / span;  // keep the original parameter interval

  std::vector<std::array<double, 3>> out_samples;
  out_samples.reserve(std::size_t(n_samples));
  double t_cur = g.theta_min;
  double acc = 0.0;
  for (int k = 0; k < n_samples; ++k) {
    const double target = total * double(k) / double(n_samples - 1);
    if (k == 0) {
      out_samples.push_back({g.theta_min, g.R1.value(g.theta_min), g.R2.value(g.theta_min)});
      continue;
    }
    if (k == n_samples - 1) {
      out_samples.push_back({g.theta_max, g.R1.value(g.theta_max), g.R2.value(g.theta_max)});
      continue;
    }
    // advance t until cumulative length reaches target
    auto F = [&](double t) { return acc + num::gauss12(point_speed, t_cur, t) - target; };
    double hi = t_cur;
    double step = span / n_samples;
    while (F(hi) < 0.0 && hi < g.theta_max) hi = std::min(g.theta_max, hi + step);
    const double t_new = num::brent(F, t_cur, hi, 1e-14);
    acc += num::gauss12(point_speed, t_cur, t_new);
    t_cur = t_new;
    const double u = g.theta_min + span * double(k) / double(n_samples - 1);
    out_samples.push_back({u, g.R1.value(t_new), g.R2.value(t_new)});
  }
  Generatrix out = generatrix_from_samples(std::move(out_samples));
  out.closed = g.closed;
  out.speed = r;
  if (g.closed) {  // rebuild with periodic splines when the curve closes
    std::vector<double> th, r1, r2;
    for (const auto& s : out.samples) {
      th.push_back(s[0]);
      r1.push_back(s[1]);
      r2.push_back(s[2]);
    }
    r1.back() = r1.front();
    r2.back() = r2.front();
    out.R1 = num::Func1::from_samples(th, r1, true);
    out.R2 = num::Func1::from_samples(th, r2, true);
  }
  return out;
}

// -------------------------------------------------------------- radial factor

double RadialConformalFactor::value(double r) const {
  if (r < r_min || r > r_max) fail(Err::OutOfDomain, "radius outside the factor's range");
  return sigma.value(r);
}

double RadialConformalFactor::dlog(double r) const {
  if (r < r_min || r > r_max) fail(Err::OutOfDomain, "radius outside the factor's range");
  return sigma.deriv(r) / sigma.value(r);
}

RadialConformalFactor flat_radial_factor(double r_min, double r_max) {
  RadialConformalFactor f;
  f.sigma = num::Func1::closed_form([](double) { return 1.0; }, [](double) { return 0.0; },
                                    [](double) { return 0.0; }, r_min, r_max);
  f.r_min = r_min;
  f.r_max = r_max;
  return f;
}

RadialConformalFactor round_sphere_radial_factor() {
  RadialConformalFactor f;
  f.sigma = num::Func1::closed_form(
      [](double r) { return 2.0 / (1.0 + r * r); },
      [](double r) {
        const double d = 1.0 + r * r;
        return -4.0 * r / (d * d);
      },
      [](double r) {
        const double d = 1.0 + r * r;
        return (12.0 * r * r - 4.0) / (d * d * d);
      },
      0.0, 1e12);
  f.r_min = 0.0;
  f.r_max = 1e12;
  return f;
}

RadialConformalFactor inverse_r_radial_factor() {
  RadialConformalFactor f;
  f.sigma = num::Func1::closed_form([](double r) { return 1.0 / r; },
                                    [](double r) { return -1.0 / (r * r); },
                                    [](double r) { return 2.0 / (r * r * r); }, 1e-300, 1e300);
  f.r_min = 0.0;
  f.r_max = 1e300;
  return f;
}

RadialConformalFactor radial_factor_from_samples(const std::vector<std::array<double, 2>>& pairs) {
  if (pairs.size() < 3) fail(Err::InvalidSpec, "radial factor needs >= 3 samples");
  std::vector<double> r, s;
  for (const auto& p : pairs) {
    r.push_back(p[0]);
    s.push_back(p[1]);
    if (!(p[1] > 0.0)) fail(Err::InvalidSpec, "sigma samples must be positive");
  }
  RadialConformalFactor f;
  f.sigma = num::Func1::from_samples(r, s);
  f.r_min = r.front();
  f.r_max = r.back();
  return f;
}

// -------------------------------------------------------------- warped profile

WarpedProfile warped_profile_from_samples(const std::vector<std::array<double, 2>>& pairs,
                                          double a) {
  if (!(a > 0.0)) fail(Err::InvalidSpec, "profile speed a must be positive");
  if (pairs.size() < 3) fail(Err::InvalidSpec, "profile needs >= 3 samples");
  std::vector<double> s, f;
  for (const auto& p : pairs) {
    s.push_back(p[0]);
    f.push_back(p[1]);
  }
  WarpedProfile w;
  w.a = a;
  w.f = num::Func1::from_samples(s, f);
  w.s_min = s.front();
  w.s_max = s.back();
  w.singular_lo = f.front() < 1e-9;
  w.singular_hi = f.back() < 1e-9;
  for (std::size_t k = 1; k + 1 < f.size(); ++k)
    if (!(f[k] > 0.0)) fail(Err::NonPositiveProfile, "profile f <= 0 in the interior");
  // base: 0 when usable, else the max of f
  if (s.front() < 0.0 && s.back() > 0.0 && w.f.value(0.0) > 1e-9) {
    w.s_base = 0.0;
  } else {
    std::size_t kmax = 0;
    for (std::size_t k = 0; k < f.size(); ++k)
      if (f[k] > f[kmax]) kmax = k;
    w.s_base = s[kmax];
  }
  return w;
}

// ------------------------------------------------------------------ validate

std::vector<Diagnostic> validate_class(const SurfaceSpec& spec) {
  std::vector<Diagnostic> out;
  const auto& cls = spec.cls;
  auto add = [&](const std::string& check, const std::string& msg) {
    out.push_back({check, msg});
  };

  if (spec.kind == SurfaceSpec::Kind::Revolution) {
    if (std::abs(cls.tau - num::two_pi) > 1e-12)
      add("PeriodMismatch", "surfaces of revolution have tau = 2*pi");
    if (!spec.generatrix) {
      add("MissingPayload", "revolution spec without a generatrix");
      return out;
    }
    const auto& g = *spec.generatrix;
    const int contacts = int(g.touches_axis_lo()) + int(g.touches_axis_hi());
    if (g.closed) {
      if (cls.i != 3) add("TopologyMismatch", "closed generatrix forces class 3");
      if (cls.varpi_or_zero() != 0.0)
        add("ShearMismatch", "meridians of a surface of revolution close, so varpi = 0");
    } else if (contacts == 2) {
      if (cls.i != 0) add("TopologyMismatch", "generatrix meeting the axis at both ends forces class 0");
    } else if (contacts == 1) {
      if (cls.i != 1 && cls.i != 5 && cls.i != 9)
        add("TopologyMismatch", "one axis contact is consistent only with classes 1, 5, 9");
    }
  }

  if (spec.kind == SurfaceSpec::Kind::RadialConformal) {
    if (!spec.sigma) {
      add("MissingPayload", "radial spec without a conformal factor");
      return out;
    }
    const auto& f = *spec.sigma;
    const bool inner_positive = f.r_min > 1e-12;
    const bool outer_finite = f.r_max < 1e11;
    // annulus-shaped radial domain is consistent only with annulus-type classes
    if (inner_positive && outer_finite) {
      if (!(cls.i == 2 || cls.i == 8 || cls.i == 10))
        add("RadialDomainMismatch", "annular radial range fits classes 2, 8, 10");
      else if (cls.rho && std::abs(*cls.rho - f.r_min / f.r_max) > 1e-6)
        add("ModulusMismatch", "declared rho disagrees with the radial range ratio");
    }
    if (!inner_positive && !outer_finite && !(cls.i == 0 || cls.i == 4 || cls.i == 6))
      add("RadialDomainMismatch", "full radial range (0,inf) fits classes 0, 4, 6");
  }

  if (spec.kind == SurfaceSpec::Kind::Warped) {
    if (!spec.profile) {
      add("MissingPayload", "warped spec without a profile");
      return out;
    }
    if (spec.profile->periodic && cls.i != 3)
      add("TopologyMismatch", "periodic warped profile forces class 3");
  }

  return out;
}

}  // namespace meridian
