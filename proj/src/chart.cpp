#include "meridian/chart.hpp"

#include <algorithm>
#include <cmath>

namespace meridian {

namespace {

// Trim a singular profile end inward to where f clears a floor, so the T1
// integrand a/f stays finite on the marching domain.
double trim_singular_end(const WarpedProfile& p, bool lower, double floor_f) {
  const double s_end = lower ? p.s_min : p.s_max;
  const double s_in = p.s_base;
  double a = s_end, b = s_in;
  if (p.f.value(s_in) <= floor_f) fail(Err::NonPositiveProfile, "profile vanishes at the base");
  // find a point above the floor close to the end, then bisect
  double probe = a + (b - a) * 1e-12;
  int k = 0;
  while (p.f.value(probe) <= floor_f && k < 80) {
    probe = a + (b - a) * std::min(1.0, std::pow(2.0, double(k) - 40.0));
    ++k;
  }
  if (p.f.value(probe) <= floor_f) return s_in;  // pathological; collapse to base
  b = probe;
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (p.f.value(m) > floor_f)
      b = m;
    else
      a = m;
    if (std::abs(b - a) < 1e-15 * (1.0 + std::abs(b))) break;
  }
  return b;
}

}  // namespace

num::MonotoneMap build_T1(const WarpedProfile& profile, double tau, const ChartOptions& opt) {
  const double scale = num::two_pi / tau;
  const double c = scale * profile.a;
  auto f = profile.f;
  auto g = [f, c](double s) {
    const double v = f.value(s);
    if (!(v > 0.0)) fail(Err::NonPositiveProfile, "profile f <= 0 at an interior node");
    return c / v;
  };
  double s_lo = profile.s_min, s_hi = profile.s_max;
  if (profile.singular_lo) s_lo = trim_singular_end(profile, true, 1e-12);
  if (profile.singular_hi) s_hi = trim_singular_end(profile, false, 1e-12);

  if (profile.periodic) {
    // cover exactly one period upward from the base
    return num::MonotoneMap::build(g, profile.s_base, profile.s_base,
                                   profile.s_base + profile.period, opt.hx, 0.0, 1e12);
  }
  return num::MonotoneMap::build(g, profile.s_base, s_lo, s_hi, opt.hx, opt.window, opt.window);
}

CylindricalChart CylindricalChart::from_profile(const WarpedProfile& profile,
                                                const SurfaceClassIndex& cls,
                                                const ChartOptions& opt) {
  cls.validate();
  CylindricalChart ch;
  ch.cls = cls;
  ch.profile_ = profile;
  ch.t1_ = build_T1(profile, cls.tau, opt);

  if (profile.periodic) {
    ch.periodic_ = true;
    ch.period_ = ch.t1_.x_hi();
    ch.win_lo_ = 0.0;
    ch.win_hi_ = ch.period_;
    ch.base_offset_ = 0.0;
    return ch;
  }

  ch.win_lo_ = ch.t1_.x_lo();
  ch.win_hi_ = ch.t1_.x_hi();
  ch.open_lo_ = !ch.t1_.hit_domain_lo();
  ch.open_hi_ = !ch.t1_.hit_domain_hi();

  // shift of the paper's lower-end based scaling; infinite when that integral diverges
  if (profile.singular_lo) {
    ch.base_offset_ = std::numeric_limits<double>::infinity();
  } else {
    const double scale = num::two_pi / cls.tau * profile.a;
    auto g = [&](double s) { return scale / profile.f.value(s); };
    ch.base_offset_ = num::integrate(g, profile.s_min, profile.s_base, 1e-10);
  }
  return ch;
}

CylindricalChart CylindricalChart::from_polar(const RadialConformalFactor& sigma,
                                              const SurfaceClassIndex& cls,
                                              const ChartOptions& opt) {
  cls.validate();
  for (double r = std::max(sigma.r_min, 1e-12); r < std::min(sigma.r_max, 1e3); r *= 2.3)
    if (!(sigma.sigma.value(r) > 0.0)) fail(Err::InvalidSpec, "sigma must be positive");

  CylindricalChart ch;
  ch.cls = cls;
  ch.radial_ = sigma;

  const double x_lo_math = sigma.r_max >= 1e11 ? -std::numeric_limits<double>::infinity()
                                               : -std::log(sigma.r_max);
  const double x_hi_math = sigma.r_min <= 1e-12 ? std::numeric_limits<double>::infinity()
                                                : -std::log(sigma.r_min);
  ch.win_lo_ = std::max(-opt.window, x_lo_math);
  ch.win_hi_ = std::min(opt.window, x_hi_math);
  ch.open_lo_ = ch.win_lo_ > x_lo_math;
  ch.open_hi_ = ch.win_hi_ < x_hi_math;
  ch.base_offset_ = 0.0;

  if (cls.i == 3) {
    if (!cls.rho) fail(Err::InvalidSpec, "class 3 polar chart needs the declared rho");
    ch.periodic_ = true;
    ch.period_ = -std::log(*cls.rho);
    ch.win_lo_ = 0.0;
    ch.win_hi_ = ch.period_;
    ch.open_lo_ = ch.open_hi_ = false;
  }
  return ch;
}

double CylindricalChart::reduce(double x1) const {
  if (periodic_) {
    double r = std::fmod(x1, period_);
    if (r < 0.0) r += period_;
    return r;
  }
  if (x1 < win_lo_ - 1e-9 || x1 > win_hi_ + 1e-9)
    fail(Err::OutOfWindow, "x1 outside the chart evaluation window");
  return std::clamp(x1, win_lo_, win_hi_);
}

double CylindricalChart::sigma_raw(double x1) const {
  if (profile_) {
    const double s = t1_.s_of_x(periodic_ ? reduce(x1) : x1);
    return cls.tau / num::two_pi * profile_->f.value(s);
  }
  const double r = std::exp(-x1);
  return radial_->sigma.value(r) * r;
}

double CylindricalChart::sigma(double x1) const { return sigma_raw(reduce(x1)); }

double CylindricalChart::dsigma(double x1) const {
  const double x = reduce(x1);
  const double k = cls.tau / num::two_pi;
  if (profile_) {
    const double s = t1_.s_of_x(x);
    const double f = profile_->f.value(s), f1 = profile_->f.deriv(s);
    // ds/dx = (tau/2pi) f / a
    return k * k * f1 * f / profile_->a;
  }
  const double r = std::exp(-x);
  const double sg = radial_->sigma.value(r), d1 = radial_->sigma.deriv(r);
  return -r * (d1 * r + sg);
}

double CylindricalChart::d2sigma(double x1) const {
  const double x = reduce(x1);
  const double k = cls.tau / num::two_pi;
  if (profile_) {
    const double s = t1_.s_of_x(x);
    const double f = profile_->f.value(s), f1 = profile_->f.deriv(s), f2 = profile_->f.deriv2(s);
    const double a = profile_->a;
    return k * k * k * (f2 * f + f1 * f1) * f / (a * a);
  }
  const double r = std::exp(-x);
  const double sg = radial_->sigma.value(r), d1 = radial_->sigma.deriv(r),
               d2 = radial_->sigma.deriv2(r);
  const double u1 = d1 * r + sg;           // d(sigma r)/dr
  const double u2 = d2 * r + 2.0 * d1;     // d2(sigma r)/dr2
  return r * u1 + r * r * u2;
}

double CylindricalChart::s_of_x1(double x1) const {
  if (!profile_) fail(Err::OutOfDomain, "chart has no profile parametrization");
  return t1_.s_of_x(periodic_ ? reduce(x1) : x1);
}

double CylindricalChart::x1_of_s(double s) const {
  if (!profile_) fail(Err::OutOfDomain, "chart has no profile parametrization");
  return t1_.x_of_s(s);
}

// ----------------------------------------------------------------- flat model

std::complex<double> w_map(const ChartPoint& x) {
  return std::exp(std::complex<double>(-x.x1, -x.x2));
}

ChartPoint w_inv(std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) fail(Err::ZeroArgument, "w_inv at z = 0");
  double x2 = -std::arg(z);
  if (x2 < 0.0) x2 += num::two_pi;
  return {-std::log(std::abs(z)), x2};
}

std::complex<double> strip_to_disc(const ChartPoint& x) {
  const std::complex<double> iw(-x.x2, x.x1);  // i * (x1 + i x2)
  const std::complex<double> e = std::exp(iw);
  const std::complex<double> ie(- e.imag(), e.real());
  return (1.0 + ie) / (1.0 - ie);
}

std::complex<double> chart_to_flat(const SurfaceClassIndex& cls, const ChartPoint& x) {
  return cls.strip_model() ? strip_to_disc(x) : w_map(x);
}

}  // namespace meridian
