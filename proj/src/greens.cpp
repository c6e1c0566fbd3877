#include "meridian/greens.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace meridian {

namespace {

using cplx = std::complex<double>;

constexpr double inv_two_pi = 1.0 / num::two_pi;

// reduce z into rho < |z| <= 1 by integer powers of rho
cplx lattice_reduce(cplx z, double rho) {
  const double A = -std::log(rho);
  const double t = std::log(std::abs(z));
  const int k = int(std::ceil(t / A - 1e-15));
  return z * std::pow(rho, k);
}

bool image_term(int i) { return i == 1 || i == 2 || i == 5 || i == 7 || i == 8 || i == 9 ||
                                i == 10 || i == 11 || i == 12; }

// strip abscissa of a disc point, Re S(z) in [0, pi]
double strip_abscissa(cplx z) {
  const cplx zeta = cplx(0.0, 1.0) * (1.0 - z) / (1.0 + z);
  return std::arg(zeta);
}

// the class-dependent regular part subtracted inside the bracket
double rest_term(const SurfaceClassIndex& cls, const PrimeFunction& p, double gamma, cplx z,
                 cplx z0) {
  const int i = cls.i;
  if (i == 0) return 0.5 * (std::log(std::abs(z)) + std::log(std::abs(z0)));
  if (i == 3) return std::log(std::abs(z)) * std::log(std::abs(z0)) / std::log(p.rho);
  if (i == 6) return gamma * (std::log(std::abs(z)) + std::log(std::abs(z0)));
  if (i == 7 || i == 9)
    return log_abs_prime(p, z * std::conj(z0)) +
           gamma * (std::log(std::abs(z)) + std::log(std::abs(z0)));
  if (i == 11 || i == 12)
    return log_abs_prime(p, z * std::conj(z0)) +
           2.0 * gamma * (strip_abscissa(z) + strip_abscissa(z0));
  if (image_term(i)) return log_abs_prime(p, z * std::conj(z0));
  return 0.0;
}

double phi_impl(const SurfaceClassIndex& cls, const PrimeFunction& p, double gamma, cplx z,
                cplx z0) {
  if (std::abs(z - z0) < 1e-14) fail(Err::CoincidentPoints, "phi at coincident points");
  double bracket;
  if (p.rho == 0.0) {
    bracket = std::log(std::abs(z - z0));  // z0 * (1 - z/z0) collapses exactly
  } else {
    bracket = std::log(std::abs(z0)) + log_abs_prime(p, z / z0);
  }
  return -inv_two_pi * (bracket - rest_term(cls, p, gamma, z, z0));
}

double robin_impl(const SurfaceClassIndex& cls, const PrimeFunction& p, double gamma, cplx z,
                  cplx z0) {
  // log|z0 P(z/z0)| = log|z - z0| + log|P/(1-w)|(z/z0), so dropping the root
  // factor is exactly G + (1/2pi) log|z - z0|
  const double bracket_no_root = log_abs_prime_no_root(p, z / z0);
  return -inv_two_pi * (bracket_no_root - rest_term(cls, p, gamma, z, z0));
}

PrimeFunction prime_for_class(const SurfaceClassIndex& cls, double tol, double fallback_rho) {
  if (cls.i == 3) return PrimeFunction::make(cls.rho.value_or(fallback_rho), tol);
  if (SurfaceClassIndex::rho_allowed(cls.i)) {
    // annulus-type reflections are generated by z -> rho^2 z and z -> 1/zbar,
    // so the product parameter is the squared modulus; with it every image
    // zero of P(z zbar0) lands outside rho <= |z| <= 1
    const double r = cls.rho.value_or(fallback_rho);
    return PrimeFunction::make(r * r, tol);
  }
  return PrimeFunction::make(0.0, tol);
}

}  // namespace

double MetricPotential::E(double x1) const {
  if (!periodic) return E_table.value(x1);
  const double k = std::floor(x1 / period);
  const double r = x1 - k * period;
  return E_table.value(r) + k * E_table.value(period);
}

double MetricPotential::V(double x1) const {
  if (!periodic) return V_table.value(x1);
  const double k = std::floor(x1 / period);
  const double r = x1 - k * period;
  const double EA = E_table.value(period), VA = V_table.value(period);
  return V_table.value(r) + k * VA + EA * (period * 0.5 * k * (k - 1.0) + k * r);
}

double phi(const SurfaceClassIndex& cls, cplx z, cplx z0, double prime_tol) {
  const PrimeFunction p = prime_for_class(cls, prime_tol, 0.0);
  if (cls.i == 3) {
    z = lattice_reduce(z, p.rho);
    z0 = lattice_reduce(z0, p.rho);
  }
  return phi_impl(cls, p, cls.gamma_end_or_zero(), z, z0);
}

// ------------------------------------------------------------ metric potential

MetricPotential metric_potential(const CylindricalChart& chart) {
  const int i = chart.cls.i;
  if (i != 0 && i != 3)
    fail(Err::InvalidSpec, "metric potential is defined for the closed classes only");

  const double hx = 0.01;
  const double lo = chart.window_lo(), hi = chart.window_hi();
  const int n_dn = std::max(0, int(std::ceil((0.0 - lo) / hx - 1e-9)));
  const int n_up = std::max(1, int(std::ceil((hi - 0.0) / hx - 1e-9)));
  const double x0 = -double(n_dn) * hx;
  const int n_nodes = n_dn + n_up + 1;

  // periodic charts wrap; open windows clamp (the conformal factor there is
  // already negligible for any class-0 chart wide enough to integrate)
  auto sig2 = [&](double x) {
    const double xc = chart.periodic() ? x : std::clamp(x, lo, hi);
    const double s = chart.sigma(xc);
    return s * s;
  };
  auto dsig2 = [&](double x) {
    const double xc = chart.periodic() ? x : std::clamp(x, lo, hi);
    return 2.0 * chart.sigma(xc) * chart.dsigma(xc);
  };

  // E: cumulative integral of sigma^2 anchored at 0
  std::vector<double> Ev(n_nodes), Ed1(n_nodes), Ed2(n_nodes);
  {
    std::vector<double> inc(n_nodes, 0.0);
    for (int k = 0; k < n_nodes - 1; ++k) {
      const double a = x0 + k * hx, b = a + hx;
      inc[k + 1] = num::gauss12(sig2, a, b);
    }
    // prefix sums split at the anchor so E(0) = 0 exactly
    Ev[n_dn] = 0.0;
    for (int k = n_dn + 1; k < n_nodes; ++k) Ev[k] = Ev[k - 1] + inc[k];
    for (int k = n_dn; k-- > 0;) Ev[k] = Ev[k + 1] - inc[k + 1];
    for (int k = 0; k < n_nodes; ++k) {
      const double x = x0 + k * hx;
      Ed1[k] = sig2(x);
      Ed2[k] = dsig2(x);
    }
  }
  num::HermiteTable Et = num::HermiteTable::build(x0, hx, Ev, Ed1, Ed2);

  // V: cumulative integral of E anchored at 0; interval increments by parts
  std::vector<double> Vv(n_nodes), Vd1 = Ev, Vd2 = Ed1;
  {
    std::vector<double> inc(n_nodes, 0.0);
    for (int k = 0; k < n_nodes - 1; ++k) {
      const double a = x0 + k * hx, b = a + hx;
      const double Ek = Ev[k];
      inc[k + 1] = Ek * hx + num::gauss12([&](double u) { return (b - u) * sig2(u); }, a, b);
    }
    Vv[n_dn] = 0.0;
    for (int k = n_dn + 1; k < n_nodes; ++k) Vv[k] = Vv[k - 1] + inc[k];
    for (int k = n_dn; k-- > 0;) Vv[k] = Vv[k + 1] - inc[k + 1];
  }
  num::HermiteTable Vt = num::HermiteTable::build(x0, hx, Vv, Vd1, Vd2);

  MetricPotential mp;
  mp.E_table = std::move(Et);
  mp.V_table = std::move(Vt);

  // area and the E drift
  if (i == 3) {
    const double A = chart.period();
    mp.periodic = true;
    mp.period = A;
    mp.area = num::two_pi * mp.E_table.value(A);
    mp.beta = mp.V_table.value(A) / A;
    if (!(mp.area > 0.0) || !std::isfinite(mp.area))
      fail(Err::DivergentArea, "torus area came out non-positive");
    return mp;
  }

  // class 0: tails beyond the window
  double E_plus_inf, E_minus_inf;
  if (chart.has_profile()) {
    const WarpedProfile& pr = chart.profile();
    const double c = chart.tau() / num::two_pi * pr.a;
    auto f = [&](double s) { return pr.f.value(s); };
    const double s_hi = chart.s_of_x1(hi), s_lo = chart.s_of_x1(lo);
    E_plus_inf = mp.E(hi) + c * num::integrate(f, s_hi, pr.s_max, 1e-11);
    E_minus_inf = mp.E(lo) - c * num::integrate(f, pr.s_min, s_lo, 1e-11);
  } else {
    auto s2 = [&](double x) {
      const double s = chart.sigma_raw(x);
      return s * s;
    };
    num::QuadResult up = num::integrate_tail_up(s2, hi, 1e-11);
    num::QuadResult dn = num::integrate_tail_down(s2, lo, 1e-11);
    if (!up.converged || !dn.converged) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "area tails did not converge: up=%.9g dn=%.9g", up.value,
                    dn.value);
      fail(Err::DivergentArea, buf);
    }
    E_plus_inf = mp.E(hi) + up.value;
    E_minus_inf = mp.E(lo) - dn.value;
  }
  mp.area = num::two_pi * (E_plus_inf - E_minus_inf);
  mp.beta = 0.5 * (E_plus_inf + E_minus_inf);
  if (!(mp.area > 0.0) || !std::isfinite(mp.area))
    fail(Err::DivergentArea, "area came out non-positive");
  return mp;
}

// -------------------------------------------------------------------- assembly

GreensEvaluator make_greens(std::shared_ptr<const CylindricalChart> chart,
                            const GreensOptions& opt) {
  if (!chart) fail(Err::InvalidSpec, "make_greens needs a chart");
  GreensEvaluator ev;
  ev.cls = chart->cls;
  ev.chart = chart;
  ev.gamma_end = opt.gamma_end.value_or(ev.cls.gamma_end_or_zero());
  if (ev.cls.i == 3) {
    if (std::abs(ev.cls.varpi_or_zero()) > 1e-12)
      fail(Err::UnsupportedShear, "class 3 Green's formulas require varpi = 0");
    ev.lattice_period = chart->period();
    ev.prime = prime_for_class(ev.cls, opt.prime_tol, std::exp(-chart->period()));
  } else {
    ev.prime = prime_for_class(ev.cls, opt.prime_tol, 0.0);
  }
  if (ev.cls.closed()) ev.pot = metric_potential(*chart);
  return ev;
}

GreensEvaluator make_greens_flat(const SurfaceClassIndex& cls, const GreensOptions& opt) {
  cls.validate();
  if (cls.closed()) fail(Err::InvalidSpec, "closed classes need a chart for the metric potential");
  GreensEvaluator ev;
  ev.cls = cls;
  ev.gamma_end = opt.gamma_end.value_or(cls.gamma_end_or_zero());
  ev.prime = prime_for_class(cls, opt.prime_tol, 0.0);
  return ev;
}

namespace {

ChartPoint reduce_point(const GreensEvaluator& ev, ChartPoint x) {
  if (ev.cls.i == 3) {
    const double A = ev.lattice_period;
    x.x1 -= A * std::floor(x.x1 / A);
    x.x2 -= num::two_pi * std::floor(x.x2 / num::two_pi);
  } else if (ev.cls.i == 0 && ev.chart) {
    if (x.x1 < ev.chart->window_lo() - 1e-9 || x.x1 > ev.chart->window_hi() + 1e-9)
      fail(Err::OutOfWindow, "x1 outside the chart window of the closed surface");
  }
  return x;
}

}  // namespace

double greens(const GreensEvaluator& ev, const ChartPoint& x_in, const ChartPoint& x0_in) {
  const ChartPoint x = reduce_point(ev, x_in);
  const ChartPoint x0 = reduce_point(ev, x0_in);
  const cplx z = chart_to_flat(ev.cls, x);
  const cplx z0 = chart_to_flat(ev.cls, x0);
  double g = phi_impl(ev.cls, ev.prime, ev.gamma_end, z, z0);
  if (ev.pot) g += (ev.pot->V_hat(x.x1) + ev.pot->V_hat(x0.x1)) / ev.pot->area;
  return g;
}

double greens_unreduced(const GreensEvaluator& ev, const ChartPoint& x, const ChartPoint& x0) {
  const cplx z = chart_to_flat(ev.cls, x);
  const cplx z0 = chart_to_flat(ev.cls, x0);
  double g = phi_impl(ev.cls, ev.prime, ev.gamma_end, z, z0);
  if (ev.pot) g += (ev.pot->V_hat(x.x1) + ev.pot->V_hat(x0.x1)) / ev.pot->area;
  return g;
}

double robin_part(const GreensEvaluator& ev, const ChartPoint& x_in, const ChartPoint& x0_in) {
  const ChartPoint x = reduce_point(ev, x_in);
  const ChartPoint x0 = reduce_point(ev, x0_in);
  const cplx z = chart_to_flat(ev.cls, x);
  const cplx z0 = chart_to_flat(ev.cls, x0);
  double g = robin_impl(ev.cls, ev.prime, ev.gamma_end, z, z0);
  if (ev.pot) g += (ev.pot->V_hat(x.x1) + ev.pot->V_hat(x0.x1)) / ev.pot->area;
  return g;
}

}  // namespace meridian
