#include "meridian/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "meridian/fields.hpp"

namespace meridian {

namespace {

// 4th-order directional derivative of G along (ux, uy) at distance base from x0
double directional_d1(const std::function<double(double)>& f, double delta) {
  return (-f(2.0 * delta) + 8.0 * f(delta) - 8.0 * f(-delta) + f(-2.0 * delta)) / (12.0 * delta);
}

struct SampleBox {
  double x1_lo, x1_hi, x2_lo, x2_hi;
};

SampleBox sample_box(const GreensEvaluator& ev) {
  const int i = ev.cls.i;
  switch (i) {
    case 0: {
      const double lo = std::max(ev.chart->window_lo() + 0.5, -2.0);
      const double hi = std::min(ev.chart->window_hi() - 0.5, 2.0);
      return {lo, hi, 0.0, num::two_pi};
    }
    case 3:
      return {0.0, ev.lattice_period, 0.0, num::two_pi};
    case 1:
    case 9:
    case 5:
    case 7:
      return {0.08, 2.5, 0.0, num::two_pi};
    case 2:
    case 8:
    case 10: {
      const double A = -std::log(*ev.cls.rho);
      return {0.05 * A, 0.95 * A, 0.0, num::two_pi};
    }
    case 11:
    case 12:
      return {0.15, num::pi - 0.15, -1.5, 1.5};
    default:  // 4, 6
      return {-2.0, 2.0, 0.0, num::two_pi};
  }
}

ChartPoint sample_point(num::Rng& rng, const SampleBox& b) {
  return {rng.uniform(b.x1_lo, b.x1_hi), rng.uniform(b.x2_lo, b.x2_hi)};
}

double chart_dist(const ChartPoint& a, const ChartPoint& b) {
  return std::hypot(a.x1 - b.x1, a.x2 - b.x2);
}

}  // namespace

double fd_laplace_beltrami(const std::function<double(ChartPoint)>& field,
                           const CylindricalChart& chart, const ChartPoint& x, double h) {
  const double c = field(x);
  const double lap = (field({x.x1 + h, x.x2}) + field({x.x1 - h, x.x2}) +
                      field({x.x1, x.x2 + h}) + field({x.x1, x.x2 - h}) - 4.0 * c) /
                     (h * h);
  const double s = chart.sigma(x.x1);
  return lap / (s * s);
}

double fd_laplace_flat(const std::function<double(ChartPoint)>& field, const ChartPoint& x,
                       double h) {
  const double c = field(x);
  return (field({x.x1 + h, x.x2}) + field({x.x1 - h, x.x2}) + field({x.x1, x.x2 + h}) +
          field({x.x1, x.x2 - h}) - 4.0 * c) /
         (h * h);
}

double circulation(const GreensEvaluator& ev, const ChartPoint& x0, double eps, int n_samples) {
  const double delta = 1e-4;
  double circ = 0.0;
  for (int j = 0; j < n_samples; ++j) {
    const double th = num::two_pi * j / n_samples;
    const double ux = std::cos(th), uy = std::sin(th);
    auto along = [&](double d) {
      return greens(ev, {x0.x1 + (eps + d) * ux, x0.x2 + (eps + d) * uy}, x0);
    };
    circ += directional_d1(along, delta);
  }
  circ *= -num::two_pi * eps / n_samples;

  if (ev.cls.closed() && ev.chart) {
    // add back the background -1/|M| flux through the disc
    double vol = 0.0;
    const int n_th = 64;
    for (int j = 0; j < n_th; ++j) {
      const double th = num::two_pi * j / n_th;
      const double ux = std::cos(th);
      vol += num::gauss12(
          [&](double r) {
            const double s = ev.chart->sigma(x0.x1 + r * ux);
            return s * s * r;
          },
          0.0, eps);
    }
    vol *= num::two_pi / n_th;
    circ += vol / ev.area();
  }
  return circ;
}

double end_circulation(const GreensEvaluator& ev, double level, const ChartPoint& x0,
                       int n_samples) {
  const double delta = 1e-4;
  double acc = 0.0;
  for (int j = 0; j < n_samples; ++j) {
    const double t = num::two_pi * j / n_samples;
    auto along = [&](double d) { return greens(ev, {level + d, t}, x0); };
    acc += directional_d1(along, delta);
  }
  return acc * num::two_pi / n_samples;
}

double symmetry_residual(const GreensEvaluator& ev,
                         const std::vector<std::pair<ChartPoint, ChartPoint>>& pairs) {
  double worst = 0.0;
  for (const auto& [a, b] : pairs)
    worst = std::max(worst, std::abs(greens(ev, a, b) - greens(ev, b, a)));
  return worst;
}

EndBehavior end_behavior(const GreensEvaluator& ev, EndKind kind, double gamma,
                         const ChartPoint& x0, int n_samples) {
  EndBehavior out;
  if (kind == EndKind::Parabolic) {
    // ray toward z -> 0, i.e. x1 -> +inf
    std::vector<double> v;
    double prev_diff = 1e300;
    bool shrinking = true;
    for (int k = 0; k < n_samples; ++k) {
      const double x1 = 2.0 + 0.9 * k;
      const double g = greens(ev, {x1, 0.37}, x0);
      v.push_back(g + gamma / num::two_pi * x1);  // G - (gamma/2pi) log|z|, log|z| = -x1
      if (k > 0) {
        const double d = std::abs(v[k] - v[k - 1]);
        if (d > prev_diff + 1e-12) shrinking = false;
        prev_diff = d;
      }
    }
    out.fitted_limit = v.back();
    out.deviation = std::abs(v[v.size() - 1] - v[v.size() - 2]);
    out.cauchy_ok = shrinking && out.deviation < 1e-5;
    return out;
  }
  // hyperbolic: sample along the boundary circle |z| = 1
  const int i = ev.cls.i;
  const double x1_eval = (i == 5 || i == 8) ? 1e-4 : 0.0;
  double mn = 1e300, mx = -1e300;
  for (int j = 0; j < n_samples; ++j) {
    const double t = num::two_pi * j / n_samples;
    const double g = greens(ev, {x1_eval, t}, x0);
    mn = std::min(mn, g);
    mx = std::max(mx, g);
  }
  out.fitted_limit = 0.5 * (mn + mx);
  out.deviation = mx - mn;
  out.cauchy_ok = out.deviation < 1e-6;
  return out;
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerificationReport::to_text() const {
  std::string out;
  char line[192];
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "check.%s.residual = %.6e\n", c.id.c_str(), c.residual);
    out += line;
    std::snprintf(line, sizeof line, "check.%s.tolerance = %.3e\n", c.id.c_str(), c.tolerance);
    out += line;
    std::snprintf(line, sizeof line, "check.%s.pass = %s\n", c.id.c_str(),
                  c.pass ? "true" : "false");
    out += line;
  }
  std::snprintf(line, sizeof line, "all_pass = %s\n", all_pass() ? "true" : "false");
  out += line;
  return out;
}

VerificationReport run_suite(const GreensEvaluator& ev, std::uint64_t seed) {
  VerificationReport rep;
  num::Rng rng(seed);
  const SampleBox box = sample_box(ev);
  const int i = ev.cls.i;
  auto push = [&](const std::string& id, double residual, double tol) {
    rep.checks.push_back({id, residual, tol, std::abs(residual) <= tol});
  };

  // symmetry over 200 separated pairs
  {
    std::vector<std::pair<ChartPoint, ChartPoint>> pairs;
    while (pairs.size() < 200) {
      ChartPoint a = sample_point(rng, box), b = sample_point(rng, box);
      if (chart_dist(a, b) > 1e-3) pairs.push_back({a, b});
    }
    push("symmetry", symmetry_residual(ev, pairs), 1e-10);
  }

  // delta normalization at the box center
  {
    const ChartPoint c{0.5 * (box.x1_lo + box.x1_hi), 0.5 * (box.x2_lo + box.x2_hi)};
    push("circulation_delta", circulation(ev, c, 1e-2, 1024) - 1.0, 1e-6);
  }

  // harmonicity away from the source
  {
    const ChartPoint x0{0.5 * (box.x1_lo + box.x1_hi), 0.5 * (box.x2_lo + box.x2_hi)};
    auto G = [&](ChartPoint p) { return greens(ev, p, x0); };
    double worst = 0.0;
    int got = 0;
    while (got < 12) {
      ChartPoint p = sample_point(rng, box);
      if (chart_dist(p, x0) < 0.4) continue;
      double lap;
      if (ev.chart && ev.cls.closed()) {
        lap = fd_laplace_beltrami(G, *ev.chart, p, 1e-3) - 1.0 / ev.area();
      } else {
        lap = fd_laplace_flat(G, p, 1e-3);
      }
      worst = std::max(worst, std::abs(lap));
      ++got;
    }
    push("harmonicity", worst, 1e-4);
  }

  if (ev.cls.closed() && ev.pot) {
    const MetricPotential& mp = *ev.pot;
    double worst_pde = 0.0, worst_tab = 0.0;
    for (int k = 0; k < 16; ++k) {
      const double x1 = rng.uniform(box.x1_lo, box.x1_hi);
      const double h = 1e-3;
      const double vpp = (mp.V(x1 + h) - 2.0 * mp.V(x1) + mp.V(x1 - h)) / (h * h);
      const double s = ev.chart->sigma(x1);
      worst_pde = std::max(worst_pde, std::abs(-vpp / (s * s) + 1.0));
      worst_tab = std::max(worst_tab, std::abs(mp.E_table.deriv(x1) - s * s));
      worst_tab = std::max(worst_tab, std::abs(mp.V_table.deriv(x1) - mp.E_table.value(x1)));
    }
    push("metric_potential_pde", worst_pde, 1e-5);
    push("potential_tables", worst_tab, 1e-8);
  }

  if (i == 3) {
    const double A = ev.lattice_period;
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      ChartPoint a = sample_point(rng, box), b = sample_point(rng, box);
      if (chart_dist(a, b) < 1e-2) continue;
      const double g = greens_unreduced(ev, a, b);
      worst = std::max(worst, std::abs(greens_unreduced(ev, {a.x1 + A, a.x2}, b) - g));
      worst = std::max(worst, std::abs(greens_unreduced(ev, {a.x1, a.x2 + num::two_pi}, b) - g));
    }
    push("lattice_invariance", worst, 1e-9);
    push("declared_rho", *ev.cls.rho - std::exp(-A), 1e-8);
  }

  if (i == 1) {
    const ChartPoint x0{0.7, 1.1};
    double worst = 0.0;
    for (int j = 0; j < 256; ++j)
      worst = std::max(worst, std::abs(greens(ev, {0.0, num::two_pi * j / 256}, x0)));
    push("disc_boundary_zero", worst, 1e-12);
  }

  if (i == 2) {
    const ChartPoint x0{0.5 * (box.x1_lo + box.x1_hi), 0.4};
    const EndBehavior outer = end_behavior(ev, EndKind::Hyperbolic, 0.0, x0, 256);
    push("outer_boundary_const", outer.deviation, 1e-6);
    const double A = -std::log(*ev.cls.rho);
    double mn = 1e300, mx = -1e300;
    for (int j = 0; j < 256; ++j) {
      const double g = greens(ev, {A, num::two_pi * j / 256}, x0);
      mn = std::min(mn, g);
      mx = std::max(mx, g);
    }
    push("inner_boundary_const", mx - mn, 1e-6);
  }

  if (i == 6 || i == 7 || i == 9) {
    const ChartPoint x0{1.0, 0.8};
    const double gamma = ev.gamma_end;
    const double outer = end_circulation(ev, 0.3, x0, 512);
    const double inner = end_circulation(ev, 2.1, x0, 512);
    push("outer_end_circulation", outer - (1.0 - gamma), 1e-6);
    push("inner_end_circulation", -inner - gamma, 1e-6);  // inner contour taken clockwise
    const EndBehavior eb = end_behavior(ev, EndKind::Parabolic, gamma, x0, 16);
    push("parabolic_end_cauchy", eb.cauchy_ok ? eb.deviation : 1.0, 1e-5);
  }

  if (i == 0) {
    // bounded approach to both chart ends (the poles are removable)
    const ChartPoint x0{0.0, 0.0};
    double worst = 0.0;
    for (int side = 0; side < 2; ++side) {
      const double sgn = side == 0 ? 1.0 : -1.0;
      const double edge = side == 0 ? ev.chart->window_hi() : ev.chart->window_lo();
      double prev = greens(ev, {edge - sgn * 1.0, 1.0}, x0);
      double d_prev = 1e300;
      for (int k = 1; k <= 4; ++k) {
        const double cur = greens(ev, {edge - sgn * std::pow(0.5, k), 1.0}, x0);
        const double d = std::abs(cur - prev);
        prev = cur;
        if (k > 1) worst = std::max(worst, d > d_prev ? d : 0.0);
        d_prev = d;
      }
    }
    push("pole_regularity", worst, 1e-3);
  }

  // curvature-speed identity for chart-backed evaluators
  if (ev.chart) {
    const CylindricalChart& ch = *ev.chart;
    auto logX = [&](ChartPoint p) {
      return std::log(num::two_pi / ch.tau() * ch.sigma(p.x1));
    };
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const double pad = 0.1;
      const double x1 = rng.uniform(box.x1_lo + pad, box.x1_hi - pad);
      const double K = gaussian_curvature(ch, x1);
      const double lap = fd_laplace_beltrami(logX, ch, {x1, 0.3}, 1e-3);
      worst = std::max(worst, std::abs(-lap - K));
    }
    push("curvature_speed", worst, 1e-4);
  }

  return rep;
}

}  // namespace meridian
