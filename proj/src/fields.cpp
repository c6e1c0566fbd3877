#include "meridian/fields.hpp"

#include <cmath>

namespace meridian {

double gaussian_curvature(const CylindricalChart& chart, double x1) {
  const double s = chart.sigma(x1);
  const double s1 = chart.dsigma(x1);
  const double s2 = chart.d2sigma(x1);
  // K = -(1/sigma^2) d2/dx2 log sigma
  return -(s2 * s - s1 * s1) / (s * s * s * s);
}

double killing_speed(const CylindricalChart& chart, double x1) {
  return num::two_pi / chart.tau() * chart.sigma(x1);
}

double killing_pressure(const CylindricalChart& chart, double x1, double rho0, double p0) {
  if (!(rho0 > 0.0)) fail(Err::InvalidSpec, "fluid density must be positive");
  const double v = killing_speed(chart, x1);
  return p0 + 0.5 * rho0 * v * v;
}

double vorticity(const CylindricalChart& chart, double x1) {
  return 2.0 * chart.dsigma(x1) / chart.sigma(x1);
}

double potential_speed(const CylindricalChart& chart,
                       const std::function<std::complex<double>(ChartPoint)>& dw,
                       const ChartPoint& x, DwConvention conv) {
  // Cauchy-Riemann spot check in the chart variable zeta = x1 + i x2; a
  // z-holomorphic dw composed with z(zeta) passes the same test.
  const double h = 1e-5;
  const std::complex<double> fx = (dw({x.x1 + h, x.x2}) - dw({x.x1 - h, x.x2})) / (2.0 * h);
  const std::complex<double> fy = (dw({x.x1, x.x2 + h}) - dw({x.x1, x.x2 - h})) / (2.0 * h);
  const double scale = std::max(1.0, std::abs(dw(x)));
  const double cr = std::abs(fx + std::complex<double>(0.0, 1.0) * fy) / scale;
  if (cr > 1e-4) fail(Err::NonHolomorphic, "Cauchy-Riemann residual above 1e-4");

  const double sg = chart.sigma(x.x1);
  if (conv == DwConvention::ChartDerivative) return std::abs(dw(x)) / sg;
  return std::abs(dw(x)) * std::exp(-x.x1) / sg;
}

double log_cell_average(double h1, double h2) {
  // mean over the cell of -(1/2pi) log sqrt(u^2+v^2), singularity at the center;
  // quadrant closed form: int_0^a int_0^b ln(u^2+v^2) du dv
  const double a = 0.5 * h1, b = 0.5 * h2;
  const double quad = a * b * std::log(a * a + b * b) - 3.0 * a * b +
                      a * a * std::atan(b / a) + b * b * std::atan(a / b);
  // four quadrants, halve for sqrt, normalize by the cell area
  const double integral_log = 4.0 * 0.5 * quad;
  return -integral_log / (num::two_pi * h1 * h2);
}

ScalarField convolve_curvature(const GreensEvaluator& ev, const CylindricalChart& chart,
                               const GridSpec& grid) {
  const int i = ev.cls.i;
  if (i != 0 && i != 3)
    fail(Err::DivergentConvolution,
         "convolution implemented for the closed classes; open windows need a convergence proof");
  if (grid.n1 < 2 || grid.n2 < 2) fail(Err::InvalidSpec, "grid needs at least 2x2 cells");

  double lo = grid.x1_lo, hi = grid.x1_hi;
  if (i == 3) {
    lo = 0.0;
    hi = chart.period();
  } else if (lo >= hi) {
    lo = chart.window_lo();
    hi = chart.window_hi();
  }
  const int n1 = grid.n1, n2 = grid.n2;
  const double h1 = (hi - lo) / n1;
  const double h2 = num::two_pi / n2;

  // midpoint nodes in x1 (cell centers); x2 nodes span one full period
  std::vector<double> y1(n1), Kv(n1), s2v(n1);
  for (int m = 0; m < n1; ++m) {
    y1[m] = lo + (m + 0.5) * h1;
    Kv[m] = gaussian_curvature(chart, y1[m]);
    const double s = chart.sigma(y1[m]);
    s2v[m] = s * s;
  }

  // column sums: for target row j, sum over source rows m of
  //   K sigma^2 h1 h2 * sum_l G((y1_j, 0), (y1_m, l h2))
  // the x2 sum is independent of the target's x2 on the periodic grid.
  std::vector<double> col(n1, 0.0);
  for (int j = 0; j < n1; ++j) {
    double acc = 0.0;
    for (int m = 0; m < n1; ++m) {
      double inner = 0.0;
      if (m == j) {
        // singular cell: analytic average of the log kernel + smooth remainder
        const ChartPoint xt{y1[j], 0.0};
        const double cell_avg = log_cell_average(h1, h2);
        const double smooth = robin_part(ev, xt, xt) + y1[j] / num::two_pi;
        inner = cell_avg + smooth;
        // remaining x2 cells on the same row
        for (int l = 1; l < n2; ++l)
          inner += greens(ev, xt, {y1[m], l * h2});
      } else {
        const ChartPoint xt{y1[j], 0.0};
        for (int l = 0; l < n2; ++l) inner += greens(ev, xt, {y1[m], l * h2});
      }
      acc += inner * Kv[m] * s2v[m];
    }
    col[j] = acc * h1 * h2;
  }

  ScalarField out;
  out.name = "greens_convolved_curvature";
  out.n1 = n1;
  out.n2 = n2;
  out.x1_lo = lo;
  out.x1_hi = hi;
  out.x2_lo = 0.0;
  out.x2_hi = num::two_pi;
  out.grid.resize(std::size_t(n1) * n2);
  for (int j = 0; j < n1; ++j)
    for (int l = 0; l < n2; ++l) out.grid[std::size_t(j) * n2 + l] = col[j];
  const std::vector<double> nodes = y1;
  const std::vector<double> vals = col;
  out.eval = [nodes, vals](ChartPoint p) {
    // nearest-cell lookup; the field is piecewise constant per quadrature cell
    int best = 0;
    double bd = 1e300;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const double d = std::abs(nodes[k] - p.x1);
      if (d < bd) {
        bd = d;
        best = int(k);
      }
    }
    return vals[std::size_t(best)];
  };
  return out;
}

}  // namespace meridian
