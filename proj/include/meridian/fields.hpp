// meridian - scalar fields on a chart: Gaussian curvature, Killing speed and
// pressure, vorticity, potential-flow speed, and the Green-curvature convolution
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "meridian/greens.hpp"

namespace meridian {

struct ScalarField {
  std::string name;
  std::function<double(ChartPoint)> eval;
  // optional sampled grid, row-major over (x1 index, x2 index)
  std::vector<double> grid;
  int n1 = 0, n2 = 0;
  double x1_lo = 0.0, x1_hi = 0.0, x2_lo = 0.0, x2_hi = 0.0;
};

double gaussian_curvature(const CylindricalChart& chart, double x1);
double killing_speed(const CylindricalChart& chart, double x1);
double killing_pressure(const CylindricalChart& chart, double x1, double rho0 = 1.0,
                        double p0 = 0.0);
double vorticity(const CylindricalChart& chart, double x1);

enum class DwConvention { ChartDerivative, FlatZDerivative };

// Speed of the potential flow with holomorphic derivative dw; the convention
// flag says whether dw is taken in the chart variable or in z = exp(-x1-i x2).
// Holomorphy is spot-checked by a Cauchy-Riemann finite difference at x.
double potential_speed(const CylindricalChart& chart,
                       const std::function<std::complex<double>(ChartPoint)>& dw,
                       const ChartPoint& x, DwConvention conv = DwConvention::ChartDerivative);

struct GridSpec {
  int n1 = 64, n2 = 64;
  double x1_lo = 0.0, x1_hi = 0.0;  // x2 always spans one full period [0, 2pi)
};

// (G * K)(x) = int G(x,y) K(y) dVol(y), midpoint rule on the grid with the
// sigma^2 measure; the cell containing the target swaps the log kernel for its
// analytic cell average. Exact circular symmetry of the periodic x2 grid makes
// the result a function of x1 alone, which the returned grid reflects.
ScalarField convolve_curvature(const GreensEvaluator& ev, const CylindricalChart& chart,
                               const GridSpec& grid);

// Mean cell value of -(1/2pi) log r over a cell of size h1 x h2 centered on the
// singularity; closed form, exposed for tests.
double log_cell_average(double h1, double h2);

}  // namespace meridian
