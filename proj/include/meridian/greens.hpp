// meridian - hydrodynamic Green's function assembly: per-class fundamental
// solutions, the metric potential of closed classes, and the Robin part
#pragma once

#include <complex>
#include <memory>
#include <optional>

#include "meridian/chart.hpp"
#include "meridian/prime.hpp"

namespace meridian {

// Metric potential data for the closed classes: E(0) = V(0) = 0, E' = sigma^2,
// V' = E, and the surface area. beta is the mean drift of E (period mean for
// the torus, tail mean for the sphere); greens() evaluates V - beta*x1 so the
// assembled function is exactly well-defined on the quotient and finite at the
// chart ends, while the stored tables keep their defining derivatives.
struct MetricPotential {
  num::HermiteTable E_table, V_table;
  double area = 0.0;
  double beta = 0.0;
  bool periodic = false;  // torus tables extend by E(x+A) = E(x) + E(A)
  double period = 0.0;

  double E(double x1) const;
  double V(double x1) const;
  double V_hat(double x1) const { return V(x1) - beta * x1; }
};

MetricPotential metric_potential(const CylindricalChart& chart);

// Fundamental solution Phi_i in the flat model. For class 3 both arguments are
// reduced into the fundamental annulus rho < |z| <= 1 before evaluation.
double phi(const SurfaceClassIndex& cls, std::complex<double> z, std::complex<double> z0,
           double prime_tol = 1e-12);

struct GreensOptions {
  double prime_tol = 1e-12;
  std::optional<double> gamma_end;  // overrides the class value
};

struct GreensEvaluator {
  SurfaceClassIndex cls;
  PrimeFunction prime;
  std::shared_ptr<const CylindricalChart> chart;  // required for classes 0 and 3
  std::optional<MetricPotential> pot;             // classes 0 and 3
  double gamma_end = 0.0;
  double lattice_period = 0.0;  // class 3: the chart's 2*pi*A

  double area() const { return pot ? pot->area : 0.0; }
};

GreensEvaluator make_greens(std::shared_ptr<const CylindricalChart> chart,
                            const GreensOptions& opt = {});
// Chartless evaluator for the open flat-model classes (everything but 0 and 3).
GreensEvaluator make_greens_flat(const SurfaceClassIndex& cls, const GreensOptions& opt = {});

// G(x, x0) in chart coordinates; symmetric, finite away from the diagonal.
double greens(const GreensEvaluator& ev, const ChartPoint& x, const ChartPoint& x0);

// The raw class-3 formula without the fundamental-domain reduction; the
// periodic table extension makes this the analytic continuation, so lattice
// invariance can be probed as a property instead of holding by construction.
double greens_unreduced(const GreensEvaluator& ev, const ChartPoint& x, const ChartPoint& x0);

// G + (1/2pi) log|z - z0| extended continuously across the diagonal.
double robin_part(const GreensEvaluator& ev, const ChartPoint& x, const ChartPoint& x0);

}  // namespace meridian
