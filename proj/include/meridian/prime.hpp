// meridian - truncated prime function (1-z) prod (1-q^n z)(1-q^n/z) and its
// stable logarithm, with the lattice reduction that keeps the tail bound valid
#pragma once

#include <complex>

#include "meridian/errors.hpp"

namespace meridian {

struct PrimeFunction {
  double rho = 0.0;   // 0 encodes the bare factor 1 - z
  int N = 0;          // truncation order of the product
  double tol = 1e-12; // requested absolute accuracy of log|P|

  // N = max(8, ceil(log(tol (1-rho)) / log rho)), capped at 1e6.
  static PrimeFunction make(double rho, double tol = 1e-12);
};

// Value of the truncated product. Requires z != 0 when rho > 0.
std::complex<double> prime_eval(const PrimeFunction& p, std::complex<double> z);

// log|P(z)| as a sum of logs; arguments are first reduced into the fundamental
// annulus rho < |w| <= 1 through log|P(rho^k w)| = -k log|w| - k(k-1)/2 log rho
// + log|P(w)|, so the geometric tail bound applies uniformly.
double log_abs_prime(const PrimeFunction& p, std::complex<double> z);

// log|P(w)/(1-w)|, the product with the vanishing factor removed; finite on the
// diagonal w = 1. No reduction (callers stay near the fundamental annulus).
double log_abs_prime_no_root(const PrimeFunction& p, std::complex<double> w);

}  // namespace meridian
