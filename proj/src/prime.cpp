#include "meridian/prime.hpp"

#include <cmath>

namespace meridian {

PrimeFunction PrimeFunction::make(double rho, double tol) {
  if (!(tol > 0.0)) fail(Err::InvalidSpec, "prime tolerance must be positive");
  if (rho < 0.0 || rho >= 1.0) fail(Err::InvalidSpec, "rho must lie in [0,1)");
  PrimeFunction p;
  p.rho = rho;
  p.tol = tol;
  if (rho == 0.0) {
    p.N = 0;
    return p;
  }
  const double n_needed = std::log(tol * (1.0 - rho)) / std::log(rho);
  if (n_needed > 1e6) fail(Err::AccuracyDegraded, "rho too close to 1 for the requested tol");
  p.N = std::max(8, int(std::ceil(n_needed)));
  return p;
}

std::complex<double> prime_eval(const PrimeFunction& p, std::complex<double> z) {
  if (p.rho > 0.0 && z == std::complex<double>(0.0, 0.0))
    fail(Err::ZeroArgument, "prime product needs z != 0");
  std::complex<double> out = 1.0 - z;
  if (p.rho == 0.0) return out;
  const std::complex<double> zi = 1.0 / z;
  double qn = 1.0;
  for (int n = 1; n <= p.N; ++n) {
    qn *= p.rho;
    out *= (1.0 - qn * z) * (1.0 - qn * zi);
  }
  return out;
}

namespace {

// sum of logs over the product factors, assuming |w| within the safe band
double log_abs_core(const PrimeFunction& p, std::complex<double> w) {
  double acc = 0.0;
  const double a1 = std::abs(1.0 - w);
  if (a1 < 1e-14) fail(Err::AtZeroOfPrime, "z within 1e-14 of a zero of the prime function");
  acc += std::log(a1);
  if (p.rho == 0.0) return acc;
  const std::complex<double> wi = 1.0 / w;
  double qn = 1.0;
  for (int n = 1; n <= p.N; ++n) {
    qn *= p.rho;
    const double f1 = std::abs(1.0 - qn * w);
    const double f2 = std::abs(1.0 - qn * wi);
    if (f1 < 1e-14 || f2 < 1e-14)
      fail(Err::AtZeroOfPrime, "z within 1e-14 of a zero of the prime function");
    acc += std::log(f1) + std::log(f2);
  }
  return acc;
}

}  // namespace

double log_abs_prime(const PrimeFunction& p, std::complex<double> z) {
  if (p.rho == 0.0) {
    const double a = std::abs(1.0 - z);
    if (a < 1e-14) fail(Err::AtZeroOfPrime, "z within 1e-14 of the zero at 1");
    return std::log(a);
  }
  if (z == std::complex<double>(0.0, 0.0)) fail(Err::ZeroArgument, "log|P| needs z != 0");
  const double A = -std::log(p.rho);
  const double t = std::log(std::abs(z));
  // choose k with |rho^k z| in (rho, 1]
  const int k = int(std::ceil(t / A - 1e-15));
  const std::complex<double> w = z * std::pow(p.rho, k);
  // z = rho^{-k} w: log|P(z)| = k log|w| - k(k+1)/2 log rho + log|P(w)|
  return double(k) * std::log(std::abs(w)) - 0.5 * double(k) * double(k + 1) * std::log(p.rho) +
         log_abs_core(p, w);
}

double log_abs_prime_no_root(const PrimeFunction& p, std::complex<double> w) {
  if (p.rho == 0.0) return 0.0;
  if (w == std::complex<double>(0.0, 0.0)) fail(Err::ZeroArgument, "log|Q| needs w != 0");
  const std::complex<double> wi = 1.0 / w;
  double acc = 0.0;
  double qn = 1.0;
  for (int n = 1; n <= p.N; ++n) {
    qn *= p.rho;
    const double f1 = std::abs(1.0 - qn * w);
    const double f2 = std::abs(1.0 - qn * wi);
    if (f1 < 1e-14 || f2 < 1e-14)
      fail(Err::AtZeroOfPrime, "w within 1e-14 of a zero of the residual product");
    acc += std::log(f1) + std::log(f2);
  }
  return acc;
}

}  // namespace meridian
