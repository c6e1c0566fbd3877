// meridian - small numerical kernel: quadrature, splines, monotone maps, rng
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "meridian/errors.hpp"

namespace meridian::num {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

// ------------------------------------------------------------------ quadrature

// 12-point Gauss-Legendre on [a,b]; exact through degree 23.
template <class F>
double gauss12(F&& f, double a, double b) {
  // nodes/weights for [-1,1], symmetric halves
  static const double xg[6] = {
      0.1252334085114689154724414, 0.3678314989981801937526915,
      0.5873179542866174472967024, 0.7699026741943046870368938,
      0.9041172563704748566784659, 0.9815606342467192506905491};
  static const double wg[6] = {
      0.2491470458134027850005624, 0.2334925365383548087608499,
      0.2031674267230659217490645, 0.1600783285433462263346525,
      0.1069393259953184309602547, 0.0471753363865118271946160};
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 6; ++i) {
    const double dx = h * xg[i];
    s += wg[i] * (f(c + dx) + f(c - dx));
  }
  return s * h;
}

// Adaptive Gauss-Kronrod 7-15 with interval stack, absolute-error driven.
// Throws Error(DivergentArea-like codes is left to callers); returns best estimate.
struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, int max_intervals = 4000);

// Convenience: adaptive integral, throws on non-convergence with the partial sum in the message.
double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol);

// Improper integral over [a, +inf) via u = tanh(t-a) style substitution x = a + atanh(u).
QuadResult integrate_tail_up(const std::function<double(double)>& f, double a, double abs_tol);
// Improper integral over (-inf, a].
QuadResult integrate_tail_down(const std::function<double(double)>& f, double a, double abs_tol);

// --------------------------------------------------------------------- spline

// Cubic spline on strictly increasing abscissae. Boundary: not-a-knot, or
// periodic (y.front() == y.back() expected; last interval closes the loop).
class CubicSpline {
 public:
  CubicSpline() = default;
  static CubicSpline build(std::vector<double> x, std::vector<double> y, bool periodic = false);

  double value(double x) const;
  double deriv(double x) const;
  double deriv2(double x) const;

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }
  bool periodic() const { return periodic_; }

 private:
  int locate(double& x) const;  // clamps / wraps, returns interval index
  std::vector<double> x_, y_, m_;  // m_ = second derivatives at nodes
  bool periodic_ = false;
};

// ---------------------------------------------------------------------- Func1

// A scalar function of one variable with two derivatives on [lo, hi].
// Either closed-form or a cubic-spline fit of samples. Value semantics.
class Func1 {
 public:
  Func1() = default;

  static Func1 closed_form(std::function<double(double)> f, std::function<double(double)> d1,
                           std::function<double(double)> d2, double lo, double hi);
  static Func1 from_samples(const std::vector<double>& x, const std::vector<double>& y,
                            bool periodic = false);

  double value(double x) const;
  double deriv(double x) const;
  double deriv2(double x) const;
  double operator()(double x) const { return value(x); }

  double lo() const;
  double hi() const;
  bool valid() const { return impl_ != nullptr; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// ---------------------------------------------------------------- MonotoneMap

// Strictly increasing map x(s) = integral of g from s_base to s, for g > 0 smooth.
// Built by marching uniform steps hx in x and solving each step's quadrature
// equation to machine precision; forward and inverse evaluation stay consistent
// with the stored nodes, so round trips compose to ~1e-14.
class MonotoneMap {
 public:
  MonotoneMap() = default;

  // Marches down/up from s_base until |x| reaches the targets or s hits a domain
  // end (s_min / s_max). g must be positive on (s_min, s_max).
  static MonotoneMap build(std::function<double(double)> g, double s_base, double s_min,
                           double s_max, double hx, double x_lo_target, double x_hi_target);

  double x_of_s(double s) const;
  double s_of_x(double x) const;

  double x_lo() const { return xs_.front(); }
  double x_hi() const { return xs_.back(); }
  double s_lo() const { return ss_.front(); }
  double s_hi() const { return ss_.back(); }
  bool hit_domain_lo() const { return hit_lo_; }
  bool hit_domain_hi() const { return hit_hi_; }
  std::size_t size() const { return xs_.size(); }
  double node_x(std::size_t k) const { return xs_[k]; }
  double node_s(std::size_t k) const { return ss_[k]; }

 private:
  std::vector<double> xs_, ss_;  // ascending, same length
  std::function<double(double)> g_;
  bool hit_lo_ = false, hit_hi_ = false;
};

// --------------------------------------------------------------- HermiteTable

// Quintic Hermite interpolation on a uniform grid from per-node value, first
// and second derivative. C^2 across nodes; value error O(h^6), second
// derivative O(h^4), so finite-difference probes of interpolants stay clean.
class HermiteTable {
 public:
  HermiteTable() = default;
  static HermiteTable build(double x0, double h, std::vector<double> v, std::vector<double> d1,
                            std::vector<double> d2);
  double value(double x) const;
  double deriv(double x) const;
  double deriv2(double x) const;
  double x_min() const { return x0_; }
  double x_max() const { return x0_ + h_ * double(v_.size() - 1); }

 private:
  void locate(double x, int& i, double& u) const;
  double x0_ = 0.0, h_ = 1.0;
  std::vector<double> v_, d1_, d2_;
};

// ------------------------------------------------------------------- rootfind

// Brent root finder on a bracketing interval [a,b] with f(a)f(b) <= 0.
double brent(const std::function<double(double)>& f, double a, double b, double tol,
             int max_iter = 200);

// ------------------------------------------------------------------------ rng

// Deterministic xoshiro-free wrapper around mt19937_64 for tests and sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  double uniform(double a, double b);

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

}  // namespace meridian::num
