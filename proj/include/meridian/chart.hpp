// meridian - cylindrical coordinate construction: the T1 rescaling of a warped
// profile, the polar-to-cylindrical transition, and the flat-model maps
#pragma once

#include <complex>
#include <limits>
#include <memory>
#include <optional>

#include "meridian/surface.hpp"

namespace meridian {

struct ChartPoint {
  double x1 = 0.0, x2 = 0.0;
};

struct ChartOptions {
  double window = 8.0;  // half-width of the evaluation window for open ends
  double hx = 0.01;     // grid spacing of the T1 table
};

// Builds the monotone table s -> x1 for T1(s) = int (2pi/tau) a / f, based at
// the profile's s_base. Exposed separately so the table can be tested on its own.
num::MonotoneMap build_T1(const WarpedProfile& profile, double tau,
                          const ChartOptions& opt = {});

// Isothermal chart with x1-only conformal factor sigma_i. The evaluation
// window is finite; queries beyond an open end raise OutOfWindow rather than
// extrapolate. Class 3 charts are periodic with period 2*pi*A.
class CylindricalChart {
 public:
  SurfaceClassIndex cls;

  double sigma(double x1) const;
  double dsigma(double x1) const;
  double d2sigma(double x1) const;

  double window_lo() const { return win_lo_; }
  double window_hi() const { return win_hi_; }
  bool open_lo() const { return open_lo_; }    // range continues past the window
  bool open_hi() const { return open_hi_; }
  bool periodic() const { return periodic_; }
  double period() const { return period_; }    // 2*pi*A for class 3
  double modulus() const { return period_ / num::two_pi; }  // the A in U_i
  double base_offset() const { return base_offset_; }
  double tau() const { return cls.tau; }

  bool has_profile() const { return profile_.has_value(); }
  const WarpedProfile& profile() const { return *profile_; }
  double profile_speed() const { return profile_ ? profile_->a : 1.0; }
  double s_of_x1(double x1) const;
  double x1_of_s(double s) const;

  // evaluation without the window guard, for tail quadrature
  double sigma_raw(double x1) const;

  static CylindricalChart from_profile(const WarpedProfile& profile,
                                       const SurfaceClassIndex& cls, const ChartOptions& opt = {});
  static CylindricalChart from_polar(const RadialConformalFactor& sigma,
                                     const SurfaceClassIndex& cls, const ChartOptions& opt = {});

 private:
  double reduce(double x1) const;

  std::optional<WarpedProfile> profile_;
  num::MonotoneMap t1_;
  std::optional<RadialConformalFactor> radial_;
  double win_lo_ = 0.0, win_hi_ = 0.0;
  bool open_lo_ = false, open_hi_ = false;
  bool periodic_ = false;
  double period_ = 0.0;
  double base_offset_ = 0.0;
};

// Transition between the cylindrical chart and the flat model, z = exp(-x1 - i x2).
std::complex<double> w_map(const ChartPoint& x);
ChartPoint w_inv(std::complex<double> z);

// Strip identification for classes 11 and 12: w = x1 + i x2 with Re w in [0, pi]
// maps to the disc model via z = (1 + i e^{iw}) / (1 - i e^{iw}).
std::complex<double> strip_to_disc(const ChartPoint& x);

// Flat-model coordinate of a chart point for the class's Green's formulas.
std::complex<double> chart_to_flat(const SurfaceClassIndex& cls, const ChartPoint& x);

}  // namespace meridian
