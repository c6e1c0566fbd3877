// meridian - surface descriptions: class metadata, generatrices, radial factors,
// warped profiles, and the declared-class consistency checks
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "meridian/numerics.hpp"

namespace meridian {

// Conformal class of the surface; i indexes the flat models
//   0 sphere, 1 closed disc, 2 annulus, 3 torus, 4 plane, 5 open disc,
//   6 punctured plane, 7 punctured open disc, 8 open annulus,
//   9 punctured closed disc, 10 semi-annulus, 11 strip, 12 semi-strip.
struct SurfaceClassIndex {
  int i = 4;
  double tau = num::two_pi;             // period of the Killing flow
  std::optional<double> rho;            // modulus, classes {2,3,8,10}
  std::optional<double> gamma_end;      // end circulation, classes {6,7,9,11,12}
  std::optional<double> varpi;          // lattice shear, class 3 only

  static bool rho_allowed(int i) { return i == 2 || i == 3 || i == 8 || i == 10; }
  static bool gamma_allowed(int i) { return i == 6 || i == 7 || i == 9 || i == 11 || i == 12; }

  bool closed() const { return i == 0 || i == 3; }
  bool strip_model() const { return i == 11 || i == 12; }
  double gamma_end_or_zero() const { return gamma_end.value_or(0.0); }
  double varpi_or_zero() const { return varpi.value_or(0.0); }

  void validate() const;  // throws Error(InvalidSpec) on violated type invariants
};

// Generatrix of a surface of revolution: theta -> (R1, R2), R1 > 0 in the
// interior, constant parametric speed r after normalization.
struct Generatrix {
  num::Func1 R1, R2;
  double theta_min = 0.0, theta_max = 0.0;
  double speed = 1.0;  // r
  bool closed = false;
  // original samples when built from data; kept so normalization is reproducible
  std::vector<std::array<double, 3>> samples;

  double length() const { return speed * (theta_max - theta_min); }
  bool touches_axis_lo() const;
  bool touches_axis_hi() const;
};

Generatrix sphere_generatrix();
Generatrix torus_generatrix(double ring_radius);  // (R + cos t, sin t), needs R > 1
Generatrix cylinder_generatrix(double half_length);
Generatrix catenoid_generatrix(double half_length);
Generatrix cone_generatrix(double slope_angle, double length);
Generatrix generatrix_from_samples(std::vector<std::array<double, 3>> triples);

// Resamples to constant speed; already-constant inputs are returned unchanged.
Generatrix arc_length_normalize(const Generatrix& g, int n_samples = 2001);

// Radially symmetric conformal factor sigma(r) > 0 on (r_min, r_max).
struct RadialConformalFactor {
  num::Func1 sigma;
  double r_min = 0.0, r_max = 0.0;

  double value(double r) const;
  double dlog(double r) const;  // d/dr log sigma
};

RadialConformalFactor flat_radial_factor(double r_min, double r_max);
RadialConformalFactor round_sphere_radial_factor();          // 2/(1+r^2) on (0, inf)
RadialConformalFactor inverse_r_radial_factor();             // 1/r on (0, inf): flat cylinder
RadialConformalFactor radial_factor_from_samples(const std::vector<std::array<double, 2>>& pairs);

// Warped-product data along a horizontal geodesic: metric a^2 ds^2 + f(s)^2 dt^2.
struct WarpedProfile {
  double a = 1.0;        // |gamma'(0)|
  num::Func1 f;          // |X o gamma(s)|, positive in the interior
  double s_min = 0.0, s_max = 0.0;
  double s_base = 0.0;
  bool periodic = false;
  double period = 0.0;   // = L^+ for closed profiles
  bool singular_lo = false, singular_hi = false;  // f -> 0 at the end
};

WarpedProfile warped_profile_from_samples(const std::vector<std::array<double, 2>>& pairs,
                                          double a);

// Declarative surface description.
struct SurfaceSpec {
  enum class Kind { Revolution, RadialConformal, Warped };
  Kind kind = Kind::Revolution;
  SurfaceClassIndex cls;
  std::optional<Generatrix> generatrix;
  std::optional<RadialConformalFactor> sigma;
  std::optional<WarpedProfile> profile;
};

struct Diagnostic {
  std::string check;    // e.g. "TopologyMismatch"
  std::string message;
};

// Decidable consistency checks between the declared class and the payload.
// Returns an empty list when everything checks out; never throws.
std::vector<Diagnostic> validate_class(const SurfaceSpec& spec);

inline constexpr double axis_contact_rtol = 1e-9;  // R1 < rtol * r counts as axis contact

}  // namespace meridian
