// meridian - surface spec files
//
// Line-oriented key-value document. '#' starts a comment, blank lines are
// skipped. Scalar fields use  key = value ; sample blocks start with a
// [section] header followed by whitespace-separated numeric rows.
//
//   kind = revolution | radial_conformal | warped
//   class.i = 0..12
//   class.tau = <positive real>          (default 2*pi)
//   class.rho = <real in (0,1)>          (classes 2, 3, 8, 10)
//   class.gamma_end = <real>             (classes 6, 7, 9, 11, 12)
//   class.varpi = <real in [0,tau)>      (class 3)
//
//   revolution payload:   generatrix.primitive = sphere | torus | cylinder |
//                         catenoid | cone   with generatrix.param.* knobs,
//                         or a [generatrix.samples] block of theta R1 R2 rows
//   radial payload:       sigma.primitive = one | round_sphere | inverse_r
//                         (+ sigma.range = rmin,rmax for `one`),
//                         or a [sigma.samples] block of r sigma rows
//   warped payload:       profile.a = <positive real> and a [profile.samples]
//                         block of s f rows
//
// Parse errors carry 1-based line numbers.
#pragma once

#include <iosfwd>
#include <string>

#include "meridian/surface.hpp"

namespace meridian {

SurfaceSpec parse_surface_spec(std::istream& in, const std::string& origin = "<stream>");
SurfaceSpec load_surface_spec(const std::string& path);

}  // namespace meridian
