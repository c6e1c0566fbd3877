#include <doctest.h>

#include <cmath>

#include "meridian/chart.hpp"
#include "meridian/geodesic.hpp"

using namespace meridian;

namespace {

SurfaceClassIndex cls_of(int i) {
  SurfaceClassIndex c;
  c.i = i;
  if (i == 3) c.rho = std::exp(-num::two_pi);
  return c;
}

WarpedProfile sphere_profile() {
  return meridian_of_revolution(arc_length_normalize(sphere_generatrix()));
}

WarpedProfile torus_profile() {
  return meridian_of_revolution(arc_length_normalize(torus_generatrix(std::sqrt(2.0))));
}

WarpedProfile const_profile(double c, double lo, double hi) {
  WarpedProfile w;
  w.a = 1.0;
  w.f = num::Func1::closed_form([c](double) { return c; }, [](double) { return 0.0; },
                                [](double) { return 0.0; }, lo, hi);
  w.s_min = lo;
  w.s_max = hi;
  w.s_base = 0.0;
  return w;
}

}  // namespace

TEST_CASE("T1 is the identity for a unit profile") {
  const WarpedProfile w = const_profile(1.0, -10.0, 10.0);
  const num::MonotoneMap t1 = build_T1(w, num::two_pi);
  for (double s : {-3.0, -0.5, 0.0, 1.0, 2.5}) CHECK(std::abs(t1.x_of_s(s) - s) < 1e-13);
}

TEST_CASE("sphere T1 equals log tan(theta/2) based at the equator") {
  const num::MonotoneMap t1 = build_T1(sphere_profile(), num::two_pi);
  for (double th : {0.4, 1.0, num::pi / 2, 2.0, 2.7}) {
    const double expect = std::log(std::tan(0.5 * th));
    CHECK(std::abs(t1.x_of_s(th) - expect) < 1e-8);
  }
  CHECK(std::abs(t1.x_of_s(num::pi / 2)) < 1e-12);
}

TEST_CASE("torus T1 over one period equals 2 pi") {
  // int_0^{2pi} dt/(sqrt2 + cos t) = 2 pi / sqrt(R^2 - 1) = 2 pi
  const num::MonotoneMap t1 = build_T1(torus_profile(), num::two_pi);
  CHECK(t1.hit_domain_hi());
  CHECK(std::abs(t1.x_hi() - num::two_pi) < 1e-10);
}

TEST_CASE("T1 monotonicity and inverse composition") {
  const num::MonotoneMap t1 = build_T1(sphere_profile(), num::two_pi);
  num::Rng rng(31);
  double prev_x = -1e300;
  for (int k = 0; k < 300; ++k) {
    const double x = rng.uniform(t1.x_lo() + 1e-6, t1.x_hi() - 1e-6);
    const double s = t1.s_of_x(x);
    CHECK(std::abs(t1.x_of_s(s) - x) < 1e-10);
    (void)prev_x;
    prev_x = x;
  }
  for (int k = 0; k < 100; ++k) {
    const double s1 = rng.uniform(0.1, num::pi - 0.2);
    const double s2 = s1 + rng.uniform(1e-7, 0.05);
    CHECK(t1.x_of_s(s1) < t1.x_of_s(s2));
  }
}

TEST_CASE("sphere chart conformal factor is sech") {
  const CylindricalChart ch = CylindricalChart::from_profile(sphere_profile(), cls_of(0));
  CHECK(ch.open_lo());
  CHECK(ch.open_hi());
  CHECK(std::isinf(ch.base_offset()));
  for (double x : {-6.0, -2.0, -0.3, 0.0, 1.0, 4.0, 7.5})
    CHECK(std::abs(ch.sigma(x) - 1.0 / std::cosh(x)) < 1e-6);
}

TEST_CASE("flat profile gives a constant chart factor") {
  const CylindricalChart ch = CylindricalChart::from_profile(const_profile(1.0, -12.0, 12.0),
                                                             cls_of(6));
  for (double x : {-7.0, 0.0, 3.3}) CHECK(ch.sigma(x) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("torus chart is periodic with the right modulus and factor") {
  const CylindricalChart ch = CylindricalChart::from_profile(torus_profile(), cls_of(3));
  REQUIRE(ch.periodic());
  CHECK(std::abs(ch.period() - num::two_pi) < 1e-10);
  CHECK(std::abs(ch.modulus() - 1.0) < 1e-10);
  CHECK(std::abs(ch.sigma(0.0) - (std::sqrt(2.0) + 1.0)) < 1e-10);
  // closure across the identification
  num::Rng rng(5);
  for (int k = 0; k < 64; ++k) {
    const double x = rng.uniform(0.0, num::two_pi);
    CHECK(std::abs(ch.sigma(x + ch.period()) - ch.sigma(x)) < 1e-10);
  }
  // cross-check the period against the modulus formula exp(-T1(2pi))
  CHECK(std::exp(-ch.period()) == doctest::Approx(std::exp(-num::two_pi)).epsilon(1e-8));
}

TEST_CASE("polar transition: flat annulus, round sphere, flat cylinder") {
  SurfaceClassIndex c2;
  c2.i = 2;
  c2.rho = std::exp(-1.0);
  const CylindricalChart ann = CylindricalChart::from_polar(
      flat_radial_factor(std::exp(-1.0), 1.0), c2);
  CHECK(ann.window_lo() == doctest::Approx(0.0));
  CHECK(ann.window_hi() == doctest::Approx(1.0));
  for (double x : {0.1, 0.5, 0.9})
    CHECK(std::abs(ann.sigma(x) - std::exp(-x)) < 1e-14);

  const CylindricalChart sph =
      CylindricalChart::from_polar(round_sphere_radial_factor(), cls_of(0));
  for (double x : {-5.0, -1.0, 0.0, 2.0, 6.0})
    CHECK(std::abs(sph.sigma(x) - 1.0 / std::cosh(x)) < 1e-12);

  const CylindricalChart cyl = CylindricalChart::from_polar(inverse_r_radial_factor(), cls_of(6));
  for (double x : {-3.0, 0.0, 4.0}) CHECK(std::abs(cyl.sigma(x) - 1.0) < 1e-14);
}

TEST_CASE("profile route and polar route agree up to the base translation") {
  const CylindricalChart a = CylindricalChart::from_profile(sphere_profile(), cls_of(0));
  const CylindricalChart b =
      CylindricalChart::from_polar(round_sphere_radial_factor(), cls_of(0));
  // both are centered (equator base / |z| = 1), so the translation is zero here
  for (double x : {-3.0, -1.1, 0.0, 0.7, 2.9})
    CHECK(std::abs(a.sigma(x) - b.sigma(x)) < 1e-6);
}

TEST_CASE("pullback metric factors through the scaling") {
  // sigma_i(T1(s)) = (tau/2pi) f(s) and dT1/ds = (2pi/tau) a / f
  const WarpedProfile w = torus_profile();
  const CylindricalChart ch = CylindricalChart::from_profile(w, cls_of(3));
  num::Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const double s = rng.uniform(0.0, num::two_pi);
    const double x = ch.x1_of_s(s);
    CHECK(std::abs(ch.sigma(x) - w.f.value(s)) < 1e-10);
    const double h = 1e-6;
    const double dT1 = (ch.x1_of_s(s + h) - ch.x1_of_s(s - h)) / (2.0 * h);
    CHECK(std::abs(dT1 - w.a / w.f.value(s)) < 1e-7);
  }
}

TEST_CASE("window queries outside the chart raise OutOfWindow") {
  const CylindricalChart ch = CylindricalChart::from_profile(sphere_profile(), cls_of(0));
  CHECK_THROWS_AS(ch.sigma(ch.window_hi() + 1.0), Error);
  CHECK_THROWS_AS(ch.sigma(ch.window_lo() - 1.0), Error);
}

TEST_CASE("chart derivative tables are consistent with finite differences") {
  const CylindricalChart ch = CylindricalChart::from_profile(sphere_profile(), cls_of(0));
  for (double x : {-2.0, -0.5, 0.0, 1.3, 3.0}) {
    const double h = 1e-5;
    const double d1_fd = (ch.sigma(x + h) - ch.sigma(x - h)) / (2.0 * h);
    const double d2_fd = (ch.sigma(x + h) - 2.0 * ch.sigma(x) + ch.sigma(x - h)) / (h * h);
    CHECK(std::abs(ch.dsigma(x) - d1_fd) < 1e-8);
    CHECK(std::abs(ch.d2sigma(x) - d2_fd) < 1e-5);
  }
}

TEST_CASE("w_map and w_inv round trip modulo the period") {
  CHECK(std::abs(w_map({0.0, 0.0}) - std::complex<double>(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(w_map({0.0, num::pi}) - std::complex<double>(-1.0, 0.0)) < 1e-15);
  CHECK_THROWS_AS(w_inv({0.0, 0.0}), Error);
  num::Rng rng(99);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const ChartPoint p{rng.uniform(-3.0, 3.0), rng.uniform(0.0, num::two_pi)};
    const ChartPoint q = w_inv(w_map(p));
    double d2 = std::fmod(std::abs(q.x2 - p.x2), num::two_pi);
    d2 = std::min(d2, num::two_pi - d2);
    worst = std::max(worst, std::max(std::abs(q.x1 - p.x1), d2));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("strip identification maps the boundary lines onto the circle") {
  CHECK(std::abs(strip_to_disc({num::pi / 2, 0.0})) < 1e-15);  // strip center -> disc center
  for (double t : {-2.0, -0.3, 0.5, 1.7}) {
    CHECK(std::abs(std::abs(strip_to_disc({0.0, t})) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(strip_to_disc({num::pi, t})) - 1.0) < 1e-12);
  }
  // the two removed boundary points are the ends
  CHECK(std::abs(strip_to_disc({num::pi / 2, 20.0}) - std::complex<double>(1.0, 0.0)) < 1e-8);
  CHECK(std::abs(strip_to_disc({num::pi / 2, -20.0}) - std::complex<double>(-1.0, 0.0)) < 1e-8);
}
