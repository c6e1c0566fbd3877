#include <doctest.h>

#include <cmath>
#include <sstream>

#include "meridian/specfile.hpp"
#include "meridian/surface.hpp"

using namespace meridian;

namespace {

double speed_at(const Generatrix& g, double t) {
  return std::hypot(g.R1.deriv(t), g.R2.deriv(t));
}

Generatrix scaled_sphere(double c) {
  // (c sin t, c cos t) on [0, pi]: constant speed c
  Generatrix g;
  g.R1 = num::Func1::closed_form([c](double t) { return c * std::sin(t); },
                                 [c](double t) { return c * std::cos(t); },
                                 [c](double t) { return -c * std::sin(t); }, 0.0, num::pi);
  g.R2 = num::Func1::closed_form([c](double t) { return c * std::cos(t); },
                                 [c](double t) { return -c * std::sin(t); },
                                 [c](double t) { return -c * std::cos(t); }, 0.0, num::pi);
  g.theta_min = 0.0;
  g.theta_max = num::pi;
  g.speed = 1.0;  // wrong on purpose; normalize fixes it
  return g;
}

}  // namespace

TEST_CASE("unit sphere generatrix is already arc length") {
  const Generatrix g = arc_length_normalize(sphere_generatrix());
  CHECK(g.speed == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.R1.value(1.0) == doctest::Approx(std::sin(1.0)).epsilon(1e-14));
  CHECK(g.touches_axis_lo());
  CHECK(g.touches_axis_hi());
  CHECK(!g.closed);
}

TEST_CASE("constant-speed curve keeps its original speed") {
  // (2 sin t, 2 cos t): speed 2, length 2*pi
  const Generatrix g = arc_length_normalize(scaled_sphere(2.0));
  CHECK(g.speed == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(g.length() == doctest::Approx(num::two_pi).epsilon(1e-12));
}

TEST_CASE("torus generatrix is a closed unit-speed circle") {
  const Generatrix g = arc_length_normalize(torus_generatrix(std::sqrt(2.0)));
  CHECK(g.speed == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.closed);
  CHECK(g.R1.value(0.0) == doctest::Approx(std::sqrt(2.0) + 1.0));
}

TEST_CASE("catenoid normalization produces constant speed") {
  const Generatrix g = arc_length_normalize(catenoid_generatrix(2.0), 2001);
  const double span = g.theta_max - g.theta_min;
  // analytic length of (cosh t, t): int cosh = 2 sinh(2)
  CHECK(g.speed * span == doctest::Approx(2.0 * std::sinh(2.0)).epsilon(1e-10));
  double mean = 0.0, m2 = 0.0;
  const int n = 400;
  for (int k = 1; k < n; ++k) {
    const double t = g.theta_min + span * k / n;
    const double s = speed_at(g, t);
    mean += s;
    m2 += s * s;
  }
  mean /= (n - 1);
  m2 /= (n - 1);
  const double rel_sd = std::sqrt(std::max(m2 - mean * mean, 0.0)) / mean;
  CHECK(rel_sd < 1e-8);
  CHECK(std::abs(mean - g.speed) / g.speed < 1e-8);
}

TEST_CASE("normalization is idempotent") {
  const Generatrix g1 = arc_length_normalize(catenoid_generatrix(1.5), 1201);
  const Generatrix g2 = arc_length_normalize(g1, 1201);
  REQUIRE(g1.samples.size() == g2.samples.size());
  for (std::size_t k = 0; k < g1.samples.size(); ++k)
    for (int c = 0; c < 3; ++c)
      CHECK(std::abs(g1.samples[k][c] - g2.samples[k][c]) < 1e-12);
  CHECK(g1.speed == doctest::Approx(g2.speed).epsilon(1e-8));
}

TEST_CASE("degenerate and non-positive inputs are rejected") {
  Generatrix flat;
  flat.R1 = num::Func1::closed_form([](double) { return -1.0; }, [](double) { return 0.0; },
                                    [](double) { return 0.0; }, 0.0, 1.0);
  flat.R2 = num::Func1::closed_form([](double) { return 0.0; }, [](double) { return 0.0; },
                                    [](double) { return 0.0; }, 0.0, 1.0);
  flat.theta_min = 0.0;
  flat.theta_max = 1.0;
  CHECK_THROWS_AS(arc_length_normalize(flat), Error);

  CHECK_THROWS_WITH_AS(arc_length_normalize(cylinder_generatrix(0.0)),
                       doctest::Contains("span"), Error);
}

TEST_CASE("class index invariants are enforced") {
  SurfaceClassIndex c;
  c.i = 2;
  CHECK_THROWS_AS(c.validate(), Error);  // rho required
  c.rho = 1.2;
  CHECK_THROWS_AS(c.validate(), Error);  // out of (0,1)
  c.rho = 0.5;
  CHECK_NOTHROW(c.validate());
  c.varpi = 0.1;
  CHECK_THROWS_AS(c.validate(), Error);  // varpi only for class 3
  c.varpi.reset();
  c.gamma_end = 0.3;
  CHECK_THROWS_AS(c.validate(), Error);  // gamma_end not for class 2
}

TEST_CASE("validate_class flags topology mismatches") {
  SurfaceSpec s;
  s.kind = SurfaceSpec::Kind::Revolution;
  s.generatrix = arc_length_normalize(sphere_generatrix());
  s.cls.i = 0;
  CHECK(validate_class(s).empty());

  s.cls.i = 1;  // one axis contact expected, sphere has two
  auto d = validate_class(s);
  REQUIRE(!d.empty());
  CHECK(d.front().check == "TopologyMismatch");

  SurfaceSpec t;
  t.kind = SurfaceSpec::Kind::Revolution;
  t.generatrix = arc_length_normalize(torus_generatrix(std::sqrt(2.0)));
  t.cls.i = 1;
  d = validate_class(t);
  REQUIRE(!d.empty());
  CHECK(d.front().check == "TopologyMismatch");
  t.cls.i = 3;
  t.cls.rho = std::exp(-num::two_pi);
  CHECK(validate_class(t).empty());
}

TEST_CASE("validate_class accepts the bundled corpus") {
  for (const char* name : {"plane", "disc", "annulus", "sphere", "torus_sqrt2", "flat_cylinder"}) {
    const SurfaceSpec spec =
        load_surface_spec(std::string(MERIDIAN_SPECS_DIR) + "/" + name + ".surf");
    const auto diags = validate_class(spec);
    CAPTURE(name);
    CHECK(diags.empty());
  }
}

TEST_CASE("spec file parse errors carry line numbers") {
  {
    std::istringstream bad("kind = revolution\nclass.i = 0\n[generatrix.samples]\n1 2\n");
    CHECK_THROWS_WITH_AS(parse_surface_spec(bad, "bad.surf"), doctest::Contains("bad.surf:4"),
                         Error);
  }
  {
    std::istringstream bad("kind = pretzel\nclass.i = 0\n");
    CHECK_THROWS_WITH_AS(parse_surface_spec(bad, "k.surf"), doctest::Contains("k.surf:1"), Error);
  }
  {
    std::istringstream bad("kind = revolution\nclass.i = 3\nclass.rho = nope\n");
    CHECK_THROWS_WITH_AS(parse_surface_spec(bad, "r.surf"), doctest::Contains("r.surf:3"), Error);
  }
}

TEST_CASE("sampled generatrix round trip through the parser") {
  std::string text = "kind = revolution\nclass.i = 3\nclass.rho = 0.0018674427317079893\n"
                     "[generatrix.samples]\n";
  const int n = 600;
  const double R = std::sqrt(2.0);
  char row[96];
  for (int k = 0; k <= n; ++k) {
    const double t = num::two_pi * k / n;
    std::snprintf(row, sizeof row, "%.17g %.17g %.17g\n", t, R + std::cos(t), std::sin(t));
    text += row;
  }
  std::istringstream in(text);
  const SurfaceSpec spec = parse_surface_spec(in, "torus_samples");
  REQUIRE(spec.generatrix.has_value());
  CHECK(spec.generatrix->closed);
  CHECK(spec.generatrix->speed == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(validate_class(spec).empty());
}
