#include "meridian/cli_ops.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "meridian/geodesic.hpp"

namespace meridian {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_out(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) return;
  std::ofstream out(cfg.out_path);
  if (!out) fail(Err::ParseError, "cannot write '" + cfg.out_path + "'");
  out << text;
}

std::string chart_header(const BuiltSurface& b) {
  const CylindricalChart& ch = *b.chart;
  std::string head = "# class_i=" + std::to_string(ch.cls.i) + " tau=" + fmt(ch.cls.tau);
  if (ch.cls.rho) head += " rho=" + fmt(*ch.cls.rho);
  if (ch.periodic()) {
    head += " modulus_A=" + fmt(ch.modulus());
    head += " rho_computed=" + fmt(std::exp(-ch.period()));
  }
  head += " base_offset=" + fmt(ch.base_offset());
  if (b.greens.pot) head += " area=" + fmt(b.greens.pot->area);
  head += "\n";
  return head;
}

CmdResult input_error(const std::string& what) {
  CmdResult r;
  r.exit_code = 2;
  r.summary = what;
  return r;
}

}  // namespace

BuiltSurface build_pipeline(const RunConfig& cfg) {
  BuiltSurface b;
  b.spec = load_surface_spec(cfg.spec_path);
  const auto diags = validate_class(b.spec);
  if (!diags.empty()) {
    std::string msg = "class declaration inconsistent with the payload:";
    for (const auto& d : diags) msg += " [" + d.check + "] " + d.message;
    fail(Err::InvalidSpec, msg);
  }

  ChartOptions opt;
  opt.window = cfg.chart_window;
  if (cfg.window) opt.window = std::max({opt.window, std::abs((*cfg.window)[0]),
                                         std::abs((*cfg.window)[1])});

  std::shared_ptr<CylindricalChart> chart;
  switch (b.spec.kind) {
    case SurfaceSpec::Kind::Revolution: {
      Generatrix g = arc_length_normalize(*b.spec.generatrix);
      WarpedProfile prof = meridian_of_revolution(g);
      chart = std::make_shared<CylindricalChart>(
          CylindricalChart::from_profile(prof, b.spec.cls, opt));
      break;
    }
    case SurfaceSpec::Kind::RadialConformal:
      chart = std::make_shared<CylindricalChart>(
          CylindricalChart::from_polar(*b.spec.sigma, b.spec.cls, opt));
      break;
    case SurfaceSpec::Kind::Warped:
      chart = std::make_shared<CylindricalChart>(
          CylindricalChart::from_profile(*b.spec.profile, b.spec.cls, opt));
      break;
  }
  b.chart = chart;

  GreensOptions gopt;
  gopt.prime_tol = cfg.prime_tol;
  gopt.gamma_end = cfg.gamma_end;
  b.greens = make_greens(b.chart, gopt);
  return b;
}

CmdResult cmd_chart(const RunConfig& cfg) {
  CmdResult r;
  try {
    BuiltSurface b = build_pipeline(cfg);
    const CylindricalChart& ch = *b.chart;
    std::string csv = chart_header(b);
    csv += "s,x1,sigma\n";
    const int n = std::max(2, cfg.n1);
    for (int k = 0; k < n; ++k) {
      const double x1 = ch.window_lo() + (ch.window_hi() - ch.window_lo()) * k / (n - 1);
      double s = std::nan("");
      if (ch.has_profile()) {
        s = ch.s_of_x1(x1);
      } else {
        s = x1;  // no profile parameter; report the chart abscissa
      }
      csv += fmt(s) + "," + fmt(x1) + "," + fmt(ch.sigma(x1)) + "\n";
    }
    r.output = csv;
    write_out(cfg, csv);
    r.summary = "class " + std::to_string(ch.cls.i) + ", tau " + fmt(ch.cls.tau);
    if (ch.periodic())
      r.summary += ", rho " + fmt(std::exp(-ch.period())) + ", A " + fmt(ch.modulus());
    if (b.greens.pot) r.summary += ", area " + fmt(b.greens.pot->area);
  } catch (const Error& e) {
    return input_error(e.what());
  }
  return r;
}

CmdResult cmd_green(const RunConfig& cfg) {
  CmdResult r;
  try {
    BuiltSurface b = build_pipeline(cfg);
    const CylindricalChart& ch = *b.chart;
    double x1_lo = ch.window_lo(), x1_hi = ch.window_hi(), x2_lo = 0.0, x2_hi = num::two_pi;
    if (cfg.window) {
      x1_lo = (*cfg.window)[0];
      x1_hi = (*cfg.window)[1];
      x2_lo = (*cfg.window)[2];
      x2_hi = (*cfg.window)[3];
    }
    if (cfg.n1 < 2 || cfg.n2 < 2) return input_error("grid must be at least 2x2");
    std::string csv = chart_header(b);
    csv += "# x0=" + fmt(cfg.x0_1) + "," + fmt(cfg.x0_2) +
           " prime_N=" + std::to_string(b.greens.prime.N) + "\n";
    csv += "x1,x2,G\n";
    const ChartPoint x0{cfg.x0_1, cfg.x0_2};
    for (int j = 0; j < cfg.n1; ++j) {
      const double x1 = x1_lo + (x1_hi - x1_lo) * j / (cfg.n1 - 1);
      for (int l = 0; l < cfg.n2; ++l) {
        const double x2 = x2_lo + (x2_hi - x2_lo) * l / (cfg.n2 - 1);
        std::string val = "nan";
        try {
          val = fmt(greens(b.greens, {x1, x2}, x0));
        } catch (const Error& e) {
          if (e.code() != Err::CoincidentPoints && e.code() != Err::AtZeroOfPrime) throw;
        }
        csv += fmt(x1) + "," + fmt(x2) + "," + val + "\n";
      }
    }
    r.output = csv;
    write_out(cfg, csv);
    r.summary = "G grid " + std::to_string(cfg.n1) + "x" + std::to_string(cfg.n2) +
                ", prime N " + std::to_string(b.greens.prime.N);
  } catch (const Error& e) {
    return input_error(e.what());
  }
  return r;
}

CmdResult cmd_field(const RunConfig& cfg) {
  CmdResult r;
  try {
    BuiltSurface b = build_pipeline(cfg);
    const CylindricalChart& ch = *b.chart;
    double x1_lo = ch.window_lo(), x1_hi = ch.window_hi(), x2_lo = 0.0, x2_hi = num::two_pi;
    if (cfg.window) {
      x1_lo = (*cfg.window)[0];
      x1_hi = (*cfg.window)[1];
      x2_lo = (*cfg.window)[2];
      x2_hi = (*cfg.window)[3];
    }
    if (cfg.n1 < 2 || cfg.n2 < 2) return input_error("grid must be at least 2x2");

    std::function<double(ChartPoint)> f;
    if (cfg.field == "K") {
      f = [&](ChartPoint p) { return gaussian_curvature(ch, p.x1); };
    } else if (cfg.field == "speed") {
      f = [&](ChartPoint p) { return killing_speed(ch, p.x1); };
    } else if (cfg.field == "pressure") {
      f = [&](ChartPoint p) { return killing_pressure(ch, p.x1); };
    } else if (cfg.field == "vorticity") {
      f = [&](ChartPoint p) { return vorticity(ch, p.x1); };
    } else if (cfg.field == "convolution") {
      GridSpec gs;
      gs.n1 = cfg.n1;
      gs.n2 = cfg.n2;
      gs.x1_lo = x1_lo;
      gs.x1_hi = x1_hi;
      ScalarField conv = convolve_curvature(b.greens, ch, gs);
      std::string csv = chart_header(b);
      csv += "x1,x2,value\n";
      for (int j = 0; j < conv.n1; ++j) {
        const double x1 = conv.x1_lo + (j + 0.5) * (conv.x1_hi - conv.x1_lo) / conv.n1;
        for (int l = 0; l < conv.n2; ++l) {
          const double x2 = (l + 0.5) * num::two_pi / conv.n2;
          csv += fmt(x1) + "," + fmt(x2) + "," + fmt(conv.grid[std::size_t(j) * conv.n2 + l]) +
                 "\n";
        }
      }
      r.output = csv;
      write_out(cfg, csv);
      r.summary = "convolution grid written";
      return r;
    } else {
      return input_error("unknown field '" + cfg.field + "'");
    }

    std::string csv = chart_header(b);
    csv += "x1,x2,value\n";
    for (int j = 0; j < cfg.n1; ++j) {
      const double x1 = x1_lo + (x1_hi - x1_lo) * j / (cfg.n1 - 1);
      for (int l = 0; l < cfg.n2; ++l) {
        const double x2 = x2_lo + (x2_hi - x2_lo) * l / (cfg.n2 - 1);
        csv += fmt(x1) + "," + fmt(x2) + "," + fmt(f({x1, x2})) + "\n";
      }
    }
    r.output = csv;
    write_out(cfg, csv);
    r.summary = cfg.field + " grid written";
  } catch (const Error& e) {
    return input_error(e.what());
  }
  return r;
}

CmdResult cmd_verify(const RunConfig& cfg) {
  CmdResult r;
  try {
    BuiltSurface b = build_pipeline(cfg);
    VerificationReport rep = run_suite(b.greens);
    r.output = rep.to_text();
    write_out(cfg, r.output);
    int failed = 0;
    for (const auto& c : rep.checks)
      if (!c.pass) ++failed;
    r.summary = std::to_string(rep.checks.size()) + " checks, " + std::to_string(failed) +
                " failed";
    r.exit_code = rep.all_pass() ? 0 : 1;
  } catch (const Error& e) {
    return input_error(e.what());
  }
  return r;
}

}  // namespace meridian
