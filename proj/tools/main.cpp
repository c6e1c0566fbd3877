// meridian command line: chart / green / field / verify over surface spec files
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "meridian/cli_ops.hpp"

namespace {

void add_common(CLI::App* cmd, meridian::RunConfig& cfg, std::string& grid, std::string& window,
                std::string& x0) {
  cmd->add_option("--spec", cfg.spec_path, "surface spec file")->required();
  cmd->add_option("--grid", grid, "N1xN2 evaluation grid");
  cmd->add_option("--window", window, "x1_lo,x1_hi,x2_lo,x2_hi");
  cmd->add_option("--x0", x0, "source point u,v");
  cmd->add_option("--out", cfg.out_path, "output file");
  cmd->add_option("--tol", cfg.tol, "verification tolerance scale");
  cmd->add_option("--prime-tol", cfg.prime_tol, "prime function truncation tolerance");
  cmd->add_option("--gamma-end", cfg.gamma_end, "end circulation override");
  cmd->add_option("--chart-window", cfg.chart_window, "half-width of the chart window");
}

bool apply_common(meridian::RunConfig& cfg, const std::string& grid, const std::string& window,
                  const std::string& x0) {
  if (!grid.empty()) {
    if (std::sscanf(grid.c_str(), "%dx%d", &cfg.n1, &cfg.n2) != 2) {
      std::cerr << "bad --grid, want N1xN2\n";
      return false;
    }
  }
  if (!window.empty()) {
    std::array<double, 4> w{};
    if (std::sscanf(window.c_str(), "%lf,%lf,%lf,%lf", &w[0], &w[1], &w[2], &w[3]) != 4) {
      std::cerr << "bad --window, want a,b,c,d\n";
      return false;
    }
    cfg.window = w;
  }
  if (!x0.empty()) {
    if (std::sscanf(x0.c_str(), "%lf,%lf", &cfg.x0_1, &cfg.x0_2) != 2) {
      std::cerr << "bad --x0, want u,v\n";
      return false;
    }
  }
  return true;
}

int finish(const meridian::CmdResult& r) {
  if (!r.summary.empty()) std::cout << r.summary << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cylindrical charts and hydrodynamic Green's functions on Killing-symmetric "
               "surfaces"};
  app.require_subcommand(1);

  meridian::RunConfig cfg;
  std::string grid, window, x0, field = "K";

  CLI::App* c_chart = app.add_subcommand("chart", "export the chart table (s, x1, sigma)");
  add_common(c_chart, cfg, grid, window, x0);

  CLI::App* c_green = app.add_subcommand("green", "export a grid of G(., x0)");
  add_common(c_green, cfg, grid, window, x0);

  CLI::App* c_field = app.add_subcommand(
      "field", "export a scalar field grid (K, speed, pressure, vorticity, convolution)");
  add_common(c_field, cfg, grid, window, x0);
  c_field->add_option("--which", field, "field selector")->required();

  CLI::App* c_verify = app.add_subcommand("verify", "run the oracle suite for the spec's class");
  add_common(c_verify, cfg, grid, window, x0);

  CLI11_PARSE(app, argc, argv);
  if (!apply_common(cfg, grid, window, x0)) return 2;
  cfg.field = field;

  try {
    if (c_chart->parsed()) return finish(meridian::cmd_chart(cfg));
    if (c_green->parsed()) return finish(meridian::cmd_green(cfg));
    if (c_field->parsed()) return finish(meridian::cmd_field(cfg));
    if (c_verify->parsed()) {
      const meridian::CmdResult r = meridian::cmd_verify(cfg);
      if (!r.output.empty() && cfg.out_path.empty()) std::cout << r.output;
      return finish(r);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
