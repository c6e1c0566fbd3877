// meridian - command implementations behind the CLI; the binary itself only
// parses flags, so library calls and CLI runs produce identical bytes
#pragma once

#include <optional>
#include <string>

#include "meridian/fields.hpp"
#include "meridian/specfile.hpp"
#include "meridian/verify.hpp"

namespace meridian {

struct RunConfig {
  std::string spec_path;
  int n1 = 64, n2 = 64;
  std::optional<std::array<double, 4>> window;  // x1_lo, x1_hi, x2_lo, x2_hi
  double x0_1 = 0.0, x0_2 = 0.0;
  std::string out_path;
  double tol = 1e-10;
  double prime_tol = 1e-12;
  std::optional<double> gamma_end;
  double chart_window = 8.0;
  std::string field = "K";  // K | speed | pressure | vorticity | convolution
};

struct BuiltSurface {
  SurfaceSpec spec;
  std::shared_ptr<const CylindricalChart> chart;
  GreensEvaluator greens;
};

// spec file -> chart -> evaluator, running the class-consistency diagnostics.
BuiltSurface build_pipeline(const RunConfig& cfg);

struct CmdResult {
  int exit_code = 0;        // 0 ok, 1 verification failure, 2 input error
  std::string output;       // the written document (also saved to out_path if set)
  std::string summary;      // one-paragraph stdout text
};

CmdResult cmd_chart(const RunConfig& cfg);
CmdResult cmd_green(const RunConfig& cfg);
CmdResult cmd_field(const RunConfig& cfg);
CmdResult cmd_verify(const RunConfig& cfg);

}  // namespace meridian
