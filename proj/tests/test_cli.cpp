#include <doctest.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "meridian/cli_ops.hpp"

using namespace meridian;

namespace {

std::string spec(const char* name) {
  return std::string(MERIDIAN_SPECS_DIR) + "/" + name + ".surf";
}

// split a CSV document into data rows, skipping '#' metadata and the column header
std::vector<std::vector<double>> rows_of(const std::string& csv) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || std::isalpha(line[0])) continue;
    std::vector<double> r;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) r.push_back(tok == "nan" ? std::nan("") : std::stod(tok));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_CASE("chart command reports the sech factor of the sphere") {
  RunConfig cfg;
  cfg.spec_path = spec("sphere");
  cfg.n1 = 33;
  const CmdResult r = cmd_chart(cfg);
  REQUIRE(r.exit_code == 0);
  const auto rows = rows_of(r.output);
  REQUIRE(rows.size() == 33);
  for (const auto& row : rows) {
    REQUIRE(row.size() == 3);
    CHECK(std::abs(row[2] - 1.0 / std::cosh(row[1])) < 1e-6);
  }
}

TEST_CASE("chart command prints the torus modulus") {
  RunConfig cfg;
  cfg.spec_path = spec("torus_sqrt2");
  const CmdResult r = cmd_chart(cfg);
  REQUIRE(r.exit_code == 0);
  const double rho = std::exp(-num::two_pi);
  const auto pos = r.summary.find("rho ");
  REQUIRE(pos != std::string::npos);
  const double printed = std::stod(r.summary.substr(pos + 4));
  CHECK(std::abs(printed - rho) < 1e-8);
  CHECK(r.output.find("rho_computed=") != std::string::npos);
}

TEST_CASE("chart command on the flat cylinder is constant") {
  RunConfig cfg;
  cfg.spec_path = spec("flat_cylinder");
  cfg.n1 = 9;
  const CmdResult r = cmd_chart(cfg);
  REQUIRE(r.exit_code == 0);
  for (const auto& row : rows_of(r.output)) CHECK(row[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("green command evaluates the plane kernel and masks the source") {
  RunConfig cfg;
  cfg.spec_path = spec("plane");
  cfg.n1 = 2;
  cfg.n2 = 2;
  cfg.window = {{0.0, std::log(2.0), 0.0, 0.0}};
  cfg.x0_1 = 0.0;
  cfg.x0_2 = 0.0;
  const CmdResult r = cmd_green(cfg);
  REQUIRE(r.exit_code == 0);
  const auto rows = rows_of(r.output);
  REQUIRE(rows.size() == 4);
  CHECK(std::isnan(rows[0][2]));  // grid node on the source
  CHECK(rows[2][2] == doctest::Approx(std::log(2.0) / num::two_pi).epsilon(1e-12));
}

TEST_CASE("field command exports a unit curvature grid for the sphere") {
  RunConfig cfg;
  cfg.spec_path = spec("sphere");
  cfg.field = "K";
  cfg.n1 = 5;
  cfg.n2 = 3;
  cfg.window = {{-2.0, 2.0, 0.0, num::two_pi}};
  const CmdResult r = cmd_field(cfg);
  REQUIRE(r.exit_code == 0);
  for (const auto& row : rows_of(r.output)) CHECK(std::abs(row[2] - 1.0) < 1e-6);

  cfg.spec_path = spec("flat_cylinder");
  cfg.field = "vorticity";
  const CmdResult v = cmd_field(cfg);
  REQUIRE(v.exit_code == 0);
  for (const auto& row : rows_of(v.output)) CHECK(std::abs(row[2]) < 1e-12);

  cfg.field = "nonsense";
  CHECK(cmd_field(cfg).exit_code == 2);
}

TEST_CASE("speed field at the equator image is one") {
  RunConfig cfg;
  cfg.spec_path = spec("sphere");
  cfg.field = "speed";
  cfg.n1 = 3;
  cfg.n2 = 2;
  cfg.window = {{-1.0, 1.0, 0.0, 1.0}};
  const CmdResult r = cmd_field(cfg);
  const auto rows = rows_of(r.output);
  for (const auto& row : rows)
    if (row[0] == 0.0) CHECK(std::abs(row[2] - 1.0) < 1e-10);
}

TEST_CASE("torus green grid repeats across both identifications") {
  RunConfig cfg;
  cfg.spec_path = spec("torus_sqrt2");
  cfg.n1 = 9;
  cfg.n2 = 9;
  cfg.x0_1 = 3.0;
  cfg.x0_2 = 3.0;
  cfg.window = {{0.0, num::two_pi, 0.0, num::two_pi}};  // one full period each way
  const CmdResult r = cmd_green(cfg);
  REQUIRE(r.exit_code == 0);
  const auto rows = rows_of(r.output);
  REQUIRE(rows.size() == 81);
  // first and last grid lines sit one lattice vector apart
  for (int l = 0; l < 9; ++l) {
    CHECK(std::abs(rows[l][2] - rows[8 * 9 + l][2]) < 1e-9);      // x1 + 2 pi A
    CHECK(std::abs(rows[l * 9][2] - rows[l * 9 + 8][2]) < 1e-9);  // x2 + 2 pi
  }
}

TEST_CASE("convolution on an open class reports divergence") {
  RunConfig cfg;
  cfg.spec_path = spec("plane");
  cfg.field = "convolution";
  cfg.n1 = 8;
  cfg.n2 = 8;
  CHECK(cmd_field(cfg).exit_code == 2);
}

TEST_CASE("verify command exits zero on the corpus and one on a corrupted modulus") {
  RunConfig cfg;
  cfg.spec_path = spec("torus_sqrt2");
  CHECK(cmd_verify(cfg).exit_code == 0);

  // corrupt the declared rho and expect the lattice check to fail
  std::ifstream in(spec("torus_sqrt2"));
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  const auto pos = text.find("class.rho = ");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, std::string("class.rho = 0.0018674427317079893").size(),
               "class.rho = 0.0009337213658539946");
  const std::string tmp = "corrupted_torus_test.surf";
  {
    std::ofstream out(tmp);
    out << text;
  }
  RunConfig bad;
  bad.spec_path = tmp;
  const CmdResult r = cmd_verify(bad);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("check.lattice_invariance.pass = false") != std::string::npos);
  std::remove(tmp.c_str());
}

TEST_CASE("the whole corpus verifies clean") {
  for (const char* name : {"plane", "disc", "annulus", "sphere", "torus_sqrt2", "flat_cylinder"}) {
    RunConfig cfg;
    cfg.spec_path = spec(name);
    const CmdResult r = cmd_verify(cfg);
    CAPTURE(name);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all_pass = true") != std::string::npos);
  }
}

TEST_CASE("missing or malformed input exits with code two") {
  RunConfig cfg;
  cfg.spec_path = "no_such_file.surf";
  CHECK(cmd_chart(cfg).exit_code == 2);
  CHECK(cmd_green(cfg).exit_code == 2);
  CHECK(cmd_verify(cfg).exit_code == 2);
}

TEST_CASE("command output is deterministic byte for byte") {
  RunConfig cfg;
  cfg.spec_path = spec("annulus");
  cfg.n1 = 17;
  const CmdResult a = cmd_chart(cfg);
  const CmdResult b = cmd_chart(cfg);
  CHECK(a.output == b.output);
  cfg.x0_1 = 0.5;
  cfg.x0_2 = 1.0;
  cfg.n2 = 7;
  const CmdResult g1 = cmd_green(cfg);
  const CmdResult g2 = cmd_green(cfg);
  CHECK(g1.output == g2.output);
}

TEST_CASE("out path writes the same bytes as the returned document") {
  RunConfig cfg;
  cfg.spec_path = spec("disc");
  cfg.n1 = 9;
  cfg.out_path = "chart_out_test.csv";
  const CmdResult r = cmd_chart(cfg);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(cfg.out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == r.output);
  std::remove(cfg.out_path.c_str());
}
