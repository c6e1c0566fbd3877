#include "meridian/specfile.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace meridian {

namespace {

struct Cursor {
  const std::string& origin;
  int line = 0;
  [[noreturn]] void die(const std::string& msg) const {
    fail(Err::ParseError, origin + ":" + std::to_string(line) + ": " + msg);
  }
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_num(const Cursor& cur, const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (trim(s.substr(used)).size()) cur.die("trailing junk after number '" + s + "'");
    return v;
  } catch (const std::exception&) {
    cur.die("expected a number, got '" + s + "'");
  }
}

}  // namespace

SurfaceSpec parse_surface_spec(std::istream& in, const std::string& origin) {
  Cursor cur{origin};
  std::map<std::string, std::pair<std::string, int>> scalars;
  std::map<std::string, std::vector<std::pair<std::vector<double>, int>>> blocks;
  std::string section;

  std::string raw;
  while (std::getline(in, raw)) {
    ++cur.line;
    const auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') cur.die("unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) cur.die("empty section name");
      blocks[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq != std::string::npos) {
      const std::string key = trim(line.substr(0, eq));
      const std::string val = trim(line.substr(eq + 1));
      if (key.empty() || val.empty()) cur.die("malformed key = value line");
      if (scalars.count(key)) cur.die("duplicate key '" + key + "'");
      scalars[key] = {val, cur.line};
      continue;
    }
    // numeric row inside a section
    if (section.empty()) cur.die("numeric row outside any [section]");
    std::istringstream row(line);
    std::vector<double> nums;
    std::string tok;
    while (row >> tok) nums.push_back(parse_num(cur, tok));
    blocks[section].push_back({nums, cur.line});
  }

  auto get = [&](const std::string& key) -> std::optional<std::string> {
    auto it = scalars.find(key);
    if (it == scalars.end()) return std::nullopt;
    return it->second.first;
  };
  auto get_num = [&](const std::string& key) -> std::optional<double> {
    auto it = scalars.find(key);
    if (it == scalars.end()) return std::nullopt;
    Cursor c{origin, it->second.second};
    return parse_num(c, it->second.first);
  };
  auto require = [&](const char* key) {
    auto v = get(key);
    if (!v) {
      cur.line = 0;
      cur.die(std::string("missing required field '") + key + "'");
    }
    return *v;
  };

  SurfaceSpec spec;
  const std::string kind = require("kind");
  if (kind == "revolution")
    spec.kind = SurfaceSpec::Kind::Revolution;
  else if (kind == "radial_conformal")
    spec.kind = SurfaceSpec::Kind::RadialConformal;
  else if (kind == "warped")
    spec.kind = SurfaceSpec::Kind::Warped;
  else {
    cur.line = scalars["kind"].second;
    cur.die("unknown kind '" + kind + "'");
  }

  spec.cls.i = int(get_num("class.i").value_or(-1));
  if (spec.cls.i < 0) {
    cur.line = 0;
    cur.die("missing required field 'class.i'");
  }
  spec.cls.tau = get_num("class.tau").value_or(num::two_pi);
  spec.cls.rho = get_num("class.rho");
  spec.cls.gamma_end = get_num("class.gamma_end");
  spec.cls.varpi = get_num("class.varpi");
  try {
    spec.cls.validate();
  } catch (const Error& e) {
    cur.line = 0;
    cur.die(e.what());
  }

  auto block_rows = [&](const std::string& name, std::size_t width) {
    std::vector<std::vector<double>> rows;
    auto it = blocks.find(name);
    if (it == blocks.end()) return rows;
    for (const auto& [nums, ln] : it->second) {
      if (nums.size() != width) {
        Cursor c{origin, ln};
        c.die("expected " + std::to_string(width) + " columns in [" + name + "]");
      }
      rows.push_back(nums);
    }
    return rows;
  };

  if (spec.kind == SurfaceSpec::Kind::Revolution) {
    if (auto prim = get("generatrix.primitive")) {
      if (*prim == "sphere") {
        spec.generatrix = sphere_generatrix();
      } else if (*prim == "torus") {
        const double R = get_num("generatrix.param.R").value_or(std::sqrt(2.0));
        spec.generatrix = torus_generatrix(R);
      } else if (*prim == "cylinder") {
        spec.generatrix = cylinder_generatrix(get_num("generatrix.param.L").value_or(4.0));
      } else if (*prim == "catenoid") {
        spec.generatrix =
            arc_length_normalize(catenoid_generatrix(get_num("generatrix.param.L").value_or(2.0)));
      } else if (*prim == "cone") {
        spec.generatrix = cone_generatrix(get_num("generatrix.param.alpha").value_or(0.5),
                                          get_num("generatrix.param.L").value_or(4.0));
      } else {
        cur.line = scalars["generatrix.primitive"].second;
        cur.die("unknown generatrix primitive '" + *prim + "'");
      }
    } else {
      auto rows = block_rows("generatrix.samples", 3);
      if (rows.empty()) {
        cur.line = 0;
        cur.die("revolution spec needs generatrix.primitive or [generatrix.samples]");
      }
      std::vector<std::array<double, 3>> triples;
      for (const auto& r : rows) triples.push_back({r[0], r[1], r[2]});
      spec.generatrix = arc_length_normalize(generatrix_from_samples(std::move(triples)));
    }
  } else if (spec.kind == SurfaceSpec::Kind::RadialConformal) {
    if (auto prim = get("sigma.primitive")) {
      if (*prim == "one") {
        double rmin = 0.0, rmax = 1.0;
        if (auto rng = get("sigma.range")) {
          std::istringstream ss(*rng);
          char comma;
          if (!(ss >> rmin >> comma >> rmax) || comma != ',') {
            cur.line = scalars["sigma.range"].second;
            cur.die("sigma.range wants 'rmin,rmax'");
          }
        }
        spec.sigma = flat_radial_factor(rmin, rmax);
      } else if (*prim == "round_sphere") {
        spec.sigma = round_sphere_radial_factor();
      } else if (*prim == "inverse_r") {
        spec.sigma = inverse_r_radial_factor();
      } else {
        cur.line = scalars["sigma.primitive"].second;
        cur.die("unknown sigma primitive '" + *prim + "'");
      }
    } else {
      auto rows = block_rows("sigma.samples", 2);
      if (rows.empty()) {
        cur.line = 0;
        cur.die("radial spec needs sigma.primitive or [sigma.samples]");
      }
      std::vector<std::array<double, 2>> pairs;
      for (const auto& r : rows) pairs.push_back({r[0], r[1]});
      spec.sigma = radial_factor_from_samples(pairs);
    }
  } else {
    auto rows = block_rows("profile.samples", 2);
    if (rows.empty()) {
      cur.line = 0;
      cur.die("warped spec needs [profile.samples]");
    }
    const double a = get_num("profile.a").value_or(1.0);
    std::vector<std::array<double, 2>> pairs;
    for (const auto& r : rows) pairs.push_back({r[0], r[1]});
    spec.profile = warped_profile_from_samples(pairs, a);
  }
  return spec;
}

SurfaceSpec load_surface_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::ParseError, "cannot open spec file '" + path + "'");
  return parse_surface_spec(in, path);
}

}  // namespace meridian
