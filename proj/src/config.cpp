#include "mayer/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace mayer {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

RunConfig RunConfig::defaults() {
  RunConfig cfg;
  // beam and slits; lengths in units of W0, c = 1
  cfg.values_["beam.k"] = "100";
  cfg.values_["beam.z0"] = "50";
  cfg.values_["beam.lambda"] = "0";  // 0 -> 1/k
  cfg.values_["slits.a"] = "3";
  cfg.values_["slits.curvature"] = "standard";  // or "paper-literal"
  cfg.values_["madelung.h_fd"] = "0";  // 0 -> min(W0, lambda)/100
  cfg.values_["madelung.floor_rel"] = "1e-12";
  // trajectory integration
  cfg.values_["integrator.dz"] = "0.025";  // z0/2000
  cfg.values_["integrator.z_screen"] = "100";
  cfg.values_["integrator.x_bounds"] = "15";
  cfg.values_["integrator.max_steps"] = "200000";
  cfg.values_["integrator.vz_min"] = "0.1";
  cfg.values_["seeds.n"] = "200";
  cfg.values_["seeds.x_min"] = "-5";
  cfg.values_["seeds.x_max"] = "5";
  // density map outputs
  cfg.values_["output.stride"] = "20";  // trajectory CSV decimation
  cfg.values_["density.nx"] = "400";
  cfg.values_["density.nz"] = "400";
  cfg.values_["report.z_far"] = "500";  // plane for the far-field fringe period
  // equivariance run
  cfg.values_["equiv.n"] = "20000";
  cfg.values_["equiv.bins"] = "40";
  cfg.values_["equiv.dz"] = "0.2";
  cfg.values_["rng.seed"] = "12345";
  // lattice suite
  cfg.values_["lattice.n"] = "16";
  cfg.values_["lattice.div_tol"] = "1e-9";
  // fresnel oracle
  cfg.values_["fresnel.samples"] = "4096";
  cfg.values_["fresnel.window"] = "20";
  cfg.values_["fresnel.z"] = "50";
  return cfg;
}

void RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected 'section.key = value'");
    set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void RunConfig::set(const std::string& key, const std::string& value) {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown config key: " + key);
  it->second = value;
}

double RunConfig::get_double(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown config key: " + key);
  char* end = nullptr;
  const double v = std::strtod(it->second.c_str(), &end);
  if (end == it->second.c_str() || *end != '\0')
    throw ConfigError("config key " + key + ": not a number: " + it->second);
  return v;
}

std::int64_t RunConfig::get_int(const std::string& key) const {
  const double v = get_double(key);
  const auto i = static_cast<std::int64_t>(v);
  if (double(i) != v) throw ConfigError("config key " + key + ": not an integer");
  return i;
}

std::string RunConfig::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown config key: " + key);
  return it->second;
}

std::vector<std::string> RunConfig::header_lines(const std::string& prefix) const {
  std::vector<std::string> out;
  out.reserve(values_.size());
  for (const auto& [k, v] : values_) out.push_back(prefix + k + " = " + v);
  return out;
}

BeamParams RunConfig::beam() const {
  const double lambda = get_double("beam.lambda");
  return BeamParams::from_z0_k(get_double("beam.z0"), get_double("beam.k"),
                               lambda > 0.0 ? lambda : 0.0);
}

SlitConfig RunConfig::slits() const {
  SlitConfig s;
  s.a = get_double("slits.a");
  if (s.a < 0.0) throw ConfigError("slits.a must be >= 0");
  const std::string f = get_string("slits.curvature");
  if (f == "standard")
    s.curvature_formula = CurvatureFormula::Standard;
  else if (f == "paper-literal")
    s.curvature_formula = CurvatureFormula::PaperLiteral;
  else
    throw ConfigError("slits.curvature must be 'standard' or 'paper-literal'");
  return s;
}

IntegratorConfig RunConfig::integrator() const {
  IntegratorConfig c;
  c.dz = get_double("integrator.dz");
  c.z_screen = get_double("integrator.z_screen");
  c.x_bounds = get_double("integrator.x_bounds");
  c.max_steps = static_cast<std::size_t>(get_int("integrator.max_steps"));
  c.vz_min = get_double("integrator.vz_min");
  return c;
}

double RunConfig::madelung_step() const {
  const double h = get_double("madelung.h_fd");
  return h > 0.0 ? h : default_fd_step(beam());
}

double RunConfig::density_floor() const {
  const double rel = get_double("madelung.floor_rel");
  const BeamParams p = beam();
  const SlitConfig s = slits();
  return rel * std::norm(slit_field(s.a, 0.0, p, s));
}

}  // namespace mayer
