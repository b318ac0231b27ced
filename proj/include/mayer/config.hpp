#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mayer/beam.hpp"
#include "mayer/errors.hpp"
#include "mayer/trajectory.hpp"

namespace mayer {

/// Flat "section.key = value" configuration with registered defaults.
/// Unknown keys are a hard error, both in files and in --set overrides.
class RunConfig {
 public:
  static RunConfig defaults();

  /// Parse a UTF-8 config file: one "section.key = value" per line,
  /// '#' starts a comment, blank lines ignored.
  void load_file(const std::string& path);
  void set(const std::string& key, const std::string& value);

  double get_double(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
  std::string get_string(const std::string& key) const;

  /// All resolved entries, sorted by key, for provenance headers.
  std::vector<std::string> header_lines(const std::string& prefix = "# ") const;

  BeamParams beam() const;
  SlitConfig slits() const;
  IntegratorConfig integrator() const;
  double madelung_step() const;
  double density_floor() const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace mayer
