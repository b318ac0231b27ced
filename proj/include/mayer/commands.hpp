#pragma once

#include <string>
#include <vector>

#include "mayer/config.hpp"

namespace mayer {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Young-setup run: trajectories.csv, density.csv, density.pgm, report.txt.
int cmd_slits(const RunConfig& cfg, const std::string& out_dir);

/// Plane-wave residual and kappa-estimator suite at spacings h and h/2.
int cmd_lattice_verify(const RunConfig& cfg, const std::string& out_dir);

/// Free-particle fundamental-equation, straightness and Euler-Lagrange checks.
int cmd_caratheodory(const RunConfig& cfg, const std::string& out_dir);

/// Prints M, both determinant values and the recovered velocity family.
int cmd_invert_current(const RunConfig& cfg, const std::string& out_dir);

/// Paraxial-propagation oracle vs the analytic beam; writes field CSVs.
int cmd_fresnel(const RunConfig& cfg, const std::string& out_dir);

/// Runs every acceptance check; exit status is nonzero iff any fails.
int cmd_all_checks(const RunConfig& cfg, const std::string& out_dir);

/// The acceptance checks behind cmd_all_checks, one result per criterion.
std::vector<CheckResult> acceptance_checks(const RunConfig& cfg,
                                           const std::string& out_dir);

}  // namespace mayer
