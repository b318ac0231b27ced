#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mayer/commands.hpp"
#include "mayer/config.hpp"
#include "mayer/errors.hpp"

namespace {

struct CommonOpts {
  std::string config_file;
  std::vector<std::string> overrides;
  std::string out_dir = "out";
  long long rng_seed = -1;
};

void attach_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("--config", opts.config_file, "config file (section.key = value)");
  sub->add_option("--set", opts.overrides, "override, e.g. --set beam.k=200")
      ->allow_extra_args(false);
  sub->add_option("--out", opts.out_dir, "output directory");
  sub->add_option("--rng-seed", opts.rng_seed, "shorthand for --set rng.seed=N");
}

mayer::RunConfig resolve(const CommonOpts& opts) {
  mayer::RunConfig cfg = mayer::RunConfig::defaults();
  if (!opts.config_file.empty()) cfg.load_file(opts.config_file);
  for (const std::string& kv : opts.overrides) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos)
      throw mayer::ConfigError("--set expects key=value, got: " + kv);
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (opts.rng_seed >= 0) cfg.set("rng.seed", std::to_string(opts.rng_seed));
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mayer: two-slit trajectories, lattice field checks and "
               "variational diagnostics"};
  app.require_subcommand(1);

  using Cmd = int (*)(const mayer::RunConfig&, const std::string&);
  struct Entry {
    const char* name;
    const char* help;
    Cmd fn;
  };
  const Entry entries[] = {
      {"slits", "two-slit trajectory ensemble, density map and fringe report",
       mayer::cmd_slits},
      {"lattice-verify", "plane-wave residual convergence and kappa estimators",
       mayer::cmd_lattice_verify},
      {"caratheodory", "free-particle fundamental-equation and straightness checks",
       mayer::cmd_caratheodory},
      {"invert-current", "current-to-velocity inversion report",
       mayer::cmd_invert_current},
      {"fresnel", "paraxial propagation oracle vs the analytic beam",
       mayer::cmd_fresnel},
      {"all-checks", "run the full acceptance suite", mayer::cmd_all_checks},
  };

  CommonOpts opts;
  Cmd selected = nullptr;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    attach_common(sub, opts);
    sub->callback([&selected, &e] { selected = e.fn; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const mayer::RunConfig cfg = resolve(opts);
    return selected(cfg, opts.out_dir);
  } catch (const mayer::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
