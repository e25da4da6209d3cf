#include <iostream>
#include <regex>

#include <CLI11.hpp>

#include "rodsim/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rodsim: viscoelastic Kirchhoff rod simulator"};
  app.require_subcommand(1);

  rodsim::CommandOptions opts;
  std::string levels = "0..4";
  long seed = 0;
  std::string restart;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config_path, "configuration file")->required();
    sub->add_option("--out", opts.out_dir, "output directory");
    sub->add_option("--seed", seed, "reserved; the dynamics are deterministic");
    sub->add_flag("--renormalize-frame", opts.renormalize_frame,
                  "renormalise the frame when the orthogonality defect exceeds 1e-10");
  };

  auto* run = app.add_subcommand("run", "run one simulation");
  add_common(run);
  run->add_option("--restart", restart, "continue from DIR:STEP written by an earlier run");

  auto* converge = app.add_subcommand("converge", "refinement study over levels");
  add_common(converge);
  converge->add_option("--levels", levels, "level range L0..L1");

  auto* compare = app.add_subcommand("compare2d3d", "planar versus 3-D engine comparison");
  add_common(compare);
  compare->add_option("--levels", levels, "level range L0..L1");

  CLI11_PARSE(app, argc, argv);

  static const std::regex range(R"((\d+)(?:\.\.(\d+))?)");
  std::smatch m;
  if (!std::regex_match(levels, m, range)) {
    std::cerr << "--levels: expected L0..L1, got '" << levels << "'\n";
    return rodsim::kExitConfig;
  }
  opts.level_lo = std::stoi(m[1]);
  opts.level_hi = m[2].matched ? std::stoi(m[2]) : opts.level_lo;

  if (!restart.empty()) {
    const auto colon = restart.rfind(':');
    if (colon == std::string::npos) {
      std::cerr << "--restart: expected DIR:STEP\n";
      return rodsim::kExitConfig;
    }
    opts.restart_dir = restart.substr(0, colon);
    try {
      opts.restart_step = std::stol(restart.substr(colon + 1));
    } catch (const std::exception&) {
      std::cerr << "--restart: STEP must be an integer\n";
      return rodsim::kExitConfig;
    }
  }

  if (*run) return rodsim::cmd_run(opts, std::cerr);
  if (*converge) return rodsim::cmd_converge(opts, std::cerr);
  return rodsim::cmd_compare2d3d(opts, std::cerr);
}
