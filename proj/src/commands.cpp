#include "rodsim/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "rodsim/output.hpp"
#include "rodsim/solver2d.hpp"

#ifndef RODSIM_VERSION
#define RODSIM_VERSION "unknown"
#endif

namespace rodsim {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string platform_note() {
  std::string s;
#if defined(__linux__)
  s = "linux";
#elif defined(__APPLE__)
  s = "macos";
#else
  s = "other";
#endif
#if defined(__clang__)
  s += ", clang " __clang_version__;
#elif defined(__GNUC__)
  s += ", gcc " __VERSION__;
#endif
  return s;
}

json manifest_base(const RunConfig& rc, const std::string& command) {
  json m;
  m["command"] = command;
  m["version"] = RODSIM_VERSION;
  m["platform"] = platform_note();
  json cfg = json::object();
  for (const auto& [k, v] : rc.entries) cfg[k] = v;
  m["config"] = cfg;
  m["runs"] = json::array();
  return m;
}

void write_manifest(const fs::path& dir, const json& m) {
  std::ofstream f(dir / "manifest.json");
  f << m.dump(2) << '\n';
}

fs::path prepare_dir(const fs::path& dir) {
  fs::create_directories(dir);
  return dir;
}

// Runs with a config error mapped to exit 2 and numerical failures to 3.
template <class F>
int guarded(std::ostream& log, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const RodError& e) {
    log << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const fs::filesystem_error& e) {
    log << "io error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

struct TimedRun3D {
  RunResult result;
  double seconds;
};

TimedRun3D timed_run_3d(const SimConfig& cfg) {
  const auto t0 = Clock::now();
  RunResult r = run(cfg);
  return {std::move(r), seconds_since(t0)};
}

}  // namespace

void apply_overrides(RunConfig& rc, const CommandOptions& opts) {
  if (opts.renormalize_frame) {
    if (rc.sim.renormalize.every == 0 && rc.sim.renormalize.threshold == 0.0) {
      rc.sim.renormalize.threshold = 1e-10;
    }
    rc.entries["frame.renormalize_threshold"] = fmt17(rc.sim.renormalize.threshold);
  }
}

RunSummary summarize(const std::vector<DiagnosticsRecord>& records) {
  RunSummary s;
  for (const auto& r : records) {
    s.max_f1 = std::max(s.max_f1, r.f1);
    s.max_f2 = std::max(s.max_f2, r.f2);
    s.max_df2 = std::max(s.max_df2, r.f2_increment);
  }
  return s;
}

std::vector<ConvergenceRow> convergence_table(const std::vector<ConvergenceRow>& rows) {
  std::vector<ConvergenceRow> out = rows;
  std::vector<double> err, dts;
  for (const auto& r : rows) {
    err.push_back(r.max_f1);
    dts.push_back(r.dt);
  }
  const auto rates = eoc(err, dts);
  for (std::size_t l = 0; l < out.size(); ++l) {
    out[l].eoc = l == 0 ? std::nullopt : std::optional<double>(rates[l - 1]);
  }
  return out;
}

int cmd_run(const CommandOptions& opts, std::ostream& log) {
  return guarded(log, [&] {
    RunConfig rc = load_config(opts.config_path);
    apply_overrides(rc, opts);
    const SimConfig& cfg = rc.sim;
    const fs::path dir = prepare_dir(opts.out_dir);
    json manifest = manifest_base(rc, "run");
    const Mesh mesh = uniform_mesh(cfg.n_vertices);
    const int snap = cfg.output.snapshot_stride;
    const int dstride = cfg.output.diagnostics_stride;
    const long total = cfg.n_steps();
    KymographWriter kymo(dir);
    std::vector<std::string> files = {"diagnostics.csv", "kymograph_vertex.csv",
                                      "kymograph_element.csv"};
    std::vector<DiagnosticsRecord> records;
    long first_step = 0;

    auto on_state = [&](const RodState3D& s, const DiagnosticsRecord& rec) {
      const bool last = s.step == total;
      if (s.step == first_step || s.step % dstride == 0 || last) {
        records.push_back(rec);
        kymo.add(kymograph_slice(s, mesh));
      }
      if (s.step == first_step || last || (snap > 0 && s.step % snap == 0)) {
        write_snapshot(dir, s, mesh);
        files.push_back(snapshot_name(s.step));
        files.push_back(element_snapshot_name(s.step));
      }
    };

    const auto t0 = Clock::now();
    if (rc.engine == Engine::TwoD) {
      if (opts.restart_dir) throw ConfigError("run.engine: restart is only supported for 3d");
      run_2d(cfg, [&](const RodState2D& s, const DiagnosticsRecord& rec) {
        on_state(embed_2d_in_3d(s, mesh), rec);
      });
    } else if (opts.restart_dir) {
      cfg.validate();
      const RodState3D start = read_snapshot(*opts.restart_dir, opts.restart_step, cfg.dt, mesh);
      if (opts.restart_step > total) throw ConfigError("restart step exceeds run.horizon / run.dt");
      first_step = opts.restart_step;
      run_from(cfg, mesh, start, total - first_step, on_state);
    } else {
      run(cfg, on_state);
    }
    const double secs = seconds_since(t0);
    write_diagnostics_csv(dir / "diagnostics.csv", records);
    manifest["runs"].push_back({{"engine", rc.engine == Engine::TwoD ? "2d" : "3d"},
                                {"dt", cfg.dt},
                                {"n_vertices", cfg.n_vertices},
                                {"steps", total - first_step},
                                {"files", files},
                                {"wall_seconds", secs}});
    write_manifest(dir, manifest);
    const auto sum = summarize(records);
    log << "run complete: " << (total - first_step) << " steps, max F1 " << fmt17(sum.max_f1)
        << ", max F2 " << fmt17(sum.max_f2) << ", " << secs << " s\n";
    return kExitOk;
  });
}

int cmd_converge(const CommandOptions& opts, std::ostream& log) {
  return guarded(log, [&] {
    RunConfig rc = load_config(opts.config_path);
    apply_overrides(rc, opts);
    if (opts.level_lo < 0 || opts.level_hi < opts.level_lo) {
      throw ConfigError("--levels: expected L0..L1 with 0 <= L0 <= L1");
    }
    const fs::path dir = prepare_dir(opts.out_dir);
    json manifest = manifest_base(rc, "converge");
    std::vector<ConvergenceRow> rows;
    for (int l = opts.level_lo; l <= opts.level_hi; ++l) {
      SimConfig cfg = SimConfig::at_level(rc.sim.scenario, l);
      cfg.horizon = rc.sim.horizon;
      cfg.length = rc.sim.length;
      cfg.solver = rc.sim.solver;
      cfg.renormalize = rc.sim.renormalize;
      cfg.freeze_preferred = rc.sim.freeze_preferred;
      const auto t0 = Clock::now();
      std::vector<DiagnosticsRecord> recs;
      if (rc.engine == Engine::TwoD) {
        recs = run_2d(cfg).records;
      } else {
        recs = run(cfg).records;
      }
      const double secs = seconds_since(t0);
      const std::string name = "diagnostics_level" + std::to_string(l) + ".csv";
      write_diagnostics_csv(dir / name, recs);
      const auto sum = summarize(recs);
      rows.push_back({l, cfg.dt, cfg.n_vertices, sum.max_f1, std::nullopt, sum.max_f2,
                      sum.max_df2});
      manifest["runs"].push_back({{"level", l},
                                  {"dt", cfg.dt},
                                  {"n_vertices", cfg.n_vertices},
                                  {"files", {name}},
                                  {"wall_seconds", secs}});
      log << "level " << l << " done in " << secs << " s\n";
    }
    rows = convergence_table(rows);
    std::ofstream f(dir / "convergence.csv");
    f << "dt,N,max_f1,eoc,max_f2,max_df2\n";
    for (const auto& r : rows) {
      f << fmt17(r.dt) << ',' << r.n_vertices << ',' << fmt17(r.max_f1) << ','
        << (r.eoc ? fmt17(*r.eoc) : "") << ',' << fmt17(r.max_f2) << ',' << fmt17(r.max_df2)
        << '\n';
      log << "dt=" << r.dt << " N=" << r.n_vertices << " maxF1=" << r.max_f1
          << " eoc=" << (r.eoc ? std::to_string(*r.eoc) : "-") << " maxF2=" << r.max_f2
          << " maxdF2=" << r.max_df2 << '\n';
    }
    write_manifest(dir, manifest);
    return kExitOk;
  });
}

int cmd_compare2d3d(const CommandOptions& opts, std::ostream& log) {
  return guarded(log, [&] {
    RunConfig rc = load_config(opts.config_path);
    apply_overrides(rc, opts);
    if (opts.level_lo < 0 || opts.level_hi < opts.level_lo) {
      throw ConfigError("--levels: expected L0..L1 with 0 <= L0 <= L1");
    }
    const fs::path dir = prepare_dir(opts.out_dir);
    json manifest = manifest_base(rc, "compare2d3d");
    std::ofstream f(dir / "compare2d3d.csv");
    f << "dt,N,com_difference,difference_per_step,time2d,time3d,ratio\n";
    for (int l = opts.level_lo; l <= opts.level_hi; ++l) {
      SimConfig cfg = SimConfig::at_level(rc.sim.scenario, l);
      cfg.horizon = rc.sim.horizon;
      cfg.length = rc.sim.length;
      cfg.solver = rc.sim.solver;
      cfg.freeze_preferred = rc.sim.freeze_preferred;
      cfg.output.diagnostics_stride = static_cast<int>(cfg.n_steps());
      auto t0 = Clock::now();
      const auto r2 = run_2d(cfg);
      const double time2d = seconds_since(t0);
      const auto r3 = timed_run_3d(cfg);
      const double diff = (r3.result.records.back().com - r2.records.back().com).norm();
      const double per_step = diff / static_cast<double>(cfg.n_steps());
      const double ratio = r3.seconds / time2d;
      f << fmt17(cfg.dt) << ',' << cfg.n_vertices << ',' << fmt17(diff) << ','
        << fmt17(per_step) << ',' << fmt17(time2d) << ',' << fmt17(r3.seconds) << ','
        << fmt17(ratio) << '\n';
      manifest["runs"].push_back({{"level", l},
                                  {"dt", cfg.dt},
                                  {"n_vertices", cfg.n_vertices},
                                  {"wall_seconds_2d", time2d},
                                  {"wall_seconds_3d", r3.seconds}});
      log << "level " << l << ": COM difference " << diff << ", time2d " << time2d
          << " s, time3d " << r3.seconds << " s, ratio " << ratio << '\n';
    }
    manifest["files"] = {"compare2d3d.csv"};
    write_manifest(dir, manifest);
    return kExitOk;
  });
}

}  // namespace rodsim
