#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "rodsim/diagnostics.hpp"
#include "rodsim/engine3d.hpp"

namespace rodsim {

namespace fs = std::filesystem;

/// Formats with 17 significant digits.
std::string fmt17(double v);

extern const char* const kDiagnosticsHeader;
extern const char* const kSnapshotHeader;
extern const char* const kElementSnapshotHeader;

void write_diagnostics_csv(const fs::path& path, const std::vector<DiagnosticsRecord>& records);

/// Writes snap_<step>.csv and snapel_<step>.csv into `dir`. Both files carry
/// extra trailing columns (ymom_*, s0) so that a run can be restarted
/// exactly from them.
void write_snapshot(const fs::path& dir, const RodState3D& state, const Mesh& mesh);

/// Reads a snapshot pair written by write_snapshot. The state time is
/// step * dt.
RodState3D read_snapshot(const fs::path& dir, long step, double dt, const Mesh& mesh);

/// Long-format kymograph files: (u, t, alpha, beta) and (u_mid, t, gamma).
class KymographWriter {
 public:
  explicit KymographWriter(const fs::path& dir);
  void add(const KymographSlice& slice);

 private:
  std::ofstream vertex_;
  std::ofstream element_;
};

std::string snapshot_name(long step);
std::string element_snapshot_name(long step);

}  // namespace rodsim
