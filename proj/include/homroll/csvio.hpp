#pragma once

#include <filesystem>
#include <string>

#include "homroll/ode.hpp"
#include "homroll/rolling.hpp"

namespace homroll {

// Shortest decimal that round-trips to the same 64-bit float.
std::string format_double(double value);
double parse_double(const std::string& text);

// Trajectory files: header t,v_0..,g_00..,S_00..[,gamma_00..], one row per
// state, shortest round-trip formatting.
void write_trajectory_csv(const std::filesystem::path& path, const RollingTrajectory& traj,
                          const SpaceInstance& instance);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<Vec> rows;
};

CsvTable read_csv(const std::filesystem::path& path);

// Control files: header t,u_0.., uniform time grid.
SteppedSolution read_control_csv(const std::filesystem::path& path, int expected_dim);
void write_control_csv(const std::filesystem::path& path, const SteppedSolution& samples);

}  // namespace homroll
