#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "teamfuse/coverage_sim.hpp"
#include "teamfuse/fusion_solver.hpp"
#include "teamfuse/robot_system.hpp"
#include "teamfuse/spectral_partition.hpp"

namespace teamfuse::io {

/// Malformed document content (bad JSON, ragged CSV, wrong field types).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Robot systems: {"capabilities": [...], "environment": {"width", "height",
// "obstacles": [[[x,y],[x,y]], ...]}, "robots": [{"id", "position": [x,y],
// "capabilities": [...]}]}
std::string system_to_json(const RobotSystem& system);
RobotSystem system_from_json(const std::string& text);

// Dense matrices: one row per line, comma separated, 17 significant digits.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix_csv(std::istream& in);

// {"converged", "iterations", "residuals": [{"r1","r2","r3","r4","objective"}, ...]}
std::string solve_trace_to_json(const SolveResult& result);
/// Same document with the solver settings echoed under "config".
std::string solve_trace_to_json(const SolveResult& result, const SolverConfig& config);

// {"r", "team_of": [...]}
std::string assignment_to_json(const TeamAssignment& assignment);
TeamAssignment assignment_from_json(const std::string& text);

// method,n,k_capabilities,r,seed,detection,duplication
inline constexpr const char* kMetricsHeader =
    "method,n,k_capabilities,r,seed,detection,duplication";
std::string metrics_row(const MetricsReport& report);
void write_metrics_csv(std::ostream& out, const std::vector<MetricsReport>& reports,
                       bool with_header = true);
std::vector<MetricsReport> read_metrics_csv(std::istream& in);

// Region rasters as plain PGM (P2) with team ids as grey levels, or as a JSON
// array of rows.
void write_region_pgm(std::ostream& out, const RegionGrid& grid);
std::string region_to_json(const RegionGrid& grid);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace teamfuse::io
