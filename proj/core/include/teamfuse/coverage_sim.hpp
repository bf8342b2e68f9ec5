#pragma once

#include <cstdint>
#include <numbers>
#include <span>
#include <random>
#include <string_view>
#include <vector>

#include "teamfuse/fusion_solver.hpp"
#include "teamfuse/relation_graph.hpp"
#include "teamfuse/robot_system.hpp"
#include "teamfuse/spectral_partition.hpp"

namespace teamfuse {

/// All simulator randomness comes from one engine seeded with the trial seed.
using Rng = std::mt19937_64;

struct SimConfig {
    std::size_t n_robots = 20;
    std::size_t n_capabilities = 3;
    std::size_t n_regions = 3;
    std::size_t n_events = 100;
    double comm_radius = 0.4 * std::numbers::sqrt2;  // 0.4 x diagonal of the unit square
    std::uint64_t seed = 0;
    Environment environment;
    SolverConfig solver = SolverConfig::uniform(3);

    /// Throws ValidationError on N < 2, r outside [1, N], zero capabilities
    /// or events, non-positive radius, or an invalid environment/solver.
    void validate() const;
};

/// Capability names used by generated systems: rgb, depth, audio, thermal,
/// lidar, then cap5, cap6, ...
std::vector<Capability> capability_names(std::size_t count);

struct Event {
    Position position;
    Capability event_type;

    friend bool operator==(const Event&, const Event&) = default;
};

enum class Method { Full, Baseline, Greedy };

std::string_view to_string(Method method);

struct MetricsReport {
    Method method = Method::Full;
    std::size_t n = 0;
    std::size_t k_capabilities = 0;
    std::size_t r = 0;
    std::uint64_t seed = 0;
    double detection_rate = 0.0;
    double duplication_rate = 0.0;
    bool solver_converged = true;  // always true for Greedy

    friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

/// Uniform positions (rejecting points closer than 1e-3 x diagonal to any
/// wall) and one uniformly drawn capability per robot.
RobotSystem generate_system(const SimConfig& config, Rng& rng);

/// config.n_events events with uniform positions and uniform types.
std::vector<Event> simulate_events(const SimConfig& config, Rng& rng);

/// Index of the robot closest to p; ties go to the lower id.
std::size_t nearest_robot(const RobotSystem& system, Position p);

/// Fraction of events whose nearest robot's team can sense the event type.
double detection_rate(const RobotSystem& system, const TeamAssignment& assignment,
                      const std::vector<Event>& events);

/// d / N, where a robot is a duplicate when teammates with lower ids already
/// cover every capability it has.
double duplication_rate(const RobotSystem& system, const TeamAssignment& assignment);

/// Spatial-only agglomerative baseline: merge the two clusters with the
/// closest centroids until r remain.
TeamAssignment greedy_assign(const RobotSystem& system, std::size_t r);

/// Same pipeline as the full method with both regularisers switched off.
TeamAssignment baseline_assign(std::span<const RelationGraph> graphs,
                               const SolverConfig& solver, std::size_t r);

/// Spatial, communication and capability graphs, each max-normalised.
std::vector<RelationGraph> build_normalized_graphs(const RobotSystem& system,
                                                   double comm_radius);

/// Everything produced by one seeded trial.
struct TrialOutcome {
    RobotSystem system;
    std::vector<Event> events;
    TeamAssignment full;
    TeamAssignment baseline;
    TeamAssignment greedy;
    bool full_converged = false;
    bool baseline_converged = false;
    std::vector<MetricsReport> reports;  // Full, Baseline, Greedy
};

TrialOutcome run_trial_detailed(const SimConfig& config);

/// One MetricsReport per method, in the order Full, Baseline, Greedy.
std::vector<MetricsReport> run_trial(const SimConfig& config);

/// The report run_trial would produce for a single method, without paying
/// for the other two.
MetricsReport run_trial_method(const SimConfig& config, Method method);

/// Team id of the nearest robot at each cell centre; grid[row][col] with
/// row 0 at y = 0.
using RegionGrid = std::vector<std::vector<std::size_t>>;

RegionGrid region_raster(const RobotSystem& system, const TeamAssignment& assignment,
                         std::size_t cols, std::size_t rows);

}  // namespace teamfuse
