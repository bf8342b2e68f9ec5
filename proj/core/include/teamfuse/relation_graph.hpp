#pragma once

#include <string_view>

#include <Eigen/Dense>

#include "teamfuse/robot_system.hpp"

namespace teamfuse {

enum class RelationKind { Spatial, Communication, Capability, Custom };

std::string_view to_string(RelationKind kind);

/// One heterogeneous relationship over N robots, stored as a dense weighted
/// adjacency matrix. Construction enforces: square, finite, non-negative,
/// zero diagonal.
class RelationGraph {
public:
    RelationGraph(RelationKind kind, Eigen::MatrixXd adjacency);

    RelationKind kind() const noexcept { return kind_; }
    const Eigen::MatrixXd& adjacency() const noexcept { return adjacency_; }
    Eigen::Index size() const noexcept { return adjacency_.rows(); }

private:
    RelationKind kind_;
    Eigen::MatrixXd adjacency_;
};

/// 1e-3 of the environment diagonal.
double default_spatial_epsilon(const Environment& env);

/// Inverse-distance weights a_ij = 1 / (d_ij + epsilon). Walls are ignored.
/// epsilon = 0 is accepted only when no two robots coincide.
RelationGraph build_spatial_graph(const RobotSystem& system, double epsilon);

/// Binary reachability: a_ij = 1 when robots are within `radius` and no wall
/// blocks the line between them.
RelationGraph build_communication_graph(const RobotSystem& system, double radius);

/// a_ij = |C_i intersect C_j|.
RelationGraph build_capability_graph(const RobotSystem& system);

/// Scales by the largest off-diagonal entry so weights land in [0, 1].
/// Throws AllZeroGraphError when the graph has no edges.
RelationGraph normalize_graph(const RelationGraph& graph);

}  // namespace teamfuse
