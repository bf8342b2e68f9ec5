#include "teamfuse/relation_graph.hpp"

#include <cmath>
#include <string>

#include "teamfuse/errors.hpp"

namespace teamfuse {

std::string_view to_string(RelationKind kind) {
    switch (kind) {
        case RelationKind::Spatial: return "spatial";
        case RelationKind::Communication: return "communication";
        case RelationKind::Capability: return "capability";
        case RelationKind::Custom: return "custom";
    }
    return "custom";
}

RelationGraph::RelationGraph(RelationKind kind, Eigen::MatrixXd adjacency)
    : kind_(kind), adjacency_(std::move(adjacency)) {
    if (adjacency_.rows() != adjacency_.cols()) {
        throw DimensionError("relation graph adjacency must be square, got " +
                             std::to_string(adjacency_.rows()) + "x" +
                             std::to_string(adjacency_.cols()));
    }
    if (!adjacency_.allFinite()) {
        throw ValidationError("relation graph has non-finite entries");
    }
    if ((adjacency_.array() < 0.0).any()) {
        throw ValidationError("relation graph has negative entries");
    }
    if ((adjacency_.diagonal().array() != 0.0).any()) {
        throw ValidationError("relation graph diagonal must be zero");
    }
}

double default_spatial_epsilon(const Environment& env) { return 1e-3 * env.diagonal(); }

RelationGraph build_spatial_graph(const RobotSystem& system, double epsilon) {
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
        throw ValidationError("spatial epsilon must be a finite non-negative number");
    }
    const auto n = static_cast<Eigen::Index>(system.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d = distance(system.robots[i].position, system.robots[j].position);
            if (d + epsilon <= 0.0) {
                throw ValidationError("robots " + std::to_string(i) + " and " +
                                      std::to_string(j) +
                                      " coincide; spatial epsilon must be positive");
            }
            a(i, j) = a(j, i) = 1.0 / (d + epsilon);
        }
    }
    return RelationGraph(RelationKind::Spatial, std::move(a));
}

RelationGraph build_communication_graph(const RobotSystem& system, double radius) {
    if (!(radius > 0.0)) {
        throw ValidationError("communication radius must be positive");
    }
    const auto n = static_cast<Eigen::Index>(system.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const Position pi = system.robots[i].position;
            const Position pj = system.robots[j].position;
            if (distance(pi, pj) <= radius && line_of_sight(pi, pj, system.environment)) {
                a(i, j) = a(j, i) = 1.0;
            }
        }
    }
    return RelationGraph(RelationKind::Communication, std::move(a));
}

RelationGraph build_capability_graph(const RobotSystem& system) {
    const auto n = static_cast<Eigen::Index>(system.size());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const CapabilitySet& ci = system.robots[i].capabilities;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            double shared = 0.0;
            for (const Capability& c : system.robots[j].capabilities) {
                if (ci.contains(c)) shared += 1.0;
            }
            a(i, j) = a(j, i) = shared;
        }
    }
    return RelationGraph(RelationKind::Capability, std::move(a));
}

RelationGraph normalize_graph(const RelationGraph& graph) {
    // diagonal is zero by construction, so the plain max is the off-diagonal max
    const double peak = graph.adjacency().size() == 0 ? 0.0 : graph.adjacency().maxCoeff();
    if (!(peak > 0.0)) {
        throw AllZeroGraphError(std::string(to_string(graph.kind())) +
                                " graph has no non-zero entry");
    }
    return RelationGraph(graph.kind(), graph.adjacency() / peak);
}

}  // namespace teamfuse
