#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "teamfuse/geometry.hpp"

namespace teamfuse {

using Capability = std::string;
using CapabilitySet = std::set<Capability>;

struct RobotSpec {
    std::size_t id = 0;
    Position position;
    CapabilitySet capabilities;

    friend bool operator==(const RobotSpec&, const RobotSpec&) = default;
};

/// A multi-robot system at one time point: N robots, their workspace and the
/// global capability universe.
struct RobotSystem {
    std::vector<RobotSpec> robots;
    Environment environment;
    std::vector<Capability> capability_universe;

    std::size_t size() const noexcept { return robots.size(); }

    /// Checks N >= 2, contiguous ids, non-empty capability sets drawn from
    /// the universe, and positions inside the environment.
    void validate() const;

    friend bool operator==(const RobotSystem&, const RobotSystem&) = default;
};

}  // namespace teamfuse
