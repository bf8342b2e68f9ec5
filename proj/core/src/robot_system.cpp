#include "teamfuse/robot_system.hpp"

#include <algorithm>
#include <string>

#include "teamfuse/errors.hpp"

namespace teamfuse {

void RobotSystem::validate() const {
    environment.validate();
    if (robots.size() < 2) {
        throw ValidationError("a robot system needs at least 2 robots");
    }
    {
        std::vector<Capability> sorted = capability_universe;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ValidationError("capability universe contains duplicates");
        }
    }
    const auto known = [&](const Capability& c) {
        return std::find(capability_universe.begin(), capability_universe.end(), c) !=
               capability_universe.end();
    };
    for (std::size_t i = 0; i < robots.size(); ++i) {
        const RobotSpec& r = robots[i];
        const std::string tag = "robot " + std::to_string(i);
        if (r.id != i) throw ValidationError(tag + ": ids must be contiguous from 0");
        if (r.capabilities.empty()) throw ValidationError(tag + ": empty capability set");
        if (!std::all_of(r.capabilities.begin(), r.capabilities.end(), known)) {
            throw ValidationError(tag + ": capability outside the universe");
        }
        if (!environment.contains(r.position)) {
            throw ValidationError(tag + ": position outside the environment");
        }
    }
}

}  // namespace teamfuse
