#pragma once

#include <teamfuse/coverage_sim.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace teamfuse::fixture {

/// Two tight pairs in opposite corners. Teammates share one sensor and
/// complement each other with a second; the pairs share nothing.
inline RobotSystem two_pairs() {
    RobotSystem s;
    s.capability_universe = {"rgb", "depth", "thermal", "audio", "lidar", "sonar"};
    s.robots = {{0, {0.10, 0.10}, {"rgb", "depth"}},
                {1, {0.12, 0.10}, {"rgb", "thermal"}},
                {2, {0.90, 0.90}, {"audio", "lidar"}},
                {3, {0.92, 0.90}, {"audio", "sonar"}}};
    return s;
}

struct Planted {
    RobotSystem system;
    std::vector<std::size_t> cluster_of;
};

/// k clusters (k <= 3) around far-apart centres of the unit square, each
/// member within `spread` of its centre. Members of a cluster cycle through
/// the capability universe so every cluster covers it.
inline Planted planted_clusters(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                                double spread = 0.05, std::size_t capabilities = 3) {
    static constexpr std::array<Position, 3> centres{{{0.1, 0.1}, {0.9, 0.1}, {0.5, 0.9}}};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-spread, spread);
    Planted out;
    out.system.capability_universe = capability_names(capabilities);
    std::size_t id = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        for (std::size_t j = 0; j < sizes[c]; ++j) {
            RobotSpec r;
            r.id = id++;
            r.position = {centres[c].x + jitter(rng), centres[c].y + jitter(rng)};
            r.capabilities = {out.system.capability_universe[j % capabilities]};
            out.system.robots.push_back(r);
            out.cluster_of.push_back(c);
        }
    }
    return out;
}

/// Square Z that is block diagonal with uniform 1/|block| entries.
inline Eigen::MatrixXd block_diagonal(const std::vector<std::size_t>& sizes) {
    std::size_t n = 0;
    for (std::size_t s : sizes) n += s;
    Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
    Eigen::Index at = 0;
    for (std::size_t s : sizes) {
        const auto m = static_cast<Eigen::Index>(s);
        Z.block(at, at, m, m).setConstant(1.0 / static_cast<double>(s));
        at += m;
    }
    return Z;
}

}  // namespace teamfuse::fixture
