#include "teamfuse/coverage_sim.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "teamfuse/errors.hpp"

namespace teamfuse {

namespace {

constexpr std::size_t kMaxPlacementAttempts = 100000;

void check_assignment(const RobotSystem& system, const TeamAssignment& assignment) {
    if (assignment.robot_count() != system.size()) {
        throw DimensionError("assignment covers " + std::to_string(assignment.robot_count()) +
                             " robots but the system has " + std::to_string(system.size()));
    }
}

}  // namespace

void SimConfig::validate() const {
    if (n_robots < 2) throw ValidationError("simulation needs at least 2 robots");
    if (n_capabilities < 1) throw ValidationError("simulation needs at least 1 capability");
    if (n_regions < 1 || n_regions > n_robots) {
        throw ValidationError("region count must lie in [1, n_robots]");
    }
    if (n_events < 1) throw ValidationError("simulation needs at least 1 event");
    if (!(comm_radius > 0.0)) throw ValidationError("communication radius must be positive");
    environment.validate();
    solver.validate(3);
}

std::vector<Capability> capability_names(std::size_t count) {
    static const char* const kNamed[] = {"rgb", "depth", "audio", "thermal", "lidar"};
    std::vector<Capability> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        names.emplace_back(i < std::size(kNamed) ? std::string(kNamed[i])
                                                 : "cap" + std::to_string(i));
    }
    return names;
}

std::string_view to_string(Method method) {
    switch (method) {
        case Method::Full: return "full";
        case Method::Baseline: return "baseline";
        case Method::Greedy: return "greedy";
    }
    return "full";
}

RobotSystem generate_system(const SimConfig& config, Rng& rng) {
    config.validate();
    RobotSystem system;
    system.environment = config.environment;
    system.capability_universe = capability_names(config.n_capabilities);

    const double clearance = default_spatial_epsilon(config.environment);
    std::uniform_real_distribution<double> ux(0.0, config.environment.width);
    std::uniform_real_distribution<double> uy(0.0, config.environment.height);
    std::uniform_int_distribution<std::size_t> ucap(0, config.n_capabilities - 1);

    std::size_t attempts = 0;
    for (std::size_t i = 0; i < config.n_robots; ++i) {
        Position p;
        while (true) {
            if (++attempts > kMaxPlacementAttempts) {
                throw SamplingError("could not place robots clear of walls after " +
                                    std::to_string(kMaxPlacementAttempts) + " attempts");
            }
            p = Position{ux(rng), uy(rng)};
            const bool clear = std::none_of(
                config.environment.obstacles.begin(), config.environment.obstacles.end(),
                [&](const Wall& w) { return distance_to_segment(p, w) < clearance; });
            if (clear) break;
        }
        RobotSpec robot;
        robot.id = i;
        robot.position = p;
        robot.capabilities.insert(system.capability_universe[ucap(rng)]);
        system.robots.push_back(std::move(robot));
    }
    return system;
}

std::vector<Event> simulate_events(const SimConfig& config, Rng& rng) {
    config.validate();
    const std::vector<Capability> types = capability_names(config.n_capabilities);
    std::uniform_real_distribution<double> ux(0.0, config.environment.width);
    std::uniform_real_distribution<double> uy(0.0, config.environment.height);
    std::uniform_int_distribution<std::size_t> utype(0, types.size() - 1);

    std::vector<Event> events;
    events.reserve(config.n_events);
    for (std::size_t e = 0; e < config.n_events; ++e) {
        Event ev;
        ev.position = Position{ux(rng), uy(rng)};
        ev.event_type = types[utype(rng)];
        events.push_back(std::move(ev));
    }
    return events;
}

std::size_t nearest_robot(const RobotSystem& system, Position p) {
    if (system.robots.empty()) throw ValidationError("system has no robots");
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < system.size(); ++i) {
        const double dx = system.robots[i].position.x - p.x;
        const double dy = system.robots[i].position.y - p.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

double detection_rate(const RobotSystem& system, const TeamAssignment& assignment,
                      const std::vector<Event>& events) {
    check_assignment(system, assignment);
    if (events.empty()) throw ValidationError("detection rate needs at least one event");
    std::size_t detected = 0;
    for (const Event& ev : events) {
        const std::size_t team = assignment.team_of[nearest_robot(system, ev.position)];
        const IndexSet& members = assignment.teams[team];
        const bool sensed = std::any_of(members.begin(), members.end(), [&](std::size_t i) {
            return system.robots[i].capabilities.contains(ev.event_type);
        });
        if (sensed) ++detected;
    }
    return static_cast<double>(detected) / static_cast<double>(events.size());
}

double duplication_rate(const RobotSystem& system, const TeamAssignment& assignment) {
    check_assignment(system, assignment);
    std::size_t duplicates = 0;
    for (const IndexSet& team : assignment.teams) {
        CapabilitySet covered;
        for (std::size_t i : team) {  // members are sorted by id
            const CapabilitySet& caps = system.robots[i].capabilities;
            const bool redundant = std::all_of(caps.begin(), caps.end(), [&](const Capability& c) {
                return covered.contains(c);
            });
            if (redundant) ++duplicates;
            covered.insert(caps.begin(), caps.end());
        }
    }
    return static_cast<double>(duplicates) / static_cast<double>(system.size());
}

TeamAssignment greedy_assign(const RobotSystem& system, std::size_t r) {
    const std::size_t n = system.size();
    if (r < 1 || r > n) throw ValidationError("team count r must lie in [1, N]");

    struct Cluster {
        IndexSet members;
        double cx;
        double cy;
    };
    // kept ordered by smallest member so the first minimal pair found is the
    // lexicographically smallest one
    std::vector<Cluster> clusters;
    clusters.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        clusters.push_back({{i}, system.robots[i].position.x, system.robots[i].position.y});
    }

    while (clusters.size() > r) {
        std::size_t best_a = 0, best_b = 1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < clusters.size(); ++a) {
            for (std::size_t b = a + 1; b < clusters.size(); ++b) {
                const double dx = clusters[a].cx - clusters[b].cx;
                const double dy = clusters[a].cy - clusters[b].cy;
                const double d2 = dx * dx + dy * dy;
                if (d2 < best) {
                    best = d2;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        Cluster& into = clusters[best_a];
        Cluster& from = clusters[best_b];
        const auto na = static_cast<double>(into.members.size());
        const auto nb = static_cast<double>(from.members.size());
        into.cx = (na * into.cx + nb * from.cx) / (na + nb);
        into.cy = (na * into.cy + nb * from.cy) / (na + nb);
        into.members.insert(into.members.end(), from.members.begin(), from.members.end());
        std::sort(into.members.begin(), into.members.end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(best_b));
    }

    std::vector<IndexSet> groups;
    groups.reserve(clusters.size());
    for (Cluster& c : clusters) groups.push_back(std::move(c.members));
    return TeamAssignment::from_groups(std::move(groups), n);
}

TeamAssignment baseline_assign(std::span<const RelationGraph> graphs,
                               const SolverConfig& solver, std::size_t r) {
    SolverConfig unregularized = solver;
    unregularized.lambda1 = 0.0;
    unregularized.lambda2 = 0.0;
    return partition(solve(graphs, unregularized).Z, r);
}

std::vector<RelationGraph> build_normalized_graphs(const RobotSystem& system,
                                                   double comm_radius) {
    std::vector<RelationGraph> graphs;
    graphs.reserve(3);
    graphs.push_back(normalize_graph(
        build_spatial_graph(system, default_spatial_epsilon(system.environment))));
    graphs.push_back(normalize_graph(build_communication_graph(system, comm_radius)));
    graphs.push_back(normalize_graph(build_capability_graph(system)));
    return graphs;
}

namespace {

MetricsReport make_report(const SimConfig& config, Method method, const RobotSystem& system,
                          const TeamAssignment& assignment, const std::vector<Event>& events,
                          bool converged) {
    MetricsReport rep;
    rep.method = method;
    rep.n = config.n_robots;
    rep.k_capabilities = config.n_capabilities;
    rep.r = config.n_regions;
    rep.seed = config.seed;
    rep.detection_rate = detection_rate(system, assignment, events);
    rep.duplication_rate = duplication_rate(system, assignment);
    rep.solver_converged = converged;
    return rep;
}

SolverConfig without_regularizers(SolverConfig solver) {
    solver.lambda1 = 0.0;
    solver.lambda2 = 0.0;
    return solver;
}

}  // namespace

TrialOutcome run_trial_detailed(const SimConfig& config) {
    config.validate();
    Rng rng(config.seed);

    TrialOutcome out;
    out.system = generate_system(config, rng);
    const std::vector<RelationGraph> graphs =
        build_normalized_graphs(out.system, config.comm_radius);

    const SolveResult full = solve(graphs, config.solver);
    out.full = partition(full.Z, config.n_regions);
    out.full_converged = full.converged;

    const SolveResult base = solve(graphs, without_regularizers(config.solver));
    out.baseline = partition(base.Z, config.n_regions);
    out.baseline_converged = base.converged;

    out.greedy = greedy_assign(out.system, config.n_regions);
    out.events = simulate_events(config, rng);

    out.reports = {
        make_report(config, Method::Full, out.system, out.full, out.events, out.full_converged),
        make_report(config, Method::Baseline, out.system, out.baseline, out.events,
                    out.baseline_converged),
        make_report(config, Method::Greedy, out.system, out.greedy, out.events, true)};
    return out;
}

MetricsReport run_trial_method(const SimConfig& config, Method method) {
    config.validate();
    Rng rng(config.seed);
    const RobotSystem system = generate_system(config, rng);

    TeamAssignment assignment;
    bool converged = true;
    if (method == Method::Greedy) {
        assignment = greedy_assign(system, config.n_regions);
    } else {
        const std::vector<RelationGraph> graphs =
            build_normalized_graphs(system, config.comm_radius);
        const SolveResult result =
            solve(graphs, method == Method::Full ? config.solver
                                                 : without_regularizers(config.solver));
        assignment = partition(result.Z, config.n_regions);
        converged = result.converged;
    }
    // events are drawn after the system, exactly as in run_trial_detailed
    const std::vector<Event> events = simulate_events(config, rng);
    return make_report(config, method, system, assignment, events, converged);
}

std::vector<MetricsReport> run_trial(const SimConfig& config) {
    return run_trial_detailed(config).reports;
}

RegionGrid region_raster(const RobotSystem& system, const TeamAssignment& assignment,
                         std::size_t cols, std::size_t rows) {
    check_assignment(system, assignment);
    if (cols < 2 || rows < 2) throw ValidationError("raster resolution must be >= 2 per axis");
    const double cw = system.environment.width / static_cast<double>(cols);
    const double ch = system.environment.height / static_cast<double>(rows);
    RegionGrid grid(rows, std::vector<std::size_t>(cols, 0));
    for (std::size_t row = 0; row < rows; ++row) {
        for (std::size_t col = 0; col < cols; ++col) {
            const Position centre{(static_cast<double>(col) + 0.5) * cw,
                                  (static_cast<double>(row) + 0.5) * ch};
            grid[row][col] = assignment.team_of[nearest_robot(system, centre)];
        }
    }
    return grid;
}

}  // namespace teamfuse
