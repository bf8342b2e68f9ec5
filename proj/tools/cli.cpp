#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "int_list.hpp"
#include "teamfuse/coverage_sim.hpp"
#include "teamfuse/errors.hpp"
#include "teamfuse/fusion_solver.hpp"
#include "teamfuse/io.hpp"
#include "teamfuse/relation_graph.hpp"
#include "teamfuse/spectral_partition.hpp"

namespace teamfuse::cli {

namespace fs = std::filesystem;

namespace {

/// Bad flags or unreadable/invalid input files.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// JSON config files. Top-level scalars/arrays apply to every subcommand that
// has a flag of that name; an object keyed by a subcommand name applies only
// there and wins over the flat keys. Command-line flags win over both.
class JsonConfig : public CLI::Config {
public:
    explicit JsonConfig(std::vector<std::string> subcommands)
        : subcommands_(std::move(subcommands)) {}

    std::string to_config(const CLI::App*, bool, bool, std::string) const override {
        return "{}\n";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw CLI::ConversionError(std::string("config file is not valid JSON: ") + e.what());
        }
        if (!doc.is_object()) throw CLI::ConversionError("config file must hold a JSON object");

        std::vector<CLI::ConfigItem> items;
        for (const std::string& sub : subcommands_) {
            if (doc.contains(sub) && doc[sub].is_object()) {
                for (const auto& [key, value] : doc[sub].items()) {
                    items.push_back(make_item(sub, key, value));
                }
            }
        }
        for (const auto& [key, value] : doc.items()) {
            if (value.is_object()) continue;
            for (const std::string& sub : subcommands_) items.push_back(make_item(sub, key, value));
        }
        return items;
    }

private:
    static std::string scalar(const nlohmann::json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
    }

    static CLI::ConfigItem make_item(const std::string& sub, const std::string& key,
                                     const nlohmann::json& value) {
        CLI::ConfigItem item;
        item.parents = {sub};
        item.name = key;
        if (value.is_array()) {
            for (const auto& v : value) item.inputs.push_back(scalar(v));
        } else {
            item.inputs.push_back(scalar(value));
        }
        return item;
    }

    std::vector<std::string> subcommands_;
};

struct SolverFlags {
    std::vector<double> alpha;
    double lambda1 = 0.1;
    double lambda2 = 0.1;
    double mu0 = 0.1;
    double rho = 1.1;
    double tol = 1e-6;
    int max_iters = 1000;

    void attach(CLI::App& app) {
        app.add_option("--alpha", alpha, "Graph weights alpha_m (must sum to 1)")
            ->expected(1, CLI::detail::expected_max_vector_size);
        app.add_option("--lambda1", lambda1, "Frobenius regulariser weight")->capture_default_str();
        app.add_option("--lambda2", lambda2, "Laplacian nuclear-norm weight")
            ->capture_default_str();
        app.add_option("--mu0", mu0, "Initial penalty")->capture_default_str();
        app.add_option("--rho", rho, "Penalty growth factor in (1, 2)")->capture_default_str();
        app.add_option("--tol", tol, "Constraint residual tolerance")->capture_default_str();
        app.add_option("--max-iters", max_iters, "Iteration cap")->capture_default_str();
    }

    SolverConfig to_config(std::size_t graph_count) const {
        SolverConfig c = SolverConfig::uniform(graph_count);
        if (!alpha.empty()) c.alphas = alpha;
        c.lambda1 = lambda1;
        c.lambda2 = lambda2;
        c.mu0 = mu0;
        c.rho = rho;
        c.tolerance = tol;
        c.max_iterations = max_iters;
        c.validate(graph_count);
        return c;
    }
};

struct EnvironmentFlags {
    double width = 1.0;
    double height = 1.0;
    std::vector<std::string> walls;

    void attach(CLI::App& app) {
        app.add_option("--width", width, "Environment width")->capture_default_str();
        app.add_option("--height", height, "Environment height")->capture_default_str();
        app.add_option("--wall", walls, "Wall segment as x1,y1,x2,y2 (repeatable)");
    }

    Environment build() const {
        Environment env;
        env.width = width;
        env.height = height;
        for (const std::string& spec : walls) {
            std::vector<double> v;
            std::stringstream ss(spec);
            std::string cell;
            while (std::getline(ss, cell, ',')) {
                try {
                    v.push_back(std::stod(cell));
                } catch (const std::exception&) {
                    throw UsageError("bad --wall value '" + spec + "'");
                }
            }
            if (v.size() != 4) throw UsageError("--wall expects x1,y1,x2,y2, got '" + spec + "'");
            env.obstacles.push_back(Wall{{v[0], v[1]}, {v[2], v[3]}});
        }
        env.validate();
        return env;
    }
};

std::string read_input(const std::string& path) {
    try {
        return io::read_file(path);
    } catch (const io::FileError& e) {
        throw UsageError(e.what());
    }
}

fs::path prepare_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io::FileError("cannot create output directory '" + dir + "': " + ec.message());
    return fs::path(dir);
}

std::string matrix_csv(const Eigen::MatrixXd& m) {
    std::ostringstream os;
    io::write_matrix_csv(os, m);
    return os.str();
}

/// Runs fn(0..count-1) on up to `threads` workers. Each index runs exactly once.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// --- generate --------------------------------------------------------------

struct GenerateArgs {
    std::size_t robots = 0;
    std::size_t capabilities = 3;
    std::uint64_t seed = 0;
    std::string out = ".";
    std::string name = "system.json";
    EnvironmentFlags env;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
    SimConfig config;
    config.n_robots = a.robots;
    config.n_capabilities = a.capabilities;
    config.n_regions = 1;
    config.seed = a.seed;
    config.environment = a.env.build();
    config.comm_radius = 0.4 * config.environment.diagonal();

    Rng rng(a.seed);
    const RobotSystem system = generate_system(config, rng);
    const fs::path path = prepare_out_dir(a.out) / a.name;
    io::write_file(path, io::system_to_json(system));
    out << path.string() << '\n';
    return kSuccess;
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
    std::string system;
    std::vector<std::string> graphs;
    double comm_radius = -1.0;
    double epsilon = -1.0;
    bool write_graphs = false;
    std::string out = ".";
    SolverFlags solver;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    if (a.system.empty() == a.graphs.empty()) {
        throw UsageError("give exactly one of --system or --graph");
    }

    std::vector<RelationGraph> graphs;
    if (!a.system.empty()) {
        const RobotSystem system = io::system_from_json(read_input(a.system));
        const double radius =
            a.comm_radius > 0.0 ? a.comm_radius : 0.4 * system.environment.diagonal();
        const double eps =
            a.epsilon >= 0.0 ? a.epsilon : default_spatial_epsilon(system.environment);
        graphs.push_back(normalize_graph(build_spatial_graph(system, eps)));
        graphs.push_back(normalize_graph(build_communication_graph(system, radius)));
        graphs.push_back(normalize_graph(build_capability_graph(system)));
    } else {
        for (const std::string& path : a.graphs) {
            std::istringstream in(read_input(path));
            graphs.push_back(normalize_graph(RelationGraph(RelationKind::Custom,
                                                           io::read_matrix_csv(in))));
        }
    }

    const SolverConfig config = a.solver.to_config(graphs.size());
    const SolveResult result = solve(graphs, config);

    const fs::path dir = prepare_out_dir(a.out);
    io::write_file(dir / "Z.csv", matrix_csv(result.Z));
    io::write_file(dir / "trace.json", io::solve_trace_to_json(result, config));
    if (a.write_graphs) {
        for (std::size_t m = 0; m < graphs.size(); ++m) {
            const std::string name =
                "A" + std::to_string(m + 1) + "_" + std::string(to_string(graphs[m].kind())) + ".csv";
            io::write_file(dir / name, matrix_csv(graphs[m].adjacency()));
        }
    }

    out << (dir / "Z.csv").string() << '\n' << (dir / "trace.json").string() << '\n';
    if (!result.converged) {
        err << "warning: solver did not converge within " << config.max_iterations
            << " iterations (max residual "
            << result.residual_trace.back().residuals.max() << ")\n";
        return kNotConverged;
    }
    return kSuccess;
}

// --- partition -------------------------------------------------------------

struct PartitionArgs {
    std::string z;
    std::size_t regions = 0;
    std::size_t raster = 0;
    std::string system;
    std::string out = ".";
};

int cmd_partition(const PartitionArgs& a, std::ostream& out) {
    std::istringstream in(read_input(a.z));
    const Eigen::MatrixXd z = io::read_matrix_csv(in);
    if (z.rows() != z.cols()) throw UsageError("Z must be square");
    if (a.regions > static_cast<std::size_t>(z.rows())) {
        throw UsageError("--regions " + std::to_string(a.regions) + " exceeds robot count " +
                         std::to_string(z.rows()));
    }
    if (a.raster != 0 && a.system.empty()) throw UsageError("--raster needs --system");

    const TeamAssignment assignment = partition(z, a.regions);
    const fs::path dir = prepare_out_dir(a.out);
    io::write_file(dir / "assignment.json", io::assignment_to_json(assignment));
    out << (dir / "assignment.json").string() << '\n';

    if (a.raster != 0) {
        if (a.raster < 2) throw UsageError("--raster must be at least 2");
        const RobotSystem system = io::system_from_json(read_input(a.system));
        if (system.size() != static_cast<std::size_t>(z.rows())) {
            throw UsageError("system robot count does not match Z");
        }
        const RegionGrid grid = region_raster(system, assignment, a.raster, a.raster);
        std::ostringstream pgm;
        io::write_region_pgm(pgm, grid);
        io::write_file(dir / "regions.pgm", pgm.str());
        io::write_file(dir / "regions.json", io::region_to_json(grid));
        out << (dir / "regions.pgm").string() << '\n' << (dir / "regions.json").string() << '\n';
    }
    return kSuccess;
}

// --- simulate / sweep ------------------------------------------------------

struct SimArgs {
    std::string robots = "20";
    std::string capabilities = "3";
    std::string regions = "2..10";
    std::size_t seeds = 30;
    std::uint64_t seed = 0;
    std::size_t events = 100;
    double comm_radius = -1.0;
    unsigned threads = default_threads();
    bool append = false;
    std::string out = ".";
    EnvironmentFlags env;
    SolverFlags solver;
};

SimConfig base_sim_config(const EnvironmentFlags& env_flags, const SolverFlags& solver_flags,
                          std::size_t events, double comm_radius) {
    SimConfig c;
    c.environment = env_flags.build();
    c.n_events = events;
    c.comm_radius = comm_radius > 0.0 ? comm_radius : 0.4 * c.environment.diagonal();
    c.solver = solver_flags.to_config(3);
    return c;
}

std::vector<std::size_t> int_list_flag(const std::string& flag, const std::string& spec) {
    try {
        return parse_int_list(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

int cmd_simulate(const SimArgs& a, std::ostream& out, std::ostream& err) {
    const std::vector<std::size_t> ns = int_list_flag("--robots", a.robots);
    const std::vector<std::size_t> ks = int_list_flag("--capabilities", a.capabilities);
    const std::vector<std::size_t> rs = int_list_flag("--regions", a.regions);
    if (a.seeds == 0) throw UsageError("--seeds must be at least 1");
    const SimConfig base = base_sim_config(a.env, a.solver, a.events, a.comm_radius);

    std::vector<SimConfig> jobs;
    for (std::size_t n : ns) {
        for (std::size_t k : ks) {
            for (std::size_t r : rs) {
                for (std::size_t i = 0; i < a.seeds; ++i) {
                    SimConfig c = base;
                    c.n_robots = n;
                    c.n_capabilities = k;
                    c.n_regions = r;
                    c.seed = a.seed + i;
                    jobs.push_back(std::move(c));
                }
            }
        }
    }

    using Outcome = std::variant<std::vector<MetricsReport>, std::string>;
    std::vector<Outcome> outcomes(jobs.size());
    parallel_for(jobs.size(), a.threads, [&](std::size_t j) {
        try {
            outcomes[j] = run_trial(jobs[j]);
        } catch (const std::exception& e) {
            outcomes[j] = std::string(e.what());
        }
    });

    const fs::path path = prepare_out_dir(a.out) / "metrics.csv";
    const bool header = !(a.append && fs::exists(path) && fs::file_size(path) > 0);
    std::ofstream file(path, a.append ? std::ios::app : std::ios::trunc);
    if (!file) throw io::FileError("cannot open '" + path.string() + "' for writing");
    if (header) file << io::kMetricsHeader << '\n';

    std::size_t failures = 0, unconverged = 0;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        if (const auto* msg = std::get_if<std::string>(&outcomes[j])) {
            ++failures;
            err << "trial n=" << jobs[j].n_robots << " k=" << jobs[j].n_capabilities
                << " r=" << jobs[j].n_regions << " seed=" << jobs[j].seed << " failed: " << *msg
                << '\n';
            continue;
        }
        for (const MetricsReport& rep : std::get<std::vector<MetricsReport>>(outcomes[j])) {
            if (!rep.solver_converged) ++unconverged;
            file << io::metrics_row(rep) << '\n';
        }
    }
    file.close();
    if (!file) throw io::FileError("failed writing '" + path.string() + "'");

    if (unconverged) err << "warning: " << unconverged << " solver runs did not converge\n";
    out << path.string() << '\n';
    return failures == jobs.size() ? kUsage : kSuccess;
}

struct SweepArgs {
    double step = 0.1;
    std::size_t robots = 20;
    std::size_t capabilities = 3;
    std::size_t regions = 3;
    std::size_t seeds = 10;
    std::uint64_t seed = 0;
    std::size_t events = 100;
    double comm_radius = -1.0;
    unsigned threads = default_threads();
    std::string out = ".";
    EnvironmentFlags env;
    SolverFlags solver;
};

struct SimplexPoint {
    double a1, a2, a3;
};

std::vector<SimplexPoint> simplex_grid(double step) {
    if (!(step > 0.0) || step > 1.0) throw UsageError("--step must lie in (0, 1]");
    const double divisions = std::round(1.0 / step);
    if (std::abs(divisions * step - 1.0) > 1e-9) {
        throw UsageError("--step must divide 1 evenly");
    }
    const auto n = static_cast<std::size_t>(divisions);
    const auto dn = static_cast<double>(n);
    std::vector<SimplexPoint> grid;
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; i + j <= n; ++j) {
            grid.push_back({static_cast<double>(i) / dn, static_cast<double>(j) / dn,
                            static_cast<double>(n - i - j) / dn});
        }
    }
    return grid;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
    const std::vector<SimplexPoint> grid = simplex_grid(a.step);
    if (a.seeds == 0) throw UsageError("--seeds must be at least 1");
    SimConfig base = base_sim_config(a.env, a.solver, a.events, a.comm_radius);
    base.n_robots = a.robots;
    base.n_capabilities = a.capabilities;
    base.n_regions = a.regions;
    base.validate();

    const std::size_t jobs = grid.size() * a.seeds;
    std::vector<std::optional<MetricsReport>> reports(jobs);
    parallel_for(jobs, a.threads, [&](std::size_t j) {
        const SimplexPoint& p = grid[j / a.seeds];
        SimConfig c = base;
        c.solver.alphas = {p.a1, p.a2, p.a3};
        c.seed = a.seed + j % a.seeds;
        try {
            reports[j] = run_trial_method(c, Method::Full);
        } catch (const std::exception&) {
            reports[j] = std::nullopt;
        }
    });

    std::ostringstream csv;
    csv << "alpha1,alpha2,alpha3,detection,duplication\n";
    std::size_t failures = 0;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        double det = 0.0, dup = 0.0;
        std::size_t ok = 0;
        for (std::size_t s = 0; s < a.seeds; ++s) {
            const auto& rep = reports[g * a.seeds + s];
            if (!rep) {
                ++failures;
                continue;
            }
            det += rep->detection_rate;
            dup += rep->duplication_rate;
            ++ok;
        }
        if (ok == 0) {
            err << "sweep point (" << grid[g].a1 << ", " << grid[g].a2 << ", " << grid[g].a3
                << ") failed for every seed\n";
            continue;
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%.10g,%.10g\n", grid[g].a1,
                      grid[g].a2, grid[g].a3, det / static_cast<double>(ok),
                      dup / static_cast<double>(ok));
        csv << buf;
    }
    if (failures) err << "warning: " << failures << " sweep trials failed\n";

    const fs::path path = prepare_out_dir(a.out) / "sweep.csv";
    io::write_file(path, csv.str());
    out << path.string() << '\n';
    return failures == jobs ? kUsage : kSuccess;
}

int guarded(std::ostream& err, const CLI::App& sub, const std::function<int()>& body) {
    const auto usage = [&](const std::exception& e) {
        err << "error: " << e.what() << "\n\n" << sub.help();
        return kUsage;
    };
    try {
        return body();
    } catch (const UsageError& e) {
        return usage(e);
    } catch (const io::FormatError& e) {
        return usage(e);
    } catch (const io::FileError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const std::invalid_argument& e) {  // ValidationError, DimensionError
        return usage(e);
    } catch (const AllZeroGraphError& e) {
        return usage(e);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Heterogeneous multi-robot team assignment via fused relation graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.config_formatter(std::make_shared<JsonConfig>(
        std::vector<std::string>{"generate", "solve", "partition", "simulate", "sweep"}));
    app.set_config("--config", "", "JSON config file (flags take precedence)");
    app.allow_config_extras(CLI::config_extras_mode::ignore);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Generate a random robot system (JSON)");
    generate->add_option("--robots", gen.robots, "Number of robots N (>= 2)")->required();
    generate->add_option("--capabilities", gen.capabilities, "Capability universe size")
        ->capture_default_str();
    generate->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
    generate->add_option("--out", gen.out, "Output directory")->capture_default_str();
    generate->add_option("--name", gen.name, "Output file name")->capture_default_str();
    gen.env.attach(*generate);

    SolveArgs sol;
    auto* solve_cmd = app.add_subcommand("solve", "Fuse relation graphs into Z");
    solve_cmd->add_option("--system", sol.system, "Robot system JSON");
    solve_cmd->add_option("--graph", sol.graphs, "Adjacency CSV (repeatable, instead of --system)");
    solve_cmd->add_option("--comm-radius", sol.comm_radius,
                          "Communication radius (default 0.4 x diagonal)");
    solve_cmd->add_option("--epsilon", sol.epsilon,
                          "Spatial-graph epsilon (default 1e-3 x diagonal)");
    solve_cmd->add_flag("--write-graphs", sol.write_graphs, "Also write the normalised graphs");
    solve_cmd->add_option("--out", sol.out, "Output directory")->capture_default_str();
    solve_cmd->add_option("--seed", "Accepted for uniformity; solve is deterministic");
    sol.solver.attach(*solve_cmd);

    PartitionArgs part;
    auto* partition_cmd = app.add_subcommand("partition", "Split Z into teams by Fiedler cuts");
    partition_cmd->add_option("--z", part.z, "Z matrix CSV")->required();
    partition_cmd->add_option("--regions", part.regions, "Number of teams r")->required();
    partition_cmd->add_option("--raster", part.raster, "Also rasterise team regions (RES x RES)");
    partition_cmd->add_option("--system", part.system, "Robot system JSON (for --raster)");
    partition_cmd->add_option("--out", part.out, "Output directory")->capture_default_str();
    partition_cmd->add_option("--seed", "Accepted for uniformity; partition is deterministic");

    SimArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run metric batches for all three methods");
    simulate->add_option("--robots", sim.robots, "N values, e.g. 20 or 10,20 or 10..50")
        ->capture_default_str();
    simulate->add_option("--capabilities", sim.capabilities, "Capability counts")
        ->capture_default_str();
    simulate->add_option("--regions", sim.regions, "Team counts, e.g. 2..10")
        ->capture_default_str();
    simulate->add_option("--seeds", sim.seeds, "Seeds per grid cell")->capture_default_str();
    simulate->add_option("--seed", sim.seed, "Base seed; trial i uses seed + i")
        ->capture_default_str();
    simulate->add_option("--events", sim.events, "Events per trial")->capture_default_str();
    simulate->add_option("--comm-radius", sim.comm_radius,
                         "Communication radius (default 0.4 x diagonal)");
    simulate->add_option("--threads", sim.threads, "Worker threads")->capture_default_str();
    simulate->add_flag("--append", sim.append, "Append to an existing metrics.csv");
    simulate->add_option("--out", sim.out, "Output directory")->capture_default_str();
    sim.env.attach(*simulate);
    sim.solver.attach(*simulate);

    SweepArgs sw;
    auto* sweep = app.add_subcommand("sweep", "Ternary sweep over the alpha simplex");
    sweep->add_option("--step", sw.step, "Simplex grid step")->capture_default_str();
    sweep->add_option("--robots", sw.robots, "Number of robots")->capture_default_str();
    sweep->add_option("--capabilities", sw.capabilities, "Capability count")
        ->capture_default_str();
    sweep->add_option("--regions", sw.regions, "Team count")->capture_default_str();
    sweep->add_option("--seeds", sw.seeds, "Seeds per grid point")->capture_default_str();
    sweep->add_option("--seed", sw.seed, "Base seed")->capture_default_str();
    sweep->add_option("--events", sw.events, "Events per trial")->capture_default_str();
    sweep->add_option("--comm-radius", sw.comm_radius,
                      "Communication radius (default 0.4 x diagonal)");
    sweep->add_option("--threads", sw.threads, "Worker threads")->capture_default_str();
    sweep->add_option("--out", sw.out, "Output directory")->capture_default_str();
    sw.env.attach(*sweep);
    sw.solver.attach(*sweep);
    // the sweep owns alpha; keep the flag for uniform invocations but ignore it
    sweep->get_option("--alpha")->description("Ignored: the sweep enumerates alpha");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kSuccess;
        }
        app.exit(e, out, err);
        err << app.help();
        return kUsage;
    }

    if (*generate) return guarded(err, *generate, [&] { return cmd_generate(gen, out); });
    if (*solve_cmd) return guarded(err, *solve_cmd, [&] { return cmd_solve(sol, out, err); });
    if (*partition_cmd) return guarded(err, *partition_cmd, [&] { return cmd_partition(part, out); });
    if (*simulate) return guarded(err, *simulate, [&] { return cmd_simulate(sim, out, err); });
    if (*sweep) {
        sw.solver.alpha.clear();
        return guarded(err, *sweep, [&] { return cmd_sweep(sw, out, err); });
    }
    return kUsage;
}

}  // namespace teamfuse::cli
