#include "teamfuse/io.hpp"

#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "teamfuse/errors.hpp"

namespace teamfuse::io {

using nlohmann::json;

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json position_to_json(Position p) { return json::array({p.x, p.y}); }

Position position_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw FormatError("position must be [x, y]");
    return Position{j[0].get<double>(), j[1].get<double>()};
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& cell) {
    const std::string t = trim(cell);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw FormatError("not a number: '" + t + "'");
    }
    if (used != t.size()) throw FormatError("not a number: '" + t + "'");
    return v;
}

}  // namespace

std::string system_to_json(const RobotSystem& system) {
    json obstacles = json::array();
    for (const Wall& w : system.environment.obstacles) {
        obstacles.push_back(json::array({position_to_json(w.a), position_to_json(w.b)}));
    }
    json robots = json::array();
    for (const RobotSpec& r : system.robots) {
        robots.push_back({{"id", r.id},
                          {"position", position_to_json(r.position)},
                          {"capabilities", json(std::vector<std::string>(
                                               r.capabilities.begin(), r.capabilities.end()))}});
    }
    json doc;
    doc["capabilities"] = system.capability_universe;
    doc["environment"] = {{"width", system.environment.width},
                          {"height", system.environment.height},
                          {"obstacles", std::move(obstacles)}};
    doc["robots"] = std::move(robots);
    return doc.dump(2) + "\n";
}

RobotSystem system_from_json(const std::string& text) {
    RobotSystem system;
    try {
        const json doc = json::parse(text);
        system.capability_universe = doc.at("capabilities").get<std::vector<std::string>>();
        const json& env = doc.at("environment");
        system.environment.width = env.at("width").get<double>();
        system.environment.height = env.at("height").get<double>();
        if (env.contains("obstacles")) {
            for (const json& w : env.at("obstacles")) {
                if (!w.is_array() || w.size() != 2) {
                    throw FormatError("obstacle must be [[x,y],[x,y]]");
                }
                system.environment.obstacles.push_back(
                    Wall{position_from_json(w[0]), position_from_json(w[1])});
            }
        }
        for (const json& r : doc.at("robots")) {
            RobotSpec spec;
            spec.id = r.at("id").get<std::size_t>();
            spec.position = position_from_json(r.at("position"));
            for (const auto& c : r.at("capabilities")) spec.capabilities.insert(c.get<std::string>());
            system.robots.push_back(std::move(spec));
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("invalid robot system JSON: ") + e.what());
    }
    system.validate();
    return system;
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

Eigen::MatrixXd read_matrix_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<double> row;
        for (const std::string& cell : split(line, ',')) row.push_back(parse_double(cell));
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw FormatError("ragged CSV matrix at row " + std::to_string(rows.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw FormatError("empty CSV matrix");
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return m;
}

namespace {

json trace_document(const SolveResult& result) {
    json residuals = json::array();
    for (const IterationRecord& rec : result.residual_trace) {
        residuals.push_back({{"r1", rec.residuals.r1},
                             {"r2", rec.residuals.r2},
                             {"r3", rec.residuals.r3},
                             {"r4", rec.residuals.r4},
                             {"objective", rec.objective},
                             {"mu", rec.mu}});
    }
    json doc;
    doc["converged"] = result.converged;
    doc["iterations"] = result.iterations;
    doc["residuals"] = std::move(residuals);
    return doc;
}

}  // namespace

std::string solve_trace_to_json(const SolveResult& result) {
    return trace_document(result).dump(1) + "\n";
}

std::string solve_trace_to_json(const SolveResult& result, const SolverConfig& config) {
    json doc = trace_document(result);
    doc["config"] = {{"alphas", config.alphas},
                     {"lambda1", config.lambda1},
                     {"lambda2", config.lambda2},
                     {"mu0", config.mu0},
                     {"rho", config.rho},
                     {"tolerance", config.tolerance},
                     {"max_iterations", config.max_iterations}};
    return doc.dump(1) + "\n";
}

std::string assignment_to_json(const TeamAssignment& assignment) {
    json doc;
    doc["r"] = assignment.r;
    doc["team_of"] = assignment.team_of;
    return doc.dump() + "\n";
}

TeamAssignment assignment_from_json(const std::string& text) {
    try {
        const json doc = json::parse(text);
        return TeamAssignment::from_team_of(doc.at("team_of").get<std::vector<std::size_t>>(),
                                            doc.at("r").get<std::size_t>());
    } catch (const json::exception& e) {
        throw FormatError(std::string("invalid team assignment JSON: ") + e.what());
    }
}

std::string metrics_row(const MetricsReport& rep) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%zu,%llu,%.10g,%.10g",
                  std::string(to_string(rep.method)).c_str(), rep.n, rep.k_capabilities, rep.r,
                  static_cast<unsigned long long>(rep.seed), rep.detection_rate,
                  rep.duplication_rate);
    return buf;
}

void write_metrics_csv(std::ostream& out, const std::vector<MetricsReport>& reports,
                       bool with_header) {
    if (with_header) out << kMetricsHeader << '\n';
    for (const MetricsReport& rep : reports) out << metrics_row(rep) << '\n';
}

std::vector<MetricsReport> read_metrics_csv(std::istream& in) {
    std::vector<MetricsReport> reports;
    std::string line;
    if (!std::getline(in, line) || trim(line) != kMetricsHeader) {
        throw FormatError(std::string("metrics CSV must start with '") + kMetricsHeader + "'");
    }
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split(trim(line), ',');
        if (cells.size() != 7) throw FormatError("metrics row needs 7 columns: " + line);
        MetricsReport rep;
        if (cells[0] == "full") {
            rep.method = Method::Full;
        } else if (cells[0] == "baseline") {
            rep.method = Method::Baseline;
        } else if (cells[0] == "greedy") {
            rep.method = Method::Greedy;
        } else {
            throw FormatError("unknown method '" + cells[0] + "'");
        }
        try {
            rep.n = std::stoul(cells[1]);
            rep.k_capabilities = std::stoul(cells[2]);
            rep.r = std::stoul(cells[3]);
            rep.seed = std::stoull(cells[4]);
        } catch (const std::exception&) {
            throw FormatError("bad integer field in metrics row: " + line);
        }
        rep.detection_rate = parse_double(cells[5]);
        rep.duplication_rate = parse_double(cells[6]);
        reports.push_back(rep);
    }
    return reports;
}

void write_region_pgm(std::ostream& out, const RegionGrid& grid) {
    const std::size_t rows = grid.size();
    const std::size_t cols = rows ? grid.front().size() : 0;
    std::size_t max_id = 0;
    for (const auto& row : grid) {
        for (std::size_t v : row) max_id = std::max(max_id, v);
    }
    out << "P2\n" << cols << ' ' << rows << '\n' << std::max<std::size_t>(max_id, 1) << '\n';
    // PGM stores the top row first; grid row 0 sits at y = 0
    for (std::size_t r = rows; r-- > 0;) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c) out << ' ';
            out << grid[r][c];
        }
        out << '\n';
    }
}

std::string region_to_json(const RegionGrid& grid) { return json(grid).dump() + "\n"; }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open '" + path.string() + "' for reading");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FileError("cannot open '" + path.string() + "' for writing");
    out << contents;
    if (!out) throw FileError("failed writing '" + path.string() + "'");
}

}  // namespace teamfuse::io
