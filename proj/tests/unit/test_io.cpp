#include <teamfuse/coverage_sim.hpp>
#include <teamfuse/io.hpp>

#include <gtest/gtest.h>

#include <json.hpp>

#include <random>
#include <sstream>

#include "temp_dir.hpp"

using namespace teamfuse;

TEST(SystemJson, RoundTrip) {
    SimConfig c;
    c.n_robots = 8;
    c.n_capabilities = 4;
    c.environment.obstacles = {{{0.5, 0.1}, {0.5, 0.9}}};
    Rng rng(1);
    RobotSystem s = generate_system(c, rng);
    s.robots[2].capabilities.insert("rgb");
    EXPECT_EQ(io::system_from_json(io::system_to_json(s)), s);
}

TEST(SystemJson, DocumentShape) {
    SimConfig c;
    c.n_robots = 3;
    Rng rng(2);
    const auto doc = nlohmann::json::parse(io::system_to_json(generate_system(c, rng)));
    EXPECT_TRUE(doc.at("capabilities").is_array());
    EXPECT_EQ(doc.at("environment").at("width"), 1.0);
    EXPECT_TRUE(doc.at("environment").at("obstacles").is_array());
    ASSERT_EQ(doc.at("robots").size(), 3u);
    EXPECT_EQ(doc.at("robots")[1].at("id"), 1);
    EXPECT_EQ(doc.at("robots")[1].at("position").size(), 2u);
}

TEST(SystemJson, RejectsMalformedAndInvalid) {
    EXPECT_THROW(io::system_from_json("{not json"), io::FormatError);
    EXPECT_THROW(io::system_from_json(R"({"capabilities": ["rgb"], "robots": []})"),
                 std::exception);
    const std::string bad_cap = R"({"capabilities": ["rgb"],
        "environment": {"width": 1, "height": 1, "obstacles": []},
        "robots": [{"id": 0, "position": [0.1, 0.1], "capabilities": ["rgb"]},
                   {"id": 1, "position": [0.2, 0.1], "capabilities": ["depth"]}]})";
    EXPECT_THROW(io::system_from_json(bad_cap), std::exception);
}

TEST(MatrixCsv, RoundTripIsExact) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::MatrixXd m(5, 5);
    for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = n(rng) * 1e-3;
    std::stringstream ss;
    io::write_matrix_csv(ss, m);
    EXPECT_EQ(io::read_matrix_csv(ss), m);
}

TEST(MatrixCsv, RejectsRaggedOrEmpty) {
    std::istringstream ragged("1,2\n3\n");
    EXPECT_THROW(io::read_matrix_csv(ragged), io::FormatError);
    std::istringstream empty("");
    EXPECT_THROW(io::read_matrix_csv(empty), io::FormatError);
    std::istringstream text("1,x\n2,3\n");
    EXPECT_THROW(io::read_matrix_csv(text), io::FormatError);
}

TEST(AssignmentJson, RoundTrip) {
    const TeamAssignment a = TeamAssignment::from_team_of({2, 0, 1, 0, 2}, 3);
    EXPECT_EQ(io::assignment_from_json(io::assignment_to_json(a)), a);
    const auto doc = nlohmann::json::parse(io::assignment_to_json(a));
    EXPECT_EQ(doc.at("r"), 3);
    EXPECT_EQ(doc.at("team_of").size(), 5u);
    EXPECT_THROW(io::assignment_from_json(R"({"r": 2, "team_of": [0, 0]})"), std::exception);
}

TEST(MetricsCsv, RoundTrip) {
    SimConfig c;
    c.n_robots = 10;
    c.seed = 4;
    const auto reports = run_trial(c);
    std::stringstream ss;
    io::write_metrics_csv(ss, reports);
    const std::string text = ss.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), io::kMetricsHeader);
    const auto back = io::read_metrics_csv(ss);
    ASSERT_EQ(back.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(back[i].method, reports[i].method);
        EXPECT_EQ(back[i].r, reports[i].r);
        EXPECT_EQ(back[i].seed, reports[i].seed);
        EXPECT_NEAR(back[i].detection_rate, reports[i].detection_rate, 1e-10);
        EXPECT_NEAR(back[i].duplication_rate, reports[i].duplication_rate, 1e-10);
    }
    std::istringstream wrong("a,b\n");
    EXPECT_THROW(io::read_metrics_csv(wrong), io::FormatError);
}

TEST(SolveTrace, Schema) {
    SolveResult r;
    r.converged = true;
    r.iterations = 2;
    r.residual_trace = {{{1, 2, 3, 4}, 5, 0.1}, {{0, 0, 0, 0}, 4, 0.11}};
    const auto doc = nlohmann::json::parse(io::solve_trace_to_json(r, SolverConfig::uniform(3)));
    EXPECT_EQ(doc.at("converged"), true);
    EXPECT_EQ(doc.at("iterations"), 2);
    ASSERT_EQ(doc.at("residuals").size(), 2u);
    EXPECT_EQ(doc.at("residuals")[0].at("r3"), 3.0);
    EXPECT_EQ(doc.at("residuals")[0].at("objective"), 5.0);
    EXPECT_EQ(doc.at("config").at("alphas").size(), 3u);
}

TEST(RegionOutput, PgmAndJson) {
    const RegionGrid g{{0, 1}, {2, 2}};
    std::stringstream pgm;
    io::write_region_pgm(pgm, g);
    std::string magic;
    std::size_t w = 0, h = 0;
    pgm >> magic >> w >> h;
    EXPECT_EQ(magic, "P2");
    EXPECT_EQ(w, 2u);
    EXPECT_EQ(h, 2u);
    const auto doc = nlohmann::json::parse(io::region_to_json(g));
    EXPECT_EQ(doc, nlohmann::json::parse("[[0,1],[2,2]]"));
}

TEST(Files, ReadWriteAndErrors) {
    fixture::TempDir tmp;
    io::write_file(tmp / "x.txt", "hello\n");
    EXPECT_EQ(io::read_file(tmp / "x.txt"), "hello\n");
    EXPECT_THROW(io::read_file(tmp / "missing.txt"), io::FileError);
    EXPECT_THROW(io::write_file(tmp / "no" / "such" / "dir.txt", "x"), io::FileError);
}
