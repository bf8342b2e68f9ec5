#include <teamfuse/coverage_sim.hpp>
#include <teamfuse/errors.hpp>
#include <teamfuse/spectral_partition.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace teamfuse;

namespace {

IndexSet iota(std::size_t n) {
    IndexSet s(n);
    std::iota(s.begin(), s.end(), std::size_t{0});
    return s;
}

Eigen::MatrixXd random_weights(Eigen::Index n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) w(i, j) = w(j, i) = u(rng);
    return w;
}

// Robots 0,1 bond tightly; 2,3,4 form a looser group in which 3,4 are closest.
Eigen::MatrixXd five_robot_z() {
    Eigen::MatrixXd Z(5, 5);
    Z << 0.20, 0.70, 0.04, 0.03, 0.03,
         0.70, 0.20, 0.04, 0.03, 0.03,
         0.04, 0.04, 0.40, 0.26, 0.26,
         0.03, 0.03, 0.26, 0.20, 0.48,
         0.03, 0.03, 0.26, 0.48, 0.20;
    return Z;
}

}  // namespace

TEST(MinorLaplacian, BistochasticFullSetIsIMinusZ) {
    const Eigen::MatrixXd Z = five_robot_z();
    EXPECT_LT((minor_laplacian(Z, iota(5)) - (Eigen::MatrixXd::Identity(5, 5) - Z))
                  .cwiseAbs().maxCoeff(), 1e-12);
}

TEST(MinorLaplacian, PathGraph) {
    Eigen::MatrixXd W(2, 2);
    W << 0, 1, 1, 0;
    Eigen::MatrixXd expected(2, 2);
    expected << 1, -1, -1, 1;
    EXPECT_EQ(minor_laplacian(W, iota(2)), expected);
}

TEST(MinorLaplacian, SubsetUsesPrincipalSubmatrix) {
    const Eigen::MatrixXd Z = five_robot_z();
    const Eigen::MatrixXd L = minor_laplacian(Z, {2, 3, 4});
    ASSERT_EQ(L.rows(), 3);
    EXPECT_NEAR(L(0, 1), -0.26, 1e-15);
    EXPECT_NEAR(L(1, 2), -0.48, 1e-15);
    EXPECT_NEAR(L(0, 0), 0.52, 1e-15);
}

TEST(MinorLaplacian, RowsSumToZero) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        const Eigen::MatrixXd W = random_weights(7, rng);
        const Eigen::MatrixXd L = minor_laplacian(W, {0, 2, 3, 6});
        EXPECT_LT(L.rowwise().sum().cwiseAbs().maxCoeff(), 1e-12);
    }
    EXPECT_THROW(minor_laplacian(Eigen::MatrixXd::Zero(2, 2), {}), ValidationError);
}

TEST(Fiedler, PathOfTwo) {
    Eigen::MatrixXd L(2, 2);
    L << 1, -1, -1, 1;
    const Eigen::VectorXd v = fiedler_vector(L);
    EXPECT_NEAR(v(0), 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(v(1), -1.0 / std::sqrt(2.0), 1e-12);
}

TEST(Fiedler, PathOfThree) {
    Eigen::MatrixXd L(3, 3);
    L << 1, -1, 0, -1, 2, -1, 0, -1, 1;
    const Eigen::VectorXd v = fiedler_vector(L);
    const oracle::EigenPairs ref = oracle::jacobi_eigen(L);
    EXPECT_NEAR(ref.values(1), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(v.dot(ref.vectors.col(1))), 1.0, 1e-10);
    EXPECT_NEAR(v(0), std::sqrt(0.5), 1e-10);
    EXPECT_NEAR(v(1), 0.0, 1e-10);
    EXPECT_NEAR(v(2), -std::sqrt(0.5), 1e-10);
}

TEST(Fiedler, DisconnectedComponents) {
    const Eigen::MatrixXd Z = fixture::block_diagonal({2, 3});
    const Eigen::VectorXd v = fiedler_vector(minor_laplacian(Z, iota(5)));
    EXPECT_GT(v(0), 0.0);
    EXPECT_NEAR(v(0), v(1), 1e-10);
    EXPECT_LT(v(2), 0.0);
    EXPECT_NEAR(v(2), v(3), 1e-10);
    EXPECT_NEAR(v(3), v(4), 1e-10);
}

TEST(Fiedler, OrthogonalToOnesAndUnitNorm) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 30; ++t) {
        const Eigen::Index n = 2 + t % 9;
        const Eigen::VectorXd v = fiedler_vector(minor_laplacian(random_weights(n, rng), iota(n)));
        EXPECT_LT(std::abs(v.sum()), 1e-8);
        EXPECT_NEAR(v.norm(), 1.0, 1e-12);
    }
}

TEST(Fiedler, RejectsInvalidLaplacians) {
    EXPECT_THROW(fiedler_vector(Eigen::MatrixXd::Zero(1, 1)), DimensionError);
    Eigen::MatrixXd asym(2, 2);
    asym << 1, -1, 0, 0;
    EXPECT_THROW(fiedler_vector(asym), ValidationError);
    EXPECT_THROW(fiedler_vector(Eigen::MatrixXd::Identity(3, 3)), ValidationError);
}

TEST(FiedlerCut, DisconnectedBlocks) {
    Eigen::MatrixXd Z(4, 4);
    Z << .5, .5, 0, 0, .5, .5, 0, 0, 0, 0, .5, .5, 0, 0, .5, .5;
    const auto [a, b] = fiedler_cut(Z, iota(4));
    EXPECT_EQ(a, (IndexSet{0, 1}));
    EXPECT_EQ(b, (IndexSet{2, 3}));
}

TEST(FiedlerCut, FiveRobotExample) {
    const Eigen::MatrixXd Z = five_robot_z();
    auto [a, b] = fiedler_cut(Z, iota(5));
    if (a.front() != 0) std::swap(a, b);
    EXPECT_EQ(a, (IndexSet{0, 1}));
    EXPECT_EQ(b, (IndexSet{2, 3, 4}));

    const TeamAssignment two = partition(Z, 2);
    EXPECT_EQ(two.teams, (std::vector<IndexSet>{{0, 1}, {2, 3, 4}}));
    const TeamAssignment three = partition(Z, 3);
    EXPECT_EQ(three.teams, (std::vector<IndexSet>{{0, 1}, {2}, {3, 4}}));
}

TEST(FiedlerCut, DegenerateFallsBackToMedian) {
    const auto [a, b] = fiedler_cut(Eigen::MatrixXd::Zero(4, 4), iota(4));
    EXPECT_FALSE(a.empty());
    EXPECT_FALSE(b.empty());
    EXPECT_EQ(a.size() + b.size(), 4u);

    const auto [lo, hi] = split_by_median(Eigen::VectorXd::Constant(3, 0.5), {4, 7, 9});
    EXPECT_EQ(lo, (IndexSet{4, 7}));
    EXPECT_EQ(hi, (IndexSet{9}));
    EXPECT_THROW(fiedler_cut(Eigen::MatrixXd::Zero(3, 3), {1}), ValidationError);
}

TEST(Partition, SingleTeamAndSingletons) {
    std::mt19937_64 rng(3);
    const Eigen::MatrixXd W = random_weights(6, rng);
    const TeamAssignment one = partition(W, 1);
    EXPECT_EQ(one.teams, (std::vector<IndexSet>{iota(6)}));
    const TeamAssignment all = partition(W, 6);
    for (std::size_t t = 0; t < 6; ++t) EXPECT_EQ(all.teams[t], (IndexSet{t}));
}

TEST(Partition, RejectsBadTeamCounts) {
    const Eigen::MatrixXd Z = five_robot_z();
    EXPECT_THROW(partition(Z, 0), ValidationError);
    EXPECT_THROW(partition(Z, 6), ValidationError);
}

TEST(Partition, AlwaysAValidCover) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 40; ++t) {
        const Eigen::Index n = 2 + t % 11;
        const Eigen::MatrixXd W = random_weights(n, rng);
        const std::size_t r = 1 + static_cast<std::size_t>(t) % static_cast<std::size_t>(n);
        const TeamAssignment a = partition(W, r);
        EXPECT_NO_THROW(a.validate());
        EXPECT_EQ(a.r, r);
        EXPECT_EQ(a.robot_count(), static_cast<std::size_t>(n));
    }
}

TEST(Partition, RecoversEqualBlocks) {
    const std::vector<std::vector<std::size_t>> layouts{{3, 3}, {4, 4, 4}, {2, 2, 2, 2, 2}, {2, 4, 3}};
    for (const auto& sizes : layouts) {
        const TeamAssignment a = partition(fixture::block_diagonal(sizes), sizes.size());
        std::size_t at = 0;
        for (std::size_t t = 0; t < sizes.size(); ++t) {
            IndexSet expected(sizes[t]);
            std::iota(expected.begin(), expected.end(), at);
            EXPECT_EQ(a.teams[t], expected);
            at += sizes[t];
        }
    }
}

TEST(Partition, LargestGroupIsRecutEvenIfItIsOneBlock) {
    // first cut gives {0..4} | {5..9}; the size tie goes to the group holding
    // robot 0, which is a single block and gets split
    const TeamAssignment a = partition(fixture::block_diagonal({5, 1, 2, 2}), 4);
    EXPECT_NO_THROW(a.validate());
    EXPECT_NE(a.teams.front(), (IndexSet{0, 1, 2, 3, 4}));
}

TEST(Partition, PlantedThreeBlocksMatchExhaustiveSearch) {
    const fixture::Planted p = fixture::planted_clusters({4, 3, 3}, 1);
    const auto graphs = build_normalized_graphs(p.system, 0.4 * std::sqrt(2.0));
    const SolveResult res = solve(graphs, SolverConfig::uniform(3));
    ASSERT_TRUE(res.converged);
    const TeamAssignment a = partition(res.Z, 3);
    EXPECT_TRUE(oracle::same_grouping(a.team_of, p.cluster_of));
    EXPECT_TRUE(oracle::same_grouping(a.team_of, oracle::best_partition(res.Z, 3)));
}

TEST(Partition, PermutationEquivariant) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        const Eigen::Index n = 7;
        const Eigen::MatrixXd W = random_weights(n, rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Eigen::MatrixXd PW(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) PW(perm[i], perm[j]) = W(i, j);
        const TeamAssignment a = partition(W, 3);
        const TeamAssignment b = partition(PW, 3);
        std::vector<std::size_t> relabelled(static_cast<std::size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i) relabelled[perm[i]] = a.team_of[i];
        EXPECT_TRUE(oracle::same_grouping(relabelled, b.team_of));
    }
}

TEST(Partition, Deterministic) {
    std::mt19937_64 rng(6);
    const Eigen::MatrixXd W = random_weights(9, rng);
    EXPECT_EQ(partition(W, 4), partition(W, 4));
}

TEST(TeamAssignmentCheck, ConstructionAndValidation) {
    const TeamAssignment a = TeamAssignment::from_team_of({1, 0, 1}, 2);
    EXPECT_EQ(a.teams, (std::vector<IndexSet>{{1}, {0, 2}}));
    const TeamAssignment g = TeamAssignment::from_groups({{2, 0}, {1}}, 3);
    EXPECT_EQ(g.team_of, (std::vector<std::size_t>{0, 1, 0}));
    EXPECT_THROW(TeamAssignment::from_team_of({0, 0}, 2), ValidationError);
    EXPECT_THROW(TeamAssignment::from_team_of({0, 3}, 2), ValidationError);
    EXPECT_THROW(TeamAssignment::from_groups({{0, 1}, {1}}, 2), ValidationError);
    EXPECT_THROW(TeamAssignment::from_groups({{0}}, 2), ValidationError);
}
