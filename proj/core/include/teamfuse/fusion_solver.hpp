#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "teamfuse/relation_graph.hpp"

namespace teamfuse {

/// Hyperparameters of the fusion problem
///
///   min_Z  sum_m alpha_m ||Z - A_m||_F^2 + lambda1 ||Z||_F^2 + lambda2 ||L||_*
///   s.t.   L = I - Z,  Z 1 = 1,  Z = Z^T,  Z >= 0
///
/// and of the augmented Lagrangian loop that solves it.
struct SolverConfig {
    std::vector<double> alphas;
    double lambda1 = 0.1;
    double lambda2 = 0.1;
    double mu0 = 0.1;
    double rho = 1.1;
    double tolerance = 1e-6;
    int max_iterations = 1000;

    /// Equal weights 1/M for M graphs, all other fields at their defaults.
    static SolverConfig uniform(std::size_t graph_count);

    /// Throws ValidationError unless alphas are non-negative and sum to 1
    /// (within 1e-12), lambdas >= 0, mu0 > 0, 1 < rho < 2, tolerance > 0 and
    /// max_iterations > 0. When graph_count is non-zero the weight count must
    /// match it.
    void validate(std::size_t graph_count = 0) const;
};

/// Every iterate of the augmented Lagrangian loop.
struct SolverState {
    Eigen::MatrixXd Z;
    Eigen::MatrixXd Zhat;   // splitting copy of Z that carries the symmetry constraint
    Eigen::MatrixXd L;      // Laplacian iterate, tied to Z by L = I - Z
    Eigen::VectorXd phi1;   // multiplier of Z 1 = 1
    Eigen::MatrixXd Phi2;   // multiplier of Z^T = Zhat
    Eigen::MatrixXd Phi3;   // multiplier of L = I - Z
    Eigen::MatrixXd Phi4;   // multiplier of Zhat = Z
    double mu = 0.1;
    int k = 0;

    Eigen::Index size() const noexcept { return Z.rows(); }
};

struct Residuals {
    double r1 = 0.0;  // ||Z 1 - 1||_inf
    double r2 = 0.0;  // max |Z^T - Zhat|
    double r3 = 0.0;  // max |L - I + Z|
    double r4 = 0.0;  // max |Zhat - Z|

    double max() const noexcept;
};

struct IterationRecord {
    Residuals residuals;
    double objective = 0.0;
    double mu = 0.0;  // penalty used during this iteration
};

struct SolveResult {
    Eigen::MatrixXd Z;
    bool converged = false;
    int iterations = 0;
    std::vector<IterationRecord> residual_trace;
};

/// sum_m alpha_m ||Z - A_m||_F^2 + lambda1 ||Z||_F^2 + lambda2 ||L||_*.
double objective(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& L,
                 std::span<const RelationGraph> graphs, const SolverConfig& config);

/// Sum of singular values.
double nuclear_norm(const Eigen::MatrixXd& m);

/// Singular value thresholding: U diag((sigma_i - tau)_+) V^T, the proximal
/// operator of tau ||.||_*. tau = 0 returns G unchanged.
Eigen::MatrixXd svt(const Eigen::MatrixXd& G, double tau);

/// Smooth part of the augmented Lagrangian as a function of Z with every
/// other iterate held fixed. The Z-update is the exact stationary point of
/// this quadratic before clamping.
double augmented_objective_z(const Eigen::MatrixXd& Z, const SolverState& state,
                             std::span<const RelationGraph> graphs,
                             const SolverConfig& config);

/// Closed-form minimiser of augmented_objective_z (no clamp).
Eigen::MatrixXd update_z_unclamped(const SolverState& state,
                                   std::span<const RelationGraph> graphs,
                                   const SolverConfig& config);

/// update_z_unclamped followed by the elementwise max{Z, 0} projection.
Eigen::MatrixXd update_z(const SolverState& state, std::span<const RelationGraph> graphs,
                         const SolverConfig& config);

/// Zhat = (mu Z^T + mu Z + Phi2 + Phi4) / (2 mu).
Eigen::MatrixXd update_zhat(const SolverState& state);

/// argmin_L lambda2 ||L||_* + mu/2 ||L - (I - Z - Phi3/mu)||_F^2.
Eigen::MatrixXd update_laplacian(const SolverState& state, const SolverConfig& config);

/// Dual ascent on the four multipliers with the current mu, then mu <- rho mu
/// and k <- k + 1.
SolverState update_multipliers(SolverState state, double rho);

Residuals constraint_residuals(const SolverState& state);

/// Warm start: Z = sum alpha_m A_m, Zhat = Z^T, L = I - Z, zero multipliers,
/// mu = mu0, k = 0.
SolverState initial_state(std::span<const RelationGraph> graphs, const SolverConfig& config);

/// Runs the Z, Zhat, L and multiplier updates until the largest residual
/// drops to config.tolerance or max_iterations is reached. Non-convergence
/// is reported through SolveResult::converged, not thrown.
SolveResult solve(std::span<const RelationGraph> graphs, const SolverConfig& config);

}  // namespace teamfuse
