#include "teamfuse/fusion_solver.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "teamfuse/errors.hpp"

namespace teamfuse {

namespace {

void check_graphs(std::span<const RelationGraph> graphs, const SolverConfig& config) {
    if (graphs.empty()) throw DimensionError("solver needs at least one relation graph");
    config.validate(graphs.size());
    const Eigen::Index n = graphs.front().size();
    for (const RelationGraph& g : graphs) {
        if (g.size() != n) {
            throw DimensionError("relation graphs disagree on dimension (" +
                                 std::to_string(n) + " vs " + std::to_string(g.size()) + ")");
        }
    }
}

void check_state(const SolverState& s) {
    const Eigen::Index n = s.Z.rows();
    const auto square = [n](const Eigen::MatrixXd& m) { return m.rows() == n && m.cols() == n; };
    if (!square(s.Z) || !square(s.Zhat) || !square(s.L) || !square(s.Phi2) ||
        !square(s.Phi3) || !square(s.Phi4) || s.phi1.size() != n) {
        throw DimensionError("solver state iterates disagree on dimension");
    }
    if (!(s.mu > 0.0)) throw ValidationError("penalty mu must be positive");
}

Eigen::MatrixXd weighted_graph_sum(std::span<const RelationGraph> graphs,
                                   const SolverConfig& config) {
    const Eigen::Index n = graphs.front().size();
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t m = 0; m < graphs.size(); ++m) {
        sum += config.alphas[m] * graphs[m].adjacency();
    }
    return sum;
}

}  // namespace

SolverConfig SolverConfig::uniform(std::size_t graph_count) {
    SolverConfig c;
    c.alphas.assign(graph_count, graph_count == 0 ? 0.0 : 1.0 / static_cast<double>(graph_count));
    return c;
}

void SolverConfig::validate(std::size_t graph_count) const {
    if (alphas.empty()) throw ValidationError("at least one alpha weight is required");
    if (graph_count != 0 && alphas.size() != graph_count) {
        throw DimensionError("got " + std::to_string(alphas.size()) + " alpha weights for " +
                             std::to_string(graph_count) + " graphs");
    }
    double sum = 0.0;
    for (double a : alphas) {
        if (!(a >= 0.0) || !std::isfinite(a)) {
            throw ValidationError("alpha weights must be finite and non-negative");
        }
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ValidationError("alpha weights must sum to 1 (got " + std::to_string(sum) + ")");
    }
    if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0) || !std::isfinite(lambda1) ||
        !std::isfinite(lambda2)) {
        throw ValidationError("lambda1 and lambda2 must be finite and non-negative");
    }
    if (!(mu0 > 0.0) || !std::isfinite(mu0)) throw ValidationError("mu0 must be positive");
    if (!(rho > 1.0 && rho < 2.0)) throw ValidationError("rho must lie in (1, 2)");
    if (!(tolerance > 0.0)) throw ValidationError("tolerance must be positive");
    if (max_iterations <= 0) throw ValidationError("max_iterations must be positive");
}

double Residuals::max() const noexcept { return std::max(std::max(r1, r2), std::max(r3, r4)); }

double nuclear_norm(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues().sum();
}

double objective(const Eigen::MatrixXd& Z, const Eigen::MatrixXd& L,
                 std::span<const RelationGraph> graphs, const SolverConfig& config) {
    if (graphs.size() != config.alphas.size()) {
        throw DimensionError("alpha weight count does not match graph count");
    }
    if (Z.rows() != Z.cols() || L.rows() != Z.rows() || L.cols() != Z.cols()) {
        throw DimensionError("Z and L must be square matrices of equal size");
    }
    double fit = 0.0;
    for (std::size_t m = 0; m < graphs.size(); ++m) {
        if (graphs[m].size() != Z.rows()) throw DimensionError("graph size does not match Z");
        fit += config.alphas[m] * (Z - graphs[m].adjacency()).squaredNorm();
    }
    double value = fit + config.lambda1 * Z.squaredNorm();
    if (config.lambda2 != 0.0) value += config.lambda2 * nuclear_norm(L);
    return value;
}

Eigen::MatrixXd svt(const Eigen::MatrixXd& G, double tau) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw ValidationError("svt threshold must be finite and non-negative");
    }
    if (!G.allFinite()) throw NumericalError("svt input has non-finite entries", G);
    if (tau == 0.0 || G.size() == 0) return G;

    Eigen::BDCSVD<Eigen::MatrixXd> svd(G, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd shrunk =
        (svd.singularValues().array() - tau).cwiseMax(0.0).matrix();
    Eigen::MatrixXd out = svd.matrixU() * shrunk.asDiagonal() * svd.matrixV().transpose();
    if (!out.allFinite()) throw NumericalError("singular value decomposition failed", G);
    return out;
}

double augmented_objective_z(const Eigen::MatrixXd& Z, const SolverState& s,
                             std::span<const RelationGraph> graphs,
                             const SolverConfig& config) {
    const Eigen::Index n = Z.rows();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    const double mu = s.mu;

    double value = 0.0;
    for (std::size_t m = 0; m < graphs.size(); ++m) {
        value += config.alphas[m] * (Z - graphs[m].adjacency()).squaredNorm();
    }
    value += config.lambda1 * Z.squaredNorm();
    value += 0.5 * mu * (Z * ones - ones + s.phi1 / mu).squaredNorm();
    value += 0.5 * mu * (Z.transpose() - s.Zhat + s.Phi2 / mu).squaredNorm();
    value += 0.5 * mu * (s.L - I + Z + s.Phi3 / mu).squaredNorm();
    value += 0.5 * mu * (s.Zhat - Z + s.Phi4 / mu).squaredNorm();
    return value;
}

Eigen::MatrixXd update_z_unclamped(const SolverState& s, std::span<const RelationGraph> graphs,
                                   const SolverConfig& config) {
    check_graphs(graphs, config);
    check_state(s);
    const Eigen::Index n = s.size();
    if (graphs.front().size() != n) throw DimensionError("graph size does not match state");

    const double mu = s.mu;
    const double alpha_sum = std::accumulate(config.alphas.begin(), config.alphas.end(), 0.0);
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);

    // Setting the Z-gradient of the augmented objective to zero gives
    //   Z [c I + mu 1 1^T] = R
    // with c = 2 sum(alpha) + 2 lambda1 + 3 mu and R collected below.
    Eigen::MatrixXd rhs = 2.0 * weighted_graph_sum(graphs, config);
    rhs.array() += mu;  // mu 1 1^T
    rhs += mu * (s.Zhat.transpose() + s.Zhat - s.L + I);
    rhs.colwise() -= s.phi1;  // phi1 1^T
    rhs += -s.Phi2.transpose() - s.Phi3 + s.Phi4;

    // Sherman-Morrison: (c I + mu 1 1^T)^{-1} = (I - mu/(c + mu n) 1 1^T) / c
    const double c = 2.0 * alpha_sum + 2.0 * config.lambda1 + 3.0 * mu;
    const double gamma = mu / (c + mu * static_cast<double>(n));
    const Eigen::VectorXd row_sums = rhs.rowwise().sum();
    Eigen::MatrixXd z = rhs;
    z.colwise() -= gamma * row_sums;
    z /= c;
    if (!z.allFinite()) throw NumericalError("Z update produced non-finite entries", s.Z);
    return z;
}

Eigen::MatrixXd update_z(const SolverState& state, std::span<const RelationGraph> graphs,
                         const SolverConfig& config) {
    return update_z_unclamped(state, graphs, config).cwiseMax(0.0);
}

Eigen::MatrixXd update_zhat(const SolverState& s) {
    check_state(s);
    return (s.mu * s.Z.transpose() + s.mu * s.Z + s.Phi2 + s.Phi4) / (2.0 * s.mu);
}

Eigen::MatrixXd update_laplacian(const SolverState& s, const SolverConfig& config) {
    check_state(s);
    const Eigen::Index n = s.size();
    const Eigen::MatrixXd target = Eigen::MatrixXd::Identity(n, n) - s.Z - s.Phi3 / s.mu;
    return svt(target, config.lambda2 / s.mu);
}

SolverState update_multipliers(SolverState s, double rho) {
    check_state(s);
    const Eigen::Index n = s.size();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    s.phi1 += s.mu * (s.Z.rowwise().sum() - Eigen::VectorXd::Ones(n));
    s.Phi2 += s.mu * (s.Z.transpose() - s.Zhat);
    s.Phi3 += s.mu * (s.L - I + s.Z);
    s.Phi4 += s.mu * (s.Zhat - s.Z);
    s.mu *= rho;
    s.k += 1;
    return s;
}

Residuals constraint_residuals(const SolverState& s) {
    check_state(s);
    const Eigen::Index n = s.size();
    if (n == 0) return {};
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    Residuals r;
    r.r1 = (s.Z.rowwise().sum().array() - 1.0).abs().maxCoeff();
    r.r2 = (s.Z.transpose() - s.Zhat).cwiseAbs().maxCoeff();
    r.r3 = (s.L - I + s.Z).cwiseAbs().maxCoeff();
    r.r4 = (s.Zhat - s.Z).cwiseAbs().maxCoeff();
    return r;
}

SolverState initial_state(std::span<const RelationGraph> graphs, const SolverConfig& config) {
    check_graphs(graphs, config);
    const Eigen::Index n = graphs.front().size();
    SolverState s;
    s.Z = weighted_graph_sum(graphs, config);
    s.Zhat = s.Z.transpose();
    s.L = Eigen::MatrixXd::Identity(n, n) - s.Z;
    s.phi1 = Eigen::VectorXd::Zero(n);
    s.Phi2 = Eigen::MatrixXd::Zero(n, n);
    s.Phi3 = Eigen::MatrixXd::Zero(n, n);
    s.Phi4 = Eigen::MatrixXd::Zero(n, n);
    s.mu = config.mu0;
    s.k = 0;
    return s;
}

SolveResult solve(std::span<const RelationGraph> graphs, const SolverConfig& config) {
    check_graphs(graphs, config);
    if (graphs.front().size() < 2) throw DimensionError("solver needs at least 2 robots");

    SolverState state = initial_state(graphs, config);
    SolveResult result;
    result.residual_trace.reserve(static_cast<std::size_t>(config.max_iterations));

    while (state.k < config.max_iterations) {
        state.Z = update_z(state, graphs, config);
        state.Zhat = update_zhat(state);
        state.L = update_laplacian(state, config);

        IterationRecord record;
        record.residuals = constraint_residuals(state);
        record.objective = objective(state.Z, state.L, graphs, config);
        record.mu = state.mu;
        result.residual_trace.push_back(record);

        state = update_multipliers(std::move(state), config.rho);
        if (record.residuals.max() <= config.tolerance) {
            result.converged = true;
            break;
        }
    }
    result.iterations = state.k;

    // one symmetrise + row-normalise pass to remove residual-level noise
    Eigen::MatrixXd z = 0.5 * (state.Z + state.Z.transpose());
    const Eigen::VectorXd sums = z.rowwise().sum();
    for (Eigen::Index i = 0; i < z.rows(); ++i) {
        if (sums(i) > 0.0) z.row(i) /= sums(i);
    }
    result.Z = std::move(z);
    return result;
}

}  // namespace teamfuse
