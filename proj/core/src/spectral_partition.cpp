#include "teamfuse/spectral_partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "teamfuse/errors.hpp"

namespace teamfuse {

namespace {

// Fiedler entries below this magnitude count as zero.
constexpr double kZeroTolerance = 1e-10;

}  // namespace

TeamAssignment TeamAssignment::from_team_of(std::vector<std::size_t> team_of, std::size_t r) {
    TeamAssignment a;
    a.r = r;
    a.teams.assign(r, {});
    for (std::size_t i = 0; i < team_of.size(); ++i) {
        if (team_of[i] >= r) {
            throw ValidationError("robot " + std::to_string(i) + " has team id " +
                                  std::to_string(team_of[i]) + " >= r");
        }
        a.teams[team_of[i]].push_back(i);
    }
    a.team_of = std::move(team_of);
    a.validate();
    return a;
}

TeamAssignment TeamAssignment::from_groups(std::vector<IndexSet> groups, std::size_t n) {
    for (IndexSet& g : groups) std::sort(g.begin(), g.end());
    if (std::any_of(groups.begin(), groups.end(), [](const IndexSet& g) { return g.empty(); })) {
        throw ValidationError("team assignment contains an empty group");
    }
    std::sort(groups.begin(), groups.end(),
              [](const IndexSet& a, const IndexSet& b) { return a.front() < b.front(); });
    TeamAssignment a;
    a.r = groups.size();
    a.team_of.assign(n, a.r);
    for (std::size_t t = 0; t < groups.size(); ++t) {
        for (std::size_t i : groups[t]) {
            if (i >= n) throw ValidationError("team member index out of range");
            if (a.team_of[i] != a.r) throw ValidationError("robot assigned to two teams");
            a.team_of[i] = t;
        }
    }
    a.teams = std::move(groups);
    a.validate();
    return a;
}

void TeamAssignment::validate() const {
    if (teams.size() != r) throw ValidationError("team count does not match r");
    if (r == 0 && !team_of.empty()) throw ValidationError("robots present but r = 0");
    std::vector<int> seen(team_of.size(), 0);
    for (std::size_t t = 0; t < teams.size(); ++t) {
        if (teams[t].empty()) throw ValidationError("team " + std::to_string(t) + " is empty");
        for (std::size_t i : teams[t]) {
            if (i >= team_of.size()) throw ValidationError("team member index out of range");
            if (seen[i]++) throw ValidationError("robot assigned to two teams");
            if (team_of[i] != t) throw ValidationError("team_of disagrees with teams");
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
        throw ValidationError("some robot has no team");
    }
}

Eigen::MatrixXd minor_laplacian(const Eigen::MatrixXd& Z, const IndexSet& indices) {
    if (indices.empty()) throw ValidationError("minor_laplacian needs a non-empty index set");
    if (Z.rows() != Z.cols()) throw DimensionError("Z must be square");
    const auto m = static_cast<Eigen::Index>(indices.size());
    Eigen::MatrixXd w(m, m);
    for (Eigen::Index a = 0; a < m; ++a) {
        const auto i = static_cast<Eigen::Index>(indices[a]);
        if (i >= Z.rows()) throw DimensionError("index out of range for Z");
        for (Eigen::Index b = 0; b < m; ++b) {
            w(a, b) = Z(i, static_cast<Eigen::Index>(indices[b]));
        }
    }
    w = 0.5 * (w + w.transpose()).eval();
    Eigen::MatrixXd lap = -w;
    lap.diagonal() += w.rowwise().sum();
    return lap;
}

Eigen::VectorXd fiedler_vector(const Eigen::MatrixXd& laplacian) {
    const Eigen::Index n = laplacian.rows();
    if (laplacian.cols() != n) throw DimensionError("Laplacian must be square");
    if (n < 2) throw DimensionError("Fiedler vector needs dimension >= 2");
    if ((laplacian - laplacian.transpose()).cwiseAbs().maxCoeff() > 1e-8) {
        throw ValidationError("Laplacian must be symmetric");
    }
    if (laplacian.rowwise().sum().cwiseAbs().maxCoeff() > 1e-8) {
        throw ValidationError("Laplacian rows must sum to zero");
    }

    // The constant vector is always in the kernel. Lifting it above the rest
    // of the spectrum makes the smallest eigenpair of the shifted matrix the
    // Fiedler pair restricted to 1-perp, even when the kernel is degenerate.
    const double shift = laplacian.diagonal().cwiseAbs().sum() * 2.0 + 1.0;
    Eigen::MatrixXd shifted = laplacian;
    shifted.array() += shift / static_cast<double>(n);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(shifted);
    if (eig.info() != Eigen::Success) {
        throw NumericalError("symmetric eigensolver did not converge", laplacian);
    }
    Eigen::VectorXd v = eig.eigenvectors().col(0);
    v -= Eigen::VectorXd::Constant(n, v.mean());  // scrub rounding along 1
    v.normalize();

    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(v(i)) > kZeroTolerance) {
            if (v(i) < 0.0) v = -v;
            break;
        }
    }
    return v;
}

std::pair<IndexSet, IndexSet> split_by_median(const Eigen::VectorXd& values,
                                              const IndexSet& indices) {
    if (indices.size() < 2) throw ValidationError("cannot split fewer than 2 indices");
    if (static_cast<std::size_t>(values.size()) != indices.size()) {
        throw DimensionError("value count does not match index count");
    }
    std::vector<std::size_t> order(indices.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values(static_cast<Eigen::Index>(a)) < values(static_cast<Eigen::Index>(b));
    });
    const std::size_t lower_count = (indices.size() + 1) / 2;
    IndexSet lower, upper;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        (pos < lower_count ? lower : upper).push_back(indices[order[pos]]);
    }
    std::sort(lower.begin(), lower.end());
    std::sort(upper.begin(), upper.end());
    return {std::move(lower), std::move(upper)};
}

std::pair<IndexSet, IndexSet> fiedler_cut(const Eigen::MatrixXd& Z, const IndexSet& indices) {
    if (indices.size() < 2) throw ValidationError("fiedler_cut needs at least 2 indices");
    const Eigen::VectorXd v = fiedler_vector(minor_laplacian(Z, indices));

    IndexSet non_negative, negative;
    for (std::size_t a = 0; a < indices.size(); ++a) {
        const double x = v(static_cast<Eigen::Index>(a));
        (x < -kZeroTolerance ? negative : non_negative).push_back(indices[a]);
    }
    if (non_negative.empty() || negative.empty()) return split_by_median(v, indices);
    return {std::move(non_negative), std::move(negative)};
}

TeamAssignment partition(const Eigen::MatrixXd& Z, std::size_t r) {
    if (Z.rows() != Z.cols()) throw DimensionError("Z must be square");
    const auto n = static_cast<std::size_t>(Z.rows());
    if (r < 1) throw ValidationError("team count r must be at least 1");
    if (r > n) {
        throw ValidationError("team count r = " + std::to_string(r) + " exceeds robot count " +
                              std::to_string(n));
    }

    std::vector<IndexSet> groups(1);
    groups.front().resize(n);
    std::iota(groups.front().begin(), groups.front().end(), 0);

    while (groups.size() < r) {
        // groups stay sorted internally, so front() is the smallest member
        auto largest = std::max_element(groups.begin(), groups.end(),
                                        [](const IndexSet& a, const IndexSet& b) {
                                            if (a.size() != b.size()) return a.size() < b.size();
                                            return a.front() > b.front();
                                        });
        auto [left, right] = fiedler_cut(Z, *largest);
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        *largest = std::move(left);
        groups.push_back(std::move(right));
    }
    return TeamAssignment::from_groups(std::move(groups), n);
}

}  // namespace teamfuse
