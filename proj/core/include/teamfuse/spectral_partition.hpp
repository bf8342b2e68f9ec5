#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace teamfuse {

using IndexSet = std::vector<std::size_t>;

/// Robot-to-team mapping. Teams are listed in ascending order of their
/// smallest member, and each team's members are sorted.
struct TeamAssignment {
    std::size_t r = 0;
    std::vector<IndexSet> teams;
    std::vector<std::size_t> team_of;

    /// Builds teams from a per-robot team index. Throws ValidationError if
    /// a team id in [0, r) has no members or an id is out of range.
    static TeamAssignment from_team_of(std::vector<std::size_t> team_of, std::size_t r);

    /// Builds from disjoint groups, renumbering teams by smallest member.
    static TeamAssignment from_groups(std::vector<IndexSet> groups, std::size_t n);

    std::size_t robot_count() const noexcept { return team_of.size(); }

    /// Disjoint, exhaustive, r non-empty teams, team_of consistent.
    void validate() const;

    friend bool operator==(const TeamAssignment&, const TeamAssignment&) = default;
};

/// D - W on the principal submatrix of Z selected by `indices`, with W the
/// symmetrised submatrix and D its row-sum diagonal. For the full index set
/// of an exactly bistochastic Z this is I - Z.
Eigen::MatrixXd minor_laplacian(const Eigen::MatrixXd& Z, const IndexSet& indices);

/// Unit eigenvector of the second-smallest Laplacian eigenvalue, taken
/// orthogonal to the constant vector so that disconnected graphs still give
/// a separating vector. Sign is fixed so the first non-zero entry is positive.
Eigen::VectorXd fiedler_vector(const Eigen::MatrixXd& laplacian);

/// Fallback split: order indices by (value, index) and give the first
/// ceil(n/2) to the lower side.
std::pair<IndexSet, IndexSet> split_by_median(const Eigen::VectorXd& values,
                                              const IndexSet& indices);

/// Splits `indices` by the sign of the Fiedler vector of their minor; zeros
/// join the non-negative side, which is returned first.
std::pair<IndexSet, IndexSet> fiedler_cut(const Eigen::MatrixXd& Z, const IndexSet& indices);

/// Recursive Fiedler bisection into r teams, always re-cutting the largest
/// group (ties go to the group holding the smallest robot index).
TeamAssignment partition(const Eigen::MatrixXd& Z, std::size_t r);

}  // namespace teamfuse
