#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace teamfuse {

/// Inputs with mismatched shapes (graph sizes, weight counts, index sets).
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configuration or domain value outside its documented range.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by normalize_graph when a relation graph carries no edges at all.
class AllZeroGraphError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A linear-algebra kernel produced non-finite output. The matrix that was
/// being decomposed is kept for post-mortem inspection.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, Eigen::MatrixXd iterate)
        : std::runtime_error(what), iterate_(std::move(iterate)) {}

    const Eigen::MatrixXd& iterate() const noexcept { return iterate_; }

private:
    Eigen::MatrixXd iterate_;
};

/// Rejection sampling in the simulator ran out of attempts.
class SamplingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace teamfuse
