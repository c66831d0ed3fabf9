// types.hpp — Shared numeric types and error classes

#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace qfridge {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<cplx>;
using RealSparseMatrix = Eigen::SparseMatrix<double>;

inline constexpr cplx I_unit{0.0, 1.0};

// Raised when a solver result fails its post-condition checks.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateSteadyState : public std::runtime_error {
public:
    DegenerateSteadyState(const std::string& what, int dimension)
        : std::runtime_error(what), dimension_(dimension) {}
    int dimension() const noexcept { return dimension_; }

private:
    int dimension_;
};

class ConvergenceFailure : public std::runtime_error {
public:
    ConvergenceFailure(const std::string& what, std::vector<double> history)
        : std::runtime_error(what), history_(std::move(history)) {}
    const std::vector<double>& history() const noexcept { return history_; }

private:
    std::vector<double> history_;
};

} // namespace qfridge
