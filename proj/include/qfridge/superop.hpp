// superop.hpp — Vectorised superoperators and steady-state solvers
//
// Density matrices are vectorised by column stacking, vec(A rho B) = (B^T kron A) vec(rho).

#pragma once

#include <vector>

#include "qfridge/params.hpp"
#include "qfridge/types.hpp"

namespace qfridge {

struct Superoperator {
    SparseMatrix matrix;
    bool trace_preserving{true};

    int dim() const; // Hilbert-space dimension d (matrix is d^2 x d^2)
};

/// tr(matrix * vec(rho)) is the energy current leaving `reservoir`, i.e. the
/// matrix is +i d/dchi of the counting-field-tilted generator at chi = 0.
struct CurrentSuperoperator {
    SparseMatrix matrix;
    ReservoirLabel reservoir{ReservoirLabel::cold};
};

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix identity(int d);
/// Superoperator of rho -> A rho B.
SparseMatrix sandwich(const SparseMatrix& left, const SparseMatrix& right);

Vector vectorize(const Matrix& rho);
Matrix unvectorize(const Vector& v, int d);
Matrix apply(const SparseMatrix& L, const Matrix& rho);
/// tr of the matrix obtained by applying L to rho.
cplx trace_of_image(const SparseMatrix& L, const Matrix& rho);

/// rate * [J rho J^+ - {J^+ J, rho}/2]. Throws std::domain_error for rate < 0.
Superoperator lindblad_term(const SparseMatrix& jump, double rate);
/// -i[H, .]. Throws std::domain_error when H is not Hermitian.
Superoperator commutator_term(const SparseMatrix& H);

/// max_j |sum_k L(kk, j)|: zero for trace-preserving generators.
double trace_defect(const SparseMatrix& L);

struct SteadyStateOptions {
    /// Always run the rank-revealing dense path (feasible for d^2 up to ~2000).
    bool force_rank_check{false};
    /// Largest d^2 for which the dense fallback is attempted.
    int dense_limit{2500};
    double rank_tol{1e-10};
};

struct SteadyState {
    Matrix rho;
    int nullity{1};
    bool degenerate{false};
    double residual{0.0}; // ||L rho|| / ||L||_F
    double min_eigenvalue{0.0};
};

/// Trace-normalised Hermitian null vector of L. A degenerate null space is not
/// an error here: the maximally mixed state is projected onto it and flagged.
SteadyState solve_steady_state(const SparseMatrix& L, const SteadyStateOptions& opts = {});

/// Strict variant: throws DegenerateSteadyState when the null space is not one-dimensional.
Matrix steady_state(const Superoperator& L, const SteadyStateOptions& opts = {});

/// Fourier components rho^(n), n in [-cutoff, cutoff], of the asymptotic state.
struct FourierState {
    int cutoff{0};
    std::vector<Matrix> components;

    const Matrix& at(int n) const { return components.at(static_cast<std::size_t>(n + cutoff)); }
    int dim() const { return static_cast<int>(components.front().rows()); }
    /// sum_n rho^(n) e^{i n Omega t}
    Matrix evaluate(double Omega, double t) const;
};

/// Solves 0 = (L0 - i n Omega) rho^(n) + L+ rho^(n-1) + L- rho^(n+1) for |n| <= cutoff
/// with tr rho^(0) = 1. Throws NumericalFailure when rho^(-n) != (rho^(n))^+ beyond 1e-8.
FourierState block_tridiagonal_nullspace(const SparseMatrix& L0, const SparseMatrix& Lplus,
                                         const SparseMatrix& Lminus, double Omega, int cutoff);

/// tr(obs rho). Throws std::invalid_argument on dimension mismatch.
cplx expectation(const Matrix& obs, const Matrix& rho);

double min_eigenvalue(const Matrix& rho);

} // namespace qfridge
