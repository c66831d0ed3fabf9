// superop.cpp — Superoperator assembly, steady-state and block-tridiagonal solvers

#include "qfridge/superop.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>
#include <Eigen/SparseLU>

namespace qfridge {

namespace {

using Triplets = std::vector<Eigen::Triplet<cplx>>;

int hilbert_dim(Eigen::Index d2)
{
    const auto d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(d2))));
    if (static_cast<Eigen::Index>(d) * d != d2) {
        throw std::invalid_argument("superoperator size is not a perfect square");
    }
    return d;
}

Matrix hermitian_normalised(const Vector& x, int d)
{
    Matrix rho = unvectorize(x, d);
    const cplx tr = rho.trace();
    rho /= tr;
    return 0.5 * (rho + rho.adjoint());
}

double residual_of(const SparseMatrix& L, const Matrix& rho)
{
    const double scale = L.norm();
    if (scale == 0.0) return 0.0;
    return (L * vectorize(rho)).norm() / scale;
}

SteadyState dense_steady_state(const SparseMatrix& L, const SteadyStateOptions& opts)
{
    const int d = hilbert_dim(L.rows());
    const Matrix dense(L);
    Eigen::BDCSVD<Matrix> svd(dense, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const Eigen::Index n = sv.size();
    const double smax = n > 0 ? sv(0) : 0.0;

    int nullity = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (smax == 0.0 || sv(i) <= opts.rank_tol * smax) ++nullity;
    }
    const Matrix& V = svd.matrixV();
    const int keep = std::max(nullity, 1);
    const Matrix basis = V.rightCols(keep);

    SteadyState out;
    out.nullity = nullity;
    out.degenerate = nullity != 1;
    Vector x;
    if (keep == 1) {
        x = basis.col(0);
    } else {
        Vector mixed = Vector::Zero(L.rows());
        for (int k = 0; k < d; ++k) mixed(k * d + k) = 1.0 / d;
        x = basis * (basis.adjoint() * mixed);
        if (std::abs(unvectorize(x, d).trace()) < 1e-12) {
            // projection of the mixed state vanishes: take the basis vector with largest trace
            Eigen::Index best = 0;
            double best_tr = -1.0;
            for (Eigen::Index j = 0; j < basis.cols(); ++j) {
                const double tr = std::abs(unvectorize(basis.col(j), d).trace());
                if (tr > best_tr) {
                    best_tr = tr;
                    best = j;
                }
            }
            x = basis.col(best);
        }
    }
    out.rho = hermitian_normalised(x, d);
    out.residual = residual_of(L, out.rho);
    out.min_eigenvalue = min_eigenvalue(out.rho);
    return out;
}

} // namespace

int Superoperator::dim() const { return hilbert_dim(matrix.rows()); }

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b)
{
    Triplets t;
    t.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
    for (int ja = 0; ja < a.outerSize(); ++ja) {
        for (SparseMatrix::InnerIterator ia(a, ja); ia; ++ia) {
            for (int jb = 0; jb < b.outerSize(); ++jb) {
                for (SparseMatrix::InnerIterator ib(b, jb); ib; ++ib) {
                    t.emplace_back(ia.row() * b.rows() + ib.row(), ja * b.cols() + jb,
                                   ia.value() * ib.value());
                }
            }
        }
    }
    SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    out.setFromTriplets(t.begin(), t.end());
    return out;
}

SparseMatrix identity(int d)
{
    SparseMatrix id(d, d);
    id.setIdentity();
    return id;
}

SparseMatrix sandwich(const SparseMatrix& left, const SparseMatrix& right)
{
    return kron(SparseMatrix(right.transpose()), left);
}

Vector vectorize(const Matrix& rho)
{
    return Eigen::Map<const Vector>(rho.data(), rho.size());
}

Matrix unvectorize(const Vector& v, int d)
{
    return Eigen::Map<const Matrix>(v.data(), d, d);
}

Matrix apply(const SparseMatrix& L, const Matrix& rho)
{
    return unvectorize(L * vectorize(rho), static_cast<int>(rho.rows()));
}

cplx trace_of_image(const SparseMatrix& L, const Matrix& rho)
{
    return apply(L, rho).trace();
}

Superoperator lindblad_term(const SparseMatrix& jump, double rate)
{
    if (rate < 0.0) {
        throw std::domain_error("lindblad_term: negative rate " + std::to_string(rate));
    }
    const int d = static_cast<int>(jump.rows());
    const SparseMatrix id = identity(d);
    const SparseMatrix jd = jump.adjoint();
    const SparseMatrix jdj = jd * jump;
    SparseMatrix m = sandwich(jump, jd) - cplx(0.5) * sandwich(jdj, id) -
                     cplx(0.5) * sandwich(id, jdj);
    m *= cplx(rate);
    m.prune(cplx(0.0));
    return {m, true};
}

Superoperator commutator_term(const SparseMatrix& H)
{
    const SparseMatrix diff = H - SparseMatrix(H.adjoint());
    if (diff.norm() > 1e-12 * std::max(1.0, H.norm())) {
        throw std::domain_error("commutator_term: Hamiltonian is not Hermitian");
    }
    const int d = static_cast<int>(H.rows());
    const SparseMatrix id = identity(d);
    SparseMatrix m = -I_unit * (sandwich(H, id) - sandwich(id, H));
    m.prune(cplx(0.0));
    return {m, true};
}

double trace_defect(const SparseMatrix& L)
{
    const int d = hilbert_dim(L.rows());
    double worst = 0.0;
    for (int j = 0; j < L.outerSize(); ++j) {
        cplx col_sum = 0.0;
        for (SparseMatrix::InnerIterator it(L, j); it; ++it) {
            if (it.row() % (d + 1) == 0) col_sum += it.value();
        }
        worst = std::max(worst, std::abs(col_sum));
    }
    return worst;
}

SteadyState solve_steady_state(const SparseMatrix& L, const SteadyStateOptions& opts)
{
    const Eigen::Index d2 = L.rows();
    const int d = hilbert_dim(d2);
    if (opts.force_rank_check) return dense_steady_state(L, opts);

    // replace the rho_00 row by the trace functional
    Triplets t;
    t.reserve(static_cast<std::size_t>(L.nonZeros() + d));
    for (int j = 0; j < L.outerSize(); ++j) {
        for (SparseMatrix::InnerIterator it(L, j); it; ++it) {
            if (it.row() != 0) t.emplace_back(it.row(), j, it.value());
        }
    }
    for (int k = 0; k < d; ++k) t.emplace_back(0, k * d + k, 1.0);
    SparseMatrix A(d2, d2);
    A.setFromTriplets(t.begin(), t.end());
    A.makeCompressed();

    Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(A);
    bool ok = lu.info() == Eigen::Success;
    Vector x;
    if (ok) {
        Vector rhs = Vector::Zero(d2);
        rhs(0) = 1.0;
        x = lu.solve(rhs);
        ok = lu.info() == Eigen::Success && x.allFinite() && x.norm() < 1e3;
    }
    if (ok) {
        SteadyState out;
        out.rho = hermitian_normalised(x, d);
        out.residual = residual_of(L, out.rho);
        ok = out.residual < 1e-8;
        if (ok) {
            out.min_eigenvalue = min_eigenvalue(out.rho);
            return out;
        }
    }
    if (d2 <= opts.dense_limit) return dense_steady_state(L, opts);
    throw NumericalFailure("solve_steady_state: sparse solve failed and d^2 = " +
                           std::to_string(d2) + " exceeds the dense limit");
}

Matrix steady_state(const Superoperator& L, const SteadyStateOptions& opts)
{
    const double scale = std::max(1.0, L.matrix.norm());
    if (trace_defect(L.matrix) > 1e-10 * scale) {
        throw std::invalid_argument("steady_state: generator is not trace preserving");
    }
    auto res = solve_steady_state(L.matrix, opts);
    if (res.degenerate) {
        throw DegenerateSteadyState("steady_state: null space dimension " +
                                        std::to_string(res.nullity),
                                    res.nullity);
    }
    return res.rho;
}

Matrix FourierState::evaluate(double Omega, double t) const
{
    Matrix out = Matrix::Zero(dim(), dim());
    for (int n = -cutoff; n <= cutoff; ++n) out += at(n) * std::exp(I_unit * (n * Omega * t));
    return out;
}

FourierState block_tridiagonal_nullspace(const SparseMatrix& L0, const SparseMatrix& Lplus,
                                         const SparseMatrix& Lminus, double Omega, int cutoff)
{
    if (cutoff < 1) throw std::invalid_argument("block_tridiagonal_nullspace: cutoff must be >= 1");
    const Eigen::Index d2 = L0.rows();
    const int d = hilbert_dim(d2);
    const int blocks = 2 * cutoff + 1;
    const Eigen::Index size = d2 * blocks;
    const Eigen::Index norm_row = static_cast<Eigen::Index>(cutoff) * d2; // rho^(0)_00 row

    Triplets t;
    t.reserve(static_cast<std::size_t>(blocks * (L0.nonZeros() + Lplus.nonZeros() +
                                                 Lminus.nonZeros() + d2)));
    auto add_block = [&](const SparseMatrix& B, int brow, int bcol) {
        for (int j = 0; j < B.outerSize(); ++j) {
            for (SparseMatrix::InnerIterator it(B, j); it; ++it) {
                const Eigen::Index r = brow * d2 + it.row();
                if (r == norm_row) continue;
                t.emplace_back(r, bcol * d2 + j, it.value());
            }
        }
    };
    for (int b = 0; b < blocks; ++b) {
        const int n = b - cutoff;
        add_block(L0, b, b);
        for (Eigen::Index k = 0; k < d2; ++k) {
            const Eigen::Index r = b * d2 + k;
            if (r != norm_row && n != 0) t.emplace_back(r, r, -I_unit * (n * Omega));
        }
        if (b > 0) add_block(Lplus, b, b - 1);
        if (b + 1 < blocks) add_block(Lminus, b, b + 1);
    }
    for (int k = 0; k < d; ++k) t.emplace_back(norm_row, norm_row + k * d + k, 1.0);

    SparseMatrix A(size, size);
    A.setFromTriplets(t.begin(), t.end());
    A.makeCompressed();

    // The smallest coordinate subspace that contains the normalisation unknown and is
    // mapped into itself by A carries the whole solution; the rest of x vanishes.
    std::vector<Eigen::Index> local(static_cast<std::size_t>(size), -1);
    std::vector<Eigen::Index> kept{norm_row};
    local[static_cast<std::size_t>(norm_row)] = 0;
    for (std::size_t head = 0; head < kept.size(); ++head) {
        for (SparseMatrix::InnerIterator it(A, kept[head]); it; ++it) {
            auto& slot = local[static_cast<std::size_t>(it.row())];
            if (slot < 0) {
                slot = static_cast<Eigen::Index>(kept.size());
                kept.push_back(it.row());
            }
        }
    }
    const auto n_kept = static_cast<Eigen::Index>(kept.size());
    Triplets sub;
    sub.reserve(static_cast<std::size_t>(A.nonZeros()));
    for (Eigen::Index j = 0; j < n_kept; ++j) {
        for (SparseMatrix::InnerIterator it(A, kept[static_cast<std::size_t>(j)]); it; ++it) {
            sub.emplace_back(local[static_cast<std::size_t>(it.row())], j, it.value());
        }
    }
    SparseMatrix As(n_kept, n_kept);
    As.setFromTriplets(sub.begin(), sub.end());
    As.makeCompressed();

    Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(As);
    if (lu.info() != Eigen::Success) {
        throw NumericalFailure("block_tridiagonal_nullspace: factorisation failed (degenerate)");
    }
    Vector rhs = Vector::Zero(n_kept);
    rhs(0) = 1.0;
    const Vector xs = lu.solve(rhs);
    if (lu.info() != Eigen::Success || !xs.allFinite()) {
        throw NumericalFailure("block_tridiagonal_nullspace: solve failed");
    }
    Vector x = Vector::Zero(size);
    for (Eigen::Index j = 0; j < n_kept; ++j) x(kept[static_cast<std::size_t>(j)]) = xs(j);

    FourierState out;
    out.cutoff = cutoff;
    out.components.reserve(static_cast<std::size_t>(blocks));
    for (int b = 0; b < blocks; ++b) {
        out.components.push_back(unvectorize(x.segment(b * d2, d2), d));
    }

    double pairing = 0.0;
    for (int n = 0; n <= cutoff; ++n) {
        pairing = std::max(pairing, (out.at(-n) - out.at(n).adjoint()).cwiseAbs().maxCoeff());
    }
    if (pairing > 1e-8) {
        throw NumericalFailure("block_tridiagonal_nullspace: Hermitian pairing violated by " +
                               std::to_string(pairing));
    }
    for (int n = 0; n <= cutoff; ++n) {
        const Matrix sym = 0.5 * (out.at(n) + out.at(-n).adjoint());
        out.components[static_cast<std::size_t>(n + cutoff)] = sym;
        out.components[static_cast<std::size_t>(cutoff - n)] = sym.adjoint();
    }
    return out;
}

cplx expectation(const Matrix& obs, const Matrix& rho)
{
    if (obs.rows() != rho.rows() || obs.cols() != rho.cols() || obs.rows() != obs.cols()) {
        throw std::invalid_argument("expectation: dimension mismatch");
    }
    return (obs * rho).trace();
}

double min_eigenvalue(const Matrix& rho)
{
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace qfridge
