// collective_basis.cpp — Ladder matrix elements and rotated collective basis

#include "qfridge/collective_basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qfridge {

int basis_dim(int N)
{
    if (N < 0) throw std::invalid_argument("basis_dim: N must be >= 0");
    return (N + 1) * (N + 2) / 2;
}

CollectiveBasis::CollectiveBasis(int n_qutrits) : n_(n_qutrits), dim_(basis_dim(n_qutrits)) {}

int CollectiveBasis::index(BasisIndex s) const
{
    if (!contains(s)) throw std::out_of_range("CollectiveBasis::index: state outside simplex");
    const int k = s.M + s.m;
    return k * (k + 1) / 2 + s.M;
}

BasisIndex CollectiveBasis::state(int index) const
{
    if (index < 0 || index >= dim_) throw std::out_of_range("CollectiveBasis::state");
    int k = static_cast<int>((std::sqrt(8.0 * index + 1.0) - 1.0) / 2.0);
    // guard the floating-point floor
    while (k * (k + 1) / 2 > index) --k;
    while ((k + 1) * (k + 2) / 2 <= index) ++k;
    const int M = index - k * (k + 1) / 2;
    return {M, k - M};
}

std::string_view to_string(LadderKind kind)
{
    switch (kind) {
    case LadderKind::Jc_plus: return "Jc+";
    case LadderKind::Jc_minus: return "Jc-";
    case LadderKind::Jh_plus: return "Jh+";
    case LadderKind::Jh_minus: return "Jh-";
    case LadderKind::Jw_plus: return "Jw+";
    case LadderKind::Jw_minus: return "Jw-";
    case LadderKind::Sminus_plus: return "S-+";
    case LadderKind::Sminus_minus: return "S--";
    case LadderKind::Splus_plus: return "S++";
    case LadderKind::Splus_minus: return "S+-";
    case LadderKind::number_small: return "N_delta";
    case LadderKind::number_large: return "N_Delta";
    case LadderKind::identity: return "identity";
    }
    return "?";
}

bool is_rotated(LadderKind kind)
{
    return kind == LadderKind::Sminus_plus || kind == LadderKind::Sminus_minus ||
           kind == LadderKind::Splus_plus || kind == LadderKind::Splus_minus;
}

LadderKind adjoint_kind(LadderKind kind)
{
    switch (kind) {
    case LadderKind::Jc_plus: return LadderKind::Jc_minus;
    case LadderKind::Jc_minus: return LadderKind::Jc_plus;
    case LadderKind::Jh_plus: return LadderKind::Jh_minus;
    case LadderKind::Jh_minus: return LadderKind::Jh_plus;
    case LadderKind::Jw_plus: return LadderKind::Jw_minus;
    case LadderKind::Jw_minus: return LadderKind::Jw_plus;
    case LadderKind::Sminus_plus: return LadderKind::Sminus_minus;
    case LadderKind::Sminus_minus: return LadderKind::Sminus_plus;
    case LadderKind::Splus_plus: return LadderKind::Splus_minus;
    case LadderKind::Splus_minus: return LadderKind::Splus_plus;
    default: return kind;
    }
}

LadderElement ladder_element(LadderKind kind, BasisIndex from, int N)
{
    if (from.M < 0 || from.m < 0 || from.M + from.m > N) {
        throw std::out_of_range("ladder_element: source state outside simplex");
    }
    const int M = from.M;
    const int m = from.m;
    const int free = N - M - m;

    BasisIndex to = from;
    double amp2 = 0.0;
    switch (kind) {
    case LadderKind::Jh_plus:
        to = {M + 1, m};
        amp2 = static_cast<double>(free) * (M + 1);
        break;
    case LadderKind::Jh_minus:
        to = {M - 1, m};
        amp2 = static_cast<double>(free + 1) * M;
        break;
    case LadderKind::Jc_plus:
        to = {M, m + 1};
        amp2 = static_cast<double>(free) * (m + 1);
        break;
    case LadderKind::Jc_minus:
        to = {M, m - 1};
        amp2 = static_cast<double>(free + 1) * m;
        break;
    case LadderKind::Jw_plus:
        to = {M + 1, m - 1};
        amp2 = static_cast<double>(M + 1) * m;
        break;
    case LadderKind::Jw_minus:
        to = {M - 1, m + 1};
        amp2 = static_cast<double>(M) * (m + 1);
        break;
    case LadderKind::number_small: return {from, static_cast<double>(m)};
    case LadderKind::number_large: return {from, static_cast<double>(M)};
    case LadderKind::identity: return {from, 1.0};
    default:
        throw std::logic_error("ladder_element: rotated kinds have no single image state");
    }
    if (amp2 <= 0.0 || to.M < 0 || to.m < 0 || to.M + to.m > N) return {std::nullopt, 0.0};
    return {to, std::sqrt(amp2)};
}

namespace {

SparseMatrix bare_operator(LadderKind kind, int N)
{
    const CollectiveBasis basis(N);
    std::vector<Eigen::Triplet<cplx>> triplets;
    triplets.reserve(static_cast<std::size_t>(basis.dim()));
    for (int j = 0; j < basis.dim(); ++j) {
        const auto e = ladder_element(kind, basis.state(j), N);
        if (e.to && e.amplitude != 0.0) triplets.emplace_back(basis.index(*e.to), j, e.amplitude);
    }
    SparseMatrix out(basis.dim(), basis.dim());
    out.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

} // namespace

CollectiveOperator build_operator(LadderKind kind, int N, double alpha)
{
    if (N < 1) throw std::invalid_argument("build_operator: N must be >= 1");
    if (!is_rotated(kind)) return {bare_operator(kind, N), kind};

    double c = std::cos(alpha);
    double s = std::sin(alpha);
    // keep the undriven limits exact so S reduces to a pure J operator
    if (std::abs(alpha) == std::numbers::pi / 2.0) {
        c = 0.0;
        s = alpha > 0.0 ? 1.0 : -1.0;
    }
    const bool raising = kind == LadderKind::Sminus_plus || kind == LadderKind::Splus_plus;
    const SparseMatrix jc = bare_operator(raising ? LadderKind::Jc_plus : LadderKind::Jc_minus, N);
    const SparseMatrix jh = bare_operator(raising ? LadderKind::Jh_plus : LadderKind::Jh_minus, N);

    SparseMatrix m;
    if (kind == LadderKind::Sminus_plus || kind == LadderKind::Sminus_minus) {
        m = cplx(c) * jc - cplx(s) * jh;
    } else {
        m = cplx(s) * jc + cplx(c) * jh;
    }
    m.prune(cplx(0.0));
    return {m, kind};
}

Matrix rotated_basis_transform(int N, double alpha)
{
    const CollectiveBasis basis(N);
    const int d = basis.dim();
    const SparseMatrix s_minus_up = build_operator(LadderKind::Sminus_plus, N, alpha).matrix;
    const SparseMatrix s_plus_up = build_operator(LadderKind::Splus_plus, N, alpha).matrix;

    Matrix U = Matrix::Zero(d, d);
    // column (0,m) from (0,m-1) via S_-^+, then (M,m) from (M-1,m) via S_+^+
    std::vector<Vector> cols(static_cast<std::size_t>(d));
    Vector vac = Vector::Zero(d);
    vac(basis.index({0, 0})) = 1.0;
    cols[basis.index({0, 0})] = vac;
    for (int m = 1; m <= N; ++m) {
        Vector v = s_minus_up * cols[basis.index({0, m - 1})];
        cols[basis.index({0, m})] = v / v.norm();
    }
    for (int m = 0; m <= N; ++m) {
        for (int M = 1; M + m <= N; ++M) {
            Vector v = s_plus_up * cols[basis.index({M - 1, m})];
            cols[basis.index({M, m})] = v / v.norm();
        }
    }
    for (int j = 0; j < d; ++j) U.col(j) = cols[j];

    const double defect = (U.adjoint() * U - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (defect > 1e-10) {
        throw NumericalFailure("rotated_basis_transform: orthonormality defect " +
                               std::to_string(defect));
    }
    return U;
}

SparseMatrix collective_floquet_hamiltonian(int N, double delta, double Delta, double Omega,
                                            double lambda)
{
    const SparseMatrix nl = bare_operator(LadderKind::number_large, N);
    const SparseMatrix ns = bare_operator(LadderKind::number_small, N);
    const SparseMatrix wp = bare_operator(LadderKind::Jw_plus, N);
    const SparseMatrix wm = bare_operator(LadderKind::Jw_minus, N);
    // (Delta - Omega/2) N_Delta + (delta + Omega/2) N_delta + lambda (|1><2| + |2><1|) summed
    SparseMatrix h = cplx(Delta - Omega / 2.0) * nl + cplx(delta + Omega / 2.0) * ns +
                     cplx(lambda) * (wm + wp);
    return h;
}

} // namespace qfridge
