// test_floquet_lindblad.cpp — Secular Floquet generator, Pauli rates and cooling conditions

#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "qfridge/collective_basis.hpp"
#include "qfridge/floquet_lindblad.hpp"

using namespace qfridge;

namespace {

// single-qutrit rate equation for (P0, P-, P+) written out branch by branch
struct PauliOne {
    Eigen::Vector3d p;
    double I_cold{0.0};
    double I_hot{0.0};
};

PauliOne pauli_one(const SystemParams& sp, const ReservoirPair& r)
{
    const FloquetData f = floquet_decompose(sp, r);
    const double c2 = f.cos_alpha() * f.cos_alpha();
    const double s2 = f.sin_alpha() * f.sin_alpha();
    const double h = sp.Omega / 2.0;
    const double em = f.eps_minus;
    const double ep = f.eps_plus;
    const double down_m = c2 * rate_gamma(em - h, r.cold) + s2 * rate_gamma(em + h, r.hot);
    const double down_p = s2 * rate_gamma(ep - h, r.cold) + c2 * rate_gamma(ep + h, r.hot);
    const double up_m = c2 * rate_gamma(-(em - h), r.cold) + s2 * rate_gamma(-(em + h), r.hot);
    const double up_p = s2 * rate_gamma(-(ep - h), r.cold) + c2 * rate_gamma(-(ep + h), r.hot);
    Eigen::Matrix3d R;
    R << -(up_m + up_p), down_m, down_p, up_m, -down_m, 0.0, up_p, 0.0, -down_p;
    Eigen::Matrix3d A = R;
    A.row(0).setOnes();
    PauliOne out;
    out.p = A.fullPivLu().solve(Eigen::Vector3d(1.0, 0.0, 0.0));
    const double P0 = out.p(0);
    const double Pm = out.p(1);
    const double Pp = out.p(2);
    out.I_cold = (em - h) * c2 * (rate_gamma(-(em - h), r.cold) * P0 - rate_gamma(em - h, r.cold) * Pm) +
                 (ep - h) * s2 * (rate_gamma(-(ep - h), r.cold) * P0 - rate_gamma(ep - h, r.cold) * Pp);
    out.I_hot = (em + h) * s2 * (rate_gamma(-(em + h), r.hot) * P0 - rate_gamma(em + h, r.hot) * Pm) +
                (ep + h) * c2 * (rate_gamma(-(ep + h), r.hot) * P0 - rate_gamma(ep + h, r.hot) * Pp);
    return out;
}

CurrentReport currents(const SystemParams& p, const ReservoirPair& r, FloquetMode mode)
{
    return floquet_lindblad_currents(build_floquet_lindblad(p, r.cold, r.hot, mode));
}

} // namespace

TEST_CASE("single-qutrit Pauli rates reproduce the explicit rate equation")
{
    const ReservoirPair r;
    for (double Om : {-1.5, 0.3, 1.0, 2.2}) {
        for (double lam : {-0.7, 0.2, 1.0, 2.5}) {
            const SystemParams p{1.0, 2.0, Om, lam, 1};
            const auto ref = pauli_one(p, r);
            for (FloquetMode mode : {FloquetMode::pauli, FloquetMode::full}) {
                const auto sol = solve_floquet_lindblad(build_floquet_lindblad(p, r.cold, r.hot, mode));
                INFO("Omega=" << Om << " lambda=" << lam << " mode=" << to_string(mode));
                CHECK(std::abs(sol.report.I_cold - ref.I_cold) < 1e-12 * (1.0 + std::abs(ref.I_cold)));
                CHECK(std::abs(sol.report.I_hot - ref.I_hot) < 1e-12 * (1.0 + std::abs(ref.I_hot)));
                // basis order (0,0), (0,1) = |->, (1,0) = |+>
                CHECK(sol.populations(0) == doctest::Approx(ref.p(0)).epsilon(1e-10));
                CHECK(sol.populations(1) == doctest::Approx(ref.p(1)).epsilon(1e-10));
                CHECK(sol.populations(2) == doctest::Approx(ref.p(2)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("full generator and Pauli rates give identical currents")
{
    const ReservoirPair r;
    for (int N = 1; N <= 4; ++N) {
        for (double Om : {0.8, 1.0, 1.7}) {
            const SystemParams p{1.0, 2.0, Om, 0.5, N};
            const auto a = currents(p, r, FloquetMode::full);
            const auto b = currents(p, r, FloquetMode::pauli);
            CHECK(std::abs(a.I_cold - b.I_cold) <= 1e-10 * std::abs(b.I_cold));
            CHECK(std::abs(a.I_hot - b.I_hot) <= 1e-10 * std::abs(b.I_hot));
        }
    }
}

TEST_CASE("rate matrix columns sum to zero and collective rates carry Clebsch-Gordan factors")
{
    const ReservoirPair r;
    for (int N : {1, 5, 30}) {
        const SystemParams p{1.0, 2.0, 1.0, 0.5, N};
        const auto gen = build_floquet_lindblad(p, r.cold, r.hot, FloquetMode::pauli);
        CHECK(gen.pauli.column_sum_defect() < 1e-13);
        CHECK(gen.pauli.dim() == basis_dim(N));
    }
    // the |0,m> -> |0,m+1> rate scales as (N - m)(m + 1) times the single-qutrit rate
    const int N = 8;
    const SystemParams p1{1.0, 2.0, 1.0, 0.5, 1};
    const SystemParams pN{1.0, 2.0, 1.0, 0.5, N};
    const auto one = build_floquet_lindblad(p1, r.cold, r.hot, FloquetMode::pauli).pauli;
    const auto many = build_floquet_lindblad(pN, r.cold, r.hot, FloquetMode::pauli).pauli;
    const CollectiveBasis b(N);
    const double single = one.R.coeff(1, 0);
    const int m = N / 2;
    const double collective = many.R.coeff(b.index({0, m + 1}), b.index({0, m}));
    CHECK(collective == doctest::Approx(single * (N - m) * (m + 1)).epsilon(1e-13));
    CHECK((N - m) * (m + 1) == doctest::Approx(N * N / 4.0 + N / 2.0));
}

TEST_CASE("populations and coherences decouple in the Floquet basis")
{
    const ReservoirPair r;
    const SystemParams p{1.0, 2.0, 0.9, 0.6, 3};
    const auto gen = build_floquet_lindblad(p, r.cold, r.hot, FloquetMode::full);
    const Matrix G = Matrix(floquet_basis_generator(gen));
    const int d = basis_dim(3);
    for (int i = 0; i < d; ++i) {
        const int pop = i * (d + 1);
        for (int col = 0; col < d * d; ++col) {
            if (col % (d + 1) == 0) continue; // population column
            CHECK(std::abs(G(pop, col)) < 1e-13);
            CHECK(std::abs(G(col, pop)) < 1e-13);
        }
    }
    CHECK(trace_defect(gen.L.matrix) < 1e-12);
}

TEST_CASE("full-mode state is a valid density matrix")
{
    const ReservoirPair r;
    for (int N : {1, 2, 3}) {
        const auto sol = solve_floquet_lindblad(
            build_floquet_lindblad({1.0, 2.0, 1.2, 0.4, N}, r.cold, r.hot, FloquetMode::full));
        CHECK(std::abs(sol.rho.trace() - 1.0) < 1e-12);
        CHECK((sol.rho - sol.rho.adjoint()).norm() < 1e-12);
        CHECK(sol.min_eigenvalue >= -1e-8);
        CHECK_FALSE(sol.degenerate);
    }
}

TEST_CASE("equal temperatures without driving frequency give a Gibbs state")
{
    for (int N = 1; N <= 3; ++N) {
        ReservoirPair r;
        r.cold.beta = r.hot.beta = 0.8;
        r.hot.gamma_bare = 0.25;
        const SystemParams p{1.0, 2.0, 0.0, 0.7, N};
        const FloquetData f = floquet_decompose(p, r);
        const auto sol = solve_floquet_lindblad(build_floquet_lindblad(p, r.cold, r.hot, FloquetMode::pauli));
        const CollectiveBasis b(N);
        Eigen::VectorXd gibbs(b.dim());
        for (int i = 0; i < b.dim(); ++i) {
            const auto s = b.state(i);
            gibbs(i) = std::exp(-0.8 * (s.M * f.eps_plus + s.m * f.eps_minus));
        }
        gibbs /= gibbs.sum();
        CHECK((sol.populations - gibbs).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(std::abs(sol.report.I_cold) < 1e-14);
        CHECK(std::abs(sol.report.I_hot) < 1e-14);
    }
}

TEST_CASE("undriven and strongly driven limits")
{
    const ReservoirPair r;
    for (double Om : {0.5, 1.5}) {
        const auto rep = currents({1.0, 2.0, Om, 0.0, 2}, r, FloquetMode::pauli);
        CHECK(std::abs(rep.I_cold) < 1e-15);
        CHECK(std::abs(rep.I_hot) < 1e-15);
    }
    const double moderate = currents({1.0, 2.0, 1.0, 0.5, 1}, r, FloquetMode::pauli).I_cold;
    const double strong = currents({1.0, 2.0, 1.0, 60.0, 1}, r, FloquetMode::pauli).I_cold;
    CHECK(std::abs(strong) < 1e-3 * std::abs(moderate));
}

TEST_CASE("thermodynamic bookkeeping of the rate equation")
{
    const ReservoirPair r;
    for (double lam : {0.3, 1.0}) {
        const SystemParams p{1.0, 2.0, 1.4, lam, 4};
        const auto gen = build_floquet_lindblad(p, r.cold, r.hot, FloquetMode::pauli);
        const auto ss = pauli_steady_state(gen.pauli);
        const auto [ic, ih] = pauli_currents(gen.pauli, ss.p);
        const double P = pauli_drive_power(gen.pauli, ss.p);
        CHECK(std::abs(P + ic + ih) < 1e-12 * pauli_gross_flow(gen.pauli, ss.p));
        const auto rep = make_report(ic, ih, r);
        CHECK(rep.entropy_rate >= -1e-14);
        CHECK(rep.cop_renormalized <= 1.0);
    }
}

TEST_CASE("several closed classes are flagged as degenerate")
{
    ReservoirPair r;
    r.cold.beta = r.hot.beta = std::numeric_limits<double>::infinity();
    const SystemParams p{1.0, 2.0, 0.0, std::sqrt(2.0), 2};
    const auto gen = build_floquet_lindblad(p, r.cold, r.hot, FloquetMode::pauli);
    CHECK(std::abs(gen.floquet.eps_minus) < 1e-15);
    const auto ss = pauli_steady_state(gen.pauli);
    CHECK(ss.degenerate);
    CHECK(ss.closed_classes == 3);
    CHECK(ss.p.sum() == doctest::Approx(1.0));
    CHECK(solve_floquet_lindblad(gen).degenerate);
}

TEST_CASE("cooling conditions")
{
    const ReservoirPair r;
    const SystemParams p{1.0, 2.0, 1.0, 0.5, 1};
    const auto c = cooling_conditions(p, r.cold, r.hot);
    const FloquetData f = floquet_decompose(p, r);
    CHECK(c.upper_gap == doctest::Approx(f.eps_minus - 0.5));
    CHECK(c.upper_cycle == doctest::Approx(1.0 * (f.eps_plus + 0.5) - 1.5 * (f.eps_plus - 0.5)));
    CHECK(c.lower_cycle == doctest::Approx(1.5 * (f.eps_minus - 0.5) - 1.0 * (f.eps_minus + 0.5)));
    CHECK(c.classification == CoolingClass::guaranteed_cooling);
    CHECK(currents(p, r, FloquetMode::pauli).I_cold > 0.0);
    CHECK(to_string(c.classification) == "guaranteed_cooling");

    for (double lam = -3.0; lam <= 3.0; lam += 0.1) {
        const auto z = cooling_conditions({1.0, 2.0, 0.0, lam, 1}, r.cold, r.hot);
        CHECK(z.classification != CoolingClass::guaranteed_cooling);
    }
}

TEST_CASE("secular warning near resonance with weak driving")
{
    const ReservoirPair r;
    CHECK(build_floquet_lindblad({1.0, 2.0, 1.0, 1e-3, 1}, r.cold, r.hot, FloquetMode::pauli).secular_warning);
    CHECK_FALSE(build_floquet_lindblad({1.0, 2.0, 1.0, 0.5, 1}, r.cold, r.hot, FloquetMode::pauli).secular_warning);
}
