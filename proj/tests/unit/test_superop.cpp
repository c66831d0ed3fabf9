// test_superop.cpp — Vectorisation, Lindblad terms and steady-state solvers

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "qfridge/superop.hpp"

using namespace qfridge;

namespace {

Matrix random_matrix(int d, std::mt19937& rng)
{
    std::normal_distribution<double> g;
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = cplx(g(rng), g(rng));
    return m;
}

SparseMatrix sparse(const Matrix& m) { return m.sparseView(); }

SparseMatrix sigma_minus()
{
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0; // |g><e| with |g> = index 0
    return sparse(m);
}

SparseMatrix sigma_z()
{
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = -1.0;
    m(1, 1) = 1.0;
    return sparse(m);
}

} // namespace

TEST_CASE("kron and sandwich agree with dense algebra")
{
    std::mt19937 rng(7);
    const Matrix a = random_matrix(3, rng);
    const Matrix b = random_matrix(2, rng);
    const Matrix k = Matrix(kron(sparse(a), sparse(b)));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) CHECK(std::abs(k(2 * i + r, 2 * j + c) - a(i, j) * b(r, c)) < 1e-14);

    const Matrix A = random_matrix(4, rng);
    const Matrix B = random_matrix(4, rng);
    const Matrix rho = random_matrix(4, rng);
    const Matrix got = qfridge::apply(sandwich(sparse(A), sparse(B)), rho);
    CHECK((got - A * rho * B).norm() < 1e-12);
    CHECK((unvectorize(vectorize(rho), 4) - rho).norm() == 0.0);
    CHECK(Matrix(identity(3)) == Matrix::Identity(3, 3));
}

TEST_CASE("Lindblad and commutator terms preserve trace and Hermiticity")
{
    std::mt19937 rng(11);
    const Matrix J = random_matrix(3, rng);
    Matrix H = random_matrix(3, rng);
    H = (H + H.adjoint()).eval();
    const SparseMatrix L = lindblad_term(sparse(J), 0.7).matrix + commutator_term(sparse(H)).matrix;
    CHECK(trace_defect(L) < 1e-13);
    Matrix rho = random_matrix(3, rng);
    rho = (rho * rho.adjoint()).eval();
    const Matrix out = qfridge::apply(L, rho);
    CHECK((out - out.adjoint()).norm() < 1e-12);
    CHECK(std::abs(trace_of_image(L, rho)) < 1e-12);
    CHECK(std::abs(out.trace()) < 1e-12);
}

TEST_CASE("invalid terms are rejected")
{
    CHECK_THROWS_AS(lindblad_term(sigma_minus(), -0.1), std::domain_error);
    CHECK_THROWS_AS(commutator_term(sigma_minus()), std::domain_error);
    CHECK_THROWS_AS(expectation(Matrix::Identity(2, 2), Matrix::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("thermal qubit steady state")
{
    const double gd = 0.3;
    const double gu = 0.1;
    SparseMatrix L = commutator_term(sigma_z()).matrix + lindblad_term(sigma_minus(), gd).matrix +
                     lindblad_term(SparseMatrix(sigma_minus().adjoint()), gu).matrix;
    const SteadyState ss = solve_steady_state(L);
    CHECK_FALSE(ss.degenerate);
    CHECK(ss.nullity == 1);
    CHECK(std::real(ss.rho(1, 1)) == doctest::Approx(gu / (gu + gd)).epsilon(1e-12));
    CHECK(std::abs(ss.rho(0, 1)) < 1e-13);
    CHECK(ss.min_eigenvalue > 0.0);
    const Matrix strict = steady_state(Superoperator{L, true});
    CHECK((strict - ss.rho).norm() < 1e-12);

    const SteadyState forced = solve_steady_state(L, SteadyStateOptions{true});
    CHECK((forced.rho - ss.rho).norm() < 1e-10);
}

TEST_CASE("degenerate and non-trace-preserving generators")
{
    const SparseMatrix zero(4, 4);
    const SteadyState ss = solve_steady_state(zero);
    CHECK(ss.degenerate);
    CHECK(ss.nullity == 4);
    CHECK(std::abs(ss.rho.trace() - 1.0) < 1e-12);
    CHECK_THROWS_AS(steady_state(Superoperator{zero, true}), DegenerateSteadyState);

    // pure dephasing leaves both populations stationary
    const SparseMatrix deph = lindblad_term(sigma_z(), 1.0).matrix;
    try {
        steady_state(Superoperator{deph, true});
        FAIL("expected DegenerateSteadyState");
    } catch (const DegenerateSteadyState& e) {
        CHECK(e.dimension() == 2);
    }

    SparseMatrix leaky = lindblad_term(sigma_minus(), 1.0).matrix;
    leaky.coeffRef(0, 0) += -0.5;
    CHECK(trace_defect(leaky) > 0.1);
    CHECK_THROWS_AS(steady_state(Superoperator{leaky, false}), std::invalid_argument);
}

TEST_CASE("Fourier solve with vanishing sidebands reduces to the static state")
{
    const SparseMatrix L0 = commutator_term(sigma_z()).matrix + lindblad_term(sigma_minus(), 0.4).matrix +
                            lindblad_term(SparseMatrix(sigma_minus().adjoint()), 0.1).matrix;
    const SparseMatrix none(4, 4);
    const FourierState fs = block_tridiagonal_nullspace(L0, none, none, 1.3, 3);
    CHECK(fs.cutoff == 3);
    CHECK(fs.dim() == 2);
    CHECK((fs.at(0) - steady_state(Superoperator{L0, true})).norm() < 1e-12);
    for (int n : {-3, -1, 1, 2}) CHECK(fs.at(n).norm() < 1e-14);
}

TEST_CASE("Fourier solve matches time integration of a circularly driven qubit")
{
    const double w = 1.0;
    const double g = 0.35;
    const double Om = 0.8;
    const double kd = 0.2;
    const double ku = 0.05;
    const SparseMatrix sm = sigma_minus();
    const SparseMatrix sp = sm.adjoint();
    const SparseMatrix L0 = commutator_term(cplx(w / 2.0) * sigma_z()).matrix +
                            lindblad_term(sm, kd).matrix + lindblad_term(sp, ku).matrix;
    // -i[g sigma_+, .] multiplies e^{+i Om t}, -i[g sigma_-, .] multiplies e^{-i Om t}
    const SparseMatrix Lp = cplx(0.0, -g) * (sandwich(sp, identity(2)) - sandwich(identity(2), sp));
    const SparseMatrix Lm = cplx(0.0, -g) * (sandwich(sm, identity(2)) - sandwich(identity(2), sm));
    const FourierState fs = block_tridiagonal_nullspace(L0, Lp, Lm, Om, 4);

    const auto gen = [&](double t) {
        return SparseMatrix(L0 + std::exp(I_unit * Om * t) * Lp + std::exp(-I_unit * Om * t) * Lm);
    };
    Vector v = vectorize(Matrix::Identity(2, 2) / 2.0);
    const double dt = 0.01;
    double t = 0.0;
    for (int k = 0; k < 20000; ++k) {
        const Vector k1 = gen(t) * v;
        const Vector k2 = gen(t + dt / 2) * (v + dt / 2 * k1);
        const Vector k3 = gen(t + dt / 2) * (v + dt / 2 * k2);
        const Vector k4 = gen(t + dt) * (v + dt * k3);
        v += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += dt;
    }
    CHECK((unvectorize(v, 2) - fs.evaluate(Om, t)).norm() < 1e-8);
    CHECK(fs.at(2).norm() < 1e-12);
    CHECK((fs.at(-1) - fs.at(1).adjoint()).norm() < 1e-12);
}

TEST_CASE("expectation and eigenvalue helpers")
{
    Matrix rho = Matrix::Zero(2, 2);
    rho(0, 0) = 0.25;
    rho(1, 1) = 0.75;
    CHECK(std::real(expectation(Matrix(sigma_z()), rho)) == doctest::Approx(0.5));
    CHECK(min_eigenvalue(rho) == doctest::Approx(0.25));
}
