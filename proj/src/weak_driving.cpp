// weak_driving.cpp — Rotating-frame generator, currents and analytic limits

#include "qfridge/weak_driving.hpp"

#include <cmath>
#include <stdexcept>

#include "qfridge/collective_basis.hpp"

namespace qfridge {

namespace {

SparseMatrix op(LadderKind k, int N) { return build_operator(k, N).matrix; }

void add_counting(SparseMatrix& K, const SparseMatrix& jump, double rate, double weight)
{
    K += cplx(-weight * rate) * sandwich(jump, SparseMatrix(jump.adjoint()));
}

} // namespace

WeakDrivingGenerator build_weak_generator(const SystemParams& p, const ReservoirParams& cold,
                                          const ReservoirParams& hot)
{
    p.validate();
    cold.validate();
    hot.validate();
    const int N = p.n_qutrits;
    const int d = basis_dim(N);

    WeakDrivingGenerator g;
    g.params = p;
    g.reservoirs = {cold, hot};
    g.reservoirs.cold.label = ReservoirLabel::cold;
    g.reservoirs.hot.label = ReservoirLabel::hot;

    const SparseMatrix ns = op(LadderKind::number_small, N);
    const SparseMatrix nl = op(LadderKind::number_large, N);
    g.H0 = cplx(p.delta) * ns + cplx(p.Delta) * nl;
    g.drive = cplx(p.lambda) * (op(LadderKind::Jw_minus, N) + op(LadderKind::Jw_plus, N));
    const SparseMatrix Hr = cplx(p.detuning()) * nl + g.drive;

    const SparseMatrix jc_m = op(LadderKind::Jc_minus, N);
    const SparseMatrix jc_p = op(LadderKind::Jc_plus, N);
    const SparseMatrix jh_m = op(LadderKind::Jh_minus, N);
    const SparseMatrix jh_p = op(LadderKind::Jh_plus, N);

    const double rc_down = rate_gamma(p.delta, g.reservoirs.cold);
    const double rc_up = rate_gamma(-p.delta, g.reservoirs.cold);
    const double rh_down = rate_gamma(p.Delta, g.reservoirs.hot);
    const double rh_up = rate_gamma(-p.Delta, g.reservoirs.hot);

    SparseMatrix L = commutator_term(Hr).matrix;
    L += lindblad_term(jc_m, rc_down).matrix;
    L += lindblad_term(jc_p, rc_up).matrix;
    L += lindblad_term(jh_m, rh_down).matrix;
    L += lindblad_term(jh_p, rh_up).matrix;
    L.prune(cplx(0.0));
    g.L = {L, true};

    SparseMatrix Kc(d * d, d * d);
    add_counting(Kc, jc_m, rc_down, p.delta);
    add_counting(Kc, jc_p, rc_up, -p.delta);
    SparseMatrix Kh(d * d, d * d);
    add_counting(Kh, jh_m, rh_down, p.Delta);
    add_counting(Kh, jh_p, rh_up, -p.Delta);
    g.Ic_super = {Kc, ReservoirLabel::cold};
    g.Ih_super = {Kh, ReservoirLabel::hot};
    return g;
}

WeakDrivingSolution solve_weak(const WeakDrivingGenerator& gen)
{
    const auto ss = solve_steady_state(gen.L.matrix);
    if (ss.degenerate) {
        throw DegenerateSteadyState("solve_weak: steady state is not unique", ss.nullity);
    }
    WeakDrivingSolution out;
    out.rho = ss.rho;
    out.min_eigenvalue = ss.min_eigenvalue;
    double Ic = 0.0;
    double Ih = 0.0;
    // undriven: each reservoir equilibrates its own transition and no energy flows
    if (gen.params.lambda != 0.0) {
        Ic = trace_of_image(gen.Ic_super.matrix, ss.rho).real();
        Ih = trace_of_image(gen.Ih_super.matrix, ss.rho).real();
    }
    out.report = make_report(Ic, Ih, gen.reservoirs);
    const Matrix h0(gen.H0);
    const Matrix v(gen.drive);
    out.drive_power = (-I_unit * expectation(h0 * v - v * h0, ss.rho)).real();
    return out;
}

CurrentReport weak_currents(const WeakDrivingGenerator& gen) { return solve_weak(gen).report; }

double analytic_current_lambda_inf(const SystemParams& p, const ReservoirParams& cold,
                                   const ReservoirParams& hot)
{
    if (p.n_qutrits != 1) {
        throw std::invalid_argument("analytic_current_lambda_inf: requires a single qutrit");
    }
    const double gc = spectral_density(p.delta, cold);
    const double gh = spectral_density(p.Delta, hot);
    const double nc = std::isinf(cold.beta) ? 0.0 : bose_occupation(p.delta, cold.beta);
    const double nh = std::isinf(hot.beta) ? 0.0 : bose_occupation(p.Delta, hot.beta);
    return gc * gh * p.delta * (nc - nh) / (gc * (1.0 + 3.0 * nc) + gh * (1.0 + 3.0 * nh));
}

double large_N_moment_currents(const SystemParams& p, const ReservoirParams& cold,
                               const ReservoirParams& hot)
{
    const double detune = p.detuning();
    if (std::abs(detune) > 1e-12 * std::max(1.0, p.Delta)) {
        throw std::domain_error("large_N_moment_currents: requires Omega = Delta - delta");
    }
    const double N = p.n_qutrits;
    const double gc = spectral_density(p.delta, cold);
    const double gh = spectral_density(p.Delta, hot);
    const double nc = std::isinf(cold.beta) ? 0.0 : bose_occupation(p.delta, cold.beta);
    const double nh = std::isinf(hot.beta) ? 0.0 : bose_occupation(p.Delta, hot.beta);
    const cplx il = I_unit * p.lambda;

    // y = x - (n_h, n_c, 0, 0) with x = (<aD^+ aD>, <ad^+ ad>, <aD^+ ad>, <ad^+ aD>); A y = r
    Eigen::Matrix4cd A = Eigen::Matrix4cd::Zero();
    A(0, 0) = -N * gh;
    A(0, 2) = -il;
    A(0, 3) = il;
    A(1, 1) = -N * gc;
    A(1, 2) = il;
    A(1, 3) = -il;
    const double decay = -0.5 * N * (gc + gh);
    A(2, 2) = decay;
    A(2, 0) = -il;
    A(2, 1) = il;
    A(3, 3) = decay;
    A(3, 0) = il;
    A(3, 1) = -il;
    Eigen::Vector4cd r = Eigen::Vector4cd::Zero();
    r(2) = il * (nh - nc);
    r(3) = -il * (nh - nc);
    const Eigen::Vector4cd y = A.fullPivLu().solve(r);
    // gamma_c(-delta)(1 + x2) - gamma_c(delta) x2 = gc (n_c - x2)
    return -N * p.delta * gc * y(1).real();
}

} // namespace qfridge
