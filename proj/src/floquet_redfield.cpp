// floquet_redfield.cpp — Sideband assembly, adaptive Fourier cutoff and period-averaged currents

#include "qfridge/floquet_redfield.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qfridge/collective_basis.hpp"

namespace qfridge {

namespace {

SparseMatrix op(LadderKind k, int N) { return build_operator(k, N).matrix; }

struct Accumulator {
    SparseMatrix L[3]; // sidebands -1, 0, +1
    SparseMatrix K[3];

    explicit Accumulator(Eigen::Index d2)
    {
        for (int i = 0; i < 3; ++i) {
            L[i].resize(d2, d2);
            K[i].resize(d2, d2);
        }
    }
};

// One Fourier component X of a filtered operator entering
// -(gamma/2) {[J, X rho] + h.c.}, counted with energy weight w.
void add_component(Accumulator& acc, const SparseMatrix& J, const SparseMatrix& X, int k,
                   double gamma, double w, const SparseMatrix& id)
{
    if (X.nonZeros() == 0 || gamma == 0.0) return;
    const SparseMatrix Xd = X.adjoint();
    const cplx g = 0.5 * gamma;
    const SparseMatrix fwd = sandwich(X, J);
    const SparseMatrix bwd = sandwich(J, Xd);
    acc.L[k + 1] += g * fwd - g * sandwich(SparseMatrix(J * X), id);
    acc.L[1 - k] += g * bwd - g * sandwich(id, SparseMatrix(Xd * J));
    acc.K[k + 1] += cplx(-w) * g * fwd;
    acc.K[1 - k] += cplx(-w) * g * bwd;
}

} // namespace

RedfieldSidebands build_redfield_sidebands(const SystemParams& p, const ReservoirParams& cold,
                                           const ReservoirParams& hot, const CutoffPolicy& policy)
{
    p.validate();
    cold.validate();
    hot.validate();
    RedfieldSidebands sb;
    sb.params = p;
    sb.reservoirs = {cold, hot};
    sb.reservoirs.cold.label = ReservoirLabel::cold;
    sb.reservoirs.hot.label = ReservoirLabel::hot;
    sb.policy = policy;
    sb.floquet = floquet_decompose(p, sb.reservoirs);
    const FloquetData& f = sb.floquet;

    const int N = p.n_qutrits;
    const int d = basis_dim(N);
    const SparseMatrix id = identity(d);
    const SparseMatrix jc_m = op(LadderKind::Jc_minus, N);
    const SparseMatrix jc_p = op(LadderKind::Jc_plus, N);
    const SparseMatrix jh_m = op(LadderKind::Jh_minus, N);
    const SparseMatrix jh_p = op(LadderKind::Jh_plus, N);
    const SparseMatrix Jc = jc_m + jc_p;
    const SparseMatrix Jh = jh_m + jh_p;

    Accumulator acc(static_cast<Eigen::Index>(d) * d);
    Accumulator hot_acc(static_cast<Eigen::Index>(d) * d);
    for (const FloquetBranch a : {FloquetBranch::minus, FloquetBranch::plus}) {
        const double o1 = f.overlap(a, 1) * f.overlap(a, 1);
        const double o2 = f.overlap(a, 2) * f.overlap(a, 2);
        const cplx x = f.cross(a);
        const double wc = f.energy(a) - p.Omega / 2.0;
        const double wh = f.energy(a) + p.Omega / 2.0;
        const double gc_down = rate_gamma(wc, sb.reservoirs.cold);
        const double gc_up = rate_gamma(-wc, sb.reservoirs.cold);
        const double gh_down = rate_gamma(wh, sb.reservoirs.hot);
        const double gh_up = rate_gamma(-wh, sb.reservoirs.hot);

        // cold: J_{c,a}^- = o1 J_c^- + e^{+i Omega t} x J_h^-
        add_component(acc, Jc, cplx(o1) * jc_m, 0, gc_down, wc, id);
        add_component(acc, Jc, x * jh_m, +1, gc_down, wc, id);
        add_component(acc, Jc, cplx(o1) * jc_p, 0, gc_up, -wc, id);
        add_component(acc, Jc, x * jh_p, -1, gc_up, -wc, id);
        // hot: J_{h,a}^- = o2 J_h^- + e^{-i Omega t} x J_c^-
        add_component(hot_acc, Jh, cplx(o2) * jh_m, 0, gh_down, wh, id);
        add_component(hot_acc, Jh, x * jc_m, -1, gh_down, wh, id);
        add_component(hot_acc, Jh, cplx(o2) * jh_p, 0, gh_up, -wh, id);
        add_component(hot_acc, Jh, x * jc_p, +1, gh_up, -wh, id);
    }

    const SparseMatrix H0 = cplx(p.delta) * op(LadderKind::number_small, N) +
                            cplx(p.Delta) * op(LadderKind::number_large, N);
    const SparseMatrix V = cplx(p.lambda) * op(LadderKind::Jw_minus, N);
    const SparseMatrix Vd = V.adjoint();
    SparseMatrix L0 = commutator_term(H0).matrix + acc.L[1] + hot_acc.L[1];
    SparseMatrix Lp = -I_unit * (sandwich(V, id) - sandwich(id, V)) + acc.L[2] + hot_acc.L[2];
    SparseMatrix Lm = -I_unit * (sandwich(Vd, id) - sandwich(id, Vd)) + acc.L[0] + hot_acc.L[0];
    for (SparseMatrix* m : {&L0, &Lp, &Lm}) m->prune(cplx(0.0));
    sb.L0 = {L0, true};
    sb.Lplus = {Lp, false};
    sb.Lminus = {Lm, false};
    sb.cold = {{acc.K[1], ReservoirLabel::cold},
               {acc.K[2], ReservoirLabel::cold},
               {acc.K[0], ReservoirLabel::cold}};
    sb.hot = {{hot_acc.K[1], ReservoirLabel::hot},
              {hot_acc.K[2], ReservoirLabel::hot},
              {hot_acc.K[0], ReservoirLabel::hot}};
    return sb;
}

SparseMatrix redfield_generator_at(const RedfieldSidebands& sb, double t)
{
    const cplx ph = std::exp(I_unit * (sb.params.Omega * t));
    return sb.L0.matrix + ph * sb.Lplus.matrix + std::conj(ph) * sb.Lminus.matrix;
}

AsymptoticState redfield_asymptotic_fixed(const RedfieldSidebands& sb, int cutoff)
{
    AsymptoticState st;
    if (sb.params.Omega == 0.0) {
        const SparseMatrix L = sb.L0.matrix + sb.Lplus.matrix + sb.Lminus.matrix;
        const auto ss = solve_steady_state(L);
        if (ss.degenerate) {
            throw DegenerateSteadyState("redfield: static generator has a degenerate null space",
                                        ss.nullity);
        }
        st.state.cutoff = 0;
        st.state.components = {ss.rho};
        st.static_solve = true;
        st.min_eigenvalue = ss.min_eigenvalue;
        return st;
    }
    st.state = block_tridiagonal_nullspace(sb.L0.matrix, sb.Lplus.matrix, sb.Lminus.matrix,
                                           sb.params.Omega, cutoff);
    st.cutoff = cutoff;
    st.min_eigenvalue = min_eigenvalue(st.state.at(0));
    return st;
}

namespace {

double relative_change(const CurrentReport& a, const CurrentReport& b, double floor)
{
    return std::abs(a.I_cold - b.I_cold) / std::max(std::abs(a.I_cold), floor);
}

} // namespace

AsymptoticState redfield_asymptotic(const RedfieldSidebands& sb)
{
    if (sb.params.Omega == 0.0) return redfield_asymptotic_fixed(sb, 0);
    const auto& pol = sb.policy;
    if (pol.start < 1 || pol.cap < 2 * pol.start) {
        throw std::invalid_argument("redfield_asymptotic: invalid cutoff policy");
    }
    const double floor =
        1e-12 * (sb.reservoirs.cold.gamma_bare + sb.reservoirs.hot.gamma_bare) * sb.params.delta;

    std::vector<double> history;
    int c = pol.start;
    AsymptoticState cur = redfield_asymptotic_fixed(sb, c);
    CurrentReport cur_I = period_averaged_currents(sb, cur);
    while (2 * c <= pol.cap) {
        AsymptoticState next = redfield_asymptotic_fixed(sb, 2 * c);
        const CurrentReport next_I = period_averaged_currents(sb, next);
        const double change = relative_change(cur_I, next_I, floor);
        history.push_back(change);
        if (change < pol.rel_tol) {
            cur.metric = change;
            cur.history = history;
            for (std::size_t i = 1; i < history.size(); ++i) {
                if (history[i] > history[i - 1]) cur.monotone = false;
            }
            return cur;
        }
        c *= 2;
        cur = std::move(next);
        cur_I = next_I;
    }
    throw ConvergenceFailure("redfield_asymptotic: no convergence up to cutoff " +
                                 std::to_string(pol.cap),
                             history);
}

CurrentReport period_averaged_currents(const RedfieldSidebands& sb, const AsymptoticState& st)
{
    auto current = [&](const CurrentSidebands& K) {
        const Matrix& r0 = st.state.at(0);
        cplx I = trace_of_image(K.zero.matrix, r0);
        if (st.static_solve) {
            I += trace_of_image(K.plus.matrix, r0) + trace_of_image(K.minus.matrix, r0);
        } else {
            I += trace_of_image(K.minus.matrix, st.state.at(1)) +
                 trace_of_image(K.plus.matrix, st.state.at(-1));
        }
        if (std::abs(I.imag()) > 1e-9 * std::max(1.0, std::abs(I.real()))) {
            throw NumericalFailure("period_averaged_currents: imaginary residue " +
                                   std::to_string(I.imag()));
        }
        return I.real();
    };
    return make_report(current(sb.cold), current(sb.hot), sb.reservoirs);
}

} // namespace qfridge
