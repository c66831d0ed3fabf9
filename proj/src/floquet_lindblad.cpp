// floquet_lindblad.cpp — Floquet-Lindblad generator, Pauli rates, currents and cooling conditions

#include "qfridge/floquet_lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include <Eigen/SparseLU>

namespace qfridge {

std::string_view to_string(FloquetMode mode)
{
    return mode == FloquetMode::full ? "full" : "pauli";
}

std::string_view to_string(CoolingClass c)
{
    switch (c) {
    case CoolingClass::guaranteed_cooling: return "guaranteed_cooling";
    case CoolingClass::lower_cycle_candidate: return "lower_cycle_candidate";
    case CoolingClass::none: return "none";
    }
    return "none";
}

double PauliRateMatrix::column_sum_defect() const
{
    double worst = 0.0;
    for (int j = 0; j < R.outerSize(); ++j) {
        double s = 0.0;
        for (RealSparseMatrix::InnerIterator it(R, j); it; ++it) s += it.value();
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

namespace {

struct BranchRates {
    double cold_down, hot_down, cold_up, hot_up; // already scaled by overlaps
    double cold_w, hot_w;                        // energy drawn on the upward move
};

BranchRates branch_rates(FloquetBranch a, const SystemParams& p, const ReservoirPair& res,
                         const FloquetData& f)
{
    const double wc = f.energy(a) - p.Omega / 2.0;
    const double wh = f.energy(a) + p.Omega / 2.0;
    const double o1 = f.overlap(a, 1) * f.overlap(a, 1);
    const double o2 = f.overlap(a, 2) * f.overlap(a, 2);
    return {rate_gamma(wc, res.cold) * o1, rate_gamma(wh, res.hot) * o2,
            rate_gamma(-wc, res.cold) * o1, rate_gamma(-wh, res.hot) * o2, wc, wh};
}

// Iterative Tarjan; returns the component id of every vertex.
std::vector<int> strongly_connected(int n, const std::vector<std::vector<int>>& adj, int& count)
{
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<char> on_stack(n, 0);
    std::vector<std::pair<int, std::size_t>> call;
    int next = 0;
    count = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = next++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, pos] = call.back();
            if (pos < adj[v].size()) {
                const int w = adj[v][pos++];
                if (index[w] < 0) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = count;
                } while (w != v);
                ++count;
            }
            const int done = v;
            call.pop_back();
            if (!call.empty()) {
                const int parent = call.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
        }
    }
    return comp;
}

Eigen::VectorXd solve_class(const RealSparseMatrix& R, const std::vector<int>& states)
{
    const int n = static_cast<int>(states.size());
    if (n == 1) return Eigen::VectorXd::Ones(1);
    std::vector<int> local(static_cast<std::size_t>(R.rows()), -1);
    for (int i = 0; i < n; ++i) local[states[i]] = i;
    std::vector<Eigen::Triplet<double>> t;
    for (int j = 0; j < n; ++j) {
        for (RealSparseMatrix::InnerIterator it(R, states[j]); it; ++it) {
            const int i = local[it.row()];
            if (i > 0) t.emplace_back(i, j, it.value());
        }
        t.emplace_back(0, j, 1.0);
    }
    RealSparseMatrix A(n, n);
    A.setFromTriplets(t.begin(), t.end());
    A.makeCompressed();
    Eigen::SparseLU<RealSparseMatrix, Eigen::COLAMDOrdering<int>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success) {
        throw NumericalFailure("pauli_steady_state: factorisation failed");
    }
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(0) = 1.0;
    Eigen::VectorXd x = lu.solve(rhs);
    if (!x.allFinite()) throw NumericalFailure("pauli_steady_state: non-finite solution");
    x = x.cwiseMax(0.0);
    return x / x.sum();
}

} // namespace

PauliRateMatrix build_pauli_rates(const SystemParams& p, const ReservoirPair& res,
                                  const FloquetData& f)
{
    const int N = p.n_qutrits;
    const CollectiveBasis basis(N);
    const int d = basis.dim();
    const BranchRates lo = branch_rates(FloquetBranch::minus, p, res, f);
    const BranchRates hi = branch_rates(FloquetBranch::plus, p, res, f);

    PauliRateMatrix out;
    out.n_qutrits = N;
    out.edges.reserve(static_cast<std::size_t>(4 * d));
    auto add = [&](int from, BasisIndex to, double cg, double cold, double hot, double wc,
                   double wh, double de) {
        if (!basis.contains(to) || cg <= 0.0) return;
        out.edges.push_back({from, basis.index(to), cold * cg, hot * cg, wc, wh, de});
    };
    for (int j = 0; j < d; ++j) {
        const auto [M, m] = basis.state(j);
        const double free = N - M - m;
        add(j, {M, m + 1}, free * (m + 1), lo.cold_up, lo.hot_up, lo.cold_w, lo.hot_w, f.eps_minus);
        add(j, {M, m - 1}, (free + 1) * m, lo.cold_down, lo.hot_down, -lo.cold_w, -lo.hot_w, -f.eps_minus);
        add(j, {M + 1, m}, free * (M + 1), hi.cold_up, hi.hot_up, hi.cold_w, hi.hot_w, f.eps_plus);
        add(j, {M - 1, m}, (free + 1) * M, hi.cold_down, hi.hot_down, -hi.cold_w, -hi.hot_w, -f.eps_plus);
    }

    std::vector<Eigen::Triplet<double>> t;
    t.reserve(2 * out.edges.size());
    for (const auto& e : out.edges) {
        t.emplace_back(e.to, e.from, e.rate());
        t.emplace_back(e.from, e.from, -e.rate());
    }
    out.R.resize(d, d);
    out.R.setFromTriplets(t.begin(), t.end());
    out.R.makeCompressed();
    return out;
}

PauliSteadyState pauli_steady_state(const PauliRateMatrix& R)
{
    const int d = R.dim();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(d));
    for (const auto& e : R.edges) {
        if (e.rate() > 0.0) adj[e.from].push_back(e.to);
    }
    int ncomp = 0;
    const auto comp = strongly_connected(d, adj, ncomp);
    std::vector<char> closed(static_cast<std::size_t>(ncomp), 1);
    for (const auto& e : R.edges) {
        if (e.rate() > 0.0 && comp[e.from] != comp[e.to]) closed[comp[e.from]] = 0;
    }
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(ncomp));
    for (int v = 0; v < d; ++v) {
        if (closed[comp[v]]) classes[comp[v]].push_back(v);
    }

    PauliSteadyState out;
    out.p = Eigen::VectorXd::Zero(d);
    out.closed_classes = 0;
    double total = 0.0;
    for (const auto& cls : classes) {
        if (cls.empty()) continue;
        ++out.closed_classes;
        const Eigen::VectorXd x = solve_class(R.R, cls);
        const double w = static_cast<double>(cls.size());
        for (std::size_t i = 0; i < cls.size(); ++i) out.p(cls[i]) = w * x(static_cast<Eigen::Index>(i));
        total += w;
    }
    out.p /= total;
    out.degenerate = out.closed_classes > 1;
    return out;
}

std::pair<double, double> pauli_currents(const PauliRateMatrix& R, const Eigen::VectorXd& p)
{
    const int d = R.dim();
    std::unordered_map<long long, std::size_t> lookup;
    for (std::size_t i = 0; i < R.edges.size(); ++i) {
        lookup.emplace(static_cast<long long>(R.edges[i].from) * d + R.edges[i].to, i);
    }
    const CollectiveBasis basis(R.n_qutrits);
    auto level = [&](int i) {
        const auto s = basis.state(i);
        return s.M + s.m;
    };
    std::vector<std::pair<const PauliEdge*, const PauliEdge*>> pairs;
    for (const auto& up : R.edges) {
        if (level(up.to) <= level(up.from)) continue;
        const auto it = lookup.find(static_cast<long long>(up.to) * d + up.from);
        pairs.emplace_back(&up, it == lookup.end() ? nullptr : &R.edges[it->second]);
    }
    // on a tree every stationary net flux vanishes identically
    const bool tree = static_cast<int>(pairs.size()) == d - 1;

    double Ic = 0.0;
    double Ih = 0.0;
    for (const auto& [up, down] : pairs) {
        const double pl = p(up->from);
        const double pu = p(up->to);
        const double kc_d = down ? down->cold_rate : 0.0;
        const double kh_d = down ? down->hot_rate : 0.0;
        const double Ku = up->rate();
        const double Kd = kc_d + kh_d;
        double Jc = 0.0;
        double Jh = 0.0;
        if (Ku > 0.0) {
            // cold and hot channels exchange flux at rate X; J is the net flux of the pair
            const double J = tree ? 0.0 : Ku * pl - Kd * pu;
            const double X = up->cold_rate * kh_d - kc_d * up->hot_rate;
            Jc = up->cold_rate / Ku * J + pu * X / Ku;
            Jh = up->hot_rate / Ku * J - pu * X / Ku;
        } else {
            Jc = -kc_d * pu;
            Jh = -kh_d * pu;
        }
        Ic += up->cold_weight * Jc;
        Ih += up->hot_weight * Jh;
    }
    return {Ic, Ih};
}

double pauli_drive_power(const PauliRateMatrix& R, const Eigen::VectorXd& p)
{
    double P = 0.0;
    for (const auto& e : R.edges) {
        P += p(e.from) * (e.cold_rate * (e.energy_change - e.cold_weight) +
                          e.hot_rate * (e.energy_change - e.hot_weight));
    }
    return P;
}

double pauli_gross_flow(const PauliRateMatrix& R, const Eigen::VectorXd& p)
{
    double g = 0.0;
    for (const auto& e : R.edges) {
        g += p(e.from) * (e.cold_rate * std::abs(e.cold_weight) + e.hot_rate * std::abs(e.hot_weight));
    }
    return g;
}

FloquetLindbladGenerator build_floquet_lindblad(const SystemParams& p, const ReservoirParams& cold,
                                                const ReservoirParams& hot, FloquetMode mode)
{
    p.validate();
    cold.validate();
    hot.validate();
    FloquetLindbladGenerator g;
    g.mode = mode;
    g.params = p;
    g.reservoirs = {cold, hot};
    g.reservoirs.cold.label = ReservoirLabel::cold;
    g.reservoirs.hot.label = ReservoirLabel::hot;
    g.floquet = floquet_decompose(p, g.reservoirs);
    g.secular_warning = !g.floquet.secular_ok;

    if (mode == FloquetMode::pauli) {
        g.pauli = build_pauli_rates(p, g.reservoirs, g.floquet);
        return g;
    }

    const int N = p.n_qutrits;
    const int d2 = basis_dim(N) * basis_dim(N);
    const double alpha = g.floquet.signed_alpha();
    SparseMatrix L(d2, d2), Kc(d2, d2), Kh(d2, d2);
    const struct {
        FloquetBranch branch;
        LadderKind down, up;
    } families[] = {{FloquetBranch::minus, LadderKind::Sminus_minus, LadderKind::Sminus_plus},
                    {FloquetBranch::plus, LadderKind::Splus_minus, LadderKind::Splus_plus}};
    for (const auto& fam : families) {
        const SparseMatrix s_down = build_operator(fam.down, N, alpha).matrix;
        const SparseMatrix s_up = build_operator(fam.up, N, alpha).matrix;
        const SparseMatrix down_sandwich = sandwich(s_down, s_up);
        const SparseMatrix up_sandwich = sandwich(s_up, s_down);
        const BranchRates r = branch_rates(fam.branch, p, g.reservoirs, g.floquet);
        L += lindblad_term(s_down, r.cold_down + r.hot_down).matrix;
        L += lindblad_term(s_up, r.cold_up + r.hot_up).matrix;
        Kc += cplx(r.cold_w * r.cold_up) * up_sandwich - cplx(r.cold_w * r.cold_down) * down_sandwich;
        Kh += cplx(r.hot_w * r.hot_up) * up_sandwich - cplx(r.hot_w * r.hot_down) * down_sandwich;
    }
    L.prune(cplx(0.0));
    g.L = {L, true};
    g.Ic_super = {Kc, ReservoirLabel::cold};
    g.Ih_super = {Kh, ReservoirLabel::hot};
    return g;
}

FloquetLindbladSolution solve_floquet_lindblad(const FloquetLindbladGenerator& gen)
{
    FloquetLindbladSolution out;
    if (gen.mode == FloquetMode::pauli) {
        const auto ss = pauli_steady_state(gen.pauli);
        const auto [Ic, Ih] = pauli_currents(gen.pauli, ss.p);
        out.report = make_report(Ic, Ih, gen.reservoirs);
        out.drive_power = pauli_drive_power(gen.pauli, ss.p);
        out.degenerate = ss.degenerate;
        out.min_eigenvalue = ss.p.minCoeff();
        out.populations = ss.p;
        return out;
    }

    const auto ss = solve_steady_state(gen.L.matrix);
    out.rho = ss.rho;
    out.degenerate = ss.degenerate;
    out.min_eigenvalue = ss.min_eigenvalue;
    const double Ic = trace_of_image(gen.Ic_super.matrix, ss.rho).real();
    const double Ih = trace_of_image(gen.Ih_super.matrix, ss.rho).real();
    out.report = make_report(Ic, Ih, gen.reservoirs);
    const Matrix U = rotated_basis_transform(gen.params.n_qutrits, gen.floquet.signed_alpha());
    out.populations = (U.adjoint() * ss.rho * U).diagonal().real();
    return out;
}

CurrentReport floquet_lindblad_currents(const FloquetLindbladGenerator& gen)
{
    return solve_floquet_lindblad(gen).report;
}

SparseMatrix floquet_basis_generator(const FloquetLindbladGenerator& gen)
{
    if (gen.mode != FloquetMode::full) {
        throw std::invalid_argument("floquet_basis_generator: requires a full-mode generator");
    }
    const Matrix U = rotated_basis_transform(gen.params.n_qutrits, gen.floquet.signed_alpha());
    const SparseMatrix left = kron(Matrix(U.transpose()).sparseView(), Matrix(U.adjoint()).sparseView());
    const SparseMatrix right = kron(Matrix(U.conjugate()).sparseView(), U.sparseView());
    SparseMatrix out = left * gen.L.matrix * right;
    out.prune(cplx(1e-14));
    return out;
}

CoolingConditions cooling_conditions(const SystemParams& p, const ReservoirParams& cold,
                                     const ReservoirParams& hot)
{
    const auto [em, ep] = floquet_energies(p);
    const double half = p.Omega / 2.0;
    CoolingConditions c;
    c.upper_gap = em - half;
    c.upper_cycle = hot.beta * (ep + half) - cold.beta * (ep - half);
    c.lower_cycle = cold.beta * (em - half) - hot.beta * (em + half);
    c.condition1 = c.upper_gap > 0.0;
    c.condition2 = c.upper_cycle > 0.0;
    c.lower_cycle_holds = c.lower_cycle > 0.0;
    if (c.condition1 && c.condition2) {
        c.classification = CoolingClass::guaranteed_cooling;
    } else if (c.upper_gap < 0.0 && c.lower_cycle_holds) {
        c.classification = CoolingClass::lower_cycle_candidate;
    }
    return c;
}

} // namespace qfridge
