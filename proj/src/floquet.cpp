// floquet.cpp — Quasi-energies, rotation angle, kick phases and secular check

#include "qfridge/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <tuple>

namespace qfridge {

double FloquetData::overlap(FloquetBranch a, int level) const
{
    const double c = cos_alpha();
    const double s = sin_alpha();
    const double sg = static_cast<double>(lambda_sign);
    if (a == FloquetBranch::minus) return level == 1 ? c : -sg * s;
    return level == 1 ? s : sg * c;
}

std::pair<double, double> floquet_energies(const SystemParams& p)
{
    const double centre = 0.5 * (p.delta + p.Delta);
    const double half_gap = 0.5 * std::hypot(p.detuning(), 2.0 * p.lambda);
    return {centre - half_gap, centre + half_gap};
}

double rotation_angle(const SystemParams& p)
{
    const double d = p.detuning();
    const double lam = std::abs(p.lambda);
    if (lam == 0.0) {
        if (d > 0.0) return 0.0;
        if (d < 0.0) return std::numbers::pi / 2.0;
        return std::numbers::pi / 4.0;
    }
    const double root = std::hypot(d, 2.0 * lam);
    // tan a = (-d + root) / (2 lam); rationalised for d > 0 to avoid cancellation
    if (d > 0.0) return std::atan2(2.0 * lam, d + root);
    return std::atan2(root - d, 2.0 * lam);
}

KickPhases kick_phases(const SystemParams& p, double t)
{
    return {0.5 * p.Omega * t, -0.5 * p.Omega * t};
}

SecularDiagnostic secular_validity(const SystemParams& p, const ReservoirPair& res,
                                   double threshold)
{
    const auto [em, ep] = floquet_energies(p);
    double max_rate = 0.0;
    for (const double e : {em, ep}) {
        const double wc = e - p.Omega / 2.0;
        const double wh = e + p.Omega / 2.0;
        max_rate = std::max({max_rate, rate_gamma(wc, res.cold), rate_gamma(-wc, res.cold),
                             rate_gamma(wh, res.hot), rate_gamma(-wh, res.hot)});
    }
    SecularDiagnostic out;
    out.gap = ep - em;
    out.max_rate = max_rate;
    out.ratio = max_rate > 0.0 ? out.gap / max_rate : std::numeric_limits<double>::infinity();
    out.ok = out.ratio >= threshold;
    return out;
}

FloquetData floquet_decompose(const SystemParams& p, const ReservoirPair& res)
{
    FloquetData f;
    std::tie(f.eps_minus, f.eps_plus) = floquet_energies(p);
    f.gap = f.eps_plus - f.eps_minus;
    f.alpha = rotation_angle(p);
    if (f.alpha == 0.0) {
        f.cos_a = 1.0;
        f.sin_a = 0.0;
    } else if (f.alpha == std::numbers::pi / 2.0) {
        f.cos_a = 0.0;
        f.sin_a = 1.0;
    } else {
        f.cos_a = std::cos(f.alpha);
        f.sin_a = std::sin(f.alpha);
    }
    f.lambda_sign = p.lambda < 0.0 ? -1 : 1;
    const auto diag = secular_validity(p, res);
    f.secular_ok = diag.ok;
    f.secular_ratio = diag.ratio;
    return f;
}

} // namespace qfridge
