// floquet.hpp — Closed-form Floquet decomposition of the circularly driven qutrit
//
// U_S(t) = U_kick(t) exp(-i H_F t) with
//   H_F = (Delta - Omega/2)|2><2| + (delta + Omega/2)|1><1| + lambda (|1><2| + |2><1|),
//   U_kick(t) = exp(+i Omega t/2 [|1><1| - |2><2|]).
// Eigenstates |-> = cos a |1> - s sin a |2>,  |+> = sin a |1> + s cos a |2>,
// where a in [0, pi/2] is computed for |lambda| and s = sign(lambda).

#pragma once

#include <utility>

#include "qfridge/params.hpp"

namespace qfridge {

enum class FloquetBranch { minus, plus };

/// Default secular threshold: gap >= 10 x the largest dissipative rate.
inline constexpr double kSecularThreshold = 10.0;

struct SecularDiagnostic {
    bool ok{true};
    double ratio{0.0}; // gap / max rate (inf when all rates vanish)
    double gap{0.0};
    double max_rate{0.0};
};

struct FloquetData {
    double eps_minus{0.0};
    double eps_plus{0.0};
    double alpha{0.0}; // canonical angle in [0, pi/2] for |lambda|
    double gap{0.0};
    int lambda_sign{1};
    bool secular_ok{true};
    double secular_ratio{0.0};

    double cos_a{1.0}; // exact 0 / 1 at the branch end points
    double sin_a{0.0};

    double cos_alpha() const { return cos_a; }
    double sin_alpha() const { return sin_a; }
    /// Rotation angle with the sign of lambda folded in; feeds the S operators.
    double signed_alpha() const { return lambda_sign * alpha; }
    double energy(FloquetBranch a) const { return a == FloquetBranch::minus ? eps_minus : eps_plus; }
    /// <level|a> for level in {1, 2}.
    double overlap(FloquetBranch a, int level) const;
    /// <1|a><a|2>, the coefficient that mixes J_c and J_h.
    double cross(FloquetBranch a) const { return overlap(a, 1) * overlap(a, 2); }
};

/// (eps_minus, eps_plus) = (delta + Delta)/2 -/+ sqrt((Delta - delta - Omega)^2 + 4 lambda^2)/2
std::pair<double, double> floquet_energies(const SystemParams& p);

/// Angle in [0, pi/2]. At lambda = 0 the detuning sign selects 0 (red) or
/// pi/2 (blue); exact resonance with lambda = 0 returns pi/4, the lambda -> 0+ limit.
double rotation_angle(const SystemParams& p);

struct KickPhases {
    double level1{0.0}; // +Omega t / 2
    double level2{0.0}; // -Omega t / 2
};

KickPhases kick_phases(const SystemParams& p, double t);

/// Compares the quasi-energy gap with the largest rate gamma_c(+-(eps_a - Omega/2)),
/// gamma_h(+-(eps_a + Omega/2)). The comparison is inclusive.
SecularDiagnostic secular_validity(const SystemParams& p, const ReservoirPair& res,
                                   double threshold = kSecularThreshold);

FloquetData floquet_decompose(const SystemParams& p, const ReservoirPair& res);

} // namespace qfridge
