// report.hpp — Steady-state energy currents, power, COP and entropy production

#pragma once

#include "qfridge/params.hpp"

namespace qfridge {

/// Currents are positive when energy leaves the named reservoir.
struct CurrentReport {
    double I_cold{0.0};
    double I_hot{0.0};
    double power{0.0};
    double cop_renormalized{0.0}; // COP / Carnot COP, 0 when not cooling
    bool cop_defined{true};       // false when the power vanishes
    double entropy_rate{0.0};
};

/// Renormalised COP  I_c Theta(I_c) / P * (beta_c - beta_h) / beta_h.
/// cop_defined is cleared when |P| is below `power_floor`.
void fill_cop(CurrentReport& r, const ReservoirPair& res, double power_floor = 0.0);

/// Completes a report from the two currents: first-law power, COP and entropy rate.
CurrentReport make_report(double I_cold, double I_hot, const ReservoirPair& res);

} // namespace qfridge
