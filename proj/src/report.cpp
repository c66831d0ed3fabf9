// report.cpp — Thermodynamic bookkeeping for steady-state currents

#include "qfridge/report.hpp"

#include <cmath>

namespace qfridge {

void fill_cop(CurrentReport& r, const ReservoirPair& res, double power_floor)
{
    if (r.I_cold <= 0.0) {
        r.cop_renormalized = 0.0;
        r.cop_defined = std::abs(r.power) > power_floor;
        return;
    }
    if (!(std::abs(r.power) > power_floor)) {
        r.cop_renormalized = 0.0;
        r.cop_defined = false;
        return;
    }
    r.cop_defined = true;
    r.cop_renormalized = r.I_cold / r.power * (res.cold.beta - res.hot.beta) / res.hot.beta;
}

CurrentReport make_report(double I_cold, double I_hot, const ReservoirPair& res)
{
    CurrentReport r;
    r.I_cold = I_cold;
    r.I_hot = I_hot;
    r.power = -I_cold - I_hot;
    const double floor = 1e-13 * (std::abs(I_cold) + std::abs(I_hot));
    fill_cop(r, res, floor);
    const double bc = std::isinf(res.cold.beta) ? 0.0 : res.cold.beta;
    const double bh = std::isinf(res.hot.beta) ? 0.0 : res.hot.beta;
    r.entropy_rate = -bc * I_cold - bh * I_hot;
    return r;
}

} // namespace qfridge
