// params.cpp — Spectral density, Bose occupation and correlation rates

#include "qfridge/params.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qfridge {

namespace {

constexpr double kSeriesCrossover = 1e-8;

void require(bool ok, const char* what)
{
    if (!ok) throw std::invalid_argument(what);
}

} // namespace

void SystemParams::validate() const
{
    require(std::isfinite(delta) && std::isfinite(Delta) && std::isfinite(Omega) &&
                std::isfinite(lambda),
            "SystemParams: all energies must be finite");
    require(delta > 0.0, "SystemParams: delta must be positive");
    require(Delta > delta, "SystemParams: Delta must exceed delta");
    require(n_qutrits >= 1, "SystemParams: n_qutrits must be >= 1");
}

std::string_view to_string(ReservoirLabel label)
{
    return label == ReservoirLabel::cold ? "cold" : "hot";
}

void ReservoirParams::validate() const
{
    // beta = +inf (zero temperature) is allowed
    require(beta > 0.0 && !std::isnan(beta), "ReservoirParams: beta must be positive");
    require(gamma_bare > 0.0 && std::isfinite(gamma_bare),
            "ReservoirParams: gamma_bare must be positive");
    require(sigma > 0.0 && std::isfinite(sigma), "ReservoirParams: sigma must be positive");
}

void ReservoirPair::validate() const
{
    cold.validate();
    hot.validate();
}

double spectral_density(double omega, const ReservoirParams& res)
{
    return res.gamma_bare * omega * res.sigma / (res.sigma * res.sigma + omega * omega);
}

double bose_occupation(double omega, double beta)
{
    if (omega == 0.0) {
        throw std::domain_error("bose_occupation: omega == 0 has no finite occupation");
    }
    return 1.0 / std::expm1(beta * omega);
}

double rate_gamma(double omega, const ReservoirParams& res)
{
    // Gamma(w) [1 + n(w)] = Gamma sigma / (sigma^2 + w^2) * w / (1 - exp(-beta w))
    const double lorentz = res.gamma_bare * res.sigma / (res.sigma * res.sigma + omega * omega);
    if (omega == 0.0) return lorentz / res.beta;
    const double x = res.beta * omega;
    if (std::abs(x) < kSeriesCrossover) {
        // x / (1 - e^{-x}) = 1 + x/2 + x^2/12 + O(x^4)
        return lorentz / res.beta * (1.0 + x / 2.0 + x * x / 12.0);
    }
    return lorentz * omega / (-std::expm1(-x));
}

} // namespace qfridge
