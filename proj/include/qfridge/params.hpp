// params.hpp — Model parameters, Lorentz-Drude spectral density and reservoir rates

#pragma once

#include <string_view>

namespace qfridge {

/// Qutrit level energies (0, delta, Delta), circular drive (Omega, lambda) and
/// ensemble size. lambda is real; its sign is kept and canonicalised by the
/// Floquet routines.
struct SystemParams {
    double delta{1.0};
    double Delta{2.0};
    double Omega{0.0};
    double lambda{0.0};
    int n_qutrits{1};

    /// Throws std::invalid_argument unless Delta > delta > 0, n_qutrits >= 1
    /// and every field is finite.
    void validate() const;

    double detuning() const { return Delta - delta - Omega; }
};

enum class ReservoirLabel { cold, hot };

std::string_view to_string(ReservoirLabel label);

struct ReservoirParams {
    double beta{1.0};
    double gamma_bare{0.1};
    double sigma{1.0};
    ReservoirLabel label{ReservoirLabel::cold};

    void validate() const;
};

struct ReservoirPair {
    ReservoirParams cold{1.5, 0.1, 1.0, ReservoirLabel::cold};
    ReservoirParams hot{1.0, 0.1, 1.0, ReservoirLabel::hot};

    void validate() const;
    /// True when beta_cold < beta_hot. Accepted, but callers should flag it.
    bool reversed() const { return cold.beta < hot.beta; }
    const ReservoirParams& operator[](ReservoirLabel l) const
    {
        return l == ReservoirLabel::cold ? cold : hot;
    }
};

/// Lorentz-Drude density Gamma * omega * sigma / (sigma^2 + omega^2), odd in omega.
double spectral_density(double omega, const ReservoirParams& res);

/// 1 / (exp(beta * omega) - 1). Throws std::domain_error at omega == 0.
double bose_occupation(double omega, double beta);

/// Correlation rate gamma(omega) = Gamma(omega) [1 + n(omega)], nonnegative for
/// all omega. The omega -> 0 limit Gamma / (beta sigma) is taken analytically.
double rate_gamma(double omega, const ReservoirParams& res);

} // namespace qfridge
