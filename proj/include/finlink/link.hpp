#pragma once

#include <vector>

#include "finlink/params.hpp"

namespace finlink {

// Sampled one-sided noise PSD over a log-spaced grid.
struct NoiseSpectrum {
    std::vector<double> freqs;      // [Hz]
    std::vector<double> s_binding;  // [A^2/Hz]
    std::vector<double> s_flicker;  // [A^2/Hz]
    std::vector<double> s_total;    // pointwise sum
    BandConfig band{};
};

// Per-symbol detection statistics for M-CSK with ML thresholds.
struct SymbolStats {
    int M = 0;
    std::vector<double> mu;         // mean currents [A], increasing in m
    std::vector<double> sigma2;     // current variances [A^2]
    std::vector<double> thresholds; // lambda_1..lambda_{M-1} [A], interleaving mu
};

struct SnrResult {
    double linear;
    double db;
};

// Closed-form mean output current
//   mu_I = g_FET Psi_L N_R (1 + (K_D A_ch / N_m) sqrt(4 pi D x_R / u))^-1,
// identical to the composed transport->binding->transduction->small-signal path.
// N_m = 0 returns 0. Throws std::domain_error at u = 0 or outside linear region.
double mean_current(const ParamBundle& b, double N_m);

// Binding + flicker output-referred PSDs on the bundle band.
NoiseSpectrum noise_spectrum(const ParamBundle& b, double N_m);

// sigma^2 = 2 * integral of s_total over [f_min, f_max] (two-sided spectrum
// folded to positive frequencies); composite Simpson in log-f on the grid.
double current_variance(const NoiseSpectrum& sp);

SnrResult snr(const ParamBundle& b, double N_m);

// ML decision levels between adjacent Gaussians: the likelihood-equality
// quadratic root inside (mu_{m-1}, mu_m); midpoint for equal variances.
// Throws std::domain_error if no root lies in the interval.
std::vector<double> ml_thresholds(const std::vector<double>& mu,
                                  const std::vector<double>& sigma2);

// Per-symbol (mu, sigma^2) for the M-CSK alphabet plus ML thresholds.
SymbolStats symbol_stats(const ParamBundle& b, int M);

// Symbol error probability under equiprobable symbols and threshold detection,
//   P_e = (1/2M) [ edge erfc terms + interior erfc pairs ].
double sep(const SymbolStats& st);

// ln(P_e), evaluated stably when every erfc term underflows.
double log_sep(const SymbolStats& st);

// ln(erfc(x)) for x >= 0 without underflow (asymptotic expansion for large x).
double log_erfc(double x);

} // namespace finlink
