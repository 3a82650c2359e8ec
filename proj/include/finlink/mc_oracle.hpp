#pragma once

#include <cstdint>

#include "finlink/link.hpp"

namespace finlink {

// Monte-Carlo validation runs. Deterministic for a fixed seed regardless of
// thread count: trials are split into fixed partitions with derived seeds and
// the error counts are summed.
struct TrialConfig {
    long long n_trials = 1000000;
    std::uint64_t seed = 1;
};

struct SepEstimate {
    double p_hat;
    double std_err;   // binomial, sqrt(p_hat (1 - p_hat) / n)
    long long errors;
    long long trials;
};

struct MomentEstimate {
    double mean;
    double var;       // unbiased sample variance
    long long trials;
};

// Name of the generator, recorded in CSV metadata.
const char* mc_generator_name();

// Draws symbols uniformly, samples Normal(mu_m, sigma2_m) currents and
// classifies by the stats' thresholds.
SepEstimate simulate_sep(const SymbolStats& st, const TrialConfig& cfg);

// Samples Binomial(N_R, P_on) occupancy counts.
MomentEstimate simulate_binding(long long N_R, double P_on, const TrialConfig& cfg);

} // namespace finlink
