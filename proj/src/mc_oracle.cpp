#include "finlink/mc_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace finlink {

namespace {

// splitmix64: 2^64-period counter generator. Hand-rolled sampling on top of
// it keeps estimates bit-identical across standard libraries.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in (0, 1]: top 53 bits, offset so log() is always finite
    double uniform01() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1p-53;
    }

    int uniform_int(int n) {
        int v = static_cast<int>(uniform01() * n);
        return std::min(v, n - 1);
    }

    // Box-Muller; one draw per call, the pair partner is discarded so the
    // stream layout stays trivially partition-independent
    double normal() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t part) {
    SplitMix64 mix(seed ^ (0x632be59bd9b4e019ull * (part + 1)));
    return mix.next();
}

constexpr int n_partitions = 64;

// Fixed partitioning with derived seeds: the merged counts are independent of
// how partitions are scheduled onto threads.
template <typename PerPartition>
void run_partitions(long long n_trials, std::uint64_t seed, PerPartition fn) {
    const long long base = n_trials / n_partitions;
    const long long extra = n_trials % n_partitions;
    unsigned hw = std::thread::hardware_concurrency();
    const unsigned n_threads = std::clamp(hw, 1u, 8u);

    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
        pool.emplace_back([&, t] {
            for (int part = static_cast<int>(t); part < n_partitions;
                 part += static_cast<int>(n_threads)) {
                const long long count = base + (part < extra ? 1 : 0);
                if (count > 0)
                    fn(part, count, derive_seed(seed, part));
            }
        });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace

const char* mc_generator_name() { return "splitmix64+boxmuller"; }

SepEstimate simulate_sep(const SymbolStats& st, const TrialConfig& cfg) {
    if (cfg.n_trials < 1)
        throw std::invalid_argument("simulate_sep: n_trials must be >= 1");
    const int M = st.M;
    std::vector<double> sigma(M);
    for (int m = 0; m < M; ++m)
        sigma[m] = std::sqrt(st.sigma2[m]);

    std::vector<long long> part_errors(n_partitions, 0);
    run_partitions(cfg.n_trials, cfg.seed, [&](int part, long long count, std::uint64_t s) {
        SplitMix64 rng(s);
        long long errors = 0;
        for (long long i = 0; i < count; ++i) {
            const int m = rng.uniform_int(M);
            const double y = st.mu[m] + sigma[m] * rng.normal();
            const auto it =
                std::upper_bound(st.thresholds.begin(), st.thresholds.end(), y);
            const int decided = static_cast<int>(it - st.thresholds.begin());
            if (decided != m)
                ++errors;
        }
        part_errors[part] = errors;
    });

    long long errors = 0;
    for (long long e : part_errors)
        errors += e;
    const double p = static_cast<double>(errors) / static_cast<double>(cfg.n_trials);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.n_trials));
    return {p, se, errors, cfg.n_trials};
}

MomentEstimate simulate_binding(long long N_R, double P_on, const TrialConfig& cfg) {
    if (P_on < 0.0 || P_on > 1.0)
        throw std::invalid_argument("simulate_binding: P_on must lie in [0, 1]");
    if (cfg.n_trials < 1)
        throw std::invalid_argument("simulate_binding: n_trials must be >= 1");

    std::vector<double> part_sum(n_partitions, 0.0);
    std::vector<double> part_sum2(n_partitions, 0.0);
    run_partitions(cfg.n_trials, cfg.seed, [&](int part, long long count, std::uint64_t s) {
        SplitMix64 rng(s);
        double sum = 0.0, sum2 = 0.0;
        for (long long i = 0; i < count; ++i) {
            long long bound = 0;
            for (long long r = 0; r < N_R; ++r)
                if (rng.uniform01() <= P_on)
                    ++bound;
            const double x = static_cast<double>(bound);
            sum += x;
            sum2 += x * x;
        }
        part_sum[part] = sum;
        part_sum2[part] = sum2;
    });

    double sum = 0.0, sum2 = 0.0;
    for (int i = 0; i < n_partitions; ++i) {
        sum += part_sum[i];
        sum2 += part_sum2[i];
    }
    const double n = static_cast<double>(cfg.n_trials);
    const double mean = sum / n;
    const double var = cfg.n_trials > 1 ? (sum2 - n * mean * mean) / (n - 1.0) : 0.0;
    return {mean, var, cfg.n_trials};
}

} // namespace finlink
