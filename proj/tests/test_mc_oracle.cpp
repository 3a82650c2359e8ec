#include <doctest.h>

#include <cmath>
#include <vector>

#include "finlink/link.hpp"
#include "finlink/mc_oracle.hpp"
#include "finlink/params.hpp"
#include "finlink/receptor.hpp"

using namespace finlink;

namespace {

SymbolStats binary_stats(double gap_in_sigma) {
    SymbolStats st;
    st.M = 2;
    st.mu = {0.0, gap_in_sigma};
    st.sigma2 = {1.0, 1.0};
    st.thresholds = ml_thresholds(st.mu, st.sigma2);
    return st;
}

// kurtosis-aware standard error of a Binomial sample variance
double var_std_err(long long N, double p, long long n) {
    const double s2 = double(N) * p * (1.0 - p);
    const double mu4 = s2 * (3.0 * s2 + 1.0 - 6.0 * p * (1.0 - p));
    const double nn = double(n);
    return std::sqrt((mu4 - s2 * s2 * (nn - 3.0) / (nn - 1.0)) / nn);
}

} // namespace

TEST_CASE("indistinguishable symbols error half the time") {
    SymbolStats st = binary_stats(0.0);
    st.mu = {1.0, 1.0};
    st.thresholds = ml_thresholds(st.mu, st.sigma2);
    const SepEstimate est = simulate_sep(st, {100000, 42});
    CHECK(std::abs(est.p_hat - 0.5) <= 3.0 * est.std_err);
}

TEST_CASE("a ten-sigma gap never errs at 1e5 trials") {
    const SepEstimate est = simulate_sep(binary_stats(10.0), {100000, 7});
    CHECK(est.errors == 0);
    CHECK(est.p_hat == 0.0);
}

TEST_CASE("estimate tracks the analytic value in the measurable range") {
    const SymbolStats st = binary_stats(4.0); // P_e = erfc(sqrt(2))/2 ~ 2.3e-2
    const double p = sep(st);
    const SepEstimate est = simulate_sep(st, {200000, 11});
    const double se = std::max(est.std_err, std::sqrt(p * (1 - p) / 200000.0));
    CHECK(std::abs(est.p_hat - p) <= 3.0 * se);
}

TEST_CASE("table defaults at M = 4 agree with the analytic SEP") {
    const SymbolStats st = symbol_stats(defaults(), 4);
    const double p = sep(st);
    const SepEstimate est = simulate_sep(st, {100000, 3});
    const double se = std::max({est.std_err, std::sqrt(p * (1 - p) / 100000.0), 1e-12});
    CHECK(std::abs(est.p_hat - p) <= 3.0 * se);
}

TEST_CASE("binding occupancy sampler") {
    SUBCASE("degenerate probabilities are exact") {
        const MomentEstimate z = simulate_binding(500, 0.0, {2000, 5});
        CHECK(z.mean == 0.0);
        CHECK(z.var == 0.0);
        const MomentEstimate full = simulate_binding(500, 1.0, {2000, 5});
        CHECK(full.mean == 500.0);
        CHECK(full.var == 0.0);
    }

    SUBCASE("matches Binomial moments at p = 1/2") {
        const long long n = 20000;
        const MomentEstimate est = simulate_binding(1000, 0.5, {n, 99});
        CHECK(std::abs(est.mean - 500.0) <= 3.0 * std::sqrt(250.0 / double(n)));
        CHECK(std::abs(est.var - 250.0) <= 3.0 * var_std_err(1000, 0.5, n));
    }

    SUBCASE("matches the equilibrium statistics at the defaults") {
        const ParamBundle b = defaults();
        const BindingState bs = bind_at(b, 5e5);
        const long long n = 20000;
        const MomentEstimate est = simulate_binding(bs.N_R, bs.P_on, {n, 1717});
        CHECK(std::abs(est.mean - bs.mu_NB) <= 3.0 * std::sqrt(bs.var_NB / double(n)));
        CHECK(std::abs(est.var - bs.var_NB) <=
              3.0 * var_std_err(bs.N_R, bs.P_on, n));
    }
}

TEST_CASE("fixed seeds reproduce bit-identical estimates") {
    const SymbolStats st = binary_stats(3.0);
    const SepEstimate a = simulate_sep(st, {50000, 12345});
    const SepEstimate b = simulate_sep(st, {50000, 12345});
    CHECK(a.p_hat == b.p_hat);
    CHECK(a.errors == b.errors);
    const SepEstimate c = simulate_sep(st, {50000, 54321});
    CHECK(a.errors != c.errors);

    const MomentEstimate m1 = simulate_binding(1000, 0.3, {5000, 9});
    const MomentEstimate m2 = simulate_binding(1000, 0.3, {5000, 9});
    CHECK(m1.mean == m2.mean);
    CHECK(m1.var == m2.var);
}

TEST_CASE("sampling error halves when trials quadruple") {
    const SymbolStats st = binary_stats(3.0);
    const double p = sep(st);
    double rms_small = 0.0, rms_big = 0.0;
    const int n_seeds = 16;
    for (int s = 0; s < n_seeds; ++s) {
        const double e1 = simulate_sep(st, {20000, 100 + std::uint64_t(s)}).p_hat - p;
        const double e2 = simulate_sep(st, {80000, 900 + std::uint64_t(s)}).p_hat - p;
        rms_small += e1 * e1;
        rms_big += e2 * e2;
    }
    const double ratio = std::sqrt(rms_big / rms_small);
    CHECK(ratio > 0.3);
    CHECK(ratio < 0.75);
}
