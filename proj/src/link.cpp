#include "finlink/link.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "finlink/device.hpp"
#include "finlink/receptor.hpp"
#include "finlink/transducer.hpp"
#include "finlink/transport.hpp"

namespace finlink {

namespace {

struct FrontEnd {
    double g;       // transconductance at bias [A/V]
    double psi_L;   // per-ligand gate potential [V]
    long long N_R;  // receptor count
};

FrontEnd front_end(const ParamBundle& b) {
    if (operating_region(b.device, b.device.V_ov) != Region::linear)
        throw std::domain_error("link: device outside linear region");
    return {transconductance(b.device, b.device.V_ov, b.channel.T),
            transduce(b.channel, b.device, b.ligand).Psi_L,
            receptor_count(b.ligand, b.device)};
}

} // namespace

double mean_current(const ParamBundle& b, double N_m) {
    if (N_m < 0.0)
        throw std::domain_error("mean_current: N_m must be >= 0");
    const FrontEnd fe = front_end(b);
    if (N_m == 0.0)
        return 0.0;
    if (!(b.channel.u > 0.0))
        throw std::domain_error("mean_current: requires u > 0");
    const double D = effective_diffusion(b.channel);
    const double attenuation =
        (b.ligand.dissociation_constant() * b.channel.cross_section() / N_m) *
        std::sqrt(4.0 * std::numbers::pi * D * b.channel.x_R / b.channel.u);
    return fe.g * fe.psi_L * static_cast<double>(fe.N_R) / (1.0 + attenuation);
}

NoiseSpectrum noise_spectrum(const ParamBundle& b, double N_m) {
    const FrontEnd fe = front_end(b);
    const BindingState bs = bind_at(b, N_m);
    const double gain2 = fe.psi_L * fe.psi_L * fe.g * fe.g;

    NoiseSpectrum sp;
    sp.band = b.band;
    const int n = b.band.n_points;
    sp.freqs.resize(n);
    sp.s_binding.resize(n);
    sp.s_flicker.resize(n);
    sp.s_total.resize(n);
    const double lg_min = std::log(b.band.f_min);
    const double lg_max = std::log(b.band.f_max);
    for (int i = 0; i < n; ++i) {
        const double f = std::exp(lg_min + (lg_max - lg_min) * i / (n - 1));
        sp.freqs[i] = f;
        sp.s_binding[i] = binding_noise_psd(bs, f) * gain2;
        sp.s_flicker[i] = flicker_psd(b.device, b.channel.T, fe.g, f);
        sp.s_total[i] = sp.s_binding[i] + sp.s_flicker[i];
    }
    return sp;
}

double current_variance(const NoiseSpectrum& sp) {
    const auto& f = sp.freqs;
    const auto& s = sp.s_total;
    const std::size_t n = f.size();
    if (n < 2)
        throw std::invalid_argument("current_variance: need at least 2 samples");

    // integral of S df = integral of (S f) dln f; the grid is log-uniform so
    // composite Simpson applies when the point count is odd
    bool uniform = true;
    const double dg0 = std::log(f[1] / f[0]);
    for (std::size_t i = 1; i + 1 < n && uniform; ++i)
        uniform = std::abs(std::log(f[i + 1] / f[i]) - dg0) <= 1e-9 * dg0;

    double integral = 0.0;
    if (uniform && n % 2 == 1 && n >= 3) {
        double acc = s[0] * f[0] + s[n - 1] * f[n - 1];
        for (std::size_t i = 1; i + 1 < n; ++i)
            acc += s[i] * f[i] * (i % 2 == 1 ? 4.0 : 2.0);
        integral = acc * dg0 / 3.0;
    } else {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double dg = std::log(f[i + 1] / f[i]);
            integral += 0.5 * (s[i] * f[i] + s[i + 1] * f[i + 1]) * dg;
        }
    }
    return 2.0 * integral; // two-sided spectrum folded onto f > 0
}

SnrResult snr(const ParamBundle& b, double N_m) {
    const double mu = mean_current(b, N_m);
    const double var = current_variance(noise_spectrum(b, N_m));
    const double lin = mu * mu / var;
    return {lin, 10.0 * std::log10(lin)};
}

namespace {

// log N(mu0,v0) - log N(mu1,v1) at lambda; threshold is its root.
double loglik_diff(double lambda, double m0, double v0, double m1, double v1) {
    const double d0 = lambda - m0;
    const double d1 = lambda - m1;
    return -d0 * d0 / (2.0 * v0) + d1 * d1 / (2.0 * v1) + 0.5 * std::log(v1 / v0);
}

double threshold_between(double m0, double v0, double m1, double v1) {
    if (!(v0 > 0.0) || !(v1 > 0.0))
        throw std::invalid_argument("ml_thresholds: variances must be > 0");
    if (m1 < m0)
        throw std::invalid_argument("ml_thresholds: means must be nondecreasing");
    if (m1 == m0)
        return m0; // indistinguishable symbols
    const double rel = std::abs(v0 - v1) / std::max(v0, v1);
    if (rel <= 1e-12)
        return 0.5 * (m0 + m1);

    // likelihood equality is quadratic in lambda
    const double a = 1.0 / v0 - 1.0 / v1;
    const double bq = -2.0 * (m0 / v0 - m1 / v1);
    const double c = m0 * m0 / v0 - m1 * m1 / v1 + std::log(v0 / v1);
    const double disc = bq * bq - 4.0 * a * c;
    if (disc >= 0.0) {
        const double q = -0.5 * (bq + std::copysign(std::sqrt(disc), bq));
        for (double root : {q / a, c / q}) {
            if (root > m0 && root < m1)
                return root;
        }
    }
    // fall back to bisection on the log-likelihood difference
    double lo = m0, hi = m1;
    double flo = loglik_diff(lo, m0, v0, m1, v1);
    double fhi = loglik_diff(hi, m0, v0, m1, v1);
    if (!(flo > 0.0) || !(fhi < 0.0))
        throw std::domain_error("ml_thresholds: no decision level inside the mean interval");
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (loglik_diff(mid, m0, v0, m1, v1) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> ml_thresholds(const std::vector<double>& mu,
                                  const std::vector<double>& sigma2) {
    if (mu.size() != sigma2.size() || mu.size() < 2)
        throw std::invalid_argument("ml_thresholds: need matching mu/sigma2 with M >= 2");
    std::vector<double> th(mu.size() - 1);
    for (std::size_t m = 1; m < mu.size(); ++m)
        th[m - 1] = threshold_between(mu[m - 1], sigma2[m - 1], mu[m], sigma2[m]);
    return th;
}

SymbolStats symbol_stats(const ParamBundle& b, int M) {
    const std::vector<double> levels = csk_levels(b.ligand, M);
    SymbolStats st;
    st.M = M;
    st.mu.reserve(M);
    st.sigma2.reserve(M);
    for (double level : levels) {
        st.mu.push_back(mean_current(b, level));
        st.sigma2.push_back(current_variance(noise_spectrum(b, level)));
    }
    st.thresholds = ml_thresholds(st.mu, st.sigma2);
    return st;
}

namespace {

const double sqrt2 = std::sqrt(2.0);

void check_stats(const SymbolStats& st) {
    if (st.M < 2 || st.mu.size() != static_cast<std::size_t>(st.M) ||
        st.sigma2.size() != st.mu.size() || st.thresholds.size() != st.mu.size() - 1)
        throw std::invalid_argument("sep: malformed SymbolStats");
}

// erfc arguments of the per-symbol error terms, in Eq.-order:
// lower/upper escape for each symbol, edges one-sided.
std::vector<double> erfc_args(const SymbolStats& st) {
    const int M = st.M;
    std::vector<double> args;
    args.reserve(2 * (M - 1));
    const auto sig = [&](int m) { return std::sqrt(st.sigma2[m]); };
    args.push_back((st.thresholds[0] - st.mu[0]) / (sig(0) * sqrt2));
    args.push_back((st.mu[M - 1] - st.thresholds[M - 2]) / (sig(M - 1) * sqrt2));
    for (int m = 1; m <= M - 2; ++m) {
        args.push_back((st.mu[m] - st.thresholds[m - 1]) / (sig(m) * sqrt2));
        args.push_back((st.thresholds[m] - st.mu[m]) / (sig(m) * sqrt2));
    }
    return args;
}

} // namespace

double log_erfc(double x) {
    if (x < 0.0)
        return std::log(2.0 - std::erfc(-x));
    if (x < 20.0)
        return std::log(std::erfc(x));
    // asymptotic: erfc(x) = e^{-x^2}/(x sqrt(pi)) (1 - 1/(2x^2) + 3/(4x^4) - 15/(8x^6))
    const double ix2 = 1.0 / (x * x);
    const double series = std::log1p(ix2 * (-0.5 + ix2 * (0.75 - 1.875 * ix2)));
    return -x * x - std::log(x * std::sqrt(std::numbers::pi)) + series;
}

double sep(const SymbolStats& st) {
    check_stats(st);
    double sum = 0.0;
    for (double a : erfc_args(st))
        sum += std::erfc(a);
    return sum / (2.0 * st.M);
}

double log_sep(const SymbolStats& st) {
    check_stats(st);
    const std::vector<double> args = erfc_args(st);
    double mx = -std::numeric_limits<double>::infinity();
    std::vector<double> lt;
    lt.reserve(args.size());
    for (double a : args) {
        lt.push_back(log_erfc(a));
        mx = std::max(mx, lt.back());
    }
    double acc = 0.0;
    for (double t : lt)
        acc += std::exp(t - mx);
    return mx + std::log(acc) - std::log(2.0 * st.M);
}

} // namespace finlink
