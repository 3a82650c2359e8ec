#include "finlink/device.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "finlink/constants.hpp"

namespace finlink {

namespace {

// Halley refinement of w e^w = x from a given start; converges to ~1 ulp.
double halley(double w, double x) {
    for (int i = 0; i < 64; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        const double step = f / denom;
        w -= step;
        if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w))
            break;
    }
    return w;
}

constexpr double exp30 = 1.0686474581524463e13; // e^30

} // namespace

double lambert_w(double x) {
    if (x < 0.0)
        throw std::domain_error("lambert_w: argument must be >= 0");
    if (x == 0.0)
        return 0.0;
    if (x < 1e-4) {
        // series about 0: W = x - x^2 + 3/2 x^3 - 8/3 x^4 + ...
        const double w = x * (1.0 + x * (-1.0 + x * (1.5 - x * (8.0 / 3.0))));
        return halley(w, x);
    }
    if (x >= exp30)
        return lambert_w_of_exp(std::log(x));
    const double l = std::log1p(x);
    const double w0 = l * (1.0 - std::log1p(l) / (2.0 + l));
    return halley(w0, x);
}

double lambert_w_of_exp(double z) {
    if (z < 30.0)
        return lambert_w(std::exp(z));
    // Solve w + ln w = z by Newton; perfectly conditioned for large z and
    // never forms e^z, so z may exceed the double exponent range.
    double w = z - std::log(z);
    for (int i = 0; i < 64; ++i) {
        const double f = w + std::log(w) - z;
        const double step = f / (1.0 + 1.0 / w);
        w -= step;
        if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(w))
            break;
    }
    return w;
}

Region operating_region(const DeviceParams& dev, double V_ov_local) {
    const bool ok = V_ov_local > 0.0 && dev.V_SD >= 0.0 && dev.V_SD <= V_ov_local;
    return ok ? Region::linear : Region::invalid;
}

double threshold_voltage(const DeviceParams& dev, double T) {
    if (!(dev.n_i > 0.0) || !(dev.N_A_dop > 0.0))
        throw std::domain_error("threshold_voltage: requires n_i > 0 and N_A_dop > 0");
    using namespace phys;
    const double kT = k_boltzmann * T;
    const double vt2 = 2.0 * kT / q_elementary;
    const double arg = (q_elementary * dev.t_ox / dev.eps_ox) *
                       std::sqrt(dev.n_i * dev.n_i * dev.eps_SiNW /
                                 (2.0 * kT * dev.N_A_dop));
    return dev.V_fb - vt2 * std::log(arg);
}

namespace {

struct ChargeDensities {
    double q_is, q_id, vt2;
};

ChargeDensities charge_densities(const DeviceParams& dev, double V_ov_local, double T) {
    const double vt2 = 2.0 * phys::k_boltzmann * T / phys::q_elementary;
    return {lambert_w_of_exp(V_ov_local / vt2),
            lambert_w_of_exp((V_ov_local - dev.V_SD) / vt2), vt2};
}

double geometry_prefactor(const DeviceParams& dev) {
    return dev.mu_p * (2.0 * dev.effective_width() / dev.L_eff) * dev.oxide_cap_per_area();
}

} // namespace

double drain_current(const DeviceParams& dev, double V_ov_local, double T) {
    if (operating_region(dev, V_ov_local) != Region::linear)
        throw std::domain_error("drain_current: outside linear region");
    const auto [q_is, q_id, vt2] = charge_densities(dev, V_ov_local, T);
    return geometry_prefactor(dev) * vt2 * vt2 *
           ((q_is - q_id) + 0.5 * (q_is * q_is - q_id * q_id));
}

double transconductance(const DeviceParams& dev, double V_ov_local, double T) {
    if (operating_region(dev, V_ov_local) != Region::linear)
        throw std::domain_error("transconductance: outside linear region");
    // d/dV [ (q_is - q_id) + (q_is^2 - q_id^2)/2 ] collapses to
    // (q_is - q_id)/vt2 since dW/dx = W/(x(1+W)) gives dq/dV = q/((1+q) vt2)
    // and each term carries the (1+q) factor.
    const auto [q_is, q_id, vt2] = charge_densities(dev, V_ov_local, T);
    return geometry_prefactor(dev) * vt2 * (q_is - q_id);
}

double flatband_noise_psd(const DeviceParams& dev, double T, double f) {
    if (f == 0.0)
        throw std::domain_error("flatband_noise_psd: 1/f noise diverges at f = 0");
    using namespace phys;
    const double N_ot_si = dev.N_ot / electron_volt; // eV^-1 m^-3 -> J^-1 m^-3
    const double area = dev.effective_width() * dev.L_eff;
    const double cox = dev.oxide_cap_per_area();
    return dev.lambda_tun * k_boltzmann * T * q_elementary * q_elementary * N_ot_si /
           (area * cox * cox * std::abs(f));
}

double flicker_psd(const DeviceParams& dev, double T, double g_fet, double f) {
    const double bracket =
        1.0 + dev.alpha_s * dev.mu_p * dev.oxide_cap_per_area() * dev.V_ov;
    return flatband_noise_psd(dev, T, f) * g_fet * g_fet * bracket * bracket;
}

OperatingPoint bias_point(const DeviceParams& dev, double T) {
    OperatingPoint op;
    op.V_ov = dev.V_ov;
    op.V_SD = dev.V_SD;
    op.region = operating_region(dev, dev.V_ov);
    if (op.region == Region::linear) {
        op.I_D = drain_current(dev, dev.V_ov, T);
        op.g_FET = transconductance(dev, dev.V_ov, T);
    } else {
        op.I_D = std::numeric_limits<double>::quiet_NaN();
        op.g_FET = std::numeric_limits<double>::quiet_NaN();
    }
    return op;
}

} // namespace finlink
