#include "finlink/receptor.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "finlink/transport.hpp"

namespace finlink {

double active_area(const DeviceParams& dev) {
    return (dev.W + 2.0 * dev.t_s) * dev.L_eff;
}

long long receptor_count(const LigandParams& lig, const DeviceParams& dev) {
    return std::llround(lig.rho_SR * active_area(dev));
}

double surface_peclet(const ChannelParams& ch, const DeviceParams& dev) {
    const double D = effective_diffusion(ch);
    const double Q = ch.cross_section() * ch.u;
    const double w_R = dev.W; // fin footprint seen by the flow
    return 6.0 * Q * w_R * w_R / (D * ch.l_ch * ch.h_ch * ch.h_ch);
}

double transport_rate(const ChannelParams& ch, const DeviceParams& dev) {
    if (!(ch.u > 0.0))
        throw std::domain_error("transport_rate: requires u > 0");
    const double D = effective_diffusion(ch);
    const double l_r = dev.L_eff;
    const double P_s = surface_peclet(ch, dev);
    if (P_s >= 1.0) {
        return D * l_r * (0.8075 * std::cbrt(P_s) +
                          0.7058 * std::pow(P_s, -1.0 / 6.0) -
                          0.1984 * std::pow(P_s, -1.0 / 3.0));
    }
    const double den = 4.885 - std::log(P_s);
    return D * l_r * (2.0 * std::numbers::pi / den) * (1.0 - 0.09266 * P_s / den);
}

BindingState binding_stats(double rho_R, const LigandParams& lig, long long N_R) {
    if (rho_R < 0.0)
        throw std::domain_error("binding_stats: rho_R must be >= 0");
    BindingState s;
    s.N_R = N_R;
    s.K_D = lig.dissociation_constant();
    s.P_on = rho_R / (rho_R + s.K_D);
    s.mu_NB = s.P_on * static_cast<double>(N_R);
    s.var_NB = s.P_on * (1.0 - s.P_on) * static_cast<double>(N_R);
    return s;
}

double relaxation_time(double rho_R, const LigandParams& lig, long long N_R, double k_T) {
    if (!(k_T > 0.0))
        throw std::domain_error("relaxation_time: requires k_T > 0");
    const double on = lig.k1 * rho_R + lig.k_minus1;
    return 1.0 / on +
           lig.k1 * (lig.k1 * rho_R + static_cast<double>(N_R) * lig.k_minus1) /
               (k_T * on * on);
}

double binding_noise_psd(const BindingState& s, double f) {
    if (!(s.tau_B > 0.0))
        throw std::invalid_argument("binding_noise_psd: state lacks a relaxation time");
    const double w = 2.0 * std::numbers::pi * f * s.tau_B;
    return s.var_NB * 2.0 * s.tau_B / (1.0 + w * w);
}

bool equilibrium_ok(double tau_p, double tau_B) {
    return tau_p >= 5.0 * tau_B;
}

BindingState bind_at(const ParamBundle& b, double N_m) {
    const long long N_R = receptor_count(b.ligand, b.device);
    const double rho_R = received_concentration(b.channel, N_m);
    BindingState s = binding_stats(rho_R, b.ligand, N_R);
    s.k_T = transport_rate(b.channel, b.device);
    s.tau_B = relaxation_time(rho_R, b.ligand, N_R, s.k_T);
    return s;
}

} // namespace finlink
