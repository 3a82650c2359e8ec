#pragma once

#include "finlink/params.hpp"

namespace finlink {

// Equilibrium ligand-receptor binding snapshot.
struct BindingState {
    long long N_R = 0;   // receptors on the active area
    double P_on = 0;     // bound probability at equilibrium
    double mu_NB = 0;    // mean bound receptors
    double var_NB = 0;   // variance of bound receptors
    double tau_B = 0;    // relaxation time [s] (0 until filled)
    double k_T = 0;      // transport rate [m^3/s] (0 until filled)
    double K_D = 0;      // dissociation constant [molecules/m^3]
};

// Functionalized gate area A_r = (W + 2 t_s) L_eff.
double active_area(const DeviceParams& dev);

// Integer receptor count round(rho_SR * A_r).
long long receptor_count(const LigandParams& lig, const DeviceParams& dev);

// Sherwood-type flow parameter P_s = 6 Q w_R^2 / (D l_ch h_ch^2), Q = A_ch u.
double surface_peclet(const ChannelParams& ch, const DeviceParams& dev);

// Ligand flux coefficient to the sensor surface; piecewise fit in P_s with
// the P_s >= 1 branch used at the break point. Throws std::domain_error at u = 0.
double transport_rate(const ChannelParams& ch, const DeviceParams& dev);

// Langmuir equilibrium statistics for a stationary concentration rho_R.
// Fills P_on, mu_NB, var_NB, K_D; tau_B and k_T are left for the caller.
BindingState binding_stats(double rho_R, const LigandParams& lig, long long N_R);

// Transport-influenced relaxation time of the binding reaction.
double relaxation_time(double rho_R, const LigandParams& lig, long long N_R, double k_T);

// Two-sided Lorentzian occupancy-noise PSD [1/Hz]; even in f, corner at
// 1/(2 pi tau_B). Requires state.tau_B filled.
double binding_noise_psd(const BindingState& s, double f);

// Equilibrium holds when the sampled passage duration covers >= 5 relaxation times.
bool equilibrium_ok(double tau_p, double tau_B);

// Full biorecognition snapshot at the receiver for one release count.
BindingState bind_at(const ParamBundle& b, double N_m);

} // namespace finlink
