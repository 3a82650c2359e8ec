#pragma once

#include "finlink/params.hpp"

namespace finlink {

// One released-impulse concentration profile in the channel.
struct ConcentrationProfile {
    double N_m;    // released molecules
    double A_ch;   // channel cross-section [m^2]
    double D_eff;  // effective diffusion coefficient [m^2/s]
    double u;      // flow velocity [m/s]
};

// Taylor-Aris effective dispersion for a rectangular duct; D_eff >= D0,
// exactly D0 at u = 0 and symmetric under h_ch <-> l_ch.
double effective_diffusion(const ChannelParams& ch);

ConcentrationProfile make_profile(const ChannelParams& ch, double N_m);

// Space-time concentration [molecules/m^3]; x measured from the transmitter.
// Throws std::domain_error for t <= 0 (the release impulse is not point-evaluable).
double concentration(const ConcentrationProfile& p, double x, double t);

// Peak arrival time t_D = x_R / u. Throws std::domain_error when u = 0.
double propagation_delay(const ChannelParams& ch);

// Peak concentration sampled at the receiver, rho_R = N_m / (A_ch sqrt(4 pi D t_D)).
double received_concentration(const ChannelParams& ch, double N_m);

} // namespace finlink
