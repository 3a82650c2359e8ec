#include "finlink/transport.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace finlink {

double effective_diffusion(const ChannelParams& ch) {
    const double h = ch.h_ch;
    const double l = ch.l_ch;
    const double hl = h * l;
    // written so that exchanging h and l gives bit-identical results
    const double denom = 210.0 * ch.D0 * ch.D0 * ((h * h + l * l) + 2.4 * hl);
    const double enhancement = 8.5 * ch.u * ch.u * (hl * hl) / denom;
    return (1.0 + enhancement) * ch.D0;
}

ConcentrationProfile make_profile(const ChannelParams& ch, double N_m) {
    return {N_m, ch.cross_section(), effective_diffusion(ch), ch.u};
}

double concentration(const ConcentrationProfile& p, double x, double t) {
    if (!(t > 0.0))
        throw std::domain_error("concentration: t must be > 0");
    const double spread = 4.0 * p.D_eff * t;
    const double dx = x - p.u * t;
    return (p.N_m / p.A_ch) / std::sqrt(std::numbers::pi * spread) *
           std::exp(-dx * dx / spread);
}

double propagation_delay(const ChannelParams& ch) {
    if (!(ch.u > 0.0))
        throw std::domain_error("propagation_delay: no advective delay defined for u = 0");
    return ch.x_R / ch.u;
}

double received_concentration(const ChannelParams& ch, double N_m) {
    if (N_m < 0.0)
        throw std::domain_error("received_concentration: N_m must be >= 0");
    const double t_D = propagation_delay(ch);
    const double D = effective_diffusion(ch);
    return N_m / (ch.cross_section() * std::sqrt(4.0 * std::numbers::pi * D * t_D));
}

} // namespace finlink
