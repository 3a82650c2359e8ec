#include "finlink/transducer.hpp"

#include <cmath>

#include "finlink/constants.hpp"

namespace finlink {

double debye_length(const ChannelParams& ch) {
    using namespace phys;
    return std::sqrt(ch.eps_M * k_boltzmann * ch.T /
                     (2.0 * n_avogadro * q_elementary * q_elementary * ch.c_ion));
}

double effective_charge(double lambda_D, double l_SR) {
    return phys::q_elementary * std::exp(-l_SR / lambda_D);
}

TransducerState capacitance_stack(const DeviceParams& dev, const ChannelParams& ch,
                                  double lambda_D) {
    TransducerState s;
    s.lambda_D = lambda_D;
    const double area = dev.effective_width() * dev.L_eff;
    s.C_OX = (dev.eps_ox / dev.t_ox) * area;
    s.C_DL = (ch.eps_M / lambda_D) * area;
    const double lambda_NW =
        std::sqrt(dev.eps_SiNW * phys::k_boltzmann * ch.T /
                  (dev.p * phys::q_elementary * phys::q_elementary));
    s.C_NW = (dev.eps_SiNW / lambda_NW) * area;
    s.C_eq = 1.0 / (1.0 / s.C_OX + 1.0 / s.C_NW) + s.C_DL;
    return s;
}

double ligand_potential(const TransducerState& s, double N_e) {
    return s.q_eff * N_e / s.C_eq;
}

TransducerState transduce(const ChannelParams& ch, const DeviceParams& dev,
                          const LigandParams& lig) {
    TransducerState s = capacitance_stack(dev, ch, debye_length(ch));
    s.q_eff = effective_charge(s.lambda_D, lig.l_SR);
    s.Psi_L = ligand_potential(s, lig.N_e);
    return s;
}

} // namespace finlink
