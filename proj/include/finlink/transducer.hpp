#pragma once

#include "finlink/params.hpp"

namespace finlink {

// Charge-to-potential conversion stack at the gate.
struct TransducerState {
    double lambda_D = 0; // Debye screening length [m]
    double q_eff = 0;    // effective charge per ligand electron [C]
    double C_OX = 0;     // oxide capacitance [F]
    double C_DL = 0;     // diffusion-layer capacitance [F]
    double C_NW = 0;     // inner nanowire double-layer capacitance [F]
    double C_eq = 0;     // (1/C_OX + 1/C_NW)^-1 + C_DL [F]
    double Psi_L = 0;    // gate potential per bound ligand [V]
};

// Electrolyte screening length sqrt(eps_M kB T / (2 N_Av q^2 c_ion)).
double debye_length(const ChannelParams& ch);

// q exp(-l_SR / lambda_D): ligand electrons sit one receptor length away.
double effective_charge(double lambda_D, double l_SR);

// All four capacitances over the full gate area (W + 2 t_s) * L_eff.
// Leaves q_eff and Psi_L unset.
TransducerState capacitance_stack(const DeviceParams& dev, const ChannelParams& ch,
                                  double lambda_D);

// Per-ligand gate potential q_eff * N_e / C_eq; requires state.q_eff filled.
double ligand_potential(const TransducerState& s, double N_e);

// Full stack: Debye length, effective charge, capacitances, Psi_L.
TransducerState transduce(const ChannelParams& ch, const DeviceParams& dev,
                          const LigandParams& lig);

} // namespace finlink
