#pragma once

#include <string>
#include <vector>

namespace finlink {

// Microfluidic channel, flow and medium. All values SI.
struct ChannelParams {
    double h_ch;   // channel height [m]
    double l_ch;   // channel width [m]
    double u;      // mean flow velocity [m/s], u = 0 degrades to pure diffusion
    double D0;     // intrinsic diffusion coefficient [m^2/s]
    double x_R;    // transmitter-receiver distance d [m]
    double T;      // temperature [K]
    double c_ion;  // ionic strength [mol/m^3]
    double eps_M;  // medium permittivity [F/m]

    double cross_section() const { return h_ch * l_ch; } // A_ch [m^2]
};

// Tri-gate SiNW FinFET geometry, materials and bias.
struct DeviceParams {
    double W;          // fin top width [m]
    double t_s;        // fin height [m], t_s > W assumed
    double L_eff;      // effective channel length [m]
    double t_ox;       // oxide thickness [m]
    double eps_ox;     // oxide permittivity [F/m]
    double eps_SiNW;   // nanowire permittivity [F/m]
    double V_fb;       // flat-band voltage [V]
    double N_A_dop;    // doping concentration [m^-3], threshold-voltage diagnostic only
    double n_i;        // intrinsic carrier concentration [m^-3], diagnostic only
    double mu_p;       // hole mobility [m^2/Vs]
    double V_SD;       // source-drain voltage [V]
    double V_ov;       // overhead voltage V_SG - |V_t| [V]
    double p;          // hole density [m^-3]
    double lambda_tun; // characteristic tunneling distance [m]
    double N_ot;       // oxide trap density [eV^-1 m^-3]
    double alpha_s;    // Coulomb scattering coefficient [Vs/C]

    double effective_width() const { return W + 2.0 * t_s; }      // W_eff [m]
    double oxide_cap_per_area() const { return eps_ox / t_ox; }   // C'_OX [F/m^2]
};

// Ligand species and receptor functionalization.
struct LigandParams {
    double k1;        // binding rate [m^3/s]
    double k_minus1;  // unbinding rate [1/s]
    double N_e;       // mean electrons per ligand
    double rho_SR;    // receptor surface density [m^-2]
    double l_SR;      // receptor length [m]
    // Per-symbol released molecule counts. Empty selects the default CSK
    // mapping N_m = m*K_max/(M-1); when set, size must equal the alphabet.
    std::vector<double> N_m_levels;
    double K_max;     // max releasable molecules per slot

    double dissociation_constant() const { return k_minus1 / k1; } // K_D [m^-3]
};

// Frequency band for noise-PSD sampling and variance integration.
struct BandConfig {
    double f_min;  // [Hz]
    double f_max;  // [Hz]
    int n_points;  // log-spaced sample count, >= 2
};

struct ParamBundle {
    ChannelParams channel;
    DeviceParams device;
    LigandParams ligand;
    BandConfig band;
};

// Table-style defaults. N_A_dop and n_i are documented non-table values used
// only by the threshold-voltage diagnostic; L_eff defaults to 2 um.
ParamBundle defaults();

// Reference single-symbol release count used by response/SNR probes.
inline constexpr double default_probe_ligands = 5e5;

struct Violation {
    std::string field;
    std::string message;
};

// Checks every bundle invariant; violations are returned as data, never thrown.
std::vector<Violation> validate(const ParamBundle& b);

// CSK level mapping: explicit N_m_levels when set (size must equal M),
// otherwise m*K_max/(M-1) for m = 0..M-1. Throws std::invalid_argument on
// size mismatch or M < 2.
std::vector<double> csk_levels(const LigandParams& lig, int M);

bool operator==(const ChannelParams&, const ChannelParams&);
bool operator==(const DeviceParams&, const DeviceParams&);
bool operator==(const LigandParams&, const LigandParams&);
bool operator==(const BandConfig&, const BandConfig&);
bool operator==(const ParamBundle&, const ParamBundle&);

} // namespace finlink
