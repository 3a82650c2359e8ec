#pragma once

#include "finlink/params.hpp"

namespace finlink {

enum class Region { linear, invalid };

struct OperatingPoint {
    double V_ov;   // [V]
    double V_SD;   // [V]
    double I_D;    // [A]
    double g_FET;  // [A/V]
    Region region;
};

// Principal-branch Lambert W for x >= 0: returns w with w e^w = x to ~1 ulp.
// Large arguments are fine up to x = e^700. Throws std::domain_error for x < 0.
double lambert_w(double x);

// W(e^z) without forming e^z; safe for any z (used for the charge densities,
// whose exponent q V / 2kT can exceed the double exponent range).
double lambert_w_of_exp(double z);

// Linear-region test: V_ov > 0 and 0 <= V_SD <= V_ov.
Region operating_region(const DeviceParams& dev, double V_ov_local);

// Long-channel threshold voltage diagnostic; needs n_i and N_A_dop.
double threshold_voltage(const DeviceParams& dev, double T);

// Charge-sheet drain current magnitude,
//   I_D = mu_p (2 W_eff / L_eff)(eps_ox/t_ox)(2kT/q)^2 [dq + (q_is^2 - q_id^2)/2],
// q_is/q_id the Lambert-W inversion charge densities at source/drain.
// Throws std::domain_error outside the linear region.
double drain_current(const DeviceParams& dev, double V_ov_local, double T);

// Analytic dI_D/dV_SG; reduces to
//   mu_p (2 W_eff / L_eff)(eps_ox/t_ox)(2kT/q)(q_is - q_id)
// via dW/dx = W/(x(1+W)). Matches the central finite difference of drain_current.
double transconductance(const DeviceParams& dev, double V_ov_local, double T);

// Flat-band voltage noise PSD [V^2/Hz], 1/|f|; trap density converted from
// eV^-1 m^-3, area is the full gate (W + 2 t_s) L_eff. Throws at f = 0.
double flatband_noise_psd(const DeviceParams& dev, double T, double f);

// Output-referred flicker noise S_VFB g^2 [1 + alpha_s mu_p C'_OX V_ov]^2 [A^2/Hz].
double flicker_psd(const DeviceParams& dev, double T, double g_fet, double f);

// I_D and g_FET at the bundle bias point (dev.V_ov, dev.V_SD).
OperatingPoint bias_point(const DeviceParams& dev, double T);

} // namespace finlink
