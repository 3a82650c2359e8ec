#include "finlink/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "finlink/constants.hpp"

namespace finlink {

ParamBundle defaults() {
    ParamBundle b;

    b.channel.h_ch = 3e-6;
    b.channel.l_ch = 15e-6;
    b.channel.u = 1e-5;
    b.channel.D0 = 2e-10;
    b.channel.x_R = 1e-3;
    b.channel.T = 300.0;
    b.channel.c_ion = 30.0;
    b.channel.eps_M = 78.0 * phys::eps0;

    b.device.W = 10.0 * std::numbers::pi * 1e-9;
    b.device.t_s = 5e-8;
    b.device.L_eff = 2e-6;        // not in the parameter table; documented default
    b.device.t_ox = 2e-9;
    b.device.eps_ox = 3.9 * phys::eps0;
    b.device.eps_SiNW = 11.68 * phys::eps0;
    b.device.V_fb = -0.4762;
    b.device.N_A_dop = 1e24;      // diagnostic-only default, non-table value
    b.device.n_i = 1.45e16;       // diagnostic-only default, non-table value
    b.device.mu_p = 500e-4;       // 500 cm^2/Vs
    b.device.V_SD = 0.1;
    b.device.V_ov = 0.4;
    b.device.p = 1e24;            // 1e18 cm^-3
    b.device.lambda_tun = 0.05e-9;
    b.device.N_ot = 1e22;         // 1e16 eV^-1 cm^-3
    b.device.alpha_s = 1.9e-4;

    b.ligand.k1 = 2e-19;
    b.ligand.k_minus1 = 20.0;
    b.ligand.N_e = 3.0;
    b.ligand.rho_SR = 4e16;
    b.ligand.l_SR = 2e-9;
    b.ligand.K_max = 4e6;

    b.band.f_min = 1e-3;
    b.band.f_max = 1e3;
    b.band.n_points = 2001;

    return b;
}

namespace {

void require_positive(std::vector<Violation>& out, const char* field, double v) {
    if (!(v > 0.0))
        out.push_back({field, "must be > 0"});
}

void require_nonnegative(std::vector<Violation>& out, const char* field, double v) {
    if (!(v >= 0.0))
        out.push_back({field, "must be >= 0"});
}

} // namespace

std::vector<Violation> validate(const ParamBundle& b) {
    std::vector<Violation> v;

    require_positive(v, "channel.h_ch", b.channel.h_ch);
    require_positive(v, "channel.l_ch", b.channel.l_ch);
    require_nonnegative(v, "channel.u", b.channel.u);
    require_positive(v, "channel.D0", b.channel.D0);
    require_positive(v, "channel.x_R", b.channel.x_R);
    require_positive(v, "channel.T", b.channel.T);
    require_positive(v, "channel.c_ion", b.channel.c_ion);
    require_positive(v, "channel.eps_M", b.channel.eps_M);

    require_positive(v, "device.W", b.device.W);
    require_positive(v, "device.t_s", b.device.t_s);
    require_positive(v, "device.L_eff", b.device.L_eff);
    require_positive(v, "device.t_ox", b.device.t_ox);
    require_positive(v, "device.eps_ox", b.device.eps_ox);
    require_positive(v, "device.eps_SiNW", b.device.eps_SiNW);
    if (!(b.device.t_s > b.device.W))
        v.push_back({"device.t_s", "tri-gate assumption requires t_s > W"});
    require_positive(v, "device.mu_p", b.device.mu_p);
    if (!(b.device.V_ov > 0.0))
        v.push_back({"device.V_ov", "linear region requires V_ov > 0"});
    if (!(b.device.V_SD >= 0.0))
        v.push_back({"device.V_SD", "must be >= 0"});
    else if (!(b.device.V_SD <= b.device.V_ov))
        v.push_back({"device.V_SD", "linear region requires V_SD <= V_ov"});
    require_positive(v, "device.p", b.device.p);
    require_positive(v, "device.lambda_tun", b.device.lambda_tun);
    require_nonnegative(v, "device.N_ot", b.device.N_ot);
    require_nonnegative(v, "device.alpha_s", b.device.alpha_s);

    require_positive(v, "ligand.k1", b.ligand.k1);
    require_positive(v, "ligand.k_minus1", b.ligand.k_minus1);
    require_nonnegative(v, "ligand.N_e", b.ligand.N_e);
    require_positive(v, "ligand.rho_SR", b.ligand.rho_SR);
    require_nonnegative(v, "ligand.l_SR", b.ligand.l_SR);
    require_positive(v, "ligand.K_max", b.ligand.K_max);
    if (!b.ligand.N_m_levels.empty()) {
        const auto& lv = b.ligand.N_m_levels;
        for (std::size_t i = 0; i < lv.size(); ++i) {
            if (!(lv[i] >= 0.0)) {
                v.push_back({"ligand.N_m_levels", "levels must be >= 0"});
                break;
            }
            if (i > 0 && !(lv[i] > lv[i - 1])) {
                v.push_back({"ligand.N_m_levels", "levels must be strictly increasing"});
                break;
            }
        }
        if (!lv.empty() && lv.back() > b.ligand.K_max)
            v.push_back({"ligand.N_m_levels", "max level exceeds K_max"});
    }

    if (!(b.band.f_min > 0.0))
        v.push_back({"band.f_min", "must be > 0"});
    if (!(b.band.f_max > b.band.f_min))
        v.push_back({"band.f_max", "must exceed f_min"});
    if (b.band.n_points < 2)
        v.push_back({"band.n_points", "must be >= 2"});

    return v;
}

std::vector<double> csk_levels(const LigandParams& lig, int M) {
    if (M < 2)
        throw std::invalid_argument("csk_levels: alphabet size must be >= 2");
    if (!lig.N_m_levels.empty()) {
        if (static_cast<int>(lig.N_m_levels.size()) != M)
            throw std::invalid_argument("csk_levels: N_m_levels size does not match M");
        return lig.N_m_levels;
    }
    std::vector<double> levels(M);
    for (int m = 0; m < M; ++m)
        levels[m] = static_cast<double>(m) * lig.K_max / (M - 1);
    return levels;
}

bool operator==(const ChannelParams& a, const ChannelParams& x) {
    return a.h_ch == x.h_ch && a.l_ch == x.l_ch && a.u == x.u && a.D0 == x.D0 &&
           a.x_R == x.x_R && a.T == x.T && a.c_ion == x.c_ion && a.eps_M == x.eps_M;
}

bool operator==(const DeviceParams& a, const DeviceParams& x) {
    return a.W == x.W && a.t_s == x.t_s && a.L_eff == x.L_eff && a.t_ox == x.t_ox &&
           a.eps_ox == x.eps_ox && a.eps_SiNW == x.eps_SiNW && a.V_fb == x.V_fb &&
           a.N_A_dop == x.N_A_dop && a.n_i == x.n_i && a.mu_p == x.mu_p &&
           a.V_SD == x.V_SD && a.V_ov == x.V_ov && a.p == x.p &&
           a.lambda_tun == x.lambda_tun && a.N_ot == x.N_ot && a.alpha_s == x.alpha_s;
}

bool operator==(const LigandParams& a, const LigandParams& x) {
    return a.k1 == x.k1 && a.k_minus1 == x.k_minus1 && a.N_e == x.N_e &&
           a.rho_SR == x.rho_SR && a.l_SR == x.l_SR && a.N_m_levels == x.N_m_levels &&
           a.K_max == x.K_max;
}

bool operator==(const BandConfig& a, const BandConfig& x) {
    return a.f_min == x.f_min && a.f_max == x.f_max && a.n_points == x.n_points;
}

bool operator==(const ParamBundle& a, const ParamBundle& x) {
    return a.channel == x.channel && a.device == x.device && a.ligand == x.ligand &&
           a.band == x.band;
}

} // namespace finlink
