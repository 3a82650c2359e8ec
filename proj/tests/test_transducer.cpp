#include <doctest.h>

#include <cmath>

#include "finlink/constants.hpp"
#include "finlink/params.hpp"
#include "finlink/transducer.hpp"

using namespace finlink;

// golden values: direct evaluation of the screening / capacitance formulas
namespace {
constexpr double golden_lambda_D = 1.756153464769804e-9;
constexpr double golden_q_eff = 5.1299481886568823e-20;
constexpr double golden_C_OX = 4.537967051053674e-15;
constexpr double golden_C_DL = 1.033615146304656e-13;
constexpr double golden_C_NW = 6.653986392344825e-15;
constexpr double golden_C_eq = 1.0605948609356448e-13;
constexpr double golden_Psi_L = 1.4510578103682211e-6;
} // namespace

TEST_CASE("Debye length") {
    ChannelParams ch = defaults().channel;
    CHECK(debye_length(ch) == doctest::Approx(golden_lambda_D).epsilon(1e-13));
    CHECK(debye_length(ch) == doctest::Approx(1.76e-9).epsilon(5e-3)); // 3 s.f.

    SUBCASE("inverse square root of ionic strength") {
        ChannelParams salty = ch;
        salty.c_ion *= 4.0;
        CHECK(debye_length(salty) ==
              doctest::Approx(0.5 * debye_length(ch)).epsilon(1e-13));
    }

    SUBCASE("physiological strength shrinks by sqrt(5)") {
        ChannelParams phys = ch;
        phys.c_ion = 150.0;
        CHECK(debye_length(phys) ==
              doctest::Approx(golden_lambda_D / std::sqrt(5.0)).epsilon(1e-13));
    }
}

TEST_CASE("effective charge") {
    CHECK(effective_charge(golden_lambda_D, 0.0) == phys::q_elementary);
    CHECK(effective_charge(golden_lambda_D, golden_lambda_D) ==
          doctest::Approx(phys::q_elementary / std::exp(1.0)).epsilon(1e-15));
    CHECK(effective_charge(golden_lambda_D, golden_lambda_D) ==
          doctest::Approx(5.894e-20).epsilon(1e-3));
    CHECK(effective_charge(golden_lambda_D, defaults().ligand.l_SR) ==
          doctest::Approx(golden_q_eff).epsilon(1e-13));
}

TEST_CASE("capacitance stack") {
    const ParamBundle b = defaults();
    const TransducerState s = capacitance_stack(b.device, b.channel, debye_length(b.channel));
    CHECK(s.C_OX == doctest::Approx(golden_C_OX).epsilon(1e-13));
    CHECK(s.C_DL == doctest::Approx(golden_C_DL).epsilon(1e-13));
    CHECK(s.C_NW == doctest::Approx(golden_C_NW).epsilon(1e-13));
    CHECK(s.C_eq == doctest::Approx(golden_C_eq).epsilon(1e-13));

    SUBCASE("every capacitance is linear in gate area") {
        DeviceParams big = b.device;
        big.L_eff *= 2.0;
        const TransducerState d = capacitance_stack(big, b.channel, s.lambda_D);
        CHECK(d.C_OX == doctest::Approx(2.0 * s.C_OX).epsilon(1e-13));
        CHECK(d.C_DL == doctest::Approx(2.0 * s.C_DL).epsilon(1e-13));
        CHECK(d.C_NW == doctest::Approx(2.0 * s.C_NW).epsilon(1e-13));
        CHECK(d.C_eq == doctest::Approx(2.0 * s.C_eq).epsilon(1e-13));
    }

    SUBCASE("thick oxide leaves only the diffusion layer") {
        DeviceParams thick = b.device;
        thick.t_ox = 1e3;
        const TransducerState d = capacitance_stack(thick, b.channel, s.lambda_D);
        CHECK(d.C_eq == doctest::Approx(d.C_DL).epsilon(1e-6));
    }

    SUBCASE("series term keeps C_eq above C_DL") {
        for (double t_ox = 1e-10; t_ox < 1e-6; t_ox *= 3.0) {
            DeviceParams dev = b.device;
            dev.t_ox = t_ox;
            const TransducerState d = capacitance_stack(dev, b.channel, s.lambda_D);
            CHECK(d.C_eq > d.C_DL);
        }
    }
}

TEST_CASE("ligand potential") {
    const ParamBundle b = defaults();
    const TransducerState s = transduce(b.channel, b.device, b.ligand);
    CHECK(s.Psi_L == doctest::Approx(golden_Psi_L).epsilon(1e-13));
    CHECK(ligand_potential(s, 0.0) == 0.0);
    CHECK(ligand_potential(s, 6.0) == doctest::Approx(2.0 * s.Psi_L).epsilon(1e-15));

    SUBCASE("charge balance Q = C V") {
        CHECK(s.Psi_L * s.C_eq ==
              doctest::Approx(s.q_eff * b.ligand.N_e).epsilon(1e-13));
    }

    SUBCASE("screened monotonically by ionic strength") {
        double prev = 1e9;
        for (double c = 10.0; c <= 1000.0; c *= 2.0) {
            ParamBundle mod = b;
            mod.channel.c_ion = c;
            const double psi = transduce(mod.channel, mod.device, mod.ligand).Psi_L;
            CHECK(psi < prev);
            prev = psi;
        }
    }

    SUBCASE("screened monotonically by receptor length") {
        double prev = 1e9;
        for (double l = 0.0; l <= 10e-9; l += 1e-9) {
            ParamBundle mod = b;
            mod.ligand.l_SR = l;
            const double psi = transduce(mod.channel, mod.device, mod.ligand).Psi_L;
            CHECK(psi < prev);
            prev = psi;
        }
    }
}
