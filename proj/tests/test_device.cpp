#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "finlink/constants.hpp"
#include "finlink/device.hpp"
#include "finlink/params.hpp"

using namespace finlink;

namespace {

// bisection oracle on w e^w - x, independent of the implementation under test
double lambert_bisect(double x) {
    if (x == 0.0) return 0.0;
    double lo = 0.0, hi = 1.0;
    while (hi * std::exp(hi) < x) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mid * std::exp(mid) < x ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// goldens: direct evaluation with oracle-checked Lambert W at the defaults
constexpr double golden_V_t = 0.4551417540765061;
constexpr double golden_I_D = 3.0132453113520218e-6;
constexpr double golden_g = 9.485502602400198e-6;
constexpr double golden_S_IF_1Hz = 3.810316119190673e-22;
constexpr double golden_vt2 = 0.05170399957287107; // 2kT/q at 300 K

double fd_transconductance(const DeviceParams& dev, double V_ov, double T, double h) {
    return (drain_current(dev, V_ov + h, T) - drain_current(dev, V_ov - h, T)) /
           (2.0 * h);
}

} // namespace

TEST_CASE("Lambert W") {
    CHECK(lambert_w(0.0) == 0.0);
    CHECK(lambert_w(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lambert_w(1.0) == doctest::Approx(0.5671432904097837).epsilon(1e-13));
    CHECK(lambert_w(1.0) == doctest::Approx(lambert_bisect(1.0)).epsilon(1e-13));
    CHECK_THROWS_AS(lambert_w(-1e-12), std::domain_error);

    SUBCASE("defining identity across forty decades") {
        for (int i = 0; i <= 100; ++i) {
            const double x = std::pow(10.0, -20.0 + 40.0 * i / 100.0);
            const double w = lambert_w(x);
            CHECK(std::abs(w * std::exp(w) - x) <= 1e-12 * x);
        }
    }

    SUBCASE("log-domain form agrees and extends past the exponent range") {
        CHECK(lambert_w_of_exp(std::log(5.0)) ==
              doctest::Approx(lambert_w(5.0)).epsilon(1e-14));
        const double w = lambert_w_of_exp(1000.0); // e^1000 overflows a double
        CHECK(w + std::log(w) == doctest::Approx(1000.0).epsilon(1e-14));
    }
}

TEST_CASE("threshold voltage") {
    const DeviceParams dev = defaults().device;
    const double T = 300.0;
    CHECK(threshold_voltage(dev, T) == doctest::Approx(golden_V_t).epsilon(1e-12));
    CHECK(2.0 * phys::k_boltzmann * T / phys::q_elementary ==
          doctest::Approx(golden_vt2).epsilon(1e-12));

    SUBCASE("tenfold oxide shifts by -2kT/q ln 10") {
        DeviceParams thick = dev;
        thick.t_ox *= 10.0;
        const double shift = threshold_voltage(thick, T) - threshold_voltage(dev, T);
        CHECK(shift == doctest::Approx(-golden_vt2 * std::log(10.0)).epsilon(1e-9));
    }

    SUBCASE("doping inputs are mandatory") {
        DeviceParams undoped = dev;
        undoped.N_A_dop = 0.0;
        CHECK_THROWS_AS(threshold_voltage(undoped, T), std::domain_error);
    }
}

TEST_CASE("drain current") {
    const DeviceParams dev = defaults().device;
    const double T = 300.0;
    CHECK(drain_current(dev, dev.V_ov, T) == doctest::Approx(golden_I_D).epsilon(1e-12));

    SUBCASE("no source-drain bias, no current") {
        DeviceParams open = dev;
        open.V_SD = 0.0;
        CHECK(drain_current(open, open.V_ov, T) == 0.0);
    }

    SUBCASE("strictly increasing in the overhead voltage") {
        double prev = 0.0;
        for (double v = 0.11; v <= 0.8; v += 0.03) {
            const double i = drain_current(dev, v, T);
            CHECK(i > prev);
            prev = i;
        }
    }

    SUBCASE("strictly increasing in the drain bias inside the linear region") {
        double prev = 0.0;
        for (int k = 1; k <= 20; ++k) {
            DeviceParams d = dev;
            d.V_SD = dev.V_ov * k / 20.0;
            const double i = drain_current(d, d.V_ov, T);
            CHECK(i > prev);
            prev = i;
        }
    }

    SUBCASE("region violations are rejected") {
        CHECK_THROWS_AS(drain_current(dev, 0.05, T), std::domain_error); // V_SD > V_ov
        CHECK_THROWS_AS(drain_current(dev, -0.1, T), std::domain_error);
    }
}

TEST_CASE("transconductance") {
    const DeviceParams dev = defaults().device;
    const double T = 300.0;
    const double g = transconductance(dev, dev.V_ov, T);
    CHECK(g == doctest::Approx(golden_g).epsilon(1e-12));

    SUBCASE("matches the finite difference of the current") {
        CHECK(g == doctest::Approx(fd_transconductance(dev, dev.V_ov, T, 1e-6))
                       .epsilon(1e-6));
    }

    SUBCASE("flat current at V_SD = 0 gives zero slope") {
        DeviceParams open = dev;
        open.V_SD = 0.0;
        CHECK(transconductance(open, open.V_ov, T) == 0.0);
        CHECK(std::abs(fd_transconductance(open, open.V_ov, T, 1e-6)) < 1e-18);
    }

    SUBCASE("linear in the effective width") {
        DeviceParams tall = dev;
        tall.t_s = 3.0 * dev.t_s;
        const double ratio = tall.effective_width() / dev.effective_width();
        CHECK(transconductance(tall, dev.V_ov, T) ==
              doctest::Approx(ratio * g).epsilon(1e-12));
        CHECK(drain_current(tall, dev.V_ov, T) ==
              doctest::Approx(ratio * golden_I_D).epsilon(1e-12));
    }
}

TEST_CASE("flicker noise") {
    const DeviceParams dev = defaults().device;
    const double T = 300.0;
    const double g = transconductance(dev, dev.V_ov, T);

    CHECK(flicker_psd(dev, T, g, 1.0) == doctest::Approx(golden_S_IF_1Hz).epsilon(1e-12));
    CHECK(flicker_psd(dev, T, g, 2.0) == flicker_psd(dev, T, g, 1.0) / 2.0);
    CHECK(flicker_psd(dev, T, g, -7.0) == flicker_psd(dev, T, g, 7.0));
    CHECK_THROWS_AS(flicker_psd(dev, T, g, 0.0), std::domain_error);

    SUBCASE("exact 1/f slope") {
        const double s = std::log(flicker_psd(dev, T, g, 100.0) /
                                  flicker_psd(dev, T, g, 0.01)) /
                         std::log(100.0 / 0.01);
        CHECK(s == doctest::Approx(-1.0).epsilon(1e-12));
    }
}

TEST_CASE("bias point") {
    const ParamBundle b = defaults();
    const OperatingPoint op = bias_point(b.device, b.channel.T);
    CHECK(op.region == Region::linear);
    CHECK(op.I_D == doctest::Approx(golden_I_D).epsilon(1e-12));
    CHECK(op.g_FET == doctest::Approx(golden_g).epsilon(1e-12));

    DeviceParams bad = b.device;
    bad.V_SD = 0.5; // above V_ov
    const OperatingPoint inv = bias_point(bad, b.channel.T);
    CHECK(inv.region == Region::invalid);
    CHECK(std::isnan(inv.I_D));
}
