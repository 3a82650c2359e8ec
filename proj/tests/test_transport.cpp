#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "finlink/params.hpp"
#include "finlink/transport.hpp"

using namespace finlink;

// golden values: direct single-expression evaluation of the dispersion and
// received-signal formulas at the default parameters
namespace {
constexpr double golden_D_eff = 2.0011983082706767e-10;
constexpr double golden_rho_R = 2.2156823340086764e19; // N_m = 5e5
} // namespace

TEST_CASE("effective diffusion") {
    ChannelParams ch = defaults().channel;
    CHECK(effective_diffusion(ch) == doctest::Approx(golden_D_eff).epsilon(1e-13));

    SUBCASE("u = 0 collapses to the intrinsic coefficient exactly") {
        ch.u = 0.0;
        CHECK(effective_diffusion(ch) == ch.D0);
    }

    SUBCASE("enhancement vanishes monotonically as D0 grows") {
        ChannelParams a = defaults().channel;
        double prev = effective_diffusion(a) / a.D0;
        CHECK(prev > 1.0);
        for (int i = 0; i < 4; ++i) {
            a.D0 *= 10.0;
            const double ratio = effective_diffusion(a) / a.D0;
            CHECK(ratio < prev);
            CHECK(ratio >= 1.0);
            prev = ratio;
        }
    }

    SUBCASE("symmetric under h <-> l exchange, bit for bit") {
        ChannelParams a = defaults().channel;
        ChannelParams s = a;
        std::swap(s.h_ch, s.l_ch);
        CHECK(effective_diffusion(a) == effective_diffusion(s));
        a.h_ch = 1.7e-6;
        a.l_ch = 42.3e-6;
        s = a;
        std::swap(s.h_ch, s.l_ch);
        CHECK(effective_diffusion(a) == effective_diffusion(s));
    }
}

TEST_CASE("concentration profile") {
    const ChannelParams ch = defaults().channel;
    const ConcentrationProfile p = make_profile(ch, 5e5);

    SUBCASE("linearity: zero release means zero everywhere") {
        const ConcentrationProfile z = make_profile(ch, 0.0);
        CHECK(concentration(z, 0.0, 10.0) == 0.0);
        CHECK(concentration(z, 1e-3, 100.0) == 0.0);
    }

    SUBCASE("peak value at x = u t") {
        const double t = 25.0;
        const double peak = (p.N_m / p.A_ch) /
                            std::sqrt(4.0 * std::numbers::pi * p.D_eff * t);
        CHECK(concentration(p, p.u * t, t) == doctest::Approx(peak).epsilon(1e-12));
        CHECK(concentration(p, p.u * t + 1e-5, t) < peak);
    }

    SUBCASE("the release instant is not point-evaluable") {
        CHECK_THROWS_AS(concentration(p, 0.0, 0.0), std::domain_error);
        CHECK_THROWS_AS(concentration(p, 0.0, -1.0), std::domain_error);
    }

    SUBCASE("mass conservation under quadrature") {
        // Simpson over +-12 standard deviations at t = 50 s
        const double t = 50.0;
        const double sigma = std::sqrt(2.0 * p.D_eff * t);
        const double lo = p.u * t - 12.0 * sigma;
        const double hi = p.u * t + 12.0 * sigma;
        const int n = 20001;
        const double h = (hi - lo) / (n - 1);
        double acc = concentration(p, lo, t) + concentration(p, hi, t);
        for (int i = 1; i < n - 1; ++i)
            acc += concentration(p, lo + i * h, t) * (i % 2 == 1 ? 4.0 : 2.0);
        const double integral = acc * h / 3.0;
        CHECK(integral * p.A_ch == doctest::Approx(p.N_m).epsilon(1e-6));
    }
}

TEST_CASE("propagation delay") {
    ChannelParams ch = defaults().channel;
    CHECK(propagation_delay(ch) == 100.0);
    ch.x_R = 1e-2;
    CHECK(propagation_delay(ch) == doctest::Approx(1000.0).epsilon(1e-12));
    ch.u = 0.0;
    CHECK_THROWS_AS(propagation_delay(ch), std::domain_error);
}

TEST_CASE("received concentration") {
    const ChannelParams ch = defaults().channel;
    CHECK(received_concentration(ch, 0.0) == 0.0);
    CHECK(received_concentration(ch, 5e5) == doctest::Approx(golden_rho_R).epsilon(1e-12));

    SUBCASE("equals the profile sampled at (x_R, t_D)") {
        const ConcentrationProfile p = make_profile(ch, 5e5);
        const double at_peak = concentration(p, ch.x_R, propagation_delay(ch));
        CHECK(received_concentration(ch, 5e5) == doctest::Approx(at_peak).epsilon(1e-12));
    }

    SUBCASE("attenuation follows 1/sqrt(d) over two decades") {
        ChannelParams a = ch;
        a.x_R = 1e-4;
        const double ref = received_concentration(a, 5e5) * std::sqrt(a.x_R);
        for (int i = 1; i < 40; ++i) {
            a.x_R = 1e-4 * std::pow(100.0, i / 39.0);
            const double v = received_concentration(a, 5e5) * std::sqrt(a.x_R);
            CHECK(v == doctest::Approx(ref).epsilon(1e-9));
        }
    }

    SUBCASE("monotone in N_m and in dispersion") {
        CHECK(received_concentration(ch, 1e6) > received_concentration(ch, 5e5));
        ChannelParams slow = ch;
        slow.D0 *= 4.0; // raises D_eff, spreads the pulse
        CHECK(received_concentration(slow, 5e5) < received_concentration(ch, 5e5));
    }
}
