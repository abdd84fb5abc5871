#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ris/expansion.hpp"
#include "testutil.hpp"

using ris::ArrayGeometry;
using ris::cplx;
using ris::DualPolConfig;
using ris::ExpandedConfig;
using ris::PhaseVector;
using ris::Polarization;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

DualPolConfig pair_config(const ris::GolayPair& pair) {
    return DualPolConfig(pair.u(), pair.v());
}

}  // namespace

TEST_CASE("smallest expansion by hand") {
    const DualPolConfig primary = pair_config(ris::golay_seed(1));
    const ExpandedConfig grown = ris::expand(primary, ris::golay_seed(1));
    REQUIRE(grown.config.m_per_pol() == 2);
    CHECK(std::abs(grown.config.phi_h()[0] - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(grown.config.phi_h()[1] - cplx(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(grown.config.phi_v()[0] - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(grown.config.phi_v()[1] - cplx(1.0, 0.0)) < 1e-15);

    const ArrayGeometry geom{2, 0.5, 0.3};
    ris::SplitMix64 rng{1};
    for (int i = 0; i < 32; ++i) {
        CHECK(ris::pdaf(grown.config, geom, testutil::uniform(rng, -kHalfPi, kHalfPi)) ==
              doctest::Approx(4.0));
    }
}

TEST_CASE("expansion block layout") {
    // primary of length 2 and pair of length 2, checked entry by entry
    const std::vector<double> ph{0.1, 0.2};
    const std::vector<double> pvv{0.3, 0.4};
    const DualPolConfig primary(PhaseVector::from_phases(ph), PhaseVector::from_phases(pvv));
    const ris::GolayPair pair = ris::golay_seed(2);  // u=[1,1], v=[1,-1]
    const ExpandedConfig grown = ris::expand(primary, pair);
    REQUIRE(grown.config.m_per_pol() == 8);
    REQUIRE(grown.primary_len == 2);
    REQUIRE(grown.golay_len == 2);

    const auto& u = pair.u();
    const auto& v = pair.v();
    const auto& h = primary.phi_h();
    const auto& w = primary.phi_v();
    // top half: u (x) phi_H; bottom half: -v (x) reverse(conj(phi_V))
    for (std::size_t n = 0; n < 2; ++n) {
        for (std::size_t m = 0; m < 2; ++m) {
            CHECK(std::abs(grown.config.phi_h()[2 * n + m] - u[n] * h[m]) < 1e-15);
            CHECK(std::abs(grown.config.phi_h()[4 + 2 * n + m] -
                           (-v[n] * std::conj(w[1 - m]))) < 1e-15);
            CHECK(std::abs(grown.config.phi_v()[2 * n + m] - u[n] * w[m]) < 1e-15);
            CHECK(std::abs(grown.config.phi_v()[4 + 2 * n + m] - v[n] * std::conj(h[1 - m])) <
                  1e-15);
        }
    }
}

TEST_CASE("expanding a complementary configuration stays complementary") {
    for (std::size_t primary_len : {1u, 2u, 3u, 10u}) {
        for (std::size_t pair_len : {1u, 2u, 3u}) {
            const ExpandedConfig grown =
                ris::expand(pair_config(ris::golay_seed(primary_len)), ris::golay_seed(pair_len));
            CHECK(grown.config.m_per_pol() == 2 * primary_len * pair_len);
            CHECK(ris::is_golay(grown.config.phi_h(), grown.config.phi_v()).has_value());
        }
    }
}

TEST_CASE("verification report for the length-10/length-3 expansion") {
    const DualPolConfig primary = pair_config(ris::golay_seed(10));
    const ris::GolayPair pair = ris::golay_seed(3);
    const ExpandedConfig grown = ris::expand(primary, pair);
    REQUIRE(grown.config.m_per_pol() == 60);

    const ArrayGeometry geom{10, 0.5, kPi / 3.0};
    const ris::ExpansionReport report = ris::verify_expansion(primary, pair, grown, geom);
    CHECK(report.ok);
    CHECK(report.max_rel_deviation < 1e-9);
    CHECK(report.max_cross_term < 1e-9);

    // the expanded pattern sits 10log10(2N) above the primary at every angle
    const ArrayGeometry grown_geom{60, 0.5, kPi / 3.0};
    const double offset = 10.0 * std::log10(6.0);
    for (int i = 0; i < 513; ++i) {
        const double angle = -kHalfPi + kPi * i / 512.0;
        const double here = 10.0 * std::log10(ris::pdaf(grown.config, grown_geom, angle));
        const double base = 10.0 * std::log10(ris::pdaf(primary, geom, angle));
        CHECK(here - base == doctest::Approx(offset).epsilon(1e-9));
    }
}

TEST_CASE("trivial pair doubles the pattern exactly") {
    // works for any primary, complementary or not
    ris::SplitMix64 rng{77};
    const DualPolConfig primary(testutil::random_unimodular(rng, 5),
                                testutil::random_unimodular(rng, 5));
    const ris::GolayPair one = ris::golay_seed(1);
    const ExpandedConfig grown = ris::expand(primary, one);
    const ArrayGeometry geom{5, 0.5, 0.1};
    const ris::ExpansionReport report = ris::verify_expansion(primary, one, grown, geom);
    CHECK(report.ok);
    CHECK(report.max_rel_deviation < 1e-9);
}

TEST_CASE("expansion of a null-bearing primary still verifies") {
    // a steered primary has deep pattern nulls; the scaled-pattern check
    // must not blow up on the 0/0 angles
    const ArrayGeometry geom{8, 0.5, 0.2};
    const DualPolConfig primary = ris::config_steered(geom, -0.4);
    const ris::GolayPair pair = ris::golay_seed(3);
    const ris::ExpandedConfig grown = ris::expand(primary, pair);
    const ris::ExpansionReport report = ris::verify_expansion(primary, pair, grown, geom);
    CHECK(report.ok);
    CHECK(report.max_rel_deviation < 1e-9);

    // and the expansion scaling holds where the pattern is live
    ArrayGeometry grown_geom = geom;
    grown_geom.m_per_pol = 48;
    CHECK(ris::pdaf(grown.config, grown_geom, -0.4) ==
          doctest::Approx(6.0 * ris::pdaf(primary, geom, -0.4)).epsilon(1e-12));
}

TEST_CASE("corrupted expansion is caught") {
    const DualPolConfig primary = pair_config(ris::golay_seed(3));
    const ris::GolayPair pair = ris::golay_seed(2);
    const ExpandedConfig good = ris::expand(primary, pair);

    std::vector<cplx> tampered = good.config.phi_h().values();
    tampered[4] = -tampered[4];
    const ExpandedConfig bad{
        DualPolConfig(PhaseVector::from_values(tampered), good.config.phi_v()),
        good.primary_len, good.golay_len};

    const ArrayGeometry geom{3, 0.5, 0.0};
    const ris::ExpansionReport report = ris::verify_expansion(primary, pair, bad, geom);
    CHECK_FALSE(report.ok);
    CHECK(report.max_rel_deviation > 1e-3);
}

TEST_CASE("composing two expansions multiplies the scaling") {
    const DualPolConfig primary = pair_config(ris::golay_seed(3));
    const ris::GolayPair first = ris::golay_seed(2);
    const ris::GolayPair second = ris::golay_seed(3);

    const ExpandedConfig once = ris::expand(primary, first);
    const ExpandedConfig twice = ris::expand(once.config, second);
    REQUIRE(twice.config.m_per_pol() == 2 * 12 * 3);

    const ArrayGeometry base{3, 0.5, kPi / 6.0};
    ArrayGeometry mid = base;
    mid.m_per_pol = static_cast<int>(once.config.m_per_pol());
    ArrayGeometry top = base;
    top.m_per_pol = static_cast<int>(twice.config.m_per_pol());

    const double scale = (2.0 * 2.0) * (2.0 * 3.0);
    for (int i = 0; i < 193; ++i) {
        const double angle = -kHalfPi + kPi * i / 192.0;
        const double lo = ris::pdaf(primary, base, angle);
        const double hi = ris::pdaf(twice.config, top, angle);
        CHECK(hi / lo == doctest::Approx(scale).epsilon(1e-9));
    }
    // flat preserved since the primary is complementary
    CHECK(ris::is_golay(twice.config.phi_h(), twice.config.phi_v()).has_value());
}

TEST_CASE("order reversal equals a phase-scaled conjugate of the response") {
    ris::SplitMix64 rng{13};
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = static_cast<int>(1 + rng.next() % 64);
        const ArrayGeometry geom{m, testutil::uniform(rng, 0.1, 1.0),
                                 testutil::uniform(rng, -kHalfPi, kHalfPi)};
        const double angle = testutil::uniform(rng, -kHalfPi, kHalfPi);
        const double psi = ris::relative_phase(geom, angle);
        const std::vector<cplx> a = ris::equiv_response(geom, angle, Polarization::H);
        const cplx scale = std::polar(1.0, -2.0 * (m - 1) * psi);
        for (int i = 0; i < m; ++i) {
            CHECK(std::abs(a[static_cast<std::size_t>(m - 1 - i)] -
                           scale * std::conj(a[static_cast<std::size_t>(i)])) <= 1e-12);
        }
    }
}

TEST_CASE("conjugating both sides preserves the inner product magnitude") {
    ris::SplitMix64 rng{19};
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng.next() % 32;
        const PhaseVector phi = testutil::random_unimodular(rng, m);
        const ArrayGeometry geom{static_cast<int>(m), testutil::uniform(rng, 0.1, 1.0),
                                 testutil::uniform(rng, -kHalfPi, kHalfPi)};
        const std::vector<cplx> a =
            ris::equiv_response(geom, testutil::uniform(rng, -kHalfPi, kHalfPi), Polarization::H);
        cplx plain(0.0, 0.0);
        cplx conjugated(0.0, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            plain += phi[i] * a[i];
            conjugated += std::conj(phi[i]) * std::conj(a[i]);
        }
        CHECK(std::abs(plain) == doctest::Approx(std::abs(conjugated)).epsilon(1e-12));
    }
}

TEST_CASE("pair products and length construction") {
    const ris::GolayPair sixty = ris::golay_product(ris::golay_seed(3), ris::golay_seed(10));
    CHECK(sixty.length() == 60);

    CHECK(ris::golay_for_length(60).length() == 60);
    CHECK(ris::golay_for_length(120).length() == 120);

    CHECK_THROWS_WITH_AS(ris::golay_for_length(7), doctest::Contains("constructible sizes"),
                         std::invalid_argument);
    CHECK_THROWS_AS(ris::golay_for_length(14), std::invalid_argument);
    CHECK_THROWS_AS(ris::golay_for_length(0), std::invalid_argument);

    const std::vector<std::size_t> expected{1,  2,  3,  4,  6,  8,  10, 12, 16, 18, 20, 24,
                                            32, 36, 40, 48, 60, 64, 72, 80, 96, 108, 120};
    CHECK(ris::constructible_lengths(120) == expected);
}

TEST_CASE("every constructible length up to 120 verifies") {
    for (std::size_t len : ris::constructible_lengths(120)) {
        const ris::GolayPair pair = ris::golay_for_length(len);
        CHECK(pair.length() == len);
        CHECK(ris::is_golay(pair.u(), pair.v()).has_value());
    }
}
