#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "oracles/perturbation.hpp"
#include "weylsector/errors.hpp"
#include "weylsector/spectra.hpp"

using namespace weylsector;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

PotentialSpec cosine(double c, double a) { return PotentialSpec::from_nonnegative(a, {{1, Complex(c, 0.0)}}); }

}  // namespace

TEST_CASE("circle spectrum examples") {
    auto r0 = circle_spectrum(0.0, 1.0, 1);
    REQUIRE(r0.levels.size() == 3);
    CHECK(r0.levels[0] == 0.0);
    CHECK(r0.levels[1] == 0.5);
    CHECK(r0.levels[2] == 0.5);
    CHECK(r0.gap == 0.5);

    auto r1 = circle_spectrum(0.25, 1.0, 3);
    CHECK(r1.levels[0] == 0.03125);
    CHECK(r1.levels[1] == 0.28125);
    CHECK(r1.gap == 0.25);

    auto r2 = circle_spectrum(0.5, 1.0, 3);
    CHECK(r2.levels[0] == 0.125);
    CHECK(r2.levels[1] == 0.125);
    CHECK(r2.gap == 0.0);
    CHECK(std::is_sorted(r2.levels.begin(), r2.levels.end()));

    CHECK_THROWS_AS(circle_spectrum(0.0, 1.0, 0), InputError);
    CHECK_THROWS_AS(circle_spectrum(0.0, 0.0, 1), InputError);
}

TEST_CASE("bloch hamiltonian examples") {
    auto h = bloch_hamiltonian(0.0, PotentialSpec::free(kTwoPi), 1.0, 1);
    REQUIRE(h.rows() == 3);
    CHECK(h(0, 0).real() == doctest::Approx(0.5));
    CHECK(h(1, 1).real() == 0.0);
    CHECK(h(2, 2).real() == doctest::Approx(0.5));
    CHECK(h(0, 1) == Complex(0.0));

    auto hc = bloch_hamiltonian(0.1, cosine(0.3, 1.0), 1.0, 3);
    for (int i = 0; i + 1 < 7; ++i) {
        CHECK(hc(i + 1, i) == Complex(0.3));
        CHECK(hc(i, i + 1) == Complex(0.3));
    }
    CHECK(hc(2, 0) == Complex(0.0));
    CHECK(hc == hc.adjoint());

    auto complex_v = PotentialSpec::from_nonnegative(2.0, {{0, 0.4}, {1, Complex(0.1, -0.2)}, {3, Complex(0, 0.05)}});
    auto hz = bloch_hamiltonian(0.3, complex_v, 1.7, 4);
    CHECK(hz == hz.adjoint());
    CHECK(hz(4, 4).real() == doctest::Approx(std::pow(kTwoPi * 0.3 / 2.0, 2) / 3.4 + 0.4));

    CHECK_THROWS_AS(bloch_hamiltonian(0.0, complex_v, 1.0, 2), InputError);
}

TEST_CASE("potential validation and file format") {
    CHECK_THROWS_AS(PotentialSpec(1.0, {{1, Complex(0.1, 0.0)}}), InputError);
    CHECK_NOTHROW(PotentialSpec(1.0, {{1, Complex(0.1, 0.2)}, {-1, Complex(0.1, -0.2)}}));
    CHECK_THROWS_AS(PotentialSpec::from_nonnegative(1.0, {{-1, 1.0}}), InputError);
    CHECK_THROWS_AS(PotentialSpec::from_nonnegative(1.0, {{0, Complex(0, 1)}}), InputError);
    CHECK_THROWS_AS(PotentialSpec::free(0.0), InputError);

    auto v = PotentialSpec::parse("# cosine\n0 0.5 0\n\n2 0.1 -0.2  # second harmonic\n", 1.0);
    CHECK(v.coefficient(0) == Complex(0.5));
    CHECK(v.coefficient(2) == Complex(0.1, -0.2));
    CHECK(v.coefficient(-2) == Complex(0.1, 0.2));
    CHECK(v.max_harmonic() == 2);
    CHECK_THROWS_AS(PotentialSpec::parse("1 0.1\n", 1.0), InputError);
    CHECK_THROWS_AS(PotentialSpec::parse("1 0.1 0 7\n", 1.0), InputError);
    CHECK_THROWS_AS(PotentialSpec::parse("1 0.1 0\n1 0.2 0\n", 1.0), InputError);

    auto path = std::filesystem::temp_directory_path() / "weylsector_potential_test.txt";
    {
        std::ofstream f(path);
        f << "1 0.05 0\n";
    }
    CHECK(PotentialSpec::load(path, 1.0).coefficient(-1) == Complex(0.05));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(PotentialSpec::load(path, 1.0), InputError);
}

TEST_CASE("free bands equal the circle closed form") {
    auto grid = theta_grid(32);
    auto bands = bloch_bands(grid, PotentialSpec::free(kTwoPi), 1.0, 64, 5);
    REQUIRE(bands.size() == 32);
    for (const auto& r : bands) {
        auto exact = circle_spectrum(r.theta_turns, 1.0, 4);
        for (int b = 0; b < 5; ++b) CHECK(std::abs(r.levels[b] - exact.levels[b]) < 1e-10);
        CHECK(r.residual_max <= 1e-9 * (1.0 + std::abs(r.levels.back())));
    }
}

TEST_CASE("cosine potential gap at the zone edge") {
    for (double c : {0.02, 0.05}) {
        auto v = cosine(c, 1.0);
        double gap32 = bloch_bands({0.5}, v, 1.0, 32, 2)[0].gap;
        double gap128 = bloch_bands({0.5}, v, 1.0, 128, 2)[0].gap;
        double oracle = wtest::lowdin_cosine_gap(c, 1.0, 1.0);
        CHECK(std::abs(gap32 - 2 * c) <= 0.05 * 2 * c);
        CHECK(std::abs(gap32 - gap128) < 1e-10);
        CHECK(std::abs(gap32 - oracle) < 1e-6);
    }
}

TEST_CASE("ground state lies in the theta = 0 sector") {
    for (const auto& v : {cosine(0.05, 1.0), cosine(0.4, 1.0), PotentialSpec::from_nonnegative(2.0, {{1, Complex(0.2, 0.1)}, {2, -0.3}})}) {
        auto bands = bloch_bands(theta_grid(64), v, 1.0, 32, 1);
        auto best = std::min_element(bands.begin(), bands.end(),
                                     [](const auto& x, const auto& y) { return x.levels[0] < y.levels[0]; });
        CHECK(best->theta_turns == 0.0);
    }
}

TEST_CASE("property: truncation convergence") {
    auto v = cosine(0.05, 1.0);
    for (double t : {0.0, 0.2, 0.5, 0.9}) {
        auto coarse = bloch_bands({t}, v, 1.0, 32, 5)[0];
        auto fine = bloch_bands({t}, v, 1.0, 64, 5)[0];
        for (int m = 0; m < 5; ++m) CHECK(std::abs(coarse.levels[m] - fine.levels[m]) <= 1e-8);
    }
}

TEST_CASE("property: spectral periodicity in theta") {
    auto v = PotentialSpec::from_nonnegative(1.0, {{1, 0.3}, {2, Complex(0.05, 0.1)}});
    for (double t : {0.0, 0.13, 0.5, 0.77}) {
        auto here = bloch_bands({t}, v, 1.0, 64, 6)[0].levels;
        auto next = bloch_bands({t + 1.0}, v, 1.0, 64, 6)[0].levels;
        std::sort(here.begin(), here.end());
        std::sort(next.begin(), next.end());
        for (std::size_t i = 0; i < here.size(); ++i) CHECK(std::abs(here[i] - next[i]) <= 1e-9 * (1.0 + here[i]));
    }
}

TEST_CASE("property: eigensolver contract") {
    auto v = PotentialSpec::from_nonnegative(0.8, {{0, -0.2}, {1, Complex(0.3, 0.2)}, {4, 0.1}});
    for (const auto& r : bloch_bands(theta_grid(16), v, 0.7, 40, 8)) {
        CHECK(std::is_sorted(r.levels.begin(), r.levels.end()));
        CHECK(r.gap >= 0.0);
        CHECK(r.truncation == 40);
        CHECK(r.residual_max <= 1e-9 * (1.0 + std::abs(r.levels.back())));
    }
    CHECK_THROWS_AS(bloch_bands({0.0}, v, 1.0, 4, 10), InputError);
}

TEST_CASE("gap report examples") {
    auto c = presets::circle();
    auto broken = gap_report(c, 0.25, std::nullopt, 1.0, Rational(1, 2));
    CHECK(broken.broken);
    CHECK(broken.gap == 0.25);
    CHECK(broken.conclusion == "SSB with gap");
    CHECK(broken.sector_shift.str() == "1/2");

    auto inner = gap_report(c, 0.25, std::nullopt, 1.0, Rational(1));
    CHECK_FALSE(inner.broken);
    CHECK(inner.gap == 0.25);
    CHECK(inner.conclusion == "no breaking (inner symmetry)");

    auto edge = gap_report(c, 0.5, std::nullopt, 1.0, Rational(1, 2));
    CHECK(edge.broken);
    CHECK(edge.gap == 0.0);
    CHECK(edge.conclusion == "SSB, degenerate sector edge");

    auto bl = presets::bloch(1.0);
    auto with_v = gap_report(bl, 0.5, cosine(0.05, 1.0), 1.0, Rational(1, 2));
    CHECK(with_v.broken);
    CHECK(with_v.gap == doctest::Approx(0.1).epsilon(0.05));
    CHECK_THROWS_AS(gap_report(bl, 0.5, cosine(0.05, 2.0), 1.0, Rational(1, 2)), InputError);
    CHECK_THROWS_AS(gap_report(presets::two_body(), 0.5, std::nullopt, 1.0, Rational(1, 2)), InputError);
}

TEST_CASE("property: gap and breaking coexist") {
    auto c = presets::circle();
    for (double t : {0.1, 0.2, 0.3, 0.4}) {
        auto r = gap_report(c, t, std::nullopt, 1.0, Rational(1, 2));
        CHECK(r.broken);
        CHECK(r.gap > 0.0);
        CHECK(r.conclusion == "SSB with gap");
        auto free_bloch = gap_report(presets::bloch(kTwoPi), t, std::nullopt, 1.0, Rational(1, 2));
        CHECK(free_bloch.gap == doctest::Approx(r.gap));
    }
}
