#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ewwp/classical_fourier.hpp"
#include "ewwp/quantum_expectations.hpp"
#include "oracles.hpp"

using namespace ewwp;

namespace {

const WellConfig natural;

// <x> for a packet as an explicit double sum over level pairs, matrix
// elements by Simpson quadrature of the naive eigenfunctions.
double brute_force_x(double a, std::int64_t n, std::int64_t N, double t, double hbar, double mu)
{
    const std::int64_t size = 2 * N + 1;
    std::complex<double> sum = 0.0;
    for (std::int64_t j = n - N; j <= n + N; ++j) {
        for (std::int64_t k = n - N; k <= n + N; ++k) {
            const double ej = std::pow(j * oracle::pi * hbar / a, 2) / (2 * mu);
            const double ek = std::pow(k * oracle::pi * hbar / a, 2) / (2 * mu);
            sum += oracle::position_element(a, j, k, 1) * std::polar(1.0, (ej - ek) * t / hbar);
        }
    }
    return sum.real() / static_cast<double>(size);
}

}  // namespace

TEST_CASE("single stationary state")
{
    const WellConfig cfg{2.0, 3.0, 0.7};
    for (const std::int64_t n : {1, 6, 300}) {
        const PacketSpec spec{n, 0};
        const double x2 = cfg.a * cfg.a * (1.0 / 3.0 - 1.0 / (2.0 * oracle::pi * oracle::pi * n * n));
        for (const double t : {0.0, 0.2, 11.0}) {
            CHECK(exp_x(cfg, spec, t) == cfg.a / 2);
            CHECK(exp_x2(cfg, spec, t) == doctest::Approx(x2).epsilon(1e-15));
            CHECK(exp_p(cfg, spec, t) == 0.0);
        }
        const double p_n = momentum_magnitude(cfg, n);
        CHECK(exp_p2(cfg, spec) == doctest::Approx(p_n * p_n).epsilon(1e-15));
    }
}

TEST_CASE("second moment of momentum")
{
    const double p_n = momentum_magnitude(natural, 500);
    CHECK(exp_p2(natural, PacketSpec{500, 23}) ==
          doctest::Approx(p_n * p_n * (1.0 + 552.0 / 750000.0)).epsilon(1e-14));
    const PacketMoments m(natural, PacketSpec{500, 23});
    CHECK(m.p2() == exp_p2(natural, PacketSpec{500, 23}));
    CHECK(m.sample(0.0).p2_mean == m.sample(0.001).p2_mean);
}

TEST_CASE("closed forms against the quadrature oracle")
{
    const PacketSpec spec{50, 7};
    const double p_n = momentum_magnitude(natural, 50);
    auto ox = oracle_expectation(natural, spec, 0.013, ObservableKind::position);
    CHECK(ox.status == OracleStatus::ok);
    CHECK(std::abs(exp_x(natural, spec, 0.013) - ox.value) < 1e-8 * natural.a);
    auto ox2 = oracle_expectation(natural, spec, 0.007, ObservableKind::position_sq);
    CHECK(std::abs(exp_x2(natural, spec, 0.007) - ox2.value) < 1e-8 * natural.a * natural.a);
    auto op = oracle_expectation(natural, spec, 0.005, ObservableKind::momentum);
    CHECK(std::abs(exp_p(natural, spec, 0.005) - op.value) < 1e-6 * p_n);
    for (const double t : {0.0, 0.003, 0.1}) {
        auto op2 = oracle_expectation(natural, spec, t, ObservableKind::momentum_sq);
        CHECK(op2.value == doctest::Approx(exp_p2(natural, spec)).epsilon(1e-10));
    }

    SUBCASE("non-natural units")
    {
        const WellConfig cfg{2.0, 3.0, 0.5};
        const PacketSpec s{20, 5};
        const double T = classical_period(cfg, 20);
        for (const double u : {0.1, 0.37, 0.8}) {
            const double t = u * T;
            CHECK(std::abs(exp_x(cfg, s, t) -
                           oracle_expectation(cfg, s, t, ObservableKind::position).value) < 1e-8 * cfg.a);
            CHECK(std::abs(exp_x2(cfg, s, t) -
                           oracle_expectation(cfg, s, t, ObservableKind::position_sq).value) <
                  1e-8 * cfg.a * cfg.a);
            CHECK(std::abs(exp_p(cfg, s, t) -
                           oracle_expectation(cfg, s, t, ObservableKind::momentum).value) <
                  1e-6 * momentum_magnitude(cfg, 20));
        }
    }
    SUBCASE("coarse grids are flagged")
    {
        CHECK(oracle_expectation(natural, spec, 0.0, ObservableKind::position, 256).status ==
              OracleStatus::coarse_grid);
        CHECK(oracle_expectation(natural, PacketSpec{400, 10}, 0.0, ObservableKind::position, 4096)
                  .status == OracleStatus::coarse_grid);
    }
}

TEST_CASE("closed forms against matrix-element sums")
{
    const WellConfig cfg{1.5, 2.0, 0.8};
    const PacketSpec spec{30, 6};
    const double p_n = momentum_magnitude(cfg, 30);
    for (const double t : {0.0, 0.05, 0.31, 7.0}) {
        CHECK(std::abs(exp_x(cfg, spec, t) -
                       matrix_element_expectation(cfg, spec, t, ObservableKind::position)) <
              1e-12 * cfg.a);
        CHECK(std::abs(exp_x2(cfg, spec, t) -
                       matrix_element_expectation(cfg, spec, t, ObservableKind::position_sq)) <
              1e-12 * cfg.a * cfg.a);
        CHECK(std::abs(exp_p(cfg, spec, t) -
                       matrix_element_expectation(cfg, spec, t, ObservableKind::momentum)) <
              1e-11 * p_n);
    }
}

TEST_CASE("brute-force five-level packet")
{
    const WellConfig cfg{1.0, 1.0, 1.0};
    for (const double t : {0.0, 0.004, 0.03}) {
        const double expected = brute_force_x(cfg.a, 5, 2, t, cfg.hbar, cfg.mu);
        CHECK(exp_x(cfg, PacketSpec{5, 2}, t) == doctest::Approx(expected).epsilon(1e-9));
        CHECK(oracle_expectation(cfg, PacketSpec{5, 2}, t, ObservableKind::position).value ==
              doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("momentum is mu times the derivative of position")
{
    const WellConfig cfg{1.0, 2.0, 1.0};
    const PacketSpec spec{40, 6};
    const double T = classical_period(cfg, 40);
    for (const double u : {0.11, 0.5, 0.73}) {
        const double t = u * T;
        auto x = [&](double s) { return exp_x(cfg, spec, s); };
        const double exact = exp_p(cfg, spec, t);
        const double e1 = std::abs(cfg.mu * oracle::central_difference(x, t, 1e-3 * T) - exact);
        const double e2 = std::abs(cfg.mu * oracle::central_difference(x, t, 5e-4 * T) - exact);
        CHECK(e1 < 1e-3 * momentum_magnitude(cfg, 40));
        CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
    }
}

TEST_CASE("initial state and symmetry")
{
    const PacketSpec spec{500, 23};
    CHECK(exp_p(natural, spec, 0.0) == 0.0);
    CHECK(quasi_exp(natural, spec, 0.0, Quantity::momentum) == 0.0);
    CHECK(exp_x2(natural, spec, 0.0) < natural.a * natural.a / 4);
    CHECK(reduced_uncertainty(natural, spec, 0.0, Quantity::momentum) == 1.0);
    const double T = classical_period(natural, 500);
    const double dp = reduced_uncertainty(natural, spec, T / 4, Quantity::momentum);
    CHECK(dp > 0.0);
    CHECK(dp < 1.0);

    // <x> is stationary where <p> crosses zero near the far wall.
    double lo = 0.4 * T, hi = 0.6 * T;
    REQUIRE(exp_p(natural, spec, lo) > 0.0);
    REQUIRE(exp_p(natural, spec, hi) < 0.0);
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (exp_p(natural, spec, mid) > 0.0 ? lo : hi) = mid;
    }
    const double t = 0.5 * (lo + hi);
    const double h = 1e-4 * T;
    const double slope_turn = std::abs(exp_x(natural, spec, t + h) - exp_x(natural, spec, t - h));
    const double slope_mid = std::abs(exp_x(natural, spec, 0.25 * T + h) - exp_x(natural, spec, 0.25 * T - h));
    CHECK(slope_turn < 1e-3 * slope_mid);
    CHECK(exp_x(natural, spec, 1e-3 * T) == doctest::Approx(exp_x(natural, spec, -1e-3 * T)).epsilon(1e-14));
}

TEST_CASE("uncertainty product")
{
    const double ground = std::sqrt(1.0 / 3.0 - 1.0 / (2.0 * oracle::pi * oracle::pi) - 0.25) * oracle::pi;
    CHECK(ground == doctest::Approx(0.5678).epsilon(1e-4));
    for (const double t : {0.0, 0.3}) {
        CHECK(uncertainty_product(natural, PacketSpec{1, 0}, t) == doctest::Approx(ground).epsilon(1e-14));
        CHECK(uncertainty_product(WellConfig{3.0, 2.0, 0.25}, PacketSpec{1, 0}, t) ==
              doctest::Approx(0.25 * ground).epsilon(1e-14));
    }
    const double at23 = uncertainty_product(natural, PacketSpec{500, 23}, 0.0);
    CHECK(at23 >= 0.5);
    CHECK(at23 < uncertainty_product(natural, PacketSpec{500, 3}, 0.0));

    SUBCASE("Heisenberg floor and variance positivity on grids")
    {
        for (const auto& spec : {PacketSpec{10, 3}, PacketSpec{50, 7}, PacketSpec{500, 23}}) {
            const PacketMoments m(natural, spec);
            const double T = classical_period(natural, spec.n);
            for (int i = 0; i <= 400; ++i) {
                const auto s = m.sample(2.0 * T * i / 400.0);
                CHECK(s.x2_mean - s.x_mean * s.x_mean > 0.0);
                CHECK(s.product >= 0.5 * (1 - 1e-9));
            }
        }
    }
}

TEST_CASE("quasi-quantum quantities")
{
    const PacketSpec spec{500, 23};
    for (int i = 0; i <= 50; ++i) {
        const double t = 0.0025 * i / 50.0;
        CHECK(std::abs(quasi_exp(natural, spec, t, Quantity::position) - exp_x(natural, spec, t)) < 1e-2);
    }

    // Quasi-quantum amplitudes with t=0 phases reproduce the Fejer value.
    const auto orbit = orbit_for_level(natural, 500);
    CHECK(quasi_exp(natural, spec, 0.0, Quantity::position) ==
          doctest::Approx(fejer_position(orbit, 23, 0.0)).epsilon(1e-12));

    // Quasi and exact share the Bohr phases, so they differ only through the
    // amplitudes; the detuning from the classical harmonics accumulates instead.
    const PacketSpec small{50, 7};
    const auto small_orbit = orbit_for_level(natural, 50);
    const double T = small_orbit.period();
    auto window_gap = [&](double t0, bool against_exact) {
        double gap = 0.0;
        for (int i = 0; i <= 100; ++i) {
            const double t = t0 + 0.25 * T * i / 100.0;
            const double q = quasi_exp(natural, small, t, Quantity::position);
            const double ref = against_exact ? exp_x(natural, small, t) : fejer_position(small_orbit, 7, t);
            gap = std::max(gap, std::abs(q - ref));
        }
        return gap;
    };
    CHECK(window_gap(0.0, true) < 5e-3);
    CHECK(window_gap(2.75 * T, true) < 5e-3);
    CHECK(window_gap(2.75 * T, false) > 10 * window_gap(0.0, false));
}

TEST_CASE("invalid specs")
{
    CHECK_THROWS_AS(exp_x(natural, PacketSpec{3, 3}, 0.0), std::domain_error);
    CHECK_THROWS_AS(exp_p2(natural, PacketSpec{0, 0}), std::domain_error);
    CHECK_THROWS_AS(PacketMoments(WellConfig{-1.0, 1.0, 1.0}, PacketSpec{5, 1}), std::domain_error);
}
