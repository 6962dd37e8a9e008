#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ewwp/classical_fourier.hpp"
#include "oracles.hpp"

using namespace ewwp;

namespace {

// Direct double sums of the Fejer forms, written out term by term.
double naive_fejer_x(const ClassicalOrbit& o, std::int64_t N, double t)
{
    double sum = 0.0;
    for (std::int64_t l = 0; l < N; ++l) {
        for (std::int64_t r = 0; r <= l; ++r) {
            const double h = 2.0 * r + 1.0;
            sum += std::cos(h * o.omega() * t) / (h * h);
        }
    }
    return o.a / 2.0 - 8.0 * o.a / (oracle::pi * oracle::pi) / (2.0 * N + 1.0) * sum;
}

double naive_fejer_x2(const ClassicalOrbit& o, std::int64_t N, double t)
{
    double sum = 0.0;
    for (std::int64_t l = 1; l <= 2 * N; ++l) {
        for (std::int64_t r = 1; r <= l; ++r) {
            sum += (r % 2 ? -1.0 : 1.0) * std::cos(r * o.omega() * t) / double(r * r);
        }
    }
    return o.a * o.a / 3.0 + 4.0 * o.a * o.a / (oracle::pi * oracle::pi) / (2.0 * N + 1.0) * sum;
}

const ClassicalOrbit unit_orbit{1.0, 500.0 * oracle::pi, 1.0};
const ClassicalOrbit odd_orbit{2.5, 3.0, 0.7};

}  // namespace

TEST_CASE("orbit validation")
{
    CHECK_THROWS_AS((ClassicalOrbit{0.0, 1.0, 1.0}.validate()), std::domain_error);
    CHECK_THROWS_AS((ClassicalOrbit{1.0, -2.0, 1.0}.validate()), std::domain_error);
    CHECK(orbit_for_level(WellConfig{}, 500).period() ==
          doctest::Approx(classical_period(WellConfig{}, 500)).epsilon(1e-15));
}

TEST_CASE("trajectory")
{
    for (const auto& o : {unit_orbit, odd_orbit}) {
        const double T = o.period();
        CHECK(sawtooth_position(o, 0.0) == doctest::Approx(0.0));
        CHECK(sawtooth_position(o, T / 4) == doctest::Approx(o.a / 2));
        CHECK(sawtooth_position(o, T / 2) == doctest::Approx(o.a));
        CHECK(sawtooth_position(o, 1.75 * T) == doctest::Approx(o.a / 2));
        CHECK(square_momentum(o, T / 4) == o.p_c);
        CHECK(square_momentum(o, 3 * T / 4) == -o.p_c);
        CHECK(square_momentum(o, T / 2) == 0.0);
        CHECK(square_momentum(o, 0.0) == 0.0);
    }
}

TEST_CASE("truncated Fourier series")
{
    const auto& o = odd_orbit;
    const double T = o.period();
    CHECK(fourier_partial_position(o, 0, 0.0) ==
          doctest::Approx(o.a / 2 - 4 * o.a / (oracle::pi * oracle::pi)).epsilon(1e-14));
    CHECK(fourier_partial_position(o, 0, 0.0) / o.a == doctest::Approx(0.094715).epsilon(1e-5));
    for (const std::int64_t m : {0, 3, 50}) {
        CHECK(std::abs(fourier_partial_position(o, m, T / 4) - o.a / 2) < 1e-15 * o.a);
        CHECK(fourier_partial_momentum(o, m, 0.0) == 0.0);
    }
    // At the corner t = 0 the residual is the series tail (4a/pi^2) sum_{h > 401} 1/h^2,
    // about 5e-4 a for m = 200.
    double head = 0.0;
    for (int h = 1; h <= 401; h += 2) {
        head += 1.0 / (double(h) * h);
    }
    const double tail = 4.0 * o.a / (oracle::pi * oracle::pi) * (oracle::pi * oracle::pi / 8.0 - head);
    CHECK(fourier_partial_position(o, 200, 0.0) - sawtooth_position(o, 0.0) ==
          doctest::Approx(tail).epsilon(1e-9));
    CHECK(std::abs(fourier_partial_position(o, 200, 0.0)) < 1e-3 * o.a);
    CHECK(std::abs(fourier_partial_position(o, 200, 0.3 * T) - sawtooth_position(o, 0.3 * T)) <
          1e-4 * o.a);
    CHECK(fourier_partial_momentum(o, 0, T / 4) == doctest::Approx(4 * o.p_c / oracle::pi).epsilon(1e-14));
    CHECK(fourier_partial_momentum(o, 200, T / 4) == doctest::Approx(o.p_c).epsilon(5e-3));
}

TEST_CASE("Gibbs overshoot")
{
    const double constant = oracle::wilbraham_gibbs();
    CHECK(constant == doctest::Approx(1.1789797).epsilon(1e-6));
    const double g200 = gibbs_overshoot(unit_orbit, 200);
    const double g1000 = gibbs_overshoot(unit_orbit, 1000);
    CHECK(std::abs(g200 - constant) < 0.005);
    CHECK(std::abs(g1000 - constant) < std::abs(g200 - constant));
    CHECK(gibbs_overshoot(odd_orbit, 200) == doctest::Approx(g200).epsilon(1e-12));

    SUBCASE("overshoot exists on a period grid for m >= 20")
    {
        for (const std::int64_t m : {20, 40, 100}) {
            double peak = 0.0;
            for (int i = 0; i < 10000; ++i) {
                const double t = unit_orbit.period() * i / 10000.0;
                peak = std::max(peak, std::abs(fourier_partial_momentum(unit_orbit, m, t)));
            }
            CHECK(peak > 1.15 * unit_orbit.p_c);
        }
    }
    CHECK_THROWS_AS(gibbs_overshoot(unit_orbit, -1), std::domain_error);
}

TEST_CASE("Fejer averages against direct double sums")
{
    for (const auto& o : {unit_orbit, odd_orbit}) {
        const double T = o.period();
        for (const std::int64_t N : {1, 2, 7, 23}) {
            for (const double u : {0.0, 0.013, 0.25, 0.41, 0.5, 0.77}) {
                const double t = u * T;
                CHECK(fejer_position(o, N, t) == doctest::Approx(naive_fejer_x(o, N, t)).epsilon(1e-12));
                CHECK(fejer_position_sq(o, N, t) ==
                      doctest::Approx(naive_fejer_x2(o, N, t)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("Fejer examples and degenerate width")
{
    const auto& o = odd_orbit;
    const double T = o.period();
    const double pi2 = oracle::pi * oracle::pi;
    CHECK(fejer_position(o, 1, 0.0) == doctest::Approx(o.a / 2 - 8 * o.a / (3 * pi2)).epsilon(1e-14));
    CHECK(fejer_position(o, 1, 0.0) / o.a == doctest::Approx(0.229810).epsilon(1e-5));
    CHECK(fejer_position(o, 0, 0.3 * T) == o.a / 2);
    CHECK(fejer_position_sq(o, 0, 0.3 * T) == o.a * o.a / 3);
    CHECK(fejer_momentum(o, 0, 0.3 * T) == 0.0);
    for (const std::int64_t N : {1, 5, 23, 200}) {
        CHECK(fejer_position(o, N, T / 4) == o.a / 2);
        CHECK(fejer_momentum(o, N, 0.0) == 0.0);
    }
    const double m23 = fejer_momentum(o, 23, T / 4);
    CHECK(m23 >= 0.9 * o.p_c);
    CHECK(m23 <= o.p_c);
    CHECK(fejer_position_sq(o, 200, T / 4) == doctest::Approx(o.a * o.a / 4).epsilon(1e-2));
    CHECK(fejer_momentum_sq(o) == o.p_c * o.p_c);
    CHECK(fejer_momentum_sq(unit_orbit) == doctest::Approx(250000.0 * pi2).epsilon(1e-15));
    CHECK_THROWS_AS(fejer_position(o, -1, 0.0), std::domain_error);

    SUBCASE("period averages")
    {
        const int K = 4096;
        double x2 = 0.0;
        double p2 = 0.0;
        for (int i = 0; i < K; ++i) {
            const double t = T * i / K;
            x2 += fejer_position_sq(o, 9, t) / K;
            p2 += square_momentum(o, t) * square_momentum(o, t) / K;
        }
        CHECK(x2 == doctest::Approx(o.a * o.a / 3).epsilon(1e-12));
        CHECK(p2 == doctest::Approx(o.p_c * o.p_c).epsilon(1e-3));
    }
}

TEST_CASE("Cesaro identity")
{
    const auto& o = odd_orbit;
    for (const std::int64_t N : {1, 4, 17}) {
        for (const double u : {0.0, 0.1, 0.33, 0.5, 0.9}) {
            const double t = u * o.period();
            double sum = o.a / 2;
            for (std::int64_t l = 0; l < N; ++l) {
                sum += 2.0 * fourier_partial_position(o, l, t);
            }
            CHECK(fejer_position(o, N, t) == doctest::Approx(sum / (2.0 * N + 1.0)).epsilon(1e-13));
        }
    }
}

TEST_CASE("range preservation")
{
    for (const auto& o : {unit_orbit, odd_orbit}) {
        for (const std::int64_t N : {1, 23, 200}) {
            double lo = o.a, hi = 0.0, pmax = 0.0;
            for (int i = 0; i < 10000; ++i) {
                const double t = o.period() * i / 10000.0;
                const double x = fejer_position(o, N, t);
                lo = std::min(lo, x);
                hi = std::max(hi, x);
                pmax = std::max(pmax, std::abs(fejer_momentum(o, N, t)));
            }
            CHECK(lo >= -1e-9 * o.a);
            CHECK(hi <= o.a * (1 + 1e-9));
            CHECK(pmax <= o.p_c * (1 + 1e-9));
        }
    }
}

TEST_CASE("pointwise convergence at T/8")
{
    const auto& o = odd_orbit;
    const double t = o.period() / 8;
    const double target = sawtooth_position(o, t);
    const double e50 = std::abs(fejer_position(o, 50, t) - target);
    const double e100 = std::abs(fejer_position(o, 100, t) - target);
    const double e200 = std::abs(fejer_position(o, 200, t) - target);
    CHECK(e100 < e50);
    CHECK(e200 < e100);
}

TEST_CASE("periodicity")
{
    const auto& o = odd_orbit;
    const double T = o.period();
    for (const double t : {0.013 * T, 0.4 * T, 0.81 * T}) {
        CHECK(fejer_position(o, 23, t + T) == doctest::Approx(fejer_position(o, 23, t)).epsilon(1e-12));
        CHECK(fejer_position_sq(o, 23, t + T) ==
              doctest::Approx(fejer_position_sq(o, 23, t)).epsilon(1e-12));
        CHECK(std::abs(fejer_momentum(o, 23, t + T) - fejer_momentum(o, 23, t)) < 1e-11 * o.p_c);
        CHECK(std::abs(fourier_partial_momentum(o, 30, t + 5 * T) -
                       fourier_partial_momentum(o, 30, t)) < 1e-11 * o.p_c);
        CHECK(sawtooth_position(o, t + 3 * T) == doctest::Approx(sawtooth_position(o, t)).epsilon(1e-12));
    }
}

TEST_CASE("momentum is mu times the derivative of position")
{
    const auto& o = odd_orbit;
    const double T = o.period();
    for (const double u : {0.07, 0.3, 0.62}) {
        const double t = u * T;
        const double exact = fejer_momentum(o, 11, t);
        auto x = [&](double s) { return fejer_position(o, 11, s); };
        const double e1 = std::abs(o.mu * oracle::central_difference(x, t, 1e-3 * T) - exact);
        const double e2 = std::abs(o.mu * oracle::central_difference(x, t, 5e-4 * T) - exact);
        CHECK(e1 < 1e-3 * o.p_c);
        // Halving the step cuts a second-order error by about four.
        CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));

        auto xs = [&](double s) { return fourier_partial_position(o, 9, s); };
        CHECK(o.mu * oracle::central_difference(xs, t, 1e-4 * T) ==
              doctest::Approx(fourier_partial_momentum(o, 9, t)).epsilon(1e-4));
    }
}

TEST_CASE("classical reduced uncertainty")
{
    const auto& o = unit_orbit;
    const double T = o.period();
    CHECK(classical_reduced_uncertainty(o, Quantity::momentum, 23, 0.0) == 1.0);
    const double dx = classical_reduced_uncertainty(o, Quantity::position, 23, T / 4);
    CHECK(dx > 0.0);
    CHECK(dx < 1.0);
    // Dips between the turning points, back to 1 at them.
    CHECK(classical_reduced_uncertainty(o, Quantity::momentum, 23, T / 4) < 0.3);
    CHECK(classical_reduced_uncertainty(o, Quantity::momentum, 23, T / 2) == doctest::Approx(1.0));
}
