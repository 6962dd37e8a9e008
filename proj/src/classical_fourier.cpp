#include "ewwp/classical_fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ewwp/summation.hpp"

namespace ewwp {

void ClassicalOrbit::validate() const
{
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(a) || !positive(p_c) || !positive(mu)) {
        throw std::domain_error("orbit parameters a, p_c, mu must be finite and positive");
    }
}

double ClassicalOrbit::omega() const
{
    return 2.0 * pi / period();
}

ClassicalOrbit orbit_for_level(const WellConfig& cfg, std::int64_t n)
{
    cfg.validate();
    return ClassicalOrbit{cfg.a, momentum_magnitude(cfg, n), cfg.mu};
}

namespace {

// Fraction of a period elapsed, in [0, 1).
double cycle_fraction(const ClassicalOrbit& orbit, double t)
{
    const double u = t / orbit.period();
    const double f = u - std::floor(u);
    return f >= 1.0 ? 0.0 : f;
}

// cos(h w t) and sin(h w t) from the cycle fraction u.
double harmonic_cos(std::int64_t h, double u)
{
    return cos_pi(2.0 * static_cast<double>(h) * u);
}

double harmonic_sin(std::int64_t h, double u)
{
    return sin_pi(2.0 * static_cast<double>(h) * u);
}

void require_order(std::int64_t m, const char* what)
{
    if (m < 0) {
        throw std::domain_error(std::string(what) + " must be >= 0, got " + std::to_string(m));
    }
}

}  // namespace

double sawtooth_position(const ClassicalOrbit& orbit, double t)
{
    const double u = cycle_fraction(orbit, t);
    return u <= 0.5 ? 2.0 * orbit.a * u : 2.0 * orbit.a * (1.0 - u);
}

double square_momentum(const ClassicalOrbit& orbit, double t)
{
    const double u = cycle_fraction(orbit, t);
    if (u == 0.0 || u == 0.5) {
        return 0.0;
    }
    return u < 0.5 ? orbit.p_c : -orbit.p_c;
}

double fourier_partial_position(const ClassicalOrbit& orbit, std::int64_t m, double t)
{
    require_order(m, "series order");
    const double u = cycle_fraction(orbit, t);
    CompensatedSum sum;
    for (std::int64_t r = 0; r <= m; ++r) {
        const double h = static_cast<double>(2 * r + 1);
        sum += harmonic_cos(2 * r + 1, u) / (h * h);
    }
    return orbit.a / 2.0 - 4.0 * orbit.a / (pi * pi) * sum.value();
}

double fourier_partial_momentum(const ClassicalOrbit& orbit, std::int64_t m, double t)
{
    require_order(m, "series order");
    const double u = cycle_fraction(orbit, t);
    CompensatedSum sum;
    for (std::int64_t r = 0; r <= m; ++r) {
        sum += harmonic_sin(2 * r + 1, u) / static_cast<double>(2 * r + 1);
    }
    return 4.0 * orbit.p_c / pi * sum.value();
}

double gibbs_overshoot(const ClassicalOrbit& orbit, std::int64_t m)
{
    if (m < 1) {
        throw std::domain_error("gibbs_overshoot needs m >= 1");
    }
    orbit.validate();
    // First lobe of the partial sum after the jump at t = 0.
    const double lobe = pi / (static_cast<double>(2 * m + 1) * orbit.omega());
    constexpr int samples = 1000;
    auto value = [&](double t) { return fourier_partial_momentum(orbit, m, t); };

    double best_t = lobe / samples;
    double best = value(best_t);
    for (int i = 2; i <= samples; ++i) {
        const double t = lobe * i / samples;
        const double v = value(t);
        if (v > best) {
            best = v;
            best_t = t;
        }
    }

    // golden-section refinement inside the bracketing cell pair
    double lo = std::max(best_t - lobe / samples, 0.0);
    double hi = best_t + lobe / samples;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - g * (hi - lo);
    double d = lo + g * (hi - lo);
    double fc = value(c);
    double fd = value(d);
    for (int it = 0; it < 80 && hi - lo > 1e-15 * lobe; ++it) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - g * (hi - lo);
            fc = value(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + g * (hi - lo);
            fd = value(d);
        }
    }
    best = std::max({best, fc, fd});
    return best / orbit.p_c;
}

double fejer_position(const ClassicalOrbit& orbit, std::int64_t N, double t)
{
    require_order(N, "Fejer order");
    const double u = cycle_fraction(orbit, t);
    // sum_{l<N} sum_{r<=l} c_r == sum_{r<N} (N - r) c_r
    CompensatedSum sum;
    for (std::int64_t r = 0; r < N; ++r) {
        const double h = static_cast<double>(2 * r + 1);
        sum += static_cast<double>(N - r) * harmonic_cos(2 * r + 1, u) / (h * h);
    }
    return orbit.a / 2.0 -
           8.0 * orbit.a / (pi * pi) / static_cast<double>(2 * N + 1) * sum.value();
}

double fejer_position_sq(const ClassicalOrbit& orbit, std::int64_t N, double t)
{
    require_order(N, "Fejer order");
    const double u = cycle_fraction(orbit, t);
    // sum_{l=1}^{2N} sum_{r=1}^{l} g_r == sum_{r=1}^{2N} (2N - r + 1) g_r
    CompensatedSum sum;
    for (std::int64_t r = 1; r <= 2 * N; ++r) {
        const double rd = static_cast<double>(r);
        const double sign = (r % 2 == 0) ? 1.0 : -1.0;
        sum += sign * static_cast<double>(2 * N - r + 1) * harmonic_cos(r, u) / (rd * rd);
    }
    const double a2 = orbit.a * orbit.a;
    return a2 / 3.0 + 4.0 * a2 / (pi * pi) / static_cast<double>(2 * N + 1) * sum.value();
}

double fejer_momentum(const ClassicalOrbit& orbit, std::int64_t N, double t)
{
    require_order(N, "Fejer order");
    const double u = cycle_fraction(orbit, t);
    CompensatedSum sum;
    for (std::int64_t r = 0; r < N; ++r) {
        sum += static_cast<double>(N - r) * harmonic_sin(2 * r + 1, u) /
               static_cast<double>(2 * r + 1);
    }
    return 8.0 * orbit.p_c / pi / static_cast<double>(2 * N + 1) * sum.value();
}

double fejer_momentum_sq(const ClassicalOrbit& orbit)
{
    return orbit.p_c * orbit.p_c;
}

double classical_reduced_uncertainty(const ClassicalOrbit& orbit, Quantity kind,
                                     std::int64_t N, double t)
{
    double mean = 0.0;
    double second = 0.0;
    if (kind == Quantity::position) {
        mean = fejer_position(orbit, N, t);
        second = fejer_position_sq(orbit, N, t);
    } else {
        mean = fejer_momentum(orbit, N, t);
        second = fejer_momentum_sq(orbit);
    }
    if (!(second > 0.0)) {
        throw std::domain_error("Fejer second moment is not positive");
    }
    return std::sqrt(std::clamp(1.0 - mean * mean / second, 0.0, 1.0));
}

}  // namespace ewwp
