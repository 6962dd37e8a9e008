#pragma once

#include <cstdint>

#include "ewwp/core_model.hpp"

namespace ewwp {

/// A single classical bounce orbit in the well: the position is a sawtooth
/// between the walls and the momentum a square wave of height p_c.
struct ClassicalOrbit {
    double a = 1.0;
    double p_c = 1.0;
    double mu = 1.0;

    void validate() const;

    double period() const { return 2.0 * a * mu / p_c; }
    double omega() const;
};

/// Orbit matching level n of the well (p_c = n pi hbar / a).
ClassicalOrbit orbit_for_level(const WellConfig& cfg, std::int64_t n);

enum class Quantity { position, momentum };

double sawtooth_position(const ClassicalOrbit& orbit, double t);

/// Square wave; exactly 0 at the turning instants (jump midpoint).
double square_momentum(const ClassicalOrbit& orbit, double t);

/// m-th truncated Fourier series of the sawtooth.
double fourier_partial_position(const ClassicalOrbit& orbit, std::int64_t m, double t);

/// mu times the time derivative of fourier_partial_position.
double fourier_partial_momentum(const ClassicalOrbit& orbit, std::int64_t m, double t);

/// Peak of fourier_partial_momentum / p_c next to the jump at t = 0.
/// Tends to the Wilbraham-Gibbs constant 1.17898 as m grows.
double gibbs_overshoot(const ClassicalOrbit& orbit, std::int64_t m);

/// Fejer average of the sawtooth:
///   a/2 - (8a/pi^2) / (2N+1) * sum_{l<N} sum_{r<=l} cos((2r+1) w t) / (2r+1)^2
/// N = 0 yields the constant a/2.
double fejer_position(const ClassicalOrbit& orbit, std::int64_t N, double t);

/// Fejer average of x^2:
///   a^2/3 + (4a^2/pi^2) / (2N+1) * sum_{l=1}^{2N} sum_{r=1}^{l} (-1)^r cos(r w t) / r^2
double fejer_position_sq(const ClassicalOrbit& orbit, std::int64_t N, double t);

/// mu d/dt fejer_position, differentiated term by term.
double fejer_momentum(const ClassicalOrbit& orbit, std::int64_t N, double t);

/// The square wave squared is p_c^2 at every instant.
double fejer_momentum_sq(const ClassicalOrbit& orbit);

/// sqrt(1 - F<f>^2 / F<f^2>), clamped to [0, 1].
double classical_reduced_uncertainty(const ClassicalOrbit& orbit, Quantity kind,
                                     std::int64_t N, double t);

}  // namespace ewwp
