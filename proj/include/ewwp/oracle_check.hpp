#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ewwp/core_model.hpp"

namespace ewwp {

/// Deviation of the closed forms from the first-principles oracles over one
/// period. Errors are relative to the natural scale of each observable: a for
/// <x>, a^2 for <x^2>, p_n for <p>, and <p^2> itself.
struct OracleDeviation {
    std::int64_t n = 0;
    std::int64_t N = 0;
    std::size_t grid_points = 0;
    bool coarse_grid = false;
    double x = 0.0;              // vs quadrature of x |psi|^2
    double x2 = 0.0;             // vs quadrature of x^2 |psi|^2
    double p = 0.0;              // vs finite-difference momentum quadrature
    double p2 = 0.0;             // vs spectral sum over the packet levels
    double p2_quadrature = 0.0;  // vs quadrature of hbar^2 |psi'|^2
    double p2_variation = 0.0;   // (max - min) / mean of the quadrature <p^2>
    double x_matrix = 0.0;       // quadrature vs analytic matrix-element sum
};

struct OracleTolerances {
    double x = 1e-8;
    double x2 = 1e-8;
    double p = 1e-6;
    double p2 = 1e-12;
    double p2_variation = 1e-10;

    bool accepts(const OracleDeviation& d) const;
};

/// Grid fine enough for the fourth-order momentum difference to stay well
/// inside 1e-6: at least 4096 points and 64 per unit of the highest level.
std::size_t recommended_grid_points(const PacketSpec& spec);

/// Compares exp_x, exp_x2, exp_p and exp_p2 with the oracles at t_points
/// instants spanning [0, T]. grid_points = 0 picks recommended_grid_points.
OracleDeviation check_against_oracle(const WellConfig& cfg, const PacketSpec& spec,
                                     std::size_t t_points = 32, std::size_t grid_points = 0);

}  // namespace ewwp
