#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ewwp/classical_fourier.hpp"
#include "ewwp/core_model.hpp"

namespace ewwp {

enum class ObservableKind { position, position_sq, momentum, momentum_sq };

struct ExpectationSample {
    double t = 0.0;
    double x_mean = 0.0;
    double x2_mean = 0.0;
    double p_mean = 0.0;
    double p2_mean = 0.0;
    double dx = 0.0;
    double dp = 0.0;
    double product = 0.0;
};

/// Closed-form moments of one packet, with the cosine tables of the <x> and
/// <x^2> double sums built once and reused for every t.
///
/// <x> pairs the levels n+m1 < n+m2 with odd difference h = 2r+1; the pair
/// oscillates at h (2n + off) hbar pi^2 / (2 mu a^2) where
/// off = 2N-4l+2r-1 or 2N-4l+2r-3, l = r..N-1. <x^2> pairs every difference
/// r = 1..2N with sum 2n-2N+2l-r, l = r..2N.
class PacketMoments {
public:
    PacketMoments(const WellConfig& cfg, const PacketSpec& spec);

    double x(double t) const;
    double x2(double t) const;
    /// mu d<x>/dt, term by term; exactly 0 at t = 0.
    double p(double t) const;
    /// Time independent.
    double p2() const { return p2_; }

    /// Classical amplitudes with the exact Bohr frequencies of <x>.
    double quasi_x(double t) const;
    double quasi_p(double t) const;

    ExpectationSample sample(double t) const;

    const WellConfig& config() const { return cfg_; }
    const PacketSpec& spec() const { return spec_; }

private:
    struct Term {
        double amplitude;   // multiplies cos(frequency t)
        double frequency;   // rad / time
        std::int64_t harmonic;
    };

    WellConfig cfg_;
    PacketSpec spec_;
    std::vector<Term> x_terms_;
    std::vector<Term> x2_terms_;
    double x2_static_ = 0.0;
    double p2_ = 0.0;
    double p_n_ = 0.0;
};

double exp_x(const WellConfig& cfg, const PacketSpec& spec, double t);
double exp_x2(const WellConfig& cfg, const PacketSpec& spec, double t);
double exp_p(const WellConfig& cfg, const PacketSpec& spec, double t);
double exp_p2(const WellConfig& cfg, const PacketSpec& spec);

double quasi_exp(const WellConfig& cfg, const PacketSpec& spec, double t, Quantity kind);

/// sqrt(1 - <f>^2 / <f^2>), clamped to [0, 1].
double reduced_uncertainty(const WellConfig& cfg, const PacketSpec& spec, double t, Quantity kind);

/// Delta x * Delta p. Throws std::logic_error if a variance is negative beyond
/// round-off.
double uncertainty_product(const WellConfig& cfg, const PacketSpec& spec, double t);

// --- first-principles oracles ----------------------------------------------

enum class OracleStatus { ok, coarse_grid };

struct OracleResult {
    double value = 0.0;
    OracleStatus status = OracleStatus::ok;
};

/// Expectation value from psi(x, t) sampled on a uniform grid and integrated
/// with the trapezoid rule. Position operators act pointwise, momentum through
/// a fourth-order central difference of psi (odd reflection at both walls) and
/// momentum squared as hbar^2 |psi'|^2 with psi' differentiated level by level.
/// Grids under 512 points, or too coarse for the highest level, are flagged
/// coarse_grid.
OracleResult oracle_expectation(const WellConfig& cfg, const PacketSpec& spec, double t,
                                ObservableKind kind,
                                std::size_t grid_points = default_grid_points);

/// Exact double sum over all level pairs using analytic matrix elements.
double matrix_element_expectation(const WellConfig& cfg, const PacketSpec& spec, double t,
                                  ObservableKind kind);

}  // namespace ewwp
