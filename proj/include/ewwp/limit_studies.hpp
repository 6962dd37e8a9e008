#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ewwp/core_model.hpp"

namespace ewwp {

/// How the packet width follows n along a limit sequence.
struct WidthRule {
    enum class Kind { fixed, sqrt_n } kind = Kind::fixed;
    std::int64_t N = 5;  // used by Kind::fixed

    std::int64_t width_for(std::int64_t n) const;
};

struct LimitRow {
    std::int64_t n = 0;
    double hbar_eff = 0.0;
    std::int64_t N = 0;
    double sup_err_x = 0.0;
    double sup_err_p = 0.0;
    double sup_err_x2 = 0.0;
};

struct LimitStudy {
    std::vector<LimitRow> rows;
    /// sup |<x> - F<x>| of the last row on a grid twice as fine, bounding the
    /// error of the sampled sup norm.
    double refined_last_sup_err_x = 0.0;
};

inline constexpr std::size_t default_limit_t_points = 2048;

/// Constrained classical limit: for every n, hbar is set to p_c a / (n pi) so
/// that p_n = p_c and omega_n = omega, and the closed-form packet moments are
/// compared with the Fejer averages of the same orbit over one period.
LimitStudy limit_sequence(double a, double mu, double p_c, std::span<const std::int64_t> n_values,
                          WidthRule rule, std::size_t t_points = default_limit_t_points);

/// Plain large-n sequence at the fixed hbar of cfg, each n compared with the
/// orbit of its own level.
LimitStudy limit_sequence_fixed_hbar(const WellConfig& cfg, std::span<const std::int64_t> n_values,
                                     WidthRule rule,
                                     std::size_t t_points = default_limit_t_points);

/// The two <x> frequencies of harmonic h = 2r+1 at outer index l, next to the
/// classical h omega_n.
struct DetuningReport {
    std::int64_t harmonic = 1;
    std::int64_t l = 0;
    double quantum_upper = 0.0;   // offset 2N-4l+2r-1
    double quantum_lower = 0.0;   // offset 2N-4l+2r-3
    double classical = 0.0;
    double ratio_upper = 0.0;     // quantum_upper / classical
    double ratio_lower = 0.0;

    /// Largest accumulated phase slip |Omega_q - Omega_c| t.
    double phase_error(double t) const;
};

/// h must be odd with 1 <= h <= 2N-1, and (h-1)/2 <= l <= N-1.
DetuningReport detuning_report(const WellConfig& cfg, const PacketSpec& spec,
                               std::int64_t harmonic, std::int64_t l);

}  // namespace ewwp
