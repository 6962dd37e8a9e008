#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ewwp/core_model.hpp"

namespace ewwp {

/// Instant at which Delta x Delta p is compared across packet widths. Both
/// are zeros of <p>.
enum class EvaluationInstant {
    /// t = 0: packet released from the left wall.
    initial,
    /// First zero of <p> after 0.4 T: the packet turning at the far wall.
    far_wall_turning,
};

struct SearchRange {
    std::int64_t N_min = 1;
    std::int64_t N_max = 0;  // 0 selects default_search(n).N_max
};

/// {1, min(n - 1, ceil(4 sqrt n))}
SearchRange default_search(std::int64_t n);

struct ScanRow {
    std::int64_t n = 0;
    std::int64_t N_opt = 0;
    double product_min = 0.0;
    double t_eval = 0.0;
    double sqrt_n = 0.0;
};

/// Least-squares fit of log N_opt = log prefactor + m_exp log n.
struct ScanFit {
    bool fitted = false;
    double m_exp = 0.0;
    double prefactor = 0.0;
    double residual = 0.0;  // RMS of the log residuals
};

struct ScanResult {
    std::vector<ScanRow> rows;
    ScanFit fit;
};

/// The evaluation time for one packet.
double evaluation_time(const WellConfig& cfg, const PacketSpec& spec, EvaluationInstant instant);

/// Delta x Delta p at the evaluation time of (n, N).
double product_at_instant(const WellConfig& cfg, const PacketSpec& spec,
                          EvaluationInstant instant);

/// Exhaustive scan over N in the range; ties go to the smaller N.
ScanRow optimal_N(const WellConfig& cfg, std::int64_t n, SearchRange range = {},
                  EvaluationInstant instant = EvaluationInstant::far_wall_turning);

/// optimal_N for every n (ascending), then the log-log exponent fit. Fewer
/// than three distinct n leave fit.fitted false.
ScanResult scan_n(const WellConfig& cfg, std::span<const std::int64_t> n_values,
                  EvaluationInstant instant = EvaluationInstant::far_wall_turning);

ScanFit fit_scaling(std::span<const ScanRow> rows);

/// `count` integers rounded from a geometric progression first..last.
std::vector<std::int64_t> geometric_n_grid(std::int64_t first, std::int64_t last, int count);

}  // namespace ewwp
