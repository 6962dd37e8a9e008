#include "ewwp/oracle_check.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ewwp/kernels.hpp"
#include "ewwp/quantum_expectations.hpp"

namespace ewwp {

bool OracleTolerances::accepts(const OracleDeviation& d) const
{
    return d.x <= x && d.x2 <= x2 && d.p <= p && d.p2 <= p2 && d.p2_quadrature <= p2_variation &&
           d.p2_variation <= p2_variation;
}

std::size_t recommended_grid_points(const PacketSpec& spec)
{
    const auto per_level = static_cast<std::size_t>(64 * (spec.highest() + 1));
    return std::max<std::size_t>(4096, per_level);
}

OracleDeviation check_against_oracle(const WellConfig& cfg, const PacketSpec& spec,
                                     std::size_t t_points, std::size_t grid_points)
{
    const PacketMoments moments(cfg, spec);
    if (grid_points == 0) {
        grid_points = recommended_grid_points(spec);
    }
    const double T = classical_period(cfg, spec.n);
    const double p_n = momentum_magnitude(cfg, spec.n);
    const double p2 = moments.p2();
    const auto ts = kernels::time_grid(0.0, T, t_points);

    struct Point {
        double x, x2, p, p2_quad, x_matrix;
        bool coarse;
    };
    const auto points = kernels::parallel_map(ts.size(), [&](std::size_t i) {
        const double t = ts[i];
        const auto ox = oracle_expectation(cfg, spec, t, ObservableKind::position, grid_points);
        const auto ox2 = oracle_expectation(cfg, spec, t, ObservableKind::position_sq, grid_points);
        const auto op = oracle_expectation(cfg, spec, t, ObservableKind::momentum, grid_points);
        const auto op2 = oracle_expectation(cfg, spec, t, ObservableKind::momentum_sq, grid_points);
        const double mx = matrix_element_expectation(cfg, spec, t, ObservableKind::position);
        return Point{std::abs(moments.x(t) - ox.value) / cfg.a,
                     std::abs(moments.x2(t) - ox2.value) / (cfg.a * cfg.a),
                     std::abs(moments.p(t) - op.value) / p_n,
                     op2.value,
                     std::abs(mx - ox.value) / cfg.a,
                     ox.status != OracleStatus::ok};
    });

    OracleDeviation d;
    d.n = spec.n;
    d.N = spec.N;
    d.grid_points = grid_points;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double mean = 0.0;
    for (const auto& pt : points) {
        d.x = std::max(d.x, pt.x);
        d.x2 = std::max(d.x2, pt.x2);
        d.p = std::max(d.p, pt.p);
        d.x_matrix = std::max(d.x_matrix, pt.x_matrix);
        d.p2_quadrature = std::max(d.p2_quadrature, std::abs(pt.p2_quad - p2) / p2);
        d.coarse_grid = d.coarse_grid || pt.coarse;
        lo = std::min(lo, pt.p2_quad);
        hi = std::max(hi, pt.p2_quad);
        mean += pt.p2_quad / static_cast<double>(points.size());
    }
    d.p2_variation = (hi - lo) / mean;
    const double spectral = matrix_element_expectation(cfg, spec, 0.0, ObservableKind::momentum_sq);
    d.p2 = std::abs(exp_p2(cfg, spec) - spectral) / spectral;
    return d;
}

}  // namespace ewwp
