#include "ewwp/packet_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "ewwp/kernels.hpp"
#include "ewwp/quantum_expectations.hpp"

namespace ewwp {

SearchRange default_search(std::int64_t n)
{
    const auto upper = static_cast<std::int64_t>(std::ceil(4.0 * std::sqrt(static_cast<double>(n))));
    return {1, std::min(n - 1, upper)};
}

namespace {

double far_wall_turning_time(const PacketMoments& moments)
{
    const double T = classical_period(moments.config(), moments.spec().n);
    const double dt = T / 200.0;
    double lo = 0.4 * T;
    double p_lo = moments.p(lo);
    for (int step = 0; step < 400; ++step) {
        const double hi = lo + dt;
        const double p_hi = moments.p(hi);
        if (p_hi == 0.0) {
            return hi;
        }
        if ((p_lo > 0.0) != (p_hi > 0.0)) {
            double a = lo;
            double b = hi;
            double pa = p_lo;
            for (int it = 0; it < 200 && b - a > 1e-15 * T; ++it) {
                const double mid = 0.5 * (a + b);
                const double pm = moments.p(mid);
                if (pm == 0.0) {
                    return mid;
                }
                if ((pa > 0.0) == (pm > 0.0)) {
                    a = mid;
                    pa = pm;
                } else {
                    b = mid;
                }
            }
            return 0.5 * (a + b);
        }
        lo = hi;
        p_lo = p_hi;
    }
    throw std::runtime_error("no zero of <p> found after 0.4 T for n=" +
                             std::to_string(moments.spec().n));
}

double evaluation_time(const PacketMoments& moments, EvaluationInstant instant)
{
    if (instant == EvaluationInstant::initial || moments.spec().N == 0) {
        return 0.0;
    }
    return far_wall_turning_time(moments);
}

}  // namespace

double evaluation_time(const WellConfig& cfg, const PacketSpec& spec, EvaluationInstant instant)
{
    return evaluation_time(PacketMoments(cfg, spec), instant);
}

double product_at_instant(const WellConfig& cfg, const PacketSpec& spec,
                          EvaluationInstant instant)
{
    const PacketMoments moments(cfg, spec);
    return moments.sample(evaluation_time(moments, instant)).product;
}

ScanRow optimal_N(const WellConfig& cfg, std::int64_t n, SearchRange range,
                  EvaluationInstant instant)
{
    cfg.validate();
    if (n < 4) {
        throw std::domain_error("optimal_N needs n >= 4, got " + std::to_string(n));
    }
    if (range.N_max == 0) {
        range.N_max = default_search(n).N_max;
    }
    if (range.N_min < 1 || range.N_min > range.N_max || range.N_max >= n) {
        throw std::domain_error("empty or invalid N search range [" + std::to_string(range.N_min) +
                                ", " + std::to_string(range.N_max) + "] for n=" +
                                std::to_string(n));
    }

    struct Candidate {
        double product = 0.0;
        double t = 0.0;
    };
    const auto count = static_cast<std::size_t>(range.N_max - range.N_min + 1);
    const auto candidates = kernels::parallel_map(count, [&](std::size_t i) {
        const PacketMoments moments(cfg, PacketSpec{n, range.N_min + static_cast<std::int64_t>(i)});
        const double t = evaluation_time(moments, instant);
        return Candidate{moments.sample(t).product, t};
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        if (candidates[i].product < candidates[best].product) {
            best = i;
        }
    }
    ScanRow row;
    row.n = n;
    row.N_opt = range.N_min + static_cast<std::int64_t>(best);
    row.product_min = candidates[best].product;
    row.t_eval = candidates[best].t;
    row.sqrt_n = std::sqrt(static_cast<double>(n));
    return row;
}

ScanFit fit_scaling(std::span<const ScanRow> rows)
{
    ScanFit fit;
    std::set<std::int64_t> distinct;
    for (const auto& r : rows) {
        distinct.insert(r.n);
    }
    if (distinct.size() < 3) {
        return fit;
    }
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    const double count = static_cast<double>(rows.size());
    for (const auto& r : rows) {
        const double lx = std::log(static_cast<double>(r.n));
        const double ly = std::log(static_cast<double>(r.N_opt));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / count;
    double ss = 0.0;
    for (const auto& r : rows) {
        const double e = std::log(static_cast<double>(r.N_opt)) -
                         (intercept + slope * std::log(static_cast<double>(r.n)));
        ss += e * e;
    }
    fit.fitted = true;
    fit.m_exp = slope;
    fit.prefactor = std::exp(intercept);
    fit.residual = std::sqrt(ss / count);
    return fit;
}

ScanResult scan_n(const WellConfig& cfg, std::span<const std::int64_t> n_values,
                  EvaluationInstant instant)
{
    if (!std::is_sorted(n_values.begin(), n_values.end())) {
        throw std::domain_error("scan_n needs ascending n values");
    }
    ScanResult result;
    result.rows.reserve(n_values.size());
    // optimal_N parallelises over N; rows stay in input order
    for (const auto n : n_values) {
        result.rows.push_back(optimal_N(cfg, n, {}, instant));
    }
    result.fit = fit_scaling(result.rows);
    return result;
}

std::vector<std::int64_t> geometric_n_grid(std::int64_t first, std::int64_t last, int count)
{
    if (first < 1 || last < first || count < 2) {
        throw std::domain_error("invalid geometric grid");
    }
    std::vector<std::int64_t> grid;
    const double ratio = static_cast<double>(last) / static_cast<double>(first);
    for (int i = 0; i < count; ++i) {
        const double v = static_cast<double>(first) *
                         std::pow(ratio, static_cast<double>(i) / static_cast<double>(count - 1));
        grid.push_back(std::llround(v));
    }
    grid.front() = first;
    grid.back() = last;
    return grid;
}

}  // namespace ewwp
