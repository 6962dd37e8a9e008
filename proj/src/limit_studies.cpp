#include "ewwp/limit_studies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ewwp/classical_fourier.hpp"
#include "ewwp/kernels.hpp"
#include "ewwp/quantum_expectations.hpp"

namespace ewwp {

std::int64_t WidthRule::width_for(std::int64_t n) const
{
    if (kind == Kind::sqrt_n) {
        auto w = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(n))));
        while (w * w > n) {
            --w;
        }
        while ((w + 1) * (w + 1) <= n) {
            ++w;
        }
        return w;
    }
    return N;
}

namespace {

void check_sequence(std::span<const std::int64_t> n_values, WidthRule rule, std::size_t t_points)
{
    if (t_points < 256) {
        throw std::domain_error("limit study needs at least 256 time points");
    }
    if (rule.kind == WidthRule::Kind::fixed && rule.N < 0) {
        throw std::domain_error("packet width must be >= 0");
    }
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (i > 0 && n_values[i] <= n_values[i - 1]) {
            throw std::domain_error("limit study needs strictly ascending n values");
        }
        if (n_values[i] <= rule.width_for(n_values[i])) {
            throw std::domain_error("n=" + std::to_string(n_values[i]) +
                                    " does not exceed the packet width");
        }
    }
}

struct SupErrors {
    double x = 0.0;
    double p = 0.0;
    double x2 = 0.0;
};

SupErrors compare_over_period(const WellConfig& cfg, const PacketSpec& spec,
                              const ClassicalOrbit& orbit, std::size_t t_points)
{
    const PacketMoments moments(cfg, spec);
    const auto ts = kernels::time_grid(0.0, orbit.period(), t_points);
    const auto quantum = kernels::expectations(moments, ts);
    const auto classical = kernels::fejer(orbit, spec.N, ts);
    SupErrors e;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        e.x = std::max(e.x, std::abs(quantum[i].x_mean - classical[i].x));
        e.p = std::max(e.p, std::abs(quantum[i].p_mean - classical[i].p));
        e.x2 = std::max(e.x2, std::abs(quantum[i].x2_mean - classical[i].x2));
    }
    return e;
}

template <class Setup>
LimitStudy run_sequence(std::span<const std::int64_t> n_values, WidthRule rule,
                        std::size_t t_points, Setup setup)
{
    check_sequence(n_values, rule, t_points);
    LimitStudy study;
    for (const auto n : n_values) {
        const auto [cfg, orbit] = setup(n);
        const PacketSpec spec{n, rule.width_for(n)};
        const auto e = compare_over_period(cfg, spec, orbit, t_points);
        study.rows.push_back({n, cfg.hbar, spec.N, e.x, e.p, e.x2});
    }
    if (!n_values.empty()) {
        const auto n = n_values.back();
        const auto [cfg, orbit] = setup(n);
        study.refined_last_sup_err_x =
            compare_over_period(cfg, PacketSpec{n, rule.width_for(n)}, orbit, 2 * t_points - 1).x;
    }
    return study;
}

}  // namespace

LimitStudy limit_sequence(double a, double mu, double p_c, std::span<const std::int64_t> n_values,
                          WidthRule rule, std::size_t t_points)
{
    const ClassicalOrbit orbit{a, p_c, mu};
    orbit.validate();
    return run_sequence(n_values, rule, t_points, [&](std::int64_t n) {
        const WellConfig cfg{a, mu, p_c * a / (static_cast<double>(n) * pi)};
        return std::pair{cfg, orbit};
    });
}

LimitStudy limit_sequence_fixed_hbar(const WellConfig& cfg, std::span<const std::int64_t> n_values,
                                     WidthRule rule, std::size_t t_points)
{
    cfg.validate();
    return run_sequence(n_values, rule, t_points,
                        [&](std::int64_t n) { return std::pair{cfg, orbit_for_level(cfg, n)}; });
}

double DetuningReport::phase_error(double t) const
{
    return std::max(std::abs(quantum_upper - classical), std::abs(quantum_lower - classical)) *
           std::abs(t);
}

DetuningReport detuning_report(const WellConfig& cfg, const PacketSpec& spec,
                               std::int64_t harmonic, std::int64_t l)
{
    cfg.validate();
    spec.validate();
    if (harmonic < 1 || harmonic > 2 * spec.N - 1 || harmonic % 2 == 0) {
        throw std::domain_error("harmonic must be odd and in [1, 2N-1], got " +
                                std::to_string(harmonic));
    }
    const std::int64_t r = (harmonic - 1) / 2;
    if (l < r || l > spec.N - 1) {
        throw std::domain_error("outer index l must lie in [r, N-1], got " + std::to_string(l));
    }
    const double omega_n = spectral_data(cfg, spec.n).omega_n;
    const double two_n = 2.0 * static_cast<double>(spec.n);
    const double h = static_cast<double>(harmonic);
    const auto off_upper = static_cast<double>(2 * spec.N - 4 * l + 2 * r - 1);
    const auto off_lower = static_cast<double>(2 * spec.N - 4 * l + 2 * r - 3);

    DetuningReport report;
    report.harmonic = harmonic;
    report.l = l;
    report.ratio_upper = 1.0 + off_upper / two_n;
    report.ratio_lower = 1.0 + off_lower / two_n;
    report.classical = h * omega_n;
    report.quantum_upper = report.classical * report.ratio_upper;
    report.quantum_lower = report.classical * report.ratio_lower;
    return report;
}

}  // namespace ewwp
