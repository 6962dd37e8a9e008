#include "ewwp/quantum_expectations.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "ewwp/summation.hpp"

namespace ewwp {

namespace {

double phase_of(double frequency, double t)
{
    return reduce_phase(frequency * t);
}

// Variances this far below zero mean the closed forms are inconsistent.
constexpr double variance_guard = 1e-12;

}  // namespace

PacketMoments::PacketMoments(const WellConfig& cfg, const PacketSpec& spec)
    : cfg_(cfg), spec_(spec)
{
    cfg_.validate();
    spec_.validate();
    const std::int64_t n = spec_.n;
    const std::int64_t N = spec_.N;
    const double a = cfg_.a;
    const double unit = bohr_unit(cfg_);
    const double weight = 1.0 / static_cast<double>(spec_.size());

    // <x>: two branches per (l, r)
    const double x_scale = 4.0 * a / (pi * pi) * weight;
    for (std::int64_t l = 0; l < N; ++l) {
        for (std::int64_t r = 0; r <= l; ++r) {
            const std::int64_t h = 2 * r + 1;
            const double hd = static_cast<double>(h);
            for (const std::int64_t off : {2 * N - 4 * l + 2 * r - 1, 2 * N - 4 * l + 2 * r - 3}) {
                const double s = static_cast<double>(2 * n + off);
                x_terms_.push_back({x_scale * (1.0 / (s * s) - 1.0 / (hd * hd)),
                                    hd * s * unit, h});
            }
        }
    }

    // <x^2>
    const double a2 = a * a;
    CompensatedSum diagonal;
    for (std::int64_t m = -N; m <= N; ++m) {
        const double j = static_cast<double>(n + m);
        diagonal += 1.0 / (j * j);
    }
    x2_static_ = a2 / 3.0 - weight * a2 / (2.0 * pi * pi) * diagonal.value();
    const double x2_scale = 4.0 * a2 / (pi * pi) * weight;
    for (std::int64_t l = 1; l <= 2 * N; ++l) {
        for (std::int64_t r = 1; r <= l; ++r) {
            const double rd = static_cast<double>(r);
            const double s = static_cast<double>(2 * n - 2 * N + 2 * l - r);
            const double sign = (r % 2 == 0) ? 1.0 : -1.0;
            x2_terms_.push_back({x2_scale * sign * (1.0 / (rd * rd) - 1.0 / (s * s)),
                                 rd * s * unit, r});
        }
    }

    p_n_ = momentum_magnitude(cfg_, n);
    const double nd = static_cast<double>(n);
    const double Nd = static_cast<double>(N);
    p2_ = p_n_ * p_n_ * (1.0 + (Nd + Nd * Nd) / (3.0 * nd * nd));
}

double PacketMoments::x(double t) const
{
    CompensatedSum sum;
    for (const auto& term : x_terms_) {
        sum += term.amplitude * std::cos(phase_of(term.frequency, t));
    }
    return cfg_.a / 2.0 + sum.value();
}

double PacketMoments::x2(double t) const
{
    CompensatedSum sum;
    for (const auto& term : x2_terms_) {
        sum += term.amplitude * std::cos(phase_of(term.frequency, t));
    }
    return x2_static_ + sum.value();
}

double PacketMoments::p(double t) const
{
    CompensatedSum sum;
    for (const auto& term : x_terms_) {
        sum += -term.amplitude * term.frequency * std::sin(phase_of(term.frequency, t));
    }
    return cfg_.mu * sum.value();
}

double PacketMoments::quasi_x(double t) const
{
    const double scale = 4.0 * cfg_.a / (pi * pi) / static_cast<double>(spec_.size());
    CompensatedSum sum;
    for (const auto& term : x_terms_) {
        const double h = static_cast<double>(term.harmonic);
        sum += std::cos(phase_of(term.frequency, t)) / (h * h);
    }
    return cfg_.a / 2.0 - scale * sum.value();
}

double PacketMoments::quasi_p(double t) const
{
    const double scale = 4.0 * p_n_ / pi / static_cast<double>(spec_.size());
    CompensatedSum sum;
    for (const auto& term : x_terms_) {
        sum += std::sin(phase_of(term.frequency, t)) / static_cast<double>(term.harmonic);
    }
    return scale * sum.value();
}

ExpectationSample PacketMoments::sample(double t) const
{
    ExpectationSample s;
    s.t = t;
    s.x_mean = x(t);
    s.x2_mean = x2(t);
    s.p_mean = p(t);
    s.p2_mean = p2_;
    const double var_x = s.x2_mean - s.x_mean * s.x_mean;
    const double var_p = s.p2_mean - s.p_mean * s.p_mean;
    if (var_x < -variance_guard * cfg_.a * cfg_.a || var_p < -variance_guard * p2_) {
        throw std::logic_error("negative variance in closed-form moments");
    }
    s.dx = std::sqrt(std::max(var_x, 0.0));
    s.dp = std::sqrt(std::max(var_p, 0.0));
    s.product = s.dx * s.dp;
    return s;
}

double exp_x(const WellConfig& cfg, const PacketSpec& spec, double t)
{
    return PacketMoments(cfg, spec).x(t);
}

double exp_x2(const WellConfig& cfg, const PacketSpec& spec, double t)
{
    return PacketMoments(cfg, spec).x2(t);
}

double exp_p(const WellConfig& cfg, const PacketSpec& spec, double t)
{
    return PacketMoments(cfg, spec).p(t);
}

double exp_p2(const WellConfig& cfg, const PacketSpec& spec)
{
    cfg.validate();
    spec.validate();
    const double p_n = momentum_magnitude(cfg, spec.n);
    const double n = static_cast<double>(spec.n);
    const double N = static_cast<double>(spec.N);
    return p_n * p_n * (1.0 + (N + N * N) / (3.0 * n * n));
}

double quasi_exp(const WellConfig& cfg, const PacketSpec& spec, double t, Quantity kind)
{
    const PacketMoments moments(cfg, spec);
    return kind == Quantity::position ? moments.quasi_x(t) : moments.quasi_p(t);
}

double reduced_uncertainty(const WellConfig& cfg, const PacketSpec& spec, double t, Quantity kind)
{
    const PacketMoments moments(cfg, spec);
    double mean = 0.0;
    double second = 0.0;
    if (kind == Quantity::position) {
        mean = moments.x(t);
        second = moments.x2(t);
    } else {
        mean = moments.p(t);
        second = moments.p2();
    }
    return std::sqrt(std::clamp(1.0 - mean * mean / second, 0.0, 1.0));
}

double uncertainty_product(const WellConfig& cfg, const PacketSpec& spec, double t)
{
    return PacketMoments(cfg, spec).sample(t).product;
}

OracleResult oracle_expectation(const WellConfig& cfg, const PacketSpec& spec, double t,
                                ObservableKind kind, std::size_t grid_points)
{
    cfg.validate();
    spec.validate();
    if (grid_points < 5) {
        throw std::domain_error("oracle grid needs at least 5 points");
    }
    OracleResult result;
    const auto highest = static_cast<std::size_t>(spec.highest());
    if (grid_points < 512 || grid_points < 16 * (highest + 1)) {
        result.status = OracleStatus::coarse_grid;
    }

    const UniformGrid grid{cfg.a, grid_points};
    const double h = grid.step();
    std::vector<double> integrand(grid_points);

    if (kind == ObservableKind::momentum_sq) {
        // |psi'|^2 with psi' summed level by level
        const double unit = bohr_unit(cfg);
        const double norm = 1.0 / std::sqrt(static_cast<double>(spec.size()));
        std::vector<std::complex<double>> dpsi(grid_points, {0.0, 0.0});
        for (std::int64_t j = spec.lowest(); j <= spec.highest(); ++j) {
            const double jd = static_cast<double>(j);
            const auto phase = norm * std::polar(1.0, -reduce_phase(jd * jd * unit * t));
            for (std::size_t i = 0; i < grid_points; ++i) {
                dpsi[i] += stationary_wavefunction_dx(cfg, j, grid.at(i)) * phase;
            }
        }
        for (std::size_t i = 0; i < grid_points; ++i) {
            integrand[i] = std::norm(dpsi[i]);
        }
        result.value = cfg.hbar * cfg.hbar * trapezoid(integrand, h);
        return result;
    }

    const auto psi = sample_packet(cfg, spec, grid, t);
    switch (kind) {
    case ObservableKind::position:
        for (std::size_t i = 0; i < grid_points; ++i) {
            integrand[i] = std::norm(psi[i]) * grid.at(i);
        }
        break;
    case ObservableKind::position_sq:
        for (std::size_t i = 0; i < grid_points; ++i) {
            const double x = grid.at(i);
            integrand[i] = std::norm(psi[i]) * x * x;
        }
        break;
    case ObservableKind::momentum: {
        // psi is odd about both walls, which supplies the ghost points
        const auto last = static_cast<std::ptrdiff_t>(grid_points) - 1;
        auto at = [&](std::ptrdiff_t i) -> std::complex<double> {
            if (i < 0) {
                return -psi[static_cast<std::size_t>(-i)];
            }
            if (i > last) {
                return -psi[static_cast<std::size_t>(2 * last - i)];
            }
            return psi[static_cast<std::size_t>(i)];
        };
        for (std::ptrdiff_t i = 0; i <= last; ++i) {
            const auto d = (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) / (12.0 * h);
            integrand[static_cast<std::size_t>(i)] = (std::conj(psi[static_cast<std::size_t>(i)]) * d).imag();
        }
        result.value = cfg.hbar * trapezoid(integrand, h);
        return result;
    }
    case ObservableKind::momentum_sq:
        break;
    default:
        throw std::domain_error("unknown observable kind");
    }
    result.value = trapezoid(integrand, h);
    return result;
}

double matrix_element_expectation(const WellConfig& cfg, const PacketSpec& spec, double t,
                                  ObservableKind kind)
{
    cfg.validate();
    spec.validate();
    const double a = cfg.a;
    const double unit = bohr_unit(cfg);

    auto element = [&](std::int64_t j, std::int64_t k) -> std::complex<double> {
        const double jd = static_cast<double>(j);
        const double kd = static_cast<double>(k);
        const bool odd = ((j + k) % 2) != 0;
        const double diff = jd * jd - kd * kd;
        switch (kind) {
        case ObservableKind::position:
            if (j == k) {
                return a / 2.0;
            }
            return odd ? -8.0 * a * jd * kd / (pi * pi * diff * diff) : 0.0;
        case ObservableKind::position_sq:
            if (j == k) {
                return a * a * (1.0 / 3.0 - 1.0 / (2.0 * pi * pi * jd * jd));
            }
            return (odd ? -1.0 : 1.0) * 8.0 * a * a * jd * kd / (pi * pi * diff * diff);
        case ObservableKind::momentum:
            if (j == k || !odd) {
                return 0.0;
            }
            return {0.0, -cfg.hbar * 4.0 * jd * kd / (a * diff)};
        case ObservableKind::momentum_sq:
            if (j != k) {
                return 0.0;
            }
            return std::pow(jd * pi * cfg.hbar / a, 2);
        }
        throw std::domain_error("unknown observable kind");
    };

    std::complex<double> total{0.0, 0.0};
    for (std::int64_t j = spec.lowest(); j <= spec.highest(); ++j) {
        for (std::int64_t k = spec.lowest(); k <= spec.highest(); ++k) {
            const double jd = static_cast<double>(j);
            const double kd = static_cast<double>(k);
            const double phase = reduce_phase((jd * jd - kd * kd) * unit * t);
            total += std::polar(1.0, phase) * element(j, k);
        }
    }
    return total.real() / static_cast<double>(spec.size());
}

}  // namespace ewwp
