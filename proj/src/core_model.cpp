#include "ewwp/core_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ewwp {

void WellConfig::validate() const
{
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(a) || !positive(mu) || !positive(hbar)) {
        throw std::domain_error("well parameters a, mu, hbar must be finite and positive");
    }
}

void PacketSpec::validate() const
{
    if (n < 1) {
        throw std::domain_error("central quantum number must be >= 1, got " + std::to_string(n));
    }
    if (N < 0 || N >= n) {
        throw std::domain_error("packet half-width must satisfy 0 <= N < n, got n=" +
                                std::to_string(n) + " N=" + std::to_string(N));
    }
}

namespace {

void require_level(std::int64_t m)
{
    if (m < 1) {
        throw std::domain_error("quantum number must be >= 1, got " + std::to_string(m));
    }
}

void require_inside(const WellConfig& cfg, double x)
{
    if (!(x >= 0.0 && x <= cfg.a)) {
        throw std::domain_error("position " + std::to_string(x) + " outside [0, a]");
    }
}

}  // namespace

double sin_pi(double u)
{
    // reduced to [-1/2, 1/2]; integer u lands on an exact zero
    double r = std::remainder(u, 2.0);
    if (r > 0.5) {
        r = 1.0 - r;
    } else if (r < -0.5) {
        r = -1.0 - r;
    }
    return std::sin(pi * r);
}

double cos_pi(double u)
{
    return sin_pi(u + 0.5);
}

double momentum_magnitude(const WellConfig& cfg, std::int64_t m)
{
    require_level(m);
    return static_cast<double>(m) * pi * cfg.hbar / cfg.a;
}

double energy(const WellConfig& cfg, std::int64_t m)
{
    const double p = momentum_magnitude(cfg, m);
    return p * p / (2.0 * cfg.mu);
}

double classical_period(const WellConfig& cfg, std::int64_t n)
{
    return 2.0 * cfg.a * cfg.mu / momentum_magnitude(cfg, n);
}

SpectralData spectral_data(const WellConfig& cfg, std::int64_t n)
{
    cfg.validate();
    SpectralData s;
    s.p_n = momentum_magnitude(cfg, n);
    s.p_c = s.p_n;
    s.T = 2.0 * cfg.a * cfg.mu / s.p_c;
    s.omega = 2.0 * pi / s.T;
    s.omega_n = pi * s.p_n / (cfg.mu * cfg.a);
    return s;
}

double bohr_unit(const WellConfig& cfg)
{
    return cfg.hbar * pi * pi / (2.0 * cfg.mu * cfg.a * cfg.a);
}

double stationary_wavefunction(const WellConfig& cfg, std::int64_t m, double x)
{
    require_level(m);
    require_inside(cfg, x);
    return std::sqrt(2.0 / cfg.a) * sin_pi(static_cast<double>(m) * (x / cfg.a));
}

double stationary_wavefunction_dx(const WellConfig& cfg, std::int64_t m, double x)
{
    require_level(m);
    require_inside(cfg, x);
    const double k = static_cast<double>(m) * pi / cfg.a;
    return std::sqrt(2.0 / cfg.a) * k * cos_pi(static_cast<double>(m) * (x / cfg.a));
}

double reduce_phase(double phase)
{
    return std::remainder(phase, 2.0 * pi);
}

std::complex<double> ewwp_wavefunction(const WellConfig& cfg, const PacketSpec& spec, double x,
                                       double t)
{
    spec.validate();
    require_inside(cfg, x);
    const double unit = bohr_unit(cfg);
    std::complex<double> sum{0.0, 0.0};
    for (std::int64_t j = spec.lowest(); j <= spec.highest(); ++j) {
        const double jd = static_cast<double>(j);
        const double phase = reduce_phase(jd * jd * unit * t);
        sum += stationary_wavefunction(cfg, j, x) * std::polar(1.0, -phase);
    }
    return sum / std::sqrt(static_cast<double>(spec.size()));
}

double trapezoid(std::span<const double> samples, double step)
{
    if (samples.size() < 2) {
        return 0.0;
    }
    double sum = 0.5 * (samples.front() + samples.back());
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
        sum += samples[i];
    }
    return sum * step;
}

std::vector<std::complex<double>> sample_packet(const WellConfig& cfg, const PacketSpec& spec,
                                                const UniformGrid& grid, double t)
{
    spec.validate();
    const double unit = bohr_unit(cfg);
    const double norm = std::sqrt(2.0 / cfg.a) / std::sqrt(static_cast<double>(spec.size()));
    std::vector<std::complex<double>> psi(grid.points, {0.0, 0.0});
    for (std::int64_t j = spec.lowest(); j <= spec.highest(); ++j) {
        const double jd = static_cast<double>(j);
        const std::complex<double> phase = norm * std::polar(1.0, -reduce_phase(jd * jd * unit * t));
        for (std::size_t i = 0; i < grid.points; ++i) {
            psi[i] += sin_pi(jd * (grid.at(i) / cfg.a)) * phase;
        }
    }
    return psi;
}

double packet_norm(const WellConfig& cfg, const PacketSpec& spec, double t,
                   std::size_t grid_points)
{
    const UniformGrid grid{cfg.a, grid_points};
    const auto psi = sample_packet(cfg, spec, grid, t);
    std::vector<double> density(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        density[i] = std::norm(psi[i]);
    }
    return trapezoid(density, grid.step());
}

}  // namespace ewwp
