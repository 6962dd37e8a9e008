#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

namespace ewwp {

inline constexpr double pi = std::numbers::pi;

/// Infinite square well of width `a` for a particle of mass `mu`.
/// Default construction gives natural units a = mu = hbar = 1.
struct WellConfig {
    double a = 1.0;
    double mu = 1.0;
    double hbar = 1.0;

    /// Throws std::domain_error unless all three parameters are finite and > 0.
    void validate() const;
};

/// Equally weighted packet of the 2N+1 levels n-N .. n+N.
struct PacketSpec {
    std::int64_t n = 1;
    std::int64_t N = 0;

    /// Throws std::domain_error unless n >= 1, N >= 0 and N < n.
    void validate() const;

    std::int64_t size() const { return 2 * N + 1; }
    std::int64_t lowest() const { return n - N; }
    std::int64_t highest() const { return n + N; }
};

/// Classical-correspondence quantities of level n. The classical momentum
/// p_c is identified with p_n.
struct SpectralData {
    double p_n = 0.0;
    double p_c = 0.0;
    double T = 0.0;
    double omega = 0.0;
    double omega_n = 0.0;
};

double momentum_magnitude(const WellConfig& cfg, std::int64_t m);
double energy(const WellConfig& cfg, std::int64_t m);
double classical_period(const WellConfig& cfg, std::int64_t n);
SpectralData spectral_data(const WellConfig& cfg, std::int64_t n);

/// hbar pi^2 / (2 mu a^2): the Bohr frequency of the pair (j, k) is
/// (k^2 - j^2) times this.
double bohr_unit(const WellConfig& cfg);

/// sqrt(2/a) sin(m pi x / a); x must lie in [0, a].
double stationary_wavefunction(const WellConfig& cfg, std::int64_t m, double x);

/// d/dx of stationary_wavefunction.
double stationary_wavefunction_dx(const WellConfig& cfg, std::int64_t m, double x);

/// psi(x, t) of the equally weighted packet.
std::complex<double> ewwp_wavefunction(const WellConfig& cfg, const PacketSpec& spec, double x,
                                       double t);

/// sin(pi u) and cos(pi u) with the argument reduced exactly, so integer u
/// gives exact zeros.
double sin_pi(double u);
double cos_pi(double u);

/// Reduce a phase to [-pi, pi].
double reduce_phase(double phase);

/// Uniform grid over [0, a] with both walls included.
struct UniformGrid {
    double a = 1.0;
    std::size_t points = 4096;

    double step() const { return a / static_cast<double>(points - 1); }
    double at(std::size_t i) const
    {
        return i + 1 == points ? a : static_cast<double>(i) * step();
    }
};

inline constexpr std::size_t default_grid_points = 4096;

/// Composite trapezoid rule over samples on a uniform grid.
double trapezoid(std::span<const double> samples, double step);

/// Packet amplitude sampled on the grid at time t.
std::vector<std::complex<double>> sample_packet(const WellConfig& cfg, const PacketSpec& spec,
                                                const UniformGrid& grid, double t);

/// Quadrature of |psi(x, t)|^2 over the well.
double packet_norm(const WellConfig& cfg, const PacketSpec& spec, double t,
                   std::size_t grid_points = default_grid_points);

}  // namespace ewwp
