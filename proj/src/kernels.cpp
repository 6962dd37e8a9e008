#include "ewwp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ewwp::kernels {

std::vector<double> time_grid(double t_begin, double t_end, std::size_t steps)
{
    if (steps < 2) {
        throw std::domain_error("time grid needs at least 2 points");
    }
    if (!(t_end > t_begin)) {
        throw std::domain_error("time grid needs t_end > t_begin");
    }
    std::vector<double> ts(steps);
    const double dt = (t_end - t_begin) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        ts[i] = t_begin + dt * static_cast<double>(i);
    }
    ts.back() = t_end;
    return ts;
}

namespace {

FejerSample fejer_at(const ClassicalOrbit& orbit, std::int64_t N, double t)
{
    return {t, fejer_position(orbit, N, t), fejer_position_sq(orbit, N, t),
            fejer_momentum(orbit, N, t), fejer_momentum_sq(orbit)};
}

}  // namespace

std::vector<ExpectationSample> expectations(const PacketMoments& moments,
                                            std::span<const double> ts)
{
    return parallel_map(ts.size(), [&](std::size_t i) { return moments.sample(ts[i]); });
}

std::vector<FejerSample> fejer(const ClassicalOrbit& orbit, std::int64_t N,
                               std::span<const double> ts)
{
    orbit.validate();
    return parallel_map(ts.size(), [&](std::size_t i) { return fejer_at(orbit, N, ts[i]); });
}

double max_abs_difference(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("max_abs_difference: length mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

int thread_count()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace serial {

std::vector<ExpectationSample> expectations(const PacketMoments& moments,
                                            std::span<const double> ts)
{
    return serial_map(ts.size(), [&](std::size_t i) { return moments.sample(ts[i]); });
}

std::vector<FejerSample> fejer(const ClassicalOrbit& orbit, std::int64_t N,
                               std::span<const double> ts)
{
    orbit.validate();
    return serial_map(ts.size(), [&](std::size_t i) { return fejer_at(orbit, N, ts[i]); });
}

}  // namespace serial

}  // namespace ewwp::kernels
