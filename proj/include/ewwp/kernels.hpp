#pragma once

// Grid kernels. Every kernel comes as an OpenMP version in ewwp::kernels and
// a plain loop in ewwp::kernels::serial; the serial one is the reference the
// tests compare against. Each output element is computed independently, so
// both produce bit-identical results regardless of thread count.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <type_traits>
#include <vector>

#include "ewwp/classical_fourier.hpp"
#include "ewwp/quantum_expectations.hpp"

namespace ewwp::kernels {

struct FejerSample {
    double t = 0.0;
    double x = 0.0;
    double x2 = 0.0;
    double p = 0.0;
    double p2 = 0.0;
};

/// `steps` equally spaced instants from t_begin to t_end inclusive.
std::vector<double> time_grid(double t_begin, double t_end, std::size_t steps);

/// Applies f to 0..count-1 in parallel, in index order of the result. The
/// first exception thrown by any iteration is rethrown after the loop.
template <class F>
auto parallel_map(std::size_t count, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>>
{
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<R> out(count);
    std::exception_ptr failure;
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(ewwp_parallel_map_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return out;
}

template <class F>
auto serial_map(std::size_t count, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>>
{
    std::vector<std::invoke_result_t<F&, std::size_t>> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(f(i));
    }
    return out;
}

std::vector<ExpectationSample> expectations(const PacketMoments& moments,
                                            std::span<const double> ts);
std::vector<FejerSample> fejer(const ClassicalOrbit& orbit, std::int64_t N,
                               std::span<const double> ts);

/// Largest |a_i - b_i|.
double max_abs_difference(std::span<const double> a, std::span<const double> b);

/// Number of threads an OpenMP region would use (1 without OpenMP).
int thread_count();

namespace serial {

std::vector<ExpectationSample> expectations(const PacketMoments& moments,
                                            std::span<const double> ts);
std::vector<FejerSample> fejer(const ClassicalOrbit& orbit, std::int64_t N,
                               std::span<const double> ts);

}  // namespace serial

}  // namespace ewwp::kernels
