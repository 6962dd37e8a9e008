#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ewwp/core_model.hpp"
#include "ewwp/packet_optimizer.hpp"
#include "ewwp/series.hpp"

namespace ewwp {

enum class Command { fig1, trajectories, uncertainty, gibbs, limit, oracle_check };

enum class LimitMode { constrained, fixed_hbar };

enum class ExitCode : int { success = 0, usage = 1, validation = 2, io = 3 };

/// Invalid configuration; maps to ExitCode::usage.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A time bound given either in absolute units ("0.0025") or in periods of
/// the central level ("2T", "0.5T", "T").
struct TimeSpec {
    double value = 2.0;
    bool in_periods = true;

    double resolve(double period) const { return in_periods ? value * period : value; }
};

TimeSpec parse_time_spec(const std::string& text);

struct RunConfig {
    Command command = Command::trajectories;
    WellConfig well;
    std::int64_t n = 500;
    std::optional<std::int64_t> N;  // empty means "auto"
    TimeSpec t_max;
    std::size_t steps = 2000;
    OutputFormat format = OutputFormat::csv;
    std::string out;  // empty: standard output
    bool normalize_momentum = true;
    EvaluationInstant instant = EvaluationInstant::far_wall_turning;

    // fig1
    std::int64_t n_min = 10;
    std::int64_t n_max = 500;
    std::int64_t n_step = 10;

    // gibbs
    std::vector<std::int64_t> gibbs_orders{10, 20, 50, 100, 200, 500, 1000};

    // limit
    LimitMode limit_mode = LimitMode::constrained;
    bool limit_sqrt_width = false;
    std::vector<std::int64_t> limit_n_values{100, 200, 400, 800};
    std::size_t limit_t_points = 2048;

    // oracle-check
    std::size_t oracle_grid_points = 0;  // 0: recommended per packet

    /// Throws UsageError on inconsistent settings.
    void validate() const;
};

struct RunResult {
    TimeSeries series;
    bool checks_passed = true;
    std::vector<std::string> notes;  // human-readable diagnostics
};

/// Computes the table for the configured command. Throws UsageError for bad
/// configurations; internal tolerance failures set checks_passed = false.
RunResult run(const RunConfig& config);

/// Packet width for trajectories and uncertainty: the explicit N, or the
/// optimiser's choice for n.
std::int64_t resolve_width(const RunConfig& config);

std::string to_string(Command command);
std::optional<Command> parse_command(const std::string& text);

}  // namespace ewwp
