#include "ewwp/experiment.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <string_view>

#include "ewwp/classical_fourier.hpp"
#include "ewwp/kernels.hpp"
#include "ewwp/limit_studies.hpp"
#include "ewwp/oracle_check.hpp"
#include "ewwp/quantum_expectations.hpp"

namespace ewwp {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 6> command_names{{
    {Command::fig1, "fig1"},
    {Command::trajectories, "trajectories"},
    {Command::uncertainty, "uncertainty"},
    {Command::gibbs, "gibbs"},
    {Command::limit, "limit"},
    {Command::oracle_check, "oracle-check"},
}};

// Heisenberg floor with the round-off allowance used throughout.
bool above_floor(double product, double hbar)
{
    return product >= 0.5 * hbar * (1.0 - 1e-9);
}

bool strictly_ascending(const std::vector<std::int64_t>& v)
{
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

RunResult run_fig1(const RunConfig& c)
{
    std::vector<std::int64_t> ns;
    for (std::int64_t n = c.n_min; n <= c.n_max; n += c.n_step) {
        ns.push_back(n);
    }
    if (ns.back() != c.n_max) {
        ns.push_back(c.n_max);
    }
    const auto scan = scan_n(c.well, ns, c.instant);
    RunResult result;
    result.series.columns = {"n", "N_opt", "sqrt_n", "product_min"};
    for (const auto& row : scan.rows) {
        result.series.rows.push_back({static_cast<double>(row.n), static_cast<double>(row.N_opt),
                                      row.sqrt_n, row.product_min});
        if (!above_floor(row.product_min, c.well.hbar)) {
            result.checks_passed = false;
            result.notes.push_back("product below hbar/2 at n=" + std::to_string(row.n));
        }
    }
    if (scan.fit.fitted) {
        result.notes.push_back("fitted exponent m=" + std::to_string(scan.fit.m_exp) +
                               " prefactor=" + std::to_string(scan.fit.prefactor));
    }
    return result;
}

struct TimeWindow {
    std::int64_t N;
    std::vector<double> ts;
    PacketMoments moments;
    ClassicalOrbit orbit;
};

TimeWindow window(const RunConfig& c)
{
    const std::int64_t N = resolve_width(c);
    const double T = classical_period(c.well, c.n);
    return {N, kernels::time_grid(0.0, c.t_max.resolve(T), c.steps),
            PacketMoments(c.well, PacketSpec{c.n, N}), orbit_for_level(c.well, c.n)};
}

RunResult run_trajectories(const RunConfig& c)
{
    const auto w = window(c);
    const auto quantum = kernels::expectations(w.moments, w.ts);
    const auto classical = kernels::fejer(w.orbit, w.N, w.ts);
    const double unit = c.normalize_momentum ? w.orbit.p_c : 1.0;

    RunResult result;
    result.series.columns = {"t", "x_quantum", "x_fejer", "p_quantum", "p_fejer"};
    for (std::size_t i = 0; i < w.ts.size(); ++i) {
        result.series.rows.push_back({w.ts[i], quantum[i].x_mean, classical[i].x,
                                      quantum[i].p_mean / unit, classical[i].p / unit});
        result.checks_passed = result.checks_passed && above_floor(quantum[i].product, c.well.hbar);
    }
    result.notes.push_back("N=" + std::to_string(w.N));
    return result;
}

RunResult run_uncertainty(const RunConfig& c)
{
    const auto w = window(c);
    const auto quantum = kernels::expectations(w.moments, w.ts);
    const auto classical = kernels::fejer(w.orbit, w.N, w.ts);
    auto reduced = [](double mean, double second) {
        return std::sqrt(std::clamp(1.0 - mean * mean / second, 0.0, 1.0));
    };

    RunResult result;
    result.series.columns = {"t", "delta_x", "delta_x_classical", "delta_p", "delta_p_classical"};
    for (std::size_t i = 0; i < w.ts.size(); ++i) {
        const auto& q = quantum[i];
        const auto& f = classical[i];
        result.series.rows.push_back({w.ts[i], reduced(q.x_mean, q.x2_mean), reduced(f.x, f.x2),
                                      reduced(q.p_mean, q.p2_mean), reduced(f.p, f.p2)});
        result.checks_passed = result.checks_passed && above_floor(q.product, c.well.hbar);
    }
    result.notes.push_back("N=" + std::to_string(w.N));
    return result;
}

RunResult run_gibbs(const RunConfig& c)
{
    const auto orbit = orbit_for_level(c.well, c.n);
    const auto ts = kernels::time_grid(0.0, orbit.period(), 10000);
    RunResult result;
    result.series.columns = {"m", "overshoot_ratio", "fejer_max_ratio"};
    const auto rows = kernels::parallel_map(c.gibbs_orders.size(), [&](std::size_t i) {
        const std::int64_t m = c.gibbs_orders[i];
        double fejer_max = 0.0;
        for (const double t : ts) {
            fejer_max = std::max(fejer_max, std::abs(fejer_momentum(orbit, m, t)));
        }
        return std::vector<double>{static_cast<double>(m), gibbs_overshoot(orbit, m),
                                   fejer_max / orbit.p_c};
    });
    for (const auto& row : rows) {
        if (row[2] > 1.0 + 1e-9) {
            result.checks_passed = false;
            result.notes.push_back("Fejer momentum overshoots at m=" +
                                   std::to_string(static_cast<long long>(row[0])));
        }
        result.series.rows.push_back(row);
    }
    return result;
}

RunResult run_limit(const RunConfig& c)
{
    WidthRule rule;
    if (c.limit_sqrt_width) {
        rule.kind = WidthRule::Kind::sqrt_n;
    } else {
        rule.N = c.N.value_or(5);
    }
    LimitStudy study;
    if (c.limit_mode == LimitMode::constrained) {
        study = limit_sequence(c.well.a, c.well.mu, momentum_magnitude(c.well, c.n),
                               c.limit_n_values, rule, c.limit_t_points);
    } else {
        study = limit_sequence_fixed_hbar(c.well, c.limit_n_values, rule, c.limit_t_points);
    }
    RunResult result;
    result.series.columns = {"n", "hbar_eff", "N", "sup_err_x", "sup_err_p", "sup_err_x2"};
    for (const auto& row : study.rows) {
        result.series.rows.push_back({static_cast<double>(row.n), row.hbar_eff,
                                      static_cast<double>(row.N), row.sup_err_x, row.sup_err_p,
                                      row.sup_err_x2});
    }
    result.notes.push_back("last row sup_err_x on a 2x finer grid: " +
                           std::to_string(study.refined_last_sup_err_x));
    return result;
}

RunResult run_oracle_check(const RunConfig& c)
{
    std::vector<PacketSpec> cases{{10, 3}, {50, 7}, {200, 14}};
    if (c.N) {
        cases = {PacketSpec{c.n, *c.N}};
    }
    const OracleTolerances tol;
    RunResult result;
    result.series.columns = {"n",     "N",      "grid_points",   "dev_x",        "dev_x2",
                             "dev_p", "dev_p2", "dev_p2_quadrature", "p2_variation", "dev_x_matrix"};
    for (const auto& spec : cases) {
        const auto d = check_against_oracle(c.well, spec, 32, c.oracle_grid_points);
        result.series.rows.push_back({static_cast<double>(d.n), static_cast<double>(d.N),
                                      static_cast<double>(d.grid_points), d.x, d.x2, d.p, d.p2,
                                      d.p2_quadrature, d.p2_variation, d.x_matrix});
        if (!tol.accepts(d)) {
            result.checks_passed = false;
            result.notes.push_back("oracle tolerance exceeded for n=" + std::to_string(d.n) +
                                   " N=" + std::to_string(d.N));
        }
        if (d.coarse_grid) {
            result.notes.push_back("coarse oracle grid for n=" + std::to_string(d.n));
        }
    }
    return result;
}

}  // namespace

TimeSpec parse_time_spec(const std::string& text)
{
    std::string_view s = text;
    TimeSpec spec;
    spec.in_periods = !s.empty() && s.back() == 'T';
    if (spec.in_periods) {
        s.remove_suffix(1);
    }
    if (s.empty()) {
        if (!spec.in_periods) {
            throw UsageError("empty time value");
        }
        spec.value = 1.0;
    } else {
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), spec.value);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw UsageError("cannot parse time value '" + text + "'");
        }
    }
    if (!(spec.value > 0.0) || !std::isfinite(spec.value)) {
        throw UsageError("time value must be positive, got '" + text + "'");
    }
    return spec;
}

void RunConfig::validate() const
{
    try {
        well.validate();
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    if (steps < 2) {
        throw UsageError("steps must be >= 2");
    }
    if (!(t_max.value > 0.0)) {
        throw UsageError("t-max must be positive");
    }
    if (n < 1) {
        throw UsageError("n must be >= 1");
    }
    if (N && (*N < 0 || *N >= n) && command != Command::limit) {
        throw UsageError("N must satisfy 0 <= N < n");
    }
    if (command == Command::fig1 && (n_min < 4 || n_max < n_min || n_step < 1)) {
        throw UsageError("fig1 needs 4 <= n-min <= n-max and n-step >= 1");
    }
    if (command == Command::gibbs &&
        (gibbs_orders.empty() || gibbs_orders.front() < 1 || !strictly_ascending(gibbs_orders))) {
        throw UsageError("gibbs orders must be >= 1 and strictly ascending");
    }
    if (command == Command::limit && (limit_n_values.empty() || !strictly_ascending(limit_n_values))) {
        throw UsageError("limit n values must be strictly ascending");
    }
}

std::int64_t resolve_width(const RunConfig& config)
{
    if (config.N) {
        return *config.N;
    }
    if (config.n < 4) {
        throw UsageError("N=auto needs n >= 4");
    }
    return optimal_N(config.well, config.n, {}, config.instant).N_opt;
}

RunResult run(const RunConfig& config)
{
    config.validate();
    try {
        switch (config.command) {
        case Command::fig1:
            return run_fig1(config);
        case Command::trajectories:
            return run_trajectories(config);
        case Command::uncertainty:
            return run_uncertainty(config);
        case Command::gibbs:
            return run_gibbs(config);
        case Command::limit:
            return run_limit(config);
        case Command::oracle_check:
            return run_oracle_check(config);
        }
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown command");
}

std::string to_string(Command command)
{
    for (const auto& [c, name] : command_names) {
        if (c == command) {
            return std::string(name);
        }
    }
    return "unknown";
}

std::optional<Command> parse_command(const std::string& text)
{
    for (const auto& [c, name] : command_names) {
        if (name == text) {
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace ewwp
