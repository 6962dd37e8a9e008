// ewwp: data behind the wave-packet / Fejer-average experiments.
//
//   ewwp fig1          optimal packet width N for n = 10..500
//   ewwp trajectories  <x>, F<x>, <p>, F<p> over [0, t-max]
//   ewwp uncertainty   reduced uncertainties, quantum and Fejer
//   ewwp gibbs         partial-sum overshoot vs Fejer means
//   ewwp limit         convergence along the constrained classical limit
//   ewwp oracle-check  closed forms vs first-principles quadrature

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ewwp/experiment.hpp"

namespace {

int fail(ewwp::ExitCode code, const std::string& kind, const std::string& message)
{
    nlohmann::json record;
    record["error"] = {{"code", static_cast<int>(code)}, {"kind", kind}, {"message", message}};
    std::cerr << record.dump() << '\n';
    return static_cast<int>(code);
}

}  // namespace

int main(int argc, char** argv)
{
    using namespace ewwp;

    CLI::App app{"Equally weighted wave packets in the infinite square well"};
    app.set_config("--config", "", "Plain key=value file; command-line flags take precedence");

    RunConfig config;
    std::string command;
    std::string width = "auto";
    std::string t_max = "2T";
    std::string format = "csv";
    std::string normalize = "on";
    std::string instant = "far-wall";
    std::string limit_mode = "constrained";
    std::string limit_width = "fixed";

    app.add_option("command", command, "fig1 | trajectories | uncertainty | gibbs | limit | oracle-check")
        ->required();
    app.add_option("--n", config.n, "Central quantum number")->capture_default_str();
    app.add_option("--N", width, "Packet half-width, integer or 'auto'")->capture_default_str();
    app.add_option("--t-max", t_max, "End time; a plain number or a multiple of T such as 2T")
        ->capture_default_str();
    app.add_option("--steps", config.steps, "Number of time samples")->capture_default_str();
    app.add_option("--format", format, "csv | json")->capture_default_str();
    app.add_option("--out", config.out, "Output path (default: standard output)");
    app.add_option("--normalize-momentum", normalize, "on | off: divide momenta by p_c")
        ->capture_default_str();
    app.add_option("--a", config.well.a, "Well width")->capture_default_str();
    app.add_option("--mu", config.well.mu, "Mass")->capture_default_str();
    app.add_option("--hbar", config.well.hbar, "Planck constant")->capture_default_str();
    app.add_option("--instant", instant, "initial | far-wall: where N auto compares Delta x Delta p")
        ->capture_default_str();
    app.add_option("--n-min", config.n_min, "fig1: first n")->capture_default_str();
    app.add_option("--n-max", config.n_max, "fig1: last n")->capture_default_str();
    app.add_option("--n-step", config.n_step, "fig1: n increment")->capture_default_str();
    app.add_option("--m", config.gibbs_orders, "gibbs: partial-sum orders")->delimiter(',');
    app.add_option("--limit-mode", limit_mode, "constrained | fixed-hbar")->capture_default_str();
    app.add_option("--width-rule", limit_width, "limit: fixed (uses --N, default 5) | sqrt")
        ->capture_default_str();
    app.add_option("--n-values", config.limit_n_values, "limit: ascending n values")->delimiter(',');
    app.add_option("--t-points", config.limit_t_points, "limit: samples per period")
        ->capture_default_str();
    app.add_option("--grid-points", config.oracle_grid_points,
                   "oracle-check: quadrature grid (0 = per packet)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(ExitCode::usage, "usage", e.what());
    }

    try {
        const auto cmd = parse_command(command);
        if (!cmd) {
            throw UsageError("unknown command '" + command + "'");
        }
        config.command = *cmd;
        if (width != "auto") {
            std::size_t used = 0;
            const long long v = std::stoll(width, &used);
            if (used != width.size()) {
                throw UsageError("N must be an integer or 'auto'");
            }
            config.N = v;
        }
        config.t_max = parse_time_spec(t_max);
        if (format == "csv") {
            config.format = OutputFormat::csv;
        } else if (format == "json") {
            config.format = OutputFormat::json;
        } else {
            throw UsageError("format must be csv or json");
        }
        if (normalize != "on" && normalize != "off") {
            throw UsageError("normalize-momentum must be on or off");
        }
        config.normalize_momentum = normalize == "on";
        if (instant == "initial") {
            config.instant = EvaluationInstant::initial;
        } else if (instant == "far-wall") {
            config.instant = EvaluationInstant::far_wall_turning;
        } else {
            throw UsageError("instant must be initial or far-wall");
        }
        if (limit_mode == "constrained") {
            config.limit_mode = LimitMode::constrained;
        } else if (limit_mode == "fixed-hbar") {
            config.limit_mode = LimitMode::fixed_hbar;
        } else {
            throw UsageError("limit-mode must be constrained or fixed-hbar");
        }
        if (limit_width != "fixed" && limit_width != "sqrt") {
            throw UsageError("width-rule must be fixed or sqrt");
        }
        config.limit_sqrt_width = limit_width == "sqrt";

        const RunResult result = run(config);
        emit(result.series, config.format, config.out);
        for (const auto& note : result.notes) {
            std::cerr << "# " << note << '\n';
        }
        if (!result.checks_passed) {
            return fail(ExitCode::validation, "validation", "internal tolerance check failed");
        }
        return 0;
    } catch (const IoError& e) {
        return fail(ExitCode::io, "io", e.what());
    } catch (const UsageError& e) {
        return fail(ExitCode::usage, "usage", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(ExitCode::usage, "usage", e.what());
    } catch (const std::out_of_range& e) {
        return fail(ExitCode::usage, "usage", e.what());
    } catch (const std::exception& e) {
        return fail(ExitCode::validation, "internal", e.what());
    }
}
