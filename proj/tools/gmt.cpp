// gmt: weighted geometric mean summability diagnostics for real and IFN sequences.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gmt/cli/generators.hpp"
#include "gmt/cli/run.hpp"
#include "gmt/cli/sequence_io.hpp"

namespace {

using gmt::cli::ConfigError;
using gmt::cli::RunConfig;

void add_analysis_options(CLI::App& cmd, RunConfig& config, std::string& format) {
    cmd.add_option("--generator", config.generator, "Built-in sequence, e.g. ex2 or constant:c=3");
    cmd.add_option("--in", config.input, "Sequence file");
    cmd.add_option("--n-max", config.n_max, "Last generated index (terms 0..n_max)");
    cmd.add_option("--weights", config.weights, "ones | harmonic | alternating:a,b | custom:<file>");
    cmd.add_option("--lambda-grid", config.lambda_grid, "default | dyadic:<j> | comma-separated lambdas");
    cmd.add_option("--window", config.window, "default (last half) | start:end");
    cmd.add_option("--tol", config.tol, "Verdict tolerance");
    cmd.add_option("--theta", config.theta, "Pass threshold for the Tauberian condition estimates");
    cmd.add_option("--format", format, "json | csv (default from GMT_DEFAULT_FORMAT, else json)");
    cmd.add_option("--out", config.out, "Output path (csv also writes <out>.json)");
    cmd.add_flag("--no-timestamp", [&config](std::int64_t) { config.timestamp = false; }, "Omit generated_at");
}

int generate(const std::string& spec_text, std::optional<std::size_t> n_max_opt, const std::string& out_path) {
    auto spec = gmt::cli::parse_generator(spec_text);
    const bool ifn = gmt::cli::is_ifn_generator(spec.name);
    const std::size_t n_max = n_max_opt.value_or(ifn ? gmt::cli::kDefaultIfnNMax : gmt::cli::kDefaultRealNMax);
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw ConfigError("cannot write " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    if (ifn) {
        gmt::cli::write_ifn_sequence(out, gmt::cli::generate_ifn(spec, n_max));
    } else {
        gmt::cli::write_real_sequence(out, gmt::cli::generate_real(spec, n_max));
    }
    return gmt::cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted geometric mean summability and Tauberian diagnostics"};
    app.require_subcommand(1);

    std::string gen_spec;
    std::optional<std::size_t> gen_n_max;
    std::string gen_out;
    auto* gen = app.add_subcommand("generate", "Write a built-in sequence to a file or stdout");
    gen->add_option("--generator", gen_spec, "Generator id")->required();
    gen->add_option("--n-max", gen_n_max, "Last generated index");
    gen->add_option("--out", gen_out, "Output path");

    RunConfig analyze_config;
    std::string analyze_format;
    auto* analyze = app.add_subcommand("analyze", "Weighted geometric means and Tauberian estimates of a real sequence");
    add_analysis_options(*analyze, analyze_config, analyze_format);

    RunConfig ifn_config;
    ifn_config.command = "ifn-analyze";
    std::string ifn_format;
    auto* ifn = app.add_subcommand("ifn-analyze", "IFWA/IFWG means, IFN convergence checks and Tauberian estimates");
    add_analysis_options(*ifn, ifn_config, ifn_format);
    ifn->add_option("--mode", ifn_config.mode, "oplus (IFWA) | otimes (IFWG)");
    ifn->add_option("--xi", ifn_config.xi, "Candidate limit 'mu,nu' (repeatable)");
    ifn->add_option("--mtol", ifn_config.mtol, "Multiplicative tolerance for component checks (default 1 + tol)");

    std::string report_in;
    std::string report_format;
    auto* report = app.add_subcommand("report", "Summarize a saved JSON report (json) or export its curves (csv)");
    report->add_option("--in", report_in, "Report produced by analyze or ifn-analyze")->required();
    report->add_option("--format", report_format, "json | csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return gmt::cli::kExitConfig;
    }

    try {
        if (gen->parsed()) {
            return generate(gen_spec, gen_n_max, gen_out);
        }
        if (report->parsed()) {
            auto format = report_format.empty() ? gmt::cli::default_format() : gmt::cli::parse_format(report_format);
            return gmt::cli::render_report(report_in, format, std::cout, std::cerr);
        }
        RunConfig& config = analyze->parsed() ? analyze_config : ifn_config;
        const std::string& format = analyze->parsed() ? analyze_format : ifn_format;
        config.format = format.empty() ? gmt::cli::default_format() : gmt::cli::parse_format(format);
        return gmt::cli::run(config, std::cout, std::cerr);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return gmt::cli::kExitConfig;
    }
}
