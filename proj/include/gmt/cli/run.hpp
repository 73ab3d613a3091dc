#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gmt/ifn.hpp"
#include "gmt/mcore.hpp"
#include "gmt/weights.hpp"

namespace gmt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

inline constexpr std::size_t kDefaultRealNMax = 10000;
inline constexpr std::size_t kDefaultIfnNMax = 10000;
inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { json, csv };

struct RunConfig {
    /// "analyze" or "ifn-analyze"
    std::string command = "analyze";
    std::optional<std::string> generator;
    std::optional<std::filesystem::path> input;
    /// Last generated index (terms n = 0..n_max).
    std::optional<std::size_t> n_max;
    std::string weights = "ones";
    std::string lambda_grid = "default";
    std::string window = "default";
    /// analyze: multiplicative tolerance (> 1). ifn-analyze: absolute component tolerance.
    std::optional<double> tol;
    /// ifn-analyze only: multiplicative tolerance for the component Tauberian checks (default 1 + tol).
    std::optional<double> mtol;
    double theta = 1.05;
    /// ifn-analyze only: "oplus" (IFWA means) or "otimes" (IFWG means).
    std::string mode = "oplus";
    /// ifn-analyze only: candidate limits "mu,nu".
    std::vector<std::string> xi;
    OutputFormat format = OutputFormat::json;
    std::optional<std::filesystem::path> out;
    bool timestamp = true;
};

/// ones | harmonic | alternating:a,b | custom:<file>
WeightSequence parse_weights(std::string_view spec, std::size_t length);
/// default | dyadic:<j> | comma-separated lambda values
LambdaGrid parse_lambda_grid(std::string_view spec);
/// default (last half) | a:b (inclusive)
TailWindow parse_window(std::string_view spec, std::size_t length);
OutputFormat parse_format(std::string_view text);
/// json unless GMT_DEFAULT_FORMAT names another format.
OutputFormat default_format();
IFN parse_ifn(std::string_view text);

struct RunOutput {
    nlohmann::ordered_json report;
    /// Per-index rows; filled for every run, emitted only for csv output.
    std::string csv;
};

/// Runs the configured pipeline. Throws ConfigError or PreconditionError.
RunOutput execute(const RunConfig& config);

/// execute() plus output handling and exit-code mapping (0 ok, 2 config, 3 numerical).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Scalar verdicts and estimates of a saved report.
nlohmann::ordered_json summarize_report(const nlohmann::ordered_json& report);
/// Per-lambda curves of a saved report, one row per (component, condition, lambda).
std::string report_curves_csv(const nlohmann::ordered_json& report);

int render_report(const std::filesystem::path& input, OutputFormat format, std::ostream& out, std::ostream& err);

}  // namespace gmt::cli
