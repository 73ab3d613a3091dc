#include "gmt/cli/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include "gmt/cli/generators.hpp"
#include "gmt/cli/sequence_io.hpp"
#include "gmt/errors.hpp"
#include "gmt/gmean.hpp"
#include "gmt/tauber.hpp"
#include "gmt/text.hpp"

namespace gmt::cli {

using nlohmann::ordered_json;

namespace {

constexpr std::size_t kTailSamples = 10;

double parse_number(std::string_view text, const std::string& what) {
    try {
        return parse_double(text, what);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

std::size_t parse_index(std::string_view text, const std::string& what) {
    double v = parse_number(text, what);
    if (v < 0 || v != std::floor(v) || v > 1e15) throw ConfigError(what + ": expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

std::string timestamp_utc() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Multiplicative quantity: log form always, plain value when it fits in a double (null otherwise).
ordered_json mvalue(LogReal x) {
    ordered_json j;
    j["log"] = x.log();
    j["value"] = x.value();
    return j;
}

ordered_json window_json(TailWindow w) { return ordered_json::array({w.start(), w.end()}); }

ordered_json ifn_json(const IFN& a) { return ordered_json::array({a.mu(), a.nu()}); }

ordered_json curve_json(const ConditionEstimate& c) {
    ordered_json j;
    j["estimate"] = mvalue(c.value);
    ordered_json curve = ordered_json::array();
    for (const auto& e : c.per_lambda) {
        ordered_json row;
        row["lambda"] = e.lambda;
        row["estimate"] = e.value ? mvalue(*e.value) : ordered_json(nullptr);
        row["evaluated"] = e.evaluated;
        row["skipped"] = e.skipped;
        curve.push_back(row);
    }
    j["per_lambda"] = curve;
    return j;
}

ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    j["pass"] = v.pass;
    j["limit"] = mvalue(v.limit);
    j["max_log_deviation"] = v.max_log_deviation;
    j["window"] = window_json(v.window);
    j["tolerance"] = v.tolerance;
    return j;
}

ordered_json tauber_json(const TauberReport& r, double theta) {
    ordered_json j;
    j["gbar"] = verdict_json(r.gbar);
    j["theta"] = theta;
    j["con1"] = curve_json(r.con1);
    j["con2"] = curve_json(r.con2);
    j["slow_oscillation"] = {{"upper", curve_json(r.slow_oscillation.upper)},
                             {"lower", curve_json(r.slow_oscillation.lower)}};
    j["landau"] = {{"bound", mvalue(r.landau.bound)},
                   {"early_bound", mvalue(r.landau.early_bound)},
                   {"late_bound", mvalue(r.landau.late_bound)},
                   {"vanish", r.landau.vanish}};
    j["flags"] = {{"con1", r.con1_pass},
                  {"con2", r.con2_pass},
                  {"slow_oscillation", r.slow_oscillation_pass},
                  {"landau_bounded", r.landau_bounded_pass},
                  {"landau_vanish", r.landau.vanish}};
    j["recovery"] = r.recovery;
    return j;
}

ordered_json component_json(const ComponentConvergence& c) {
    return {{"converges", c.converges},
            {"sandwich", c.sandwich},
            {"max_mu_deviation", c.max_mu_deviation},
            {"max_nu_deviation", c.max_nu_deviation}};
}

ordered_json config_json(const RunConfig& c, std::size_t n_max, double tol) {
    ordered_json j;
    j["command"] = c.command;
    j["generator"] = c.generator ? ordered_json(*c.generator) : ordered_json(nullptr);
    j["input"] = c.input ? ordered_json(c.input->string()) : ordered_json(nullptr);
    j["n_max"] = n_max;
    j["weights"] = c.weights;
    j["lambda_grid"] = c.lambda_grid;
    j["window"] = c.window;
    j["tol"] = tol;
    j["theta"] = c.theta;
    if (c.command == "ifn-analyze") {
        j["mode"] = c.mode;
        j["xi"] = c.xi;
    }
    j["format"] = c.format == OutputFormat::json ? "json" : "csv";
    return j;
}

ordered_json sva_json(const WeightSequence& w, std::size_t length) {
    // Own grid: the finer dyadic levels are needed to tell P_n ~ log n apart from P_n ~ n.
    LambdaGrid grid = LambdaGrid::dyadic(8);
    std::size_t fit = static_cast<std::size_t>(std::floor(static_cast<double>(length - 1) / grid.values().back()));
    if (fit < 2) return nullptr;
    TailWindow window(fit / 2, fit);
    auto est = sva_plus_estimate(w.prefix(length), grid, window);
    ordered_json j;
    j["window"] = window_json(window);
    j["floor"] = est.floor;
    j["verdict"] = est.verdict;
    ordered_json rows = ordered_json::array();
    for (const auto& r : est.per_lambda) rows.push_back({{"lambda", r.lambda}, {"infimum", r.infimum}});
    j["per_lambda"] = rows;
    return j;
}

void base_header(ordered_json& report, const RunConfig& config) {
    report["schema_version"] = kSchemaVersion;
    report["tool"] = "gmt";
    if (config.timestamp) report["generated_at"] = timestamp_utc();
}

RealSequence load_real(const RunConfig& config, std::size_t n_max, std::string& source) {
    if (config.generator) {
        source = "generator:" + *config.generator;
        return generate_real(parse_generator(*config.generator), n_max);
    }
    source = "file:" + config.input->string();
    std::ifstream in(*config.input);
    if (!in) throw ConfigError("cannot open input file " + config.input->string());
    return read_real_sequence(in, config.input->string());
}

IFNSequence load_ifn(const RunConfig& config, std::size_t n_max, std::string& source) {
    if (config.generator) {
        source = "generator:" + *config.generator;
        return generate_ifn(parse_generator(*config.generator), n_max);
    }
    source = "file:" + config.input->string();
    std::ifstream in(*config.input);
    if (!in) throw ConfigError("cannot open input file " + config.input->string());
    return read_ifn_sequence(in, config.input->string());
}

void check_source(const RunConfig& config) {
    if (config.generator.has_value() == config.input.has_value()) {
        throw ConfigError("exactly one of --generator and --in is required");
    }
}

RunOutput execute_real(const RunConfig& config) {
    std::size_t n_max = config.n_max.value_or(kDefaultRealNMax);
    double tol_value = config.tol.value_or(MTolerance::exact_default().value());
    if (!(tol_value > 1.0)) throw ConfigError("--tol for analyze is multiplicative and must exceed 1");
    if (!(config.theta > 1.0)) throw ConfigError("--theta must exceed 1");

    std::string source;
    RealSequence raw = load_real(config, n_max, source);
    LogSequence u = raw.to_log();
    WeightSequence w = parse_weights(config.weights, u.size());
    LambdaGrid grid = parse_lambda_grid(config.lambda_grid);
    TailWindow window = parse_window(config.window, u.size());
    TauberThresholds thresholds{MTolerance(tol_value), config.theta};

    LogSequence means = weighted_geo_means(u, w);
    TauberReport tauber = recoverability_report(u, w, grid, window, thresholds);

    RunOutput result;
    auto& report = result.report;
    base_header(report, config);
    report["command"] = "analyze";
    report["config"] = config_json(config, n_max, tol_value);
    report["sequence"] = {{"source", source}, {"length", u.size()}, {"log_domain", raw.log_domain}};
    report["weights"] = {{"family", config.weights}, {"sva_plus", sva_json(w, u.size())}};
    report["lambda_grid"] = ordered_json(std::vector<double>(grid.values().begin(), grid.values().end()));
    ordered_json tail = ordered_json::array();
    for (std::size_t n = u.size() - std::min(u.size(), kTailSamples); n < u.size(); ++n) {
        tail.push_back({{"n", n}, {"u", mvalue(u[n])}, {"w", mvalue(means[n])}});
    }
    report["transform_tail"] = tail;
    report["tauber"] = tauber_json(tauber, config.theta);

    std::ostringstream csv;
    csv << "n,u_log,u,w_log,w\n";
    for (std::size_t n = 0; n < u.size(); ++n) {
        csv << n << ',' << format_double(u[n].log()) << ',' << format_double(u[n].value()) << ','
            << format_double(means[n].log()) << ',' << format_double(means[n].value()) << '\n';
    }
    result.csv = csv.str();
    return result;
}

RunOutput execute_ifn(const RunConfig& config) {
    std::size_t n_max = config.n_max.value_or(kDefaultIfnNMax);
    double tol = config.tol.value_or(1e-3);
    if (!(tol > 0.0 && tol <= 1.0)) throw ConfigError("--tol for ifn-analyze is an absolute tolerance in (0, 1]");
    double mtol = config.mtol.value_or(1.0 + tol);
    if (!(mtol > 1.0)) throw ConfigError("--mtol must exceed 1");
    if (!(config.theta > 1.0)) throw ConfigError("--theta must exceed 1");
    MeanMode mode;
    if (config.mode == "oplus") {
        mode = MeanMode::oplus;
    } else if (config.mode == "otimes") {
        mode = MeanMode::otimes;
    } else {
        throw ConfigError("--mode must be 'oplus' or 'otimes'");
    }
    std::vector<IFN> candidates;
    for (const auto& text : config.xi) candidates.push_back(parse_ifn(text));

    std::string source;
    IFNSequence seq = load_ifn(config, n_max, source);
    WeightSequence w = parse_weights(config.weights, seq.size());
    LambdaGrid grid = parse_lambda_grid(config.lambda_grid);
    TailWindow window = parse_window(config.window, seq.size());

    IFNSequence means = mode == MeanMode::oplus ? ifwa_means(seq, w) : ifwg_means(seq, w);
    std::optional<IFN> target = candidates.empty() ? std::nullopt : std::optional<IFN>(candidates.front());
    IfnVerdict verdict = mode == MeanMode::oplus ? np_oplus_verdict(seq, w, target, tol, window)
                                                 : gp_otimes_verdict(seq, w, target, tol, window);
    if (candidates.empty()) candidates.push_back(verdict.limit);
    IfnTauberReport tauber = ifn_tauber_report(seq, w, grid, window, mode, {MTolerance(mtol), config.theta});

    RunOutput result;
    auto& report = result.report;
    base_header(report, config);
    report["command"] = "ifn-analyze";
    report["config"] = config_json(config, n_max, tol);
    report["sequence"] = {{"source", source}, {"length", seq.size()}};
    report["weights"] = {{"family", config.weights}, {"sva_plus", sva_json(w, seq.size())}};
    report["lambda_grid"] = ordered_json(std::vector<double>(grid.values().begin(), grid.values().end()));
    report["mode"] = config.mode;

    ordered_json tail = ordered_json::array();
    for (std::size_t n = seq.size() - std::min(seq.size(), kTailSamples); n < seq.size(); ++n) {
        tail.push_back({{"n", n}, {"alpha", ifn_json(seq[n])}, {"mean", ifn_json(means[n])}});
    }
    report["means_tail"] = tail;
    report["mean_verdict"] = {{"pass", verdict.pass},
                              {"limit", ifn_json(verdict.limit)},
                              {"evidence", component_json(verdict.evidence)},
                              {"window", window_json(window)},
                              {"tolerance", tol}};

    const auto eps_grid = default_epsilon_grid();
    ordered_json checks = ordered_json::array();
    for (const auto& xi : candidates) {
        ordered_json c;
        c["xi"] = ifn_json(xi);
        switch (addition_limit_check(seq, xi, EpsilonIFN(tol), window)) {
            case AdditionLimit::holds: c["addition_limit"] = "holds"; break;
            case AdditionLimit::fails: c["addition_limit"] = "fails"; break;
            case AdditionLimit::not_applicable: c["addition_limit"] = "not_applicable"; break;
        }
        c["zhangxu"] = zhangxu_limit_check(seq, xi, eps_grid, window);
        c["oplus"] = (xi.mu() < 1.0 && xi.nu() > 0.0)
                         ? component_json(oplus_convergence_check(seq, xi, tol, window))
                         : ordered_json("not_applicable");
        c["otimes"] = (xi.mu() > 0.0 && xi.nu() < 1.0)
                          ? component_json(otimes_convergence_check(seq, xi, tol, window))
                          : ordered_json("not_applicable");
        checks.push_back(c);
    }
    report["plain_convergence"] = checks;

    const char* first_name = mode == MeanMode::oplus ? "one_minus_mu" : "mu";
    const char* second_name = mode == MeanMode::oplus ? "nu" : "one_minus_nu";
    report["tauber"] = {{first_name, tauber_json(tauber.first, config.theta)},
                        {second_name, tauber_json(tauber.second, config.theta)},
                        {"mtol", mtol},
                        {"recovery", tauber.recovery}};

    std::ostringstream csv;
    csv << "n,mu,nu,mean_mu,mean_nu\n";
    for (std::size_t n = 0; n < seq.size(); ++n) {
        csv << n << ',' << format_double(seq[n].mu()) << ',' << format_double(seq[n].nu()) << ','
            << format_double(means[n].mu()) << ',' << format_double(means[n].nu()) << '\n';
    }
    result.csv = csv.str();
    return result;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << text;
}

}  // namespace

WeightSequence parse_weights(std::string_view spec, std::size_t length) {
    auto colon = spec.find(':');
    std::string_view name = trim(spec.substr(0, colon));
    std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    try {
        if (name == "ones" && arg.empty()) return WeightSequence::ones(length);
        if (name == "harmonic" && arg.empty()) return WeightSequence::harmonic(length);
        if (name == "alternating") {
            auto comma = arg.find(',');
            if (comma == std::string_view::npos) throw ConfigError("alternating weights need 'alternating:a,b'");
            return WeightSequence::alternating(parse_number(arg.substr(0, comma), "alternating weight"),
                                               parse_number(arg.substr(comma + 1), "alternating weight"), length);
        }
        if (name == "custom") {
            if (arg.empty()) throw ConfigError("custom weights need 'custom:<file>'");
            auto w = WeightSequence::from_file(std::filesystem::path(std::string(arg)));
            if (w.size() < length) {
                throw ConfigError("custom weight file holds " + std::to_string(w.size()) + " weights, sequence needs " +
                                  std::to_string(length));
            }
            return w.prefix(length);
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("weights: ") + e.what());
    }
    throw ConfigError("unknown weight family '" + std::string(spec) + "'");
}

LambdaGrid parse_lambda_grid(std::string_view spec) {
    spec = trim(spec);
    try {
        if (spec == "default") return LambdaGrid::default_grid();
        if (spec.starts_with("dyadic:")) {
            return LambdaGrid::dyadic(static_cast<int>(parse_index(spec.substr(7), "dyadic level")));
        }
        std::vector<double> values;
        while (!spec.empty()) {
            auto comma = spec.find(',');
            values.push_back(parse_number(spec.substr(0, comma), "lambda grid"));
            if (comma == std::string_view::npos) break;
            spec = spec.substr(comma + 1);
        }
        return LambdaGrid(std::move(values));
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("lambda grid: ") + e.what());
    }
}

TailWindow parse_window(std::string_view spec, std::size_t length) {
    spec = trim(spec);
    if (spec == "default") return TailWindow::last_half(length);
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw ConfigError("window must be 'default' or 'start:end'");
    std::size_t start = parse_index(spec.substr(0, colon), "window start");
    std::size_t end = parse_index(spec.substr(colon + 1), "window end");
    if (start > end) throw ConfigError("window start exceeds window end");
    if (end >= length) {
        throw ConfigError("window end " + std::to_string(end) + " beyond sequence of length " + std::to_string(length));
    }
    return TailWindow(start, end);
}

OutputFormat parse_format(std::string_view text) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    throw ConfigError("unknown output format '" + std::string(text) + "'");
}

OutputFormat default_format() {
    const char* env = std::getenv("GMT_DEFAULT_FORMAT");
    if (env == nullptr || *env == '\0') return OutputFormat::json;
    return parse_format(env);
}

IFN parse_ifn(std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos) throw ConfigError("expected an IFN as 'mu,nu'");
    double mu = parse_number(text.substr(0, comma), "IFN mu");
    double nu = parse_number(text.substr(comma + 1), "IFN nu");
    try {
        return IFN(mu, nu);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

RunOutput execute(const RunConfig& config) {
    check_source(config);
    if (config.command == "analyze") return execute_real(config);
    if (config.command == "ifn-analyze") return execute_ifn(config);
    throw ConfigError("unknown command '" + config.command + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        RunOutput result = execute(config);
        std::string json_text = result.report.dump(2) + "\n";
        if (config.format == OutputFormat::json) {
            if (config.out) {
                write_text(*config.out, json_text);
            } else {
                out << json_text;
            }
        } else if (config.out) {
            write_text(*config.out, result.csv);
            write_text(config.out->string() + ".json", json_text);
        } else {
            out << result.csv;
        }
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const PreconditionError& e) {
        err << "numerical precondition failed: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

namespace {

ordered_json tauber_summary(const ordered_json& t) {
    return {{"gbar_pass", t.at("gbar").at("pass")},
            {"gbar_limit", t.at("gbar").at("limit")},
            {"con1", t.at("con1").at("estimate")},
            {"con2", t.at("con2").at("estimate")},
            {"slow_oscillation", t.at("slow_oscillation").at("upper").at("estimate")},
            {"landau_bound", t.at("landau").at("bound")},
            {"flags", t.at("flags")},
            {"recovery", t.at("recovery")}};
}

void curve_rows(std::ostream& csv, const std::string& component, const std::string& condition,
                const ordered_json& curve) {
    for (const auto& row : curve.at("per_lambda")) {
        csv << component << ',' << condition << ',' << format_double(row.at("lambda").get<double>()) << ',';
        if (!row.at("estimate").is_null()) csv << format_double(row.at("estimate").at("log").get<double>());
        csv << ',' << row.at("evaluated").get<std::size_t>() << ',' << row.at("skipped").get<std::size_t>() << '\n';
    }
}

void tauber_rows(std::ostream& csv, const std::string& component, const ordered_json& t) {
    curve_rows(csv, component, "con1", t.at("con1"));
    curve_rows(csv, component, "con2", t.at("con2"));
    curve_rows(csv, component, "slow_oscillation_upper", t.at("slow_oscillation").at("upper"));
    curve_rows(csv, component, "slow_oscillation_lower", t.at("slow_oscillation").at("lower"));
}

}  // namespace

ordered_json summarize_report(const ordered_json& report) {
    if (report.value("schema_version", 0) != kSchemaVersion) throw ConfigError("unsupported report schema version");
    ordered_json s;
    const std::string command = report.at("command");
    s["command"] = command;
    s["source"] = report.at("sequence").at("source");
    if (command == "analyze") {
        s["tauber"] = tauber_summary(report.at("tauber"));
    } else {
        s["mode"] = report.at("mode");
        s["mean_verdict"] = report.at("mean_verdict");
        s["plain_convergence"] = report.at("plain_convergence");
        ordered_json parts;
        for (const auto& [key, value] : report.at("tauber").items()) {
            if (value.is_object()) parts[key] = tauber_summary(value);
        }
        s["tauber"] = parts;
        s["recovery"] = report.at("tauber").at("recovery");
    }
    return s;
}

std::string report_curves_csv(const ordered_json& report) {
    if (report.value("schema_version", 0) != kSchemaVersion) throw ConfigError("unsupported report schema version");
    std::ostringstream csv;
    csv << "component,condition,lambda,log_estimate,evaluated,skipped\n";
    if (report.at("command") == "analyze") {
        tauber_rows(csv, "u", report.at("tauber"));
    } else {
        for (const auto& [key, value] : report.at("tauber").items()) {
            if (value.is_object()) tauber_rows(csv, key, value);
        }
    }
    return csv.str();
}

int render_report(const std::filesystem::path& input, OutputFormat format, std::ostream& out, std::ostream& err) {
    try {
        std::ifstream in(input);
        if (!in) throw ConfigError("cannot open report " + input.string());
        ordered_json report;
        try {
            report = ordered_json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(input.string() + ": " + e.what());
        }
        try {
            if (format == OutputFormat::json) {
                out << summarize_report(report).dump(2) << '\n';
            } else {
                out << report_curves_csv(report);
            }
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(input.string() + ": malformed report: " + e.what());
        }
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}

}  // namespace gmt::cli
