#include "gmt/cli/generators.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "gmt/text.hpp"

namespace gmt::cli {

namespace {

double param(const GeneratorSpec& spec, std::string_view key, std::optional<double> fallback = std::nullopt) {
    auto it = spec.params.find(key);
    if (it != spec.params.end()) return it->second;
    if (fallback) return *fallback;
    throw ConfigError("generator '" + spec.name + "' needs parameter '" + std::string(key) + "'");
}

void allow_params(const GeneratorSpec& spec, std::initializer_list<std::string_view> keys) {
    for (const auto& [key, value] : spec.params) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw ConfigError("generator '" + spec.name + "' has no parameter '" + key + "'");
        }
    }
}

// (-1)^n + 2: 3 for even n, 1 for odd n
double alternating_exponent(std::size_t n) { return n % 2 == 0 ? 3.0 : 1.0; }

}  // namespace

LogSequence RealSequence::to_log() const {
    LogSequence out;
    out.reserve(values.size());
    for (std::size_t n = 0; n < values.size(); ++n) {
        if (log_domain) {
            if (!std::isfinite(values[n])) throw ConfigError("log-domain term " + std::to_string(n) + " is not finite");
            out.push_back(LogReal::from_log(values[n]));
        } else {
            if (!(values[n] > 0.0) || !std::isfinite(values[n])) {
                throw ConfigError("term " + std::to_string(n) + " is not a finite positive real");
            }
            out.push_back(LogReal::from_value(values[n]));
        }
    }
    return out;
}

GeneratorSpec parse_generator(std::string_view text) {
    GeneratorSpec spec;
    auto colon = text.find(':');
    spec.name = std::string(trim(text.substr(0, colon)));
    if (spec.name.empty()) throw ConfigError("empty generator name");
    if (colon == std::string_view::npos) return spec;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view item = trim(rest.substr(0, comma));
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw ConfigError("generator parameter '" + std::string(item) + "' lacks '='");
        std::string key(trim(item.substr(0, eq)));
        try {
            spec.params[key] = parse_double(item.substr(eq + 1), "generator parameter " + key);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return spec;
}

bool is_ifn_generator(std::string_view name) {
    return name == "nonunique" || name == "ex3-ifn" || name == "ex4-ifn" || name == "constant-ifn" || name == "exp-ifn";
}

std::vector<std::string> generator_names() {
    return {"ex1", "ex2", "constant", "exp-decay", "linear", "nonunique", "ex3-ifn", "ex4-ifn", "constant-ifn", "exp-ifn"};
}

RealSequence generate_real(const GeneratorSpec& spec, std::size_t n_max) {
    RealSequence seq;
    seq.values.resize(n_max + 1);
    const auto& name = spec.name;
    if (name == "ex1") {
        allow_params(spec, {});
        seq.log_domain = true;
        for (std::size_t n = 0; n <= n_max; ++n) {
            double magnitude = static_cast<double>(n + 1);
            seq.values[n] = n % 2 == 0 ? magnitude : -magnitude;
        }
    } else if (name == "ex2") {
        allow_params(spec, {});
        for (std::size_t n = 0; n <= n_max; ++n) seq.values[n] = n % 2 == 0 ? 2.0 : 0.5;
    } else if (name == "constant") {
        allow_params(spec, {"c"});
        double c = param(spec, "c");
        if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("constant generator needs c > 0");
        std::fill(seq.values.begin(), seq.values.end(), c);
    } else if (name == "exp-decay") {
        allow_params(spec, {"c"});
        double c = param(spec, "c", 1.0);
        for (std::size_t n = 0; n <= n_max; ++n) seq.values[n] = std::exp(c / static_cast<double>(n + 1));
    } else if (name == "linear") {
        allow_params(spec, {});
        for (std::size_t n = 0; n <= n_max; ++n) seq.values[n] = static_cast<double>(n + 1);
    } else if (is_ifn_generator(name)) {
        throw ConfigError("generator '" + name + "' produces IFNs; use it with ifn-analyze");
    } else {
        throw ConfigError("unknown generator '" + name + "'");
    }
    return seq;
}

IFNSequence generate_ifn(const GeneratorSpec& spec, std::size_t n_max) {
    IFNSequence seq;
    seq.reserve(n_max + 1);
    const auto& name = spec.name;
    try {
        if (name == "nonunique") {
            allow_params(spec, {});
            for (std::size_t n = 0; n <= n_max; ++n) {
                double shift = 1.0 / static_cast<double>(n + 3);
                seq.emplace_back(0.5 - shift, 1.0 / 3.0 - shift);
            }
        } else if (name == "ex3-ifn") {
            allow_params(spec, {});
            for (std::size_t n = 0; n <= n_max; ++n) {
                double e = alternating_exponent(n);
                seq.emplace_back(1.0 - std::pow(0.5, e), std::pow(1.0 / 3.0, e));
            }
        } else if (name == "ex4-ifn") {
            allow_params(spec, {});
            for (std::size_t n = 0; n <= n_max; ++n) {
                double e = alternating_exponent(n);
                seq.emplace_back(std::pow(1.0 / 9.0, e), 1.0 - std::pow(0.25, e));
            }
        } else if (name == "constant-ifn") {
            allow_params(spec, {"mu", "nu"});
            IFN value(param(spec, "mu"), param(spec, "nu"));
            seq.assign(n_max + 1, value);
        } else if (name == "exp-ifn") {
            allow_params(spec, {"a", "b"});
            double a = param(spec, "a", 0.25);
            double b = param(spec, "b", 1.0 / 9.0);
            for (std::size_t n = 0; n <= n_max; ++n) {
                double g = std::exp(1.0 / static_cast<double>(n + 1));
                seq.emplace_back(1.0 - a * g, b * g);
            }
        } else if (name == "ex1" || name == "ex2" || name == "constant" || name == "exp-decay" || name == "linear") {
            throw ConfigError("generator '" + name + "' produces real sequences; use it with analyze");
        } else {
            throw ConfigError("unknown generator '" + name + "'");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError("generator '" + name + "' produced an invalid IFN: " + e.what());
    }
    return seq;
}

}  // namespace gmt::cli
