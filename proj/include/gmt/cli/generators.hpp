#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gmt/ifn.hpp"
#include "gmt/mcore.hpp"

namespace gmt::cli {

/// Bad user input: unknown names, malformed specs, windows that do not fit. Maps to exit code 2.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Real sequence as plain values or natural logs, exactly as written to / read from text.
struct RealSequence {
    std::vector<double> values;
    bool log_domain = false;

    std::size_t size() const { return values.size(); }
    LogSequence to_log() const;
};

struct GeneratorSpec {
    std::string name;
    std::map<std::string, double, std::less<>> params;
};

/// "name" or "name:key=value,key=value".
GeneratorSpec parse_generator(std::string_view text);

bool is_ifn_generator(std::string_view name);

/// Terms n = 0..n_max of a real-valued generator:
///   ex1            e^{(-1)^n (n+1)}, in log form
///   ex2            2^{(-1)^n}
///   constant:c=    c
///   exp-decay:c=   exp(c/(n+1))        (c defaults to 1)
///   linear         n+1
RealSequence generate_real(const GeneratorSpec& spec, std::size_t n_max);

/// Terms n = 0..n_max of an IFN generator:
///   nonunique      (1/2 - 1/(n+3), 1/3 - 1/(n+3))
///   ex3-ifn        (1 - (1/2)^{(-1)^n+2}, (1/3)^{(-1)^n+2})
///   ex4-ifn        ((1/9)^{(-1)^n+2}, 1 - (1/4)^{(-1)^n+2})
///   constant-ifn:mu=,nu=
///   exp-ifn:a=,b=  (1 - a e^{1/(n+1)}, b e^{1/(n+1)})   (defaults a=1/4, b=1/9)
IFNSequence generate_ifn(const GeneratorSpec& spec, std::size_t n_max);

/// Known generator names, for help text.
std::vector<std::string> generator_names();

}  // namespace gmt::cli
