#include "gmt/cli/sequence_io.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "gmt/text.hpp"

namespace gmt::cli {

namespace {

constexpr std::string_view kLogHeader = "log:";

bool skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

}  // namespace

void write_real_sequence(std::ostream& out, const RealSequence& seq) {
    if (seq.log_domain) out << kLogHeader << '\n';
    for (double v : seq.values) out << format_double(v) << '\n';
}

void write_ifn_sequence(std::ostream& out, std::span<const IFN> seq) {
    for (const auto& a : seq) out << format_double(a.mu()) << ',' << format_double(a.nu()) << '\n';
}

RealSequence read_real_sequence(std::istream& in, const std::string& where) {
    RealSequence seq;
    std::string line;
    std::size_t line_no = 0;
    bool seen_data = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto text = trim(line);
        if (skippable(text)) continue;
        if (text.starts_with(kLogHeader)) {
            if (seen_data) throw ConfigError(where + ":" + std::to_string(line_no) + ": 'log:' header after data");
            seq.log_domain = true;
            continue;
        }
        seen_data = true;
        try {
            seq.values.push_back(parse_double(text, where + ":" + std::to_string(line_no)));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    if (seq.values.empty()) throw ConfigError(where + ": no sequence terms");
    return seq;
}

IFNSequence read_ifn_sequence(std::istream& in, const std::string& where) {
    IFNSequence seq;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto text = trim(line);
        if (skippable(text)) continue;
        std::string at = where + ":" + std::to_string(line_no);
        auto comma = text.find(',');
        if (comma == std::string_view::npos) throw ConfigError(at + ": expected 'mu,nu'");
        try {
            seq.emplace_back(parse_double(text.substr(0, comma), at), parse_double(text.substr(comma + 1), at));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(at + ": " + e.what());
        }
    }
    if (seq.empty()) throw ConfigError(where + ": no sequence terms");
    return seq;
}

}  // namespace gmt::cli
