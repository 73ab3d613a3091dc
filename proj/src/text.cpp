#include "gmt/text.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace gmt {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n";
    auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, const std::string& where) {
    std::string buf(trim(text));
    if (buf.empty()) throw std::invalid_argument(where + ": expected a number");
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || (errno == ERANGE && std::abs(v) > 1.0)) {
        throw std::invalid_argument(where + ": not a valid number: '" + buf + "'");
    }
    return v;
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace gmt
