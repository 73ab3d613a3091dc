#pragma once

#include <string>
#include <string_view>

namespace gmt {

std::string_view trim(std::string_view s);

/// Parses the whole of `text` as a decimal; `where` names the source in the error message.
double parse_double(std::string_view text, const std::string& where);

/// Shortest round-trippable decimal for a double ("%.17g").
std::string format_double(double x);

}  // namespace gmt
