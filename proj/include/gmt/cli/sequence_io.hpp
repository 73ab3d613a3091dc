#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "gmt/cli/generators.hpp"
#include "gmt/ifn.hpp"

namespace gmt::cli {

// Real sequence files hold one decimal per line. A leading "log:" line marks every
// following value as a natural log. IFN files hold one "mu,nu" pair per line.
// Blank lines and lines starting with '#' are ignored in both.

void write_real_sequence(std::ostream& out, const RealSequence& seq);
void write_ifn_sequence(std::ostream& out, std::span<const IFN> seq);

RealSequence read_real_sequence(std::istream& in, const std::string& where);
IFNSequence read_ifn_sequence(std::istream& in, const std::string& where);


}  // namespace gmt::cli
