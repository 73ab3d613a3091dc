#pragma once

#include <stdexcept>
#include <string>

namespace gmt {

/// A numerical precondition of an operation does not hold for the given data
/// (zero partial-sum gaps, IFN outside the required order region, ...).
class PreconditionError : public std::domain_error {
public:
    explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace gmt
