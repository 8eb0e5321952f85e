#pragma once

#include <stdexcept>
#include <string>

#include "bsd/count.hpp"

namespace bsd {

/// Raised when a request would exceed a configured size guard (enumeration
/// length, exhaustive oracle width). Distinct from an empty result.
class LimitExceeded : public std::runtime_error {
public:
    LimitExceeded(const std::string& what_guard, Bits requested, Bits limit);

    Bits requested() const noexcept { return requested_; }
    Bits limit() const noexcept { return limit_; }

private:
    Bits requested_;
    Bits limit_;
};

}  // namespace bsd
