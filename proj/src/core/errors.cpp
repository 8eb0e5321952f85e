#include "bsd/errors.hpp"

#include <string>

namespace bsd {

LimitExceeded::LimitExceeded(const std::string& what_guard, Bits requested, Bits limit)
    : std::runtime_error(what_guard + " limit exceeded: requested " + std::to_string(requested) +
                         " bits, limit is " + std::to_string(limit)),
      requested_(requested),
      limit_(limit) {}

}  // namespace bsd
