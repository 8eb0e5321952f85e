#pragma once

#include <string>
#include <string_view>

#include "bsd/count.hpp"

namespace bsd {

/// Parses an optionally signed integer in decimal or 0x-prefixed hex.
/// Magnitude is unbounded. Throws std::invalid_argument on malformed text.
Integer parse_integer(std::string_view text);

/// Same as parse_integer but rejects negative values.
Integer parse_natural(std::string_view text);

/// Parses a bit count (decimal, non-negative, fits in Bits).
Bits parse_bits(std::string_view text);

}  // namespace bsd
