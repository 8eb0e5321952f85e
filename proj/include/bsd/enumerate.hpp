#pragma once

#include <vector>

#include "bsd/count.hpp"
#include "bsd/words.hpp"

namespace bsd {

inline constexpr Bits kDefaultEnumerationLimit = 64;

/// Every i-digit signed-digit word with value n, each exactly once.
///
/// Depth-first from the most significant digit, trying -1, 0, +1 in that
/// order; a branch is cut as soon as the residual exceeds 2^remaining - 1
/// in magnitude, so every surviving branch ends in a solution.
///
/// Throws LimitExceeded when bits > limit.
std::vector<BsdWord> enumerate_bsd(const Integer& n, Bits bits,
                                   Bits limit = kDefaultEnumerationLimit);

}  // namespace bsd
