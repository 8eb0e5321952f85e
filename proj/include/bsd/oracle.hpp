#pragma once

#include <vector>

#include "bsd/count.hpp"

namespace bsd::oracle {

inline constexpr Bits kDefaultLimit = 14;
// Odometer values are tracked in int64_t.
inline constexpr Bits kHardLimit = 40;

/// Counts of every value reachable by i-digit signed-digit words.
class HistogramRow {
public:
    HistogramRow(Bits bits, std::vector<Count> counts);

    Bits bits() const noexcept { return bits_; }
    /// 2^i - 1; the row covers [-max_value, max_value].
    std::int64_t max_value() const noexcept { return max_value_; }
    /// Zero outside the representable range.
    Count at(const Integer& value) const;
    Count at(std::int64_t value) const;
    /// Sum over the whole row; 3^i for a complete row.
    Count total() const;

private:
    Bits bits_;
    std::int64_t max_value_;
    std::vector<Count> counts_;  // index = value + max_value
};

/// Counts over all i-digit hyperbinary words, values 0..2(2^i - 1).
class HyperHistogram {
public:
    HyperHistogram(Bits bits, std::vector<Count> counts);

    Bits bits() const noexcept { return bits_; }
    std::int64_t max_value() const noexcept { return static_cast<std::int64_t>(counts_.size()) - 1; }
    Count at(const Integer& value) const;
    Count total() const;

private:
    Bits bits_;
    std::vector<Count> counts_;
};

struct Maxima {
    Count max;
    std::vector<std::uint64_t> argmax;  // sorted, non-negative n < 2^i
};

// All operations below enumerate the full 3^i digit space and throw
// LimitExceeded when i > limit (limit itself is capped at kHardLimit).

Count brute_count_bsd(const Integer& n, Bits bits, Bits limit = kDefaultLimit);
Count brute_count_hyper(const Integer& n, Bits bits, Bits limit = kDefaultLimit);

/// One pass over all words. `partitions` splits the space into contiguous
/// odometer ranges processed on separate threads; 0 picks from hardware
/// concurrency. The merged row does not depend on the partitioning.
HistogramRow brute_histogram(Bits bits, Bits limit = kDefaultLimit, unsigned partitions = 0);
HyperHistogram brute_hyper_histogram(Bits bits, Bits limit = kDefaultLimit);

/// Requires 2 <= i.
Maxima brute_maxima(Bits bits, Bits limit = kDefaultLimit);
Maxima maxima_of(const HistogramRow& row);

}  // namespace bsd::oracle
