#include "bsd/oracle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <thread>

#include "bsd/errors.hpp"

namespace bsd::oracle {

namespace {

Bits check_limit(Bits bits, Bits limit) {
    const Bits effective = std::min(limit, kHardLimit);
    if (bits > effective) {
        throw LimitExceeded("oracle", bits, effective);
    }
    return bits;
}

std::uint64_t power(std::uint64_t base, Bits exponent) {
    std::uint64_t out = 1;
    for (Bits e = 0; e < exponent; ++e) {
        out *= base;
    }
    return out;
}

// Odometer over digit vectors in [low, low + 2], least significant position
// spinning fastest. Visits the words with ordinal in [begin, end) and passes
// each word's value to `visit`. No recursion; memory is O(bits).
template <typename Visit>
void odometer(Bits bits, int low, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
    if (begin >= end) {
        return;
    }
    std::vector<int> digits(bits);
    std::int64_t value = 0;
    std::uint64_t ordinal = begin;
    for (Bits pos = 0; pos < bits; ++pos) {
        digits[pos] = low + static_cast<int>(ordinal % 3);
        ordinal /= 3;
        value += static_cast<std::int64_t>(digits[pos]) << pos;
    }
    for (std::uint64_t step = begin; step < end; ++step) {
        visit(value);
        for (Bits pos = 0; pos < bits; ++pos) {
            const std::int64_t weight = std::int64_t{1} << pos;
            if (digits[pos] < low + 2) {
                ++digits[pos];
                value += weight;
                break;
            }
            digits[pos] = low;
            value -= 2 * weight;
        }
    }
}

std::optional<std::int64_t> to_small(const Integer& n) {
    if (!n.fits_slong_p()) {
        return std::nullopt;
    }
    return n.get_si();
}

std::vector<Count> to_counts(const std::vector<std::uint64_t>& raw) {
    std::vector<Count> out;
    out.reserve(raw.size());
    for (auto c : raw) {
        out.emplace_back(c);
    }
    return out;
}

}  // namespace

HistogramRow::HistogramRow(Bits bits, std::vector<Count> counts)
    : bits_(bits), max_value_((std::int64_t{1} << bits) - 1), counts_(std::move(counts)) {
    if (counts_.size() != static_cast<std::size_t>(2 * max_value_ + 1)) {
        throw std::invalid_argument("histogram row has the wrong number of entries");
    }
}

Count HistogramRow::at(std::int64_t value) const {
    if (value < -max_value_ || value > max_value_) {
        return Count(0);
    }
    return counts_[static_cast<std::size_t>(value + max_value_)];
}

Count HistogramRow::at(const Integer& value) const {
    const auto small = to_small(value);
    return small ? at(*small) : Count(0);
}

Count HistogramRow::total() const {
    Count sum;
    for (const auto& c : counts_) {
        sum += c;
    }
    return sum;
}

HyperHistogram::HyperHistogram(Bits bits, std::vector<Count> counts)
    : bits_(bits), counts_(std::move(counts)) {
    if (counts_.size() != static_cast<std::size_t>(2 * ((std::int64_t{1} << bits) - 1) + 1)) {
        throw std::invalid_argument("hyperbinary histogram has the wrong number of entries");
    }
}

Count HyperHistogram::at(const Integer& value) const {
    const auto small = to_small(value);
    if (!small || *small < 0 || *small > max_value()) {
        return Count(0);
    }
    return counts_[static_cast<std::size_t>(*small)];
}

Count HyperHistogram::total() const {
    Count sum;
    for (const auto& c : counts_) {
        sum += c;
    }
    return sum;
}

Count brute_count_bsd(const Integer& n, Bits bits, Bits limit) {
    check_limit(bits, limit);
    const auto target = to_small(n);
    std::uint64_t hits = 0;
    if (target) {
        odometer(bits, -1, 0, power(3, bits), [&](std::int64_t v) { hits += (v == *target); });
    }
    return Count(hits);
}

Count brute_count_hyper(const Integer& n, Bits bits, Bits limit) {
    check_limit(bits, limit);
    const auto target = to_small(n);
    std::uint64_t hits = 0;
    if (target) {
        odometer(bits, 0, 0, power(3, bits), [&](std::int64_t v) { hits += (v == *target); });
    }
    return Count(hits);
}

HistogramRow brute_histogram(Bits bits, Bits limit, unsigned partitions) {
    check_limit(bits, limit);
    const std::uint64_t words = power(3, bits);
    const std::int64_t max_value = (std::int64_t{1} << bits) - 1;
    const std::size_t width = static_cast<std::size_t>(2 * max_value + 1);

    if (partitions == 0) {
        partitions = std::max(1u, std::thread::hardware_concurrency());
    }
    partitions = static_cast<unsigned>(std::min<std::uint64_t>(partitions, words));

    std::vector<std::vector<std::uint64_t>> partial(partitions);
    {
        std::vector<std::jthread> workers;
        workers.reserve(partitions);
        for (unsigned p = 0; p < partitions; ++p) {
            const std::uint64_t begin = words * p / partitions;
            const std::uint64_t end = words * (p + 1) / partitions;
            workers.emplace_back([&, p, begin, end] {
                auto& local = partial[p];
                local.assign(width, 0);
                odometer(bits, -1, begin, end,
                         [&](std::int64_t v) { ++local[static_cast<std::size_t>(v + max_value)]; });
            });
        }
    }

    std::vector<std::uint64_t> merged(width, 0);
    for (const auto& local : partial) {
        for (std::size_t idx = 0; idx < width; ++idx) {
            merged[idx] += local[idx];
        }
    }
    return HistogramRow(bits, to_counts(merged));
}

HyperHistogram brute_hyper_histogram(Bits bits, Bits limit) {
    check_limit(bits, limit);
    const std::int64_t max_value = 2 * ((std::int64_t{1} << bits) - 1);
    std::vector<std::uint64_t> raw(static_cast<std::size_t>(max_value + 1), 0);
    odometer(bits, 0, 0, power(3, bits), [&](std::int64_t v) { ++raw[static_cast<std::size_t>(v)]; });
    return HyperHistogram(bits, to_counts(raw));
}

Maxima maxima_of(const HistogramRow& row) {
    Maxima out;
    for (std::int64_t n = 0; n <= row.max_value(); ++n) {
        const Count c = row.at(n);
        if (c > out.max) {
            out.max = c;
            out.argmax.clear();
        }
        if (c == out.max) {
            out.argmax.push_back(static_cast<std::uint64_t>(n));
        }
    }
    return out;
}

Maxima brute_maxima(Bits bits, Bits limit) {
    if (bits < 2) {
        throw std::invalid_argument("maxima are reported for bit rows of width 2 or more");
    }
    return maxima_of(brute_histogram(bits, limit));
}

}  // namespace bsd::oracle
