#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace bsd {

/// Signed arbitrary-precision integer used for inputs and word values.
using Integer = mpz_class;

/// Number of digit positions in a word.
using Bits = std::uint64_t;

/// Non-negative arbitrary-precision count.
///
/// Every representation count, Stern value and Fibonacci number in the
/// library is a Count. The wrapper exists so a negative value can never
/// masquerade as a count; construction from a negative Integer throws.
class Count {
public:
    Count() = default;
    Count(unsigned long value) : value_(value) {}
    explicit Count(Integer value);

    const Integer& value() const noexcept { return value_; }

    Count& operator+=(const Count& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    Count& operator*=(const Count& rhs) {
        value_ *= rhs.value_;
        return *this;
    }

    friend Count operator+(Count lhs, const Count& rhs) { return lhs += rhs; }
    friend Count operator*(Count lhs, const Count& rhs) { return lhs *= rhs; }

    friend bool operator==(const Count& lhs, const Count& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Count& lhs, const Count& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

    bool fits_u64() const noexcept;
    std::uint64_t to_u64() const;

    /// Exact decimal rendering.
    std::string str() const { return value_.get_str(10); }

private:
    Integer value_;
};

inline std::ostream& operator<<(std::ostream& os, const Count& c) { return os << c.value(); }

}  // namespace bsd
