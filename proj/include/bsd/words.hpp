#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsd/count.hpp"

namespace bsd {

/// A fixed-length signed-digit word over {-1, 0, +1}, most significant
/// digit first. Text form uses '+', '0', '-'.
class BsdWord {
public:
    using Digit = std::int8_t;

    BsdWord() = default;
    /// Throws std::invalid_argument if any digit is outside {-1, 0, 1}.
    explicit BsdWord(std::vector<Digit> digits);

    static BsdWord zeros(Bits bits) { return BsdWord(std::vector<Digit>(bits, 0)); }
    static BsdWord parse(std::string_view text);

    Bits bits() const noexcept { return digits_.size(); }
    std::span<const Digit> digits() const noexcept { return digits_; }
    /// Digit at position `pos` counted from the most significant end.
    Digit operator[](std::size_t pos) const { return digits_[pos]; }

    std::string str() const;

    friend bool operator==(const BsdWord&, const BsdWord&) = default;
    friend auto operator<=>(const BsdWord&, const BsdWord&) = default;

private:
    std::vector<Digit> digits_;
};

/// A fixed-length hyperbinary word over {0, 1, 2}, most significant digit
/// first. Text form uses '0', '1', '2'.
class HyperWord {
public:
    using Digit = std::uint8_t;

    HyperWord() = default;
    /// Throws std::invalid_argument if any digit is outside {0, 1, 2}.
    explicit HyperWord(std::vector<Digit> digits);

    static HyperWord parse(std::string_view text);

    Bits bits() const noexcept { return digits_.size(); }
    std::span<const Digit> digits() const noexcept { return digits_; }
    Digit operator[](std::size_t pos) const { return digits_[pos]; }

    std::string str() const;

    friend bool operator==(const HyperWord&, const HyperWord&) = default;
    friend auto operator<=>(const HyperWord&, const HyperWord&) = default;

private:
    std::vector<Digit> digits_;
};

/// Sum of b_j * 2^j.
Integer value_of(const BsdWord& word);
/// Sum of h_j * 2^j.
Integer value_of(const HyperWord& word);

/// Digitwise sign flip; the value is negated.
BsdWord negate(const BsdWord& word);

// Digitwise b -> 1 - b. A BSD word of value n on i digits maps to a
// hyperbinary word of value 2^i - 1 - n, and back.
HyperWord bsd_to_hyper(const BsdWord& word);
BsdWord hyper_to_bsd(const HyperWord& word);

}  // namespace bsd
