#include "bsd/integer_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

namespace bsd {

Integer parse_integer(std::string_view text) {
    const std::string original(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    int base = 10;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        base = 16;
        text.remove_prefix(2);
    }
    const auto valid_digit = [base](char c) {
        return base == 16 ? std::isxdigit(static_cast<unsigned char>(c)) != 0
                          : std::isdigit(static_cast<unsigned char>(c)) != 0;
    };
    if (text.empty() || !std::all_of(text.begin(), text.end(), valid_digit)) {
        throw std::invalid_argument("not an integer: '" + original + "'");
    }
    Integer value;
    value.set_str(std::string(text), base);
    if (negative) {
        value = -value;
    }
    return value;
}

Integer parse_natural(std::string_view text) {
    Integer value = parse_integer(text);
    if (sgn(value) < 0) {
        throw std::invalid_argument("expected a non-negative integer, got '" + std::string(text) + "'");
    }
    return value;
}

Bits parse_bits(std::string_view text) {
    Bits value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("not a bit count: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace bsd
