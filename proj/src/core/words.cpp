#include "bsd/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsd {

BsdWord::BsdWord(std::vector<Digit> digits) : digits_(std::move(digits)) {
    if (!std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d >= -1 && d <= 1; })) {
        throw std::invalid_argument("signed digit outside {-1, 0, +1}");
    }
}

BsdWord BsdWord::parse(std::string_view text) {
    std::vector<Digit> digits;
    digits.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '+': digits.push_back(1); break;
            case '0': digits.push_back(0); break;
            case '-': digits.push_back(-1); break;
            default:
                throw std::invalid_argument(std::string("invalid signed digit '") + c + "'");
        }
    }
    return BsdWord(std::move(digits));
}

std::string BsdWord::str() const {
    std::string out;
    out.reserve(digits_.size());
    for (Digit d : digits_) {
        out.push_back(d > 0 ? '+' : (d < 0 ? '-' : '0'));
    }
    return out;
}

HyperWord::HyperWord(std::vector<Digit> digits) : digits_(std::move(digits)) {
    if (!std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d <= 2; })) {
        throw std::invalid_argument("hyperbinary digit outside {0, 1, 2}");
    }
}

HyperWord HyperWord::parse(std::string_view text) {
    std::vector<Digit> digits;
    digits.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '2') {
            throw std::invalid_argument(std::string("invalid hyperbinary digit '") + c + "'");
        }
        digits.push_back(static_cast<Digit>(c - '0'));
    }
    return HyperWord(std::move(digits));
}

std::string HyperWord::str() const {
    std::string out;
    out.reserve(digits_.size());
    for (Digit d : digits_) {
        out.push_back(static_cast<char>('0' + d));
    }
    return out;
}

namespace {

// Horner evaluation, most significant digit first.
template <typename Digits>
Integer horner(const Digits& digits) {
    Integer value = 0;
    for (auto d : digits) {
        value *= 2;
        value += static_cast<long>(d);
    }
    return value;
}

}  // namespace

Integer value_of(const BsdWord& word) { return horner(word.digits()); }

Integer value_of(const HyperWord& word) { return horner(word.digits()); }

BsdWord negate(const BsdWord& word) {
    std::vector<BsdWord::Digit> digits(word.digits().begin(), word.digits().end());
    for (auto& d : digits) {
        d = static_cast<BsdWord::Digit>(-d);
    }
    return BsdWord(std::move(digits));
}

HyperWord bsd_to_hyper(const BsdWord& word) {
    std::vector<HyperWord::Digit> digits;
    digits.reserve(word.bits());
    for (auto d : word.digits()) {
        digits.push_back(static_cast<HyperWord::Digit>(1 - d));
    }
    return HyperWord(std::move(digits));
}

BsdWord hyper_to_bsd(const HyperWord& word) {
    std::vector<BsdWord::Digit> digits;
    digits.reserve(word.bits());
    for (auto d : word.digits()) {
        digits.push_back(static_cast<BsdWord::Digit>(1 - static_cast<int>(d)));
    }
    return BsdWord(std::move(digits));
}

}  // namespace bsd
