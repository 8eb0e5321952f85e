#include "bsd/enumerate.hpp"

#include "bsd/errors.hpp"

namespace bsd {

namespace {

class Enumerator {
public:
    explicit Enumerator(Bits bits) : bits_(bits), prefix_(bits, 0), reach_(bits + 1) {
        // reach_[r] = 2^r - 1, the largest magnitude r digits can express.
        for (Bits r = 0; r <= bits; ++r) {
            mpz_ui_pow_ui(reach_[r].get_mpz_t(), 2, r);
            reach_[r] -= 1;
        }
    }

    std::vector<BsdWord> run(const Integer& target) {
        if (abs(target) <= reach_[bits_]) {
            descend(0, target);
        }
        return std::move(out_);
    }

private:
    void descend(Bits pos, const Integer& residual) {
        if (pos == bits_) {
            out_.emplace_back(prefix_);
            return;
        }
        const Bits remaining = bits_ - pos - 1;
        Integer weight;
        mpz_ui_pow_ui(weight.get_mpz_t(), 2, remaining);
        for (int digit : {-1, 0, 1}) {
            Integer next = residual - digit * weight;
            if (abs(next) > reach_[remaining]) {
                continue;
            }
            prefix_[pos] = static_cast<BsdWord::Digit>(digit);
            descend(pos + 1, next);
        }
        prefix_[pos] = 0;
    }

    Bits bits_;
    std::vector<BsdWord::Digit> prefix_;
    std::vector<Integer> reach_;
    std::vector<BsdWord> out_;
};

}  // namespace

std::vector<BsdWord> enumerate_bsd(const Integer& n, Bits bits, Bits limit) {
    if (bits > limit) {
        throw LimitExceeded("enumeration", bits, limit);
    }
    return Enumerator(bits).run(n);
}

}  // namespace bsd
