#include "bsd/count.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace bsd {

Count::Count(Integer value) : value_(std::move(value)) {
    if (sgn(value_) < 0) {
        throw std::invalid_argument("count must be non-negative, got " + value_.get_str());
    }
}

bool Count::fits_u64() const noexcept {
    return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64;
}

std::uint64_t Count::to_u64() const {
    if (!fits_u64()) {
        throw std::overflow_error("count does not fit in 64 bits");
    }
    // mpz_get_ui is only 64-bit on LP64; export limbs to stay portable.
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
    return out;
}

}  // namespace bsd
