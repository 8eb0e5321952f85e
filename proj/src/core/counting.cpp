#include "bsd/counting.hpp"

#include <stdexcept>

namespace bsd {

namespace {

Bits bit_length(const Integer& magnitude) {
    return sgn(magnitude) == 0 ? 0 : mpz_sizeinbase(magnitude.get_mpz_t(), 2);
}

Integer power_of_two(Bits exponent) {
    Integer value;
    mpz_ui_pow_ui(value.get_mpz_t(), 2, exponent);
    return value;
}

}  // namespace

OddDecomposition odd_decompose(const Integer& n) {
    if (sgn(n) == 0) {
        throw std::domain_error("2-adic valuation of 0 is undefined");
    }
    OddDecomposition out;
    out.valuation = mpz_scan1(n.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(out.odd_part.get_mpz_t(), n.get_mpz_t(), out.valuation);
    return out;
}

void ScanState::step(bool bit) {
    if (bit) {
        lower_ += upper_;
        last_ = Last::Lower;
    } else {
        upper_ += lower_;
        last_ = Last::Upper;
    }
}

const Integer& ScanState::num_reps() const noexcept {
    switch (last_) {
        case Last::Lower: return lower_;
        case Last::Upper: return upper_;
        case Last::None: break;
    }
    return lower_;
}

Count count_bsd(const Integer& n, Bits bits) {
    if (sgn(n) == 0) {
        return Count(1);
    }
    // Sign is irrelevant (negate every digit); trailing zero bits shift the
    // problem down to the odd part on fewer positions.
    const auto [valuation, odd] = odd_decompose(abs(n));
    if (valuation >= bits) {
        return Count(0);
    }
    const Bits width = bits - valuation;
    if (bit_length(odd) > width) {
        return Count(0);
    }
    ScanState state;
    const mpz_srcptr raw = odd.get_mpz_t();
    for (Bits pos = width; pos-- > 0;) {
        state.step(mpz_tstbit(raw, pos) != 0);
    }
    return Count(state.num_reps());
}

Count ProgressionTerms::evaluate() const {
    if (is_zero) {
        return Count(1);
    }
    if (!in_range) {
        return Count(0);
    }
    return first + Count(reduced_bits - log2_ceiling) * difference;
}

ProgressionTerms progression_terms(const Integer& n, Bits bits) {
    ProgressionTerms terms;
    if (sgn(n) == 0) {
        terms.is_zero = true;
        terms.in_range = true;
        return terms;
    }
    auto [valuation, odd] = odd_decompose(abs(n));
    terms.valuation = valuation;
    terms.odd_part = std::move(odd);
    if (valuation >= bits) {
        return terms;
    }
    terms.reduced_bits = bits - valuation;
    // m = 1 has ceil(log2 m) = 0; every other odd m has ceil(log2 m) equal
    // to its bit length.
    terms.log2_ceiling = terms.odd_part == 1 ? 0 : bit_length(terms.odd_part);
    if (terms.log2_ceiling > terms.reduced_bits) {
        return terms;
    }
    terms.in_range = true;
    const Integer complement = power_of_two(terms.log2_ceiling) - terms.odd_part;
    terms.first = count_bsd(terms.odd_part, terms.log2_ceiling);
    terms.difference = count_bsd(complement, terms.log2_ceiling);
    return terms;
}

Count count_bsd_fast(const Integer& n, Bits bits) { return progression_terms(n, bits).evaluate(); }

Count count_hyper_bits(const Integer& n, Bits bits) {
    if (sgn(n) < 0) {
        throw std::domain_error("hyperbinary words have non-negative values");
    }
    const Integer all_ones = power_of_two(bits) - 1;
    if (n > 2 * all_ones) {
        return Count(0);
    }
    return count_bsd_fast(all_ones - n, bits);
}

Count closed_form_pow_minus_1(Bits k, Bits bits) {
    if (bits < k) {
        throw std::invalid_argument("closed form for 2^k - 1 requires i >= k");
    }
    return Count(1) + Count(bits - k) * Count(k);
}

Count closed_form_pow_plus_1(Bits k, Bits bits) {
    if (k == 0) {
        throw std::invalid_argument("closed form for 2^(k-1) + 1 requires k >= 1");
    }
    if (bits < k) {
        throw std::invalid_argument("closed form for 2^(k-1) + 1 requires i >= k");
    }
    return Count(k - 1) + Count(bits - k) * Count(k);
}

}  // namespace bsd
