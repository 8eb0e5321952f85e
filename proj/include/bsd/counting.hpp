#pragma once

#include "bsd/count.hpp"

namespace bsd {

/// n = 2^valuation * odd_part with odd_part odd; the sign stays on odd_part.
struct OddDecomposition {
    Bits valuation = 0;
    Integer odd_part;
};

/// Throws std::domain_error for n = 0.
OddDecomposition odd_decompose(const Integer& n);

/// Register pair of the bit-scan counter.
///
/// Starts at lower = 1, upper = 0. Each step forms num_reps = lower + upper
/// and stores it into `upper` for a 0 bit or `lower` for a 1 bit, so the
/// sum is kept in place rather than in a third register.
class ScanState {
public:
    void step(bool bit);

    const Integer& lower() const noexcept { return lower_; }
    const Integer& upper() const noexcept { return upper_; }
    /// Value of lower + upper formed by the most recent step (1 before any).
    const Integer& num_reps() const noexcept;

private:
    Integer lower_ = 1;
    Integer upper_ = 0;
    enum class Last { None, Lower, Upper } last_ = Last::None;
};

/// f(|n|, i): number of i-digit signed-digit words with value n.
/// Linear bit scan over i positions after stripping sign and trailing zeros.
Count count_bsd(const Integer& n, Bits bits);

/// Pieces of the arithmetic-progression form
///   f(n, i) = f(m, k) + (i' - k) * f(2^k - m, k)
/// where n = +-2^j * m with m odd, i' = i - j and k = ceil(log2 m).
struct ProgressionTerms {
    Bits valuation = 0;
    Integer odd_part;          // |m|
    Bits reduced_bits = 0;     // i - j
    Bits log2_ceiling = 0;     // k, 0 when m = 1
    Count first;               // f(m, k)
    Count difference;          // f(2^k - m, k)
    bool in_range = false;     // false when |n| >= 2^i
    bool is_zero = false;      // n = 0

    /// Value of the progression at width reduced_bits.
    Count evaluate() const;
};

/// Throws nothing; out-of-range and zero inputs are flagged.
ProgressionTerms progression_terms(const Integer& n, Bits bits);

/// Same contract as count_bsd but cost depends on |n| only, not on i.
Count count_bsd_fast(const Integer& n, Bits bits);

/// Number of i-digit hyperbinary words with value n. Throws
/// std::domain_error for negative n.
Count count_hyper_bits(const Integer& n, Bits bits);

/// 1 + (i - k) * k, the count for n = 2^k - 1. Requires i >= k.
Count closed_form_pow_minus_1(Bits k, Bits bits);

/// (k - 1) + (i - k) * k, the count for n = 2^(k-1) + 1. Requires
/// i >= k >= 1.
Count closed_form_pow_plus_1(Bits k, Bits bits);

}  // namespace bsd
