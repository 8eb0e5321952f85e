#pragma once

#include <utility>

#include "bsd/count.hpp"

namespace bsd {

/// Stern's diatomic sequence c(r): c(0)=0, c(1)=1, c(2m)=c(m),
/// c(2m+1)=c(m)+c(m+1). One addition per bit of r.
/// Throws std::domain_error for negative r.
Count stern(const Integer& r);

/// The consecutive pair (c(r), c(r+1)) from a single scan of r.
std::pair<Count, Count> stern_pair(const Integer& r);

/// A positive fraction whose terms are known to be coprime.
class ReducedFraction {
public:
    /// Throws std::invalid_argument unless gcd(numerator, denominator) = 1
    /// and denominator > 0. Never reduces.
    ReducedFraction(Count numerator, Count denominator);

    const Count& numerator() const noexcept { return numerator_; }
    const Count& denominator() const noexcept { return denominator_; }

    /// "p/q"
    std::string str() const;

    friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;

private:
    Count numerator_;
    Count denominator_;
};

/// c(r)/c(r+1), the r-th Calkin-Wilf fraction. Throws std::domain_error
/// for r < 1.
ReducedFraction stern_ratio(const Integer& r);

/// Number of hyperbinary representations of n, i.e. c(n+1).
Count count_hyper(const Integer& n);

/// Fibonacci number with F_0 = 0, F_1 = 1.
Count fib(unsigned long k);

}  // namespace bsd
