#include "bsd/stern.hpp"

#include <stdexcept>

namespace bsd {

std::pair<Count, Count> stern_pair(const Integer& r) {
    if (sgn(r) < 0) {
        throw std::domain_error("stern index must be non-negative");
    }
    // (a, b) tracks (c(p), c(p+1)) for the prefix p of r read so far.
    // Appending a 0 bit: (c(2p), c(2p+1)) = (a, a + b).
    // Appending a 1 bit: (c(2p+1), c(2p+2)) = (a + b, b).
    Integer a = 0;
    Integer b = 1;
    if (sgn(r) != 0) {
        const mpz_srcptr raw = r.get_mpz_t();
        for (std::size_t pos = mpz_sizeinbase(raw, 2); pos-- > 0;) {
            if (mpz_tstbit(raw, pos) != 0) {
                a += b;
            } else {
                b += a;
            }
        }
    }
    return {Count(std::move(a)), Count(std::move(b))};
}

Count stern(const Integer& r) { return stern_pair(r).first; }

ReducedFraction::ReducedFraction(Count numerator, Count denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    if (sgn(denominator_.value()) == 0) {
        throw std::invalid_argument("fraction denominator must be positive");
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), numerator_.value().get_mpz_t(), denominator_.value().get_mpz_t());
    if (g != 1) {
        throw std::invalid_argument("fraction " + str() + " is not in lowest terms");
    }
}

std::string ReducedFraction::str() const { return numerator_.str() + "/" + denominator_.str(); }

ReducedFraction stern_ratio(const Integer& r) {
    if (sgn(r) <= 0) {
        throw std::domain_error("stern ratio index must be at least 1");
    }
    auto [num, den] = stern_pair(r);
    return ReducedFraction(std::move(num), std::move(den));
}

Count count_hyper(const Integer& n) {
    if (sgn(n) < 0) {
        throw std::domain_error("hyperbinary count of a negative integer");
    }
    return stern(n + 1);
}

Count fib(unsigned long k) {
    Integer value;
    mpz_fib_ui(value.get_mpz_t(), k);
    return Count(std::move(value));
}

}  // namespace bsd
