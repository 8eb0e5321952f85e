// Acceptance suite. One line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "bsd/counting.hpp"
#include "bsd/enumerate.hpp"
#include "bsd/oracle.hpp"
#include "bsd/stern.hpp"
#include "bsd/words.hpp"
#include "oracles.hpp"

using namespace bsd;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

Integer pow2(unsigned long e) {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, e);
    return v;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Best-of-N wall time of `fn` in seconds.
double best_time(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = Clock::now();
        fn();
        best = std::min(best, seconds_since(start));
    }
    return best;
}

Outcome correspondence_sweep() {
    Outcome o;
    std::size_t checked = 0;
    for (Bits i = 1; i <= 12 && o.pass; ++i) {
        const Integer top = pow2(i);
        for (Integer n = 1; n < top; ++n, ++checked) {
            if (count_bsd(n, i) != stern(top - n)) {
                o.fail("mismatch at n=" + n.get_str() + " i=" + std::to_string(i));
                break;
            }
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " pairs";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::size_t checked = 0;
    for (Bits i = 1; i <= 12 && o.pass; ++i) {
        const auto row = oracle::brute_histogram(i);
        for (std::int64_t n = -row.max_value(); n <= row.max_value(); ++n, ++checked) {
            const Integer value(static_cast<long>(n));
            const Count brute = row.at(n);
            if (count_bsd(value, i) != brute || count_bsd_fast(value, i) != brute) {
                o.fail("mismatch at n=" + std::to_string(n) + " i=" + std::to_string(i));
                break;
            }
        }
    }
    if (o.pass) o.detail = std::to_string(checked) + " (n, i) pairs against 12 brute rows";
    return o;
}

Outcome closed_forms() {
    Outcome o;
    for (Bits i = 1; i <= 20 && o.pass; ++i) {
        if (count_bsd(pow2(i) - 1, i) != Count(1)) o.fail("f(2^i-1,i) != 1 at i=" + std::to_string(i));
        if (count_bsd(1, i) != Count(i)) o.fail("f(1,i) != i at i=" + std::to_string(i));
        if (count_bsd(pow2(i - 1) + 1, i) != Count(i - 1)) o.fail("f(2^(i-1)+1,i) != i-1 at i=" + std::to_string(i));
        for (Bits k = 1; k <= i; ++k) {
            if (closed_form_pow_minus_1(k, i) != count_bsd(pow2(k) - 1, i)) {
                o.fail("2^k-1 form at k=" + std::to_string(k) + " i=" + std::to_string(i));
            }
            if (closed_form_pow_plus_1(k, i) != count_bsd(pow2(k - 1) + 1, i)) {
                o.fail("2^(k-1)+1 form at k=" + std::to_string(k) + " i=" + std::to_string(i));
            }
        }
    }
    if (o.pass) o.detail = "1 <= k <= i <= 20";
    return o;
}

Outcome arithmetic_progression() {
    Outcome o;
    std::mt19937_64 rng(0x5eed);
    std::size_t in_range = 0;
    for (int trial = 0; trial < 500 && o.pass; ++trial) {
        Integer n(static_cast<unsigned long>(rng()));
        n >>= static_cast<unsigned>(rng() % 64);  // spread magnitudes up to 2^64
        if (n == 0) n = 1;
        const Bits i = rng() % 10001;
        const auto terms = progression_terms(n, i);
        const Count scan = count_bsd(n, i);
        Count expected;
        if (terms.in_range) {
            ++in_range;
            // Rebuild the identity from its parts.
            const Integer m = terms.odd_part;
            const Bits k = terms.log2_ceiling;
            if (terms.first != count_bsd(m, k) || terms.difference != count_bsd(pow2(k) - m, k)) {
                o.fail("progression terms wrong for n=" + n.get_str());
            }
            expected = terms.first + Count(terms.reduced_bits - k) * terms.difference;
        }
        if (expected != scan || count_bsd_fast(n, i) != scan) {
            o.fail("n=" + n.get_str() + " i=" + std::to_string(i));
        }
    }
    if (o.pass) o.detail = "500 pairs, " + std::to_string(in_range) + " with |n| < 2^i";
    return o;
}

Outcome hyperbinary() {
    Outcome o;
    constexpr std::uint64_t kMax = 1u << 16;
    const auto partitions = testing::hyperbinary_partitions(kMax);
    for (std::uint64_t n = 0; n <= kMax; ++n) {
        if (count_hyper(n).to_u64() != partitions[n] || partitions[n] != testing::naive_stern(n + 1)) {
            o.fail("h(n) != c(n+1) at n=" + std::to_string(n));
            break;
        }
    }
    for (Bits i = 0; i <= 10 && o.pass; ++i) {
        const auto h = oracle::brute_hyper_histogram(i);
        const Integer all_ones = pow2(i) - 1;
        for (std::int64_t n = 0; n <= h.max_value(); ++n) {
            if (h.at(n) != count_bsd(all_ones - n, i) || h.at(n) != count_hyper_bits(n, i)) {
                o.fail("width cross-check at n=" + std::to_string(n) + " i=" + std::to_string(i));
                break;
            }
        }
    }
    // Unbounded length: width bitlength(n) already holds every
    // representation, and one more leading position adds nothing.
    const auto narrow = oracle::brute_hyper_histogram(13);
    const auto wide = oracle::brute_hyper_histogram(14);
    for (std::uint64_t n = 0; n <= (1u << 12) && o.pass; ++n) {
        if (narrow.at(n) != wide.at(n) || narrow.at(n) != count_hyper(n)) {
            o.fail("stabilization at n=" + std::to_string(n));
        }
    }
    if (o.pass) o.detail = "n <= 2^16 by partition count; widths 0..10 by brute force; stable for n <= 2^12";
    return o;
}

Outcome translation_bijection() {
    Outcome o;
    std::size_t words = 0;
    for (unsigned i = 0; i <= 10 && o.pass; ++i) {
        const Integer all_ones = pow2(i) - 1;
        std::set<std::string> images;
        testing::for_each_digit_vector(i, -1, [&](const std::vector<int>& d, std::int64_t v) {
            ++words;
            const BsdWord w(std::vector<BsdWord::Digit>(d.begin(), d.end()));
            const HyperWord h = bsd_to_hyper(w);
            if (value_of(w) != v || value_of(h) != all_ones - v || hyper_to_bsd(h) != w) {
                o.fail("word " + w.str());
            }
            images.insert(h.str());
        });
        std::size_t expected = 1;
        for (unsigned k = 0; k < i; ++k) expected *= 3;
        if (images.size() != expected) o.fail("translation not injective at i=" + std::to_string(i));
    }
    if (o.pass) o.detail = std::to_string(words) + " words";
    return o;
}

Outcome calkin_wilf() {
    Outcome o;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::uint64_t r = 1; r <= 100000; ++r) {
        try {
            const auto f = stern_ratio(r);
            const std::uint64_t p = f.numerator().to_u64();
            const std::uint64_t q = f.denominator().to_u64();
            if (std::gcd(p, q) != 1 || !seen.emplace(p, q).second) {
                o.fail("r=" + std::to_string(r));
                break;
            }
        } catch (const std::exception& e) {
            o.fail(std::string("r=") + std::to_string(r) + ": " + e.what());
            break;
        }
    }
    if (o.pass) o.detail = std::to_string(seen.size()) + " distinct reduced ratios";
    return o;
}

Outcome fibonacci_maxima() {
    Outcome o;
    std::ifstream golden(std::string(GOLDEN_DIR) + "/maxima.txt");
    if (!golden) {
        o.fail("missing golden/maxima.txt");
        return o;
    }
    std::vector<Count> fibs;
    for (unsigned long k = 0; k < 40; ++k) fibs.push_back(fib(k));

    std::string line;
    Bits rows = 0;
    std::ostringstream indices;
    while (std::getline(golden, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        Bits i = 0;
        unsigned long max = 0;
        unsigned long fib_index = 0;
        fields >> i >> max >> fib_index;
        std::vector<std::uint64_t> argmax;
        for (std::uint64_t n; fields >> n;) argmax.push_back(n);

        const auto observed = oracle::brute_maxima(i);
        const auto at = std::find(fibs.begin(), fibs.end(), observed.max);
        if (at == fibs.end()) {
            o.fail("max at i=" + std::to_string(i) + " is not a Fibonacci number");
            break;
        }
        const auto observed_index = static_cast<unsigned long>(at - fibs.begin());
        if (observed.max != Count(max) || observed_index != fib_index || observed.argmax != argmax) {
            o.fail("golden mismatch at i=" + std::to_string(i));
            break;
        }
        if (i >= 3 && observed.argmax.size() != 2) {
            o.fail("expected two maximizers at i=" + std::to_string(i));
            break;
        }
        if (i == 4) indices << "i=4 -> max 5 at {3,5}; ";
        ++rows;
    }
    if (o.pass && rows != 13) o.fail("golden file should cover i = 2..14");
    if (o.pass) o.detail = indices.str() + "max(i) = F_(i+1) for i = 2..14";
    return o;
}

Outcome performance() {
    Outcome o;
    std::ostringstream report;

    // Million-bit inputs through the real binary.
    std::mt19937_64 rng(1'000'000);
    constexpr Bits kBits = 1'000'000;
    std::string hex = "0x";
    hex.reserve(kBits / 4 + 2);
    const char* digits = "0123456789abcdef";
    for (Bits d = 0; d < kBits / 4; ++d) {
        hex.push_back(digits[rng() % 16]);
    }
    hex[2] = "89abcdef"[rng() % 8];    // top bit set
    hex.back() = "13579bdf"[rng() % 8];  // odd
    const std::string path = "/tmp/bsd_acceptance_million_bits.txt";
    std::ofstream(path) << hex << '\n';

    const auto timed_command = [&](const std::string& args, double& elapsed) {
        const std::string cmd = std::string(BSDTOOL_PATH) + " " + args + " >/dev/null 2>&1";
        const auto start = Clock::now();
        const int status = std::system(cmd.c_str());
        elapsed = seconds_since(start);
        return WIFEXITED(status) && WEXITSTATUS(status) == 0;
    };
    double stern_s = 0;
    double count_s = 0;
    if (!timed_command("stern @" + path, stern_s)) o.fail("stern on 10^6 bits failed");
    if (!timed_command("count @" + path + " --bits 1001000 --algo fast", count_s)) {
        o.fail("count --algo fast on 10^6 bits failed");
    }
    if (stern_s >= 5.0) o.fail("stern took " + std::to_string(stern_s) + "s");
    if (count_s >= 5.0) o.fail("count --algo fast took " + std::to_string(count_s) + "s");
    report << "stern(10^6 bits) " << stern_s << "s, count fast(10^6 bits) " << count_s << "s; ";

    // Scan versus fast for a fixed 64-bit n.
    const Integer n(static_cast<unsigned long>(rng() | 1u | (1ul << 63)));
    const double scan_quarter = best_time(9, [&] { (void)count_bsd(n, 25'000); });
    const double scan_full = best_time(9, [&] { (void)count_bsd(n, 100'000); });
    const double fast_narrow = best_time(9, [&] { (void)count_bsd_fast(n, 1'000); });
    const double fast_full = best_time(9, [&] { (void)count_bsd_fast(n, 100'000); });

    const double separation = scan_full / fast_full;
    const double scan_growth = scan_full / scan_quarter;
    const double fast_growth = fast_full / fast_narrow;
    if (separation < 10.0) o.fail("scan/fast separation only " + std::to_string(separation));
    if (scan_growth < 2.0 || scan_growth > 8.0) o.fail("scan not linear in i: x4 width gave x" + std::to_string(scan_growth));
    if (fast_growth > 4.0) o.fail("fast path grew x" + std::to_string(fast_growth) + " from i=10^3 to 10^5");
    report << "scan/fast at i=10^5: x" << static_cast<long>(separation) << ", scan x4 width: x" << scan_growth
           << ", fast i=10^3->10^5: x" << fast_growth;
    o.detail = report.str();
    std::remove(path.c_str());
    return o;
}

Outcome enumeration() {
    Outcome o;
    std::mt19937_64 rng(200);
    int done = 0;
    while (done < 200 && o.pass) {
        const Bits i = rng() % 21;
        const std::int64_t span = std::int64_t{1} << i;
        const Integer n(static_cast<long>(static_cast<std::int64_t>(rng() % (2 * span - 1)) - (span - 1)));
        const Count expected = count_bsd(n, i);
        if (expected > Count(10'000)) continue;
        const auto words = enumerate_bsd(n, i);
        std::set<BsdWord> unique(words.begin(), words.end());
        if (unique.size() != words.size()) o.fail("duplicates for n=" + n.get_str());
        if (Count(words.size()) != expected) o.fail("cardinality for n=" + n.get_str());
        for (const auto& w : words) {
            if (value_of(w) != n || w.bits() != i) {
                o.fail("bad word " + w.str() + " for n=" + n.get_str());
                break;
            }
        }
        ++done;
    }
    if (o.pass) o.detail = "200 random (n, i), i <= 20";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*check)();
    };
    const Criterion criteria[] = {
        {"AC1 correspondence f(n,i) = c(2^i - n), i <= 12", correspondence_sweep},
        {"AC2 scan = fast = brute force, i <= 12", oracle_equivalence},
        {"AC3 closed forms, k <= i <= 20", closed_forms},
        {"AC4 arithmetic progression vs full-width scan", arithmetic_progression},
        {"AC5 hyperbinary h(n) = c(n+1) and width cross-check", hyperbinary},
        {"AC6 signed-digit / hyperbinary translation bijection", translation_bijection},
        {"AC7 Calkin-Wilf ratios reduced and distinct", calkin_wilf},
        {"AC8 row maxima are Fibonacci (golden)", fibonacci_maxima},
        {"AC9 performance", performance},
        {"AC10 enumeration sound and complete", enumeration},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome.fail(std::string("exception: ") + e.what());
        }
        std::printf("[%s] %s: %s (%.2fs)\n", outcome.pass ? "PASS" : "FAIL", c.name, outcome.detail.c_str(),
                    seconds_since(start));
        std::fflush(stdout);
        failures += outcome.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
