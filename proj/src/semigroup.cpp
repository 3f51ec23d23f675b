#include "nsgp/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace nsgp {

namespace {

std::vector<char> sieve(const std::vector<std::int64_t>& gens, std::int64_t bound) {
    std::vector<char> bits(static_cast<std::size_t>(bound) + 1, 0);
    bits[0] = 1;
    for (std::int64_t n = 1; n <= bound; ++n) {
        for (std::int64_t g : gens) {
            if (g > n) break;  // gens sorted ascending
            if (bits[static_cast<std::size_t>(n - g)]) {
                bits[static_cast<std::size_t>(n)] = 1;
                break;
            }
        }
    }
    return bits;
}

// Largest index with bits[n] == 0, given a certified all-in tail.
std::int64_t largest_gap(const std::vector<char>& bits) {
    for (std::int64_t n = static_cast<std::int64_t>(bits.size()) - 1; n >= 0; --n)
        if (!bits[static_cast<std::size_t>(n)]) return n;
    return -1;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> gens) {
    if (gens.empty()) throw empty_generators();
    for (std::int64_t g : gens) {
        if (g < 1) throw invalid_argument("generators must be positive, got " + std::to_string(g));
        if (g > (std::int64_t{1} << 31))
            throw invalid_argument("generator " + std::to_string(g) + " exceeds 2^31");
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::int64_t g = 0;
    for (std::int64_t v : gens) g = std::gcd(g, v);
    if (g != 1) throw gcd_not_one("gcd of generators is " + std::to_string(g));

    gens_ = std::move(gens);
    gen_sum_ = 0;
    for (std::int64_t v : gens_) gen_sum_ = checked_add(gen_sum_, v);

    // Sieve with an a-posteriori certificate: once the top n_1 consecutive
    // entries are all in S, everything beyond is too.  Start at n_1 * n_k
    // and double until certified.
    std::int64_t n1 = gens_.front(), nk = gens_.back();
    std::int64_t bound = std::max<std::int64_t>(checked_mul(n1, nk), n1 + 1);
    for (;;) {
        bits_ = sieve(gens_, bound);
        bool tail_full = true;
        for (std::int64_t n = bound - n1 + 1; n <= bound; ++n)
            if (!bits_[static_cast<std::size_t>(n)]) { tail_full = false; break; }
        if (tail_full) break;
        bound = checked_mul(bound, 2);
    }
    frobenius_ = largest_gap(bits_);

    // Minimality of the fixed generating set: n_i is redundant iff it is
    // representable by the other generators.
    minimal_ = true;
    if (gens_.size() > 1) {
        for (std::size_t i = 0; i < gens_.size() && minimal_; ++i) {
            std::vector<std::int64_t> rest;
            for (std::size_t j = 0; j < gens_.size(); ++j)
                if (j != i) rest.push_back(gens_[j]);
            std::vector<char> b = sieve(rest, gens_[i]);
            if (b[static_cast<std::size_t>(gens_[i])]) minimal_ = false;
        }
    }

    // Minimal generators of the semigroup: positive m in S that are not a
    // sum of two positive elements.
    for (std::int64_t m : gens_) {
        bool decomposable = false;
        for (std::int64_t a = gens_.front(); a <= m - gens_.front(); ++a) {
            if (contains(a) && contains(m - a)) { decomposable = true; break; }
        }
        if (!decomposable) min_gens_.push_back(m);
    }
}

std::vector<std::int64_t> NumericalSemigroup::apery(std::int64_t p) const {
    if (p < 1 || !contains(p))
        throw not_an_element(std::to_string(p) + " is not a positive element of S");
    // Every Apery element is at most F(S) + p.
    std::int64_t bound = frobenius_ + p;
    std::vector<std::int64_t> out(static_cast<std::size_t>(p), -1);
    std::int64_t found = 0;
    for (std::int64_t n = 0; n <= bound && found < p; ++n) {
        if (!contains(n)) continue;
        std::int64_t r = n % p;
        if (out[static_cast<std::size_t>(r)] < 0) {
            out[static_cast<std::size_t>(r)] = n;
            ++found;
        }
    }
    return out;
}

std::vector<std::int64_t> NumericalSemigroup::apery_any(std::int64_t p) const {
    if (p < 1) throw invalid_argument("apery_any requires p >= 1");
    std::int64_t bound = frobenius_ + p;  // m > F + p implies m - p in S
    std::vector<std::int64_t> out;
    for (std::int64_t m = 0; m <= bound; ++m)
        if (contains(m) && !contains(m - p)) out.push_back(m);
    return out;
}

MembershipTable membership_table(const NumericalSemigroup& s, std::int64_t bound) {
    if (bound < 0) throw invalid_argument("membership bound must be nonnegative");
    MembershipTable t;
    t.bound = bound;
    t.bits.assign(static_cast<std::size_t>(bound) + 1, 0);
    t.bits[0] = 1;
    const auto& gens = s.generators();
    for (std::int64_t n = 1; n <= bound; ++n) {
        for (std::int64_t g : gens) {
            if (g > n) break;
            if (t.bits[static_cast<std::size_t>(n - g)]) {
                t.bits[static_cast<std::size_t>(n)] = 1;
                break;
            }
        }
    }
    return t;
}

}  // namespace nsgp
