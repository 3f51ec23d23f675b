#include "nsgp/factorization.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace nsgp {

std::string invariant_name(InvariantId id) {
    switch (id) {
        case InvariantId::MaxLen: return "MaxLen";
        case InvariantId::MinLen: return "MinLen";
        case InvariantId::LenCount: return "LenCount";
        case InvariantId::MinLinf: return "MinLinf";
    }
    return "?";
}

namespace {

void enumerate(const std::vector<std::int64_t>& gens, std::size_t i, std::int64_t rem,
               std::vector<std::int64_t>& cur, std::vector<Factorization>& out,
               std::int64_t cap) {
    if (i + 1 == gens.size()) {
        if (rem % gens[i] == 0) {
            if (static_cast<std::int64_t>(out.size()) >= cap)
                throw explosion_guard("more than " + std::to_string(cap) + " factorizations");
            cur.push_back(rem / gens[i]);
            out.push_back(Factorization{cur});
            cur.pop_back();
        }
        return;
    }
    for (std::int64_t a = 0; a * gens[i] <= rem; ++a) {
        cur.push_back(a);
        enumerate(gens, i + 1, rem - a * gens[i], cur, out, cap);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Factorization> factorizations(const NumericalSemigroup& s, std::int64_t n,
                                          std::int64_t cap) {
    std::vector<Factorization> out;
    if (n < 0) return out;
    std::vector<std::int64_t> cur;
    enumerate(s.generators(), 0, n, cur, out, cap);
    return out;
}

InvariantTable invariant_table(const NumericalSemigroup& s, InvariantId id, std::int64_t bound,
                               std::int64_t cap) {
    if (bound < 0) throw invalid_argument("invariant table bound must be nonnegative");
    InvariantTable t;
    t.id = id;
    t.bound = bound;
    t.values.assign(static_cast<std::size_t>(bound) + 1, 0);
    const auto& gens = s.generators();

    if (id == InvariantId::MaxLen || id == InvariantId::MinLen) {
        const bool want_max = id == InvariantId::MaxLen;
        for (std::int64_t n = 1; n <= bound; ++n) {
            if (!s.contains(n)) continue;
            std::int64_t best = 0;
            bool seen = false;
            for (std::int64_t g : gens) {
                if (g > n) break;
                if (!s.contains(n - g)) continue;
                std::int64_t cand = t.values[static_cast<std::size_t>(n - g)] + 1;
                if (!seen) { best = cand; seen = true; }
                else best = want_max ? std::max(best, cand) : std::min(best, cand);
            }
            // n in S, n >= 1 always has a generator below it in S
            t.values[static_cast<std::size_t>(n)] = best;
        }
    } else if (id == InvariantId::LenCount) {
        // Length-set DP: per element, a bitset of achievable lengths.
        std::size_t max_len = static_cast<std::size_t>(bound / gens.front()) + 1;
        std::size_t words = max_len / 64 + 1;
        std::vector<std::vector<std::uint64_t>> lens(static_cast<std::size_t>(bound) + 1);
        lens[0].assign(words, 0);
        lens[0][0] = 1;  // L(0) = {0}
        t.values[0] = 1;
        for (std::int64_t n = 1; n <= bound; ++n) {
            if (!s.contains(n)) continue;
            auto& bs = lens[static_cast<std::size_t>(n)];
            bs.assign(words, 0);
            for (std::int64_t g : gens) {
                if (g > n || !s.contains(n - g)) continue;
                const auto& src = lens[static_cast<std::size_t>(n - g)];
                // OR in src shifted left by one length unit
                std::uint64_t carry = 0;
                for (std::size_t w = 0; w < words; ++w) {
                    std::uint64_t v = src[w];
                    bs[w] |= (v << 1) | carry;
                    carry = v >> 63;
                }
            }
            std::int64_t cnt = 0;
            for (std::uint64_t w : bs) cnt += std::popcount(w);
            t.values[static_cast<std::size_t>(n)] = cnt;
        }
    } else {  // MinLinf
        for (std::int64_t n = 0; n <= bound; ++n) {
            if (!s.contains(n)) continue;
            std::int64_t best = -1;
            for (const auto& f : factorizations(s, n, cap)) {
                std::int64_t v = f.max_coordinate();
                if (best < 0 || v < best) best = v;
            }
            t.values[static_cast<std::size_t>(n)] = best < 0 ? 0 : best;
        }
    }
    return t;
}

std::int64_t length_sum(const NumericalSemigroup& s, std::int64_t n, std::int64_t cap) {
    std::int64_t total = 0;
    for (const auto& f : factorizations(s, n, cap)) total = checked_add(total, f.length());
    return total;
}

std::int64_t generator_gap_gcd(const NumericalSemigroup& s) {
    const auto& gens = s.generators();
    if (gens.size() < 2) throw single_generator("generator gap gcd needs k >= 2");
    std::int64_t d = 0;
    for (std::size_t i = 1; i < gens.size(); ++i) d = std::gcd(d, gens[i] - gens[i - 1]);
    return d;
}

}  // namespace nsgp
