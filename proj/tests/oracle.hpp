// Brute-force oracles for the test suites.  Everything here recomputes from
// first principles (multiplicity enumeration), independent of the library's
// DP and series machinery.
#ifndef NSGP_TESTS_ORACLE_HPP
#define NSGP_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using std::int64_t;

// All factorizations of n over gens, by direct recursion on multiplicities.
inline void collect(const std::vector<int64_t>& gens, std::size_t i, int64_t rem,
                    std::vector<int64_t>& cur, std::vector<std::vector<int64_t>>& out) {
    if (i == gens.size()) {
        if (rem == 0) out.push_back(cur);
        return;
    }
    for (int64_t a = 0; a * gens[i] <= rem; ++a) {
        cur.push_back(a);
        collect(gens, i + 1, rem - a * gens[i], cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int64_t>> all_facts(const std::vector<int64_t>& gens, int64_t n) {
    std::vector<std::vector<int64_t>> out;
    if (n < 0) return out;
    std::vector<int64_t> cur;
    collect(gens, 0, n, cur, out);
    return out;
}

inline bool member(const std::vector<int64_t>& gens, int64_t n) {
    return !all_facts(gens, n).empty();
}

inline int64_t max_len(const std::vector<int64_t>& gens, int64_t n) {
    int64_t best = 0;
    for (const auto& f : all_facts(gens, n))
        best = std::max(best, std::accumulate(f.begin(), f.end(), int64_t{0}));
    return best;
}

inline int64_t min_len(const std::vector<int64_t>& gens, int64_t n) {
    int64_t best = -1;
    for (const auto& f : all_facts(gens, n)) {
        int64_t len = std::accumulate(f.begin(), f.end(), int64_t{0});
        if (best < 0 || len < best) best = len;
    }
    return best < 0 ? 0 : best;
}

inline int64_t len_count(const std::vector<int64_t>& gens, int64_t n) {
    std::set<int64_t> lens;
    for (const auto& f : all_facts(gens, n))
        lens.insert(std::accumulate(f.begin(), f.end(), int64_t{0}));
    return static_cast<int64_t>(lens.size());
}

inline int64_t min_linf(const std::vector<int64_t>& gens, int64_t n) {
    int64_t best = -1;
    for (const auto& f : all_facts(gens, n)) {
        int64_t m = *std::max_element(f.begin(), f.end());
        if (best < 0 || m < best) best = m;
    }
    return best < 0 ? 0 : best;
}

inline int64_t len_sum(const std::vector<int64_t>& gens, int64_t n) {
    int64_t total = 0;
    for (const auto& f : all_facts(gens, n))
        total += std::accumulate(f.begin(), f.end(), int64_t{0});
    return total;
}

// Random generating sets with gcd 1, k in [2,4], generators in [2,40].
inline std::vector<int64_t> random_gens(std::mt19937& rng) {
    std::uniform_int_distribution<int> kd(2, 4);
    std::uniform_int_distribution<int64_t> gd(2, 40);
    for (;;) {
        std::set<int64_t> gens;
        int k = kd(rng);
        while (static_cast<int>(gens.size()) < k) gens.insert(gd(rng));
        std::vector<int64_t> v(gens.begin(), gens.end());
        int64_t g = 0;
        for (int64_t x : v) g = std::gcd(g, x);
        if (g == 1) return v;
    }
}

}  // namespace oracle

#endif
