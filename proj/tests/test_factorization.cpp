#include <doctest.h>

#include <set>

#include "nsgp/factorization.hpp"
#include "oracle.hpp"

using namespace nsgp;

namespace {

std::set<std::vector<std::int64_t>> as_set(const std::vector<Factorization>& fs) {
    std::set<std::vector<std::int64_t>> out;
    for (const auto& f : fs) out.insert(f.multiplicities);
    return out;
}

}  // namespace

TEST_CASE("factorization enumeration") {
    NumericalSemigroup s923({9, 10, 23});
    CHECK(as_set(factorizations(s923, 71)) ==
          std::set<std::vector<std::int64_t>>{{2, 3, 1}});

    NumericalSemigroup s({6, 9, 20});
    CHECK(as_set(factorizations(s, 60)) ==
          std::set<std::vector<std::int64_t>>{
              {0, 0, 3}, {1, 6, 0}, {4, 4, 0}, {7, 2, 0}, {10, 0, 0}});
    CHECK(factorizations(s, 7).empty());
    CHECK(factorizations(s, -3).empty());
    CHECK(as_set(factorizations(s, 0)) == std::set<std::vector<std::int64_t>>{{0, 0, 0}});
}

TEST_CASE("enumeration cap trips the explosion guard") {
    NumericalSemigroup s({2, 3});
    CHECK_THROWS_AS(factorizations(s, 600, 10), Error);
    CHECK_NOTHROW(factorizations(s, 600));
}

TEST_CASE("invariant tables: pinned values") {
    NumericalSemigroup s({6, 9, 20});
    InvariantTable maxlen = invariant_table(s, InvariantId::MaxLen, 150);
    CHECK(maxlen.at(138) == 23);
    CHECK(maxlen.at(0) == 0);
    CHECK(maxlen.at(7) == 0);   // off S
    CHECK(maxlen.at(-5) == 0);  // negative arguments vanish

    InvariantTable lencount = invariant_table(s, InvariantId::LenCount, 100);
    CHECK(lencount.at(60) == 5);  // L(60) = {3,7,8,9,10}
    CHECK(lencount.at(0) == 1);   // L(0) = {0}

    InvariantTable linf = invariant_table(s, InvariantId::MinLinf, 100);
    CHECK(linf.at(60) == 3);  // achieved by (0,0,3)
}

TEST_CASE("length sums") {
    NumericalSemigroup s({6, 9, 20});
    CHECK(length_sum(s, 60) == 37);
    CHECK(length_sum(s, 0) == 0);
    CHECK(length_sum(NumericalSemigroup({9, 10, 23}), 71) == 6);
}

TEST_CASE("generator gap gcd") {
    CHECK(generator_gap_gcd(NumericalSemigroup({6, 9, 20})) == 1);
    CHECK(generator_gap_gcd(NumericalSemigroup({9, 10, 23})) == 1);
    CHECK(generator_gap_gcd(NumericalSemigroup({10, 14, 18, 21})) == 1);
    CHECK_THROWS_AS(generator_gap_gcd(NumericalSemigroup({1})), Error);
}

TEST_CASE("DP invariants equal enumeration on random semigroups") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::int64_t> gens = oracle::random_gens(rng);
        NumericalSemigroup s(gens);
        const std::int64_t bound = 200;
        InvariantTable maxlen = invariant_table(s, InvariantId::MaxLen, bound);
        InvariantTable minlen = invariant_table(s, InvariantId::MinLen, bound);
        InvariantTable lencount = invariant_table(s, InvariantId::LenCount, bound);
        InvariantTable linf = invariant_table(s, InvariantId::MinLinf, bound);
        for (std::int64_t n = 0; n <= bound; ++n) {
            REQUIRE(maxlen.at(n) == oracle::max_len(gens, n));
            REQUIRE(minlen.at(n) == oracle::min_len(gens, n));
            REQUIRE(lencount.at(n) == oracle::len_count(gens, n));
            REQUIRE(linf.at(n) == oracle::min_linf(gens, n));
            REQUIRE(length_sum(s, n) == oracle::len_sum(gens, n));
        }
    }
}

TEST_CASE("eventual quasilinearity on a verified window") {
    for (auto gens : {std::vector<std::int64_t>{6, 9, 20}, {9, 10, 23}, {5, 7, 11}}) {
        NumericalSemigroup s(gens);
        std::int64_t n1 = gens.front(), nk = gens.back();
        std::int64_t start = s.frobenius() + n1 * nk + 1;
        InvariantTable maxlen = invariant_table(s, InvariantId::MaxLen, start + 2 * n1 * nk);
        InvariantTable minlen = invariant_table(s, InvariantId::MinLen, start + 2 * n1 * nk);
        for (std::int64_t n = start; n + nk <= minlen.bound; ++n) {
            CHECK(maxlen.at(n + n1) == maxlen.at(n) + 1);
            CHECK(minlen.at(n + nk) == minlen.at(n) + 1);
        }
    }
}

TEST_CASE("two-generator semigroups have all-distinct lengths") {
    NumericalSemigroup s({9, 11});
    InvariantTable lencount = invariant_table(s, InvariantId::LenCount, 300);
    for (std::int64_t n = 0; n <= 300; ++n)
        CHECK(lencount.at(n) == static_cast<std::int64_t>(factorizations(s, n).size()));
}
