#include <doctest.h>

#include "nsgp/dissonance.hpp"
#include "oracle.hpp"

using namespace nsgp;

TEST_CASE("quasilinear extension values") {
    NumericalSemigroup s({9, 10, 23});
    QuasiExtension g(s, InvariantId::MaxLen);
    InvariantTable maxlen = invariant_table(s, InvariantId::MaxLen, 100);
    CHECK(maxlen.at(71) == 6);
    CHECK(g.at(71) == 7);             // quasipolynomial disagrees at the dissonance point
    CHECK(g.at(g.anchor()) == g.table().at(g.anchor()));  // t = 0 past the anchor

    NumericalSemigroup h({6, 9, 20});
    QuasiExtension gh(h, InvariantId::MaxLen, 44 + 2 * 6 * 20 + 35);
    CHECK(gh.at(44) == 5);
    CHECK(invariant_table(h, InvariantId::MaxLen, 50).at(44) == 5);
}

TEST_CASE("extension is recurrence-consistent everywhere") {
    NumericalSemigroup s({9, 10, 23});
    for (InvariantId id : {InvariantId::MaxLen, InvariantId::MinLen}) {
        QuasiExtension g(s, id);
        for (std::int64_t n = -40; n <= g.anchor(); ++n)
            CHECK(g.at(n + g.step()) == g.at(n) + 1);
    }
}

TEST_CASE("dissonance points: pinned examples") {
    NumericalSemigroup s({9, 10, 23});
    CHECK(dissonance_bruteforce(s, InvariantId::MaxLen) == 71);
    CHECK(dissonance_from_numerator(s, InvariantId::MaxLen) == 71);  // 113 - 42

    NumericalSemigroup t({9, 11});
    CHECK(dissonance_bruteforce(t, InvariantId::MaxLen) == 79);  // = F(S)
    CHECK(dissonance_from_numerator(t, InvariantId::MaxLen) == 79);
    CHECK(dissonance_from_numerator(t, InvariantId::MinLen) == 79);

    NumericalSemigroup h({6, 9, 20});
    CHECK(dissonance_bruteforce(h, InvariantId::MaxLen) == 43);  // = F(S), S is harmonic
}

TEST_CASE("harmonicity") {
    CHECK(is_harmonic(NumericalSemigroup({6, 9, 20}), InvariantId::MaxLen));
    CHECK_FALSE(is_harmonic(NumericalSemigroup({9, 10, 23}), InvariantId::MaxLen));
    // 2-generator semigroups are harmonic for both length invariants
    for (auto gens : {std::vector<std::int64_t>{2, 3}, {5, 7}, {9, 11}, {4, 9}}) {
        CHECK(is_harmonic(NumericalSemigroup(gens), InvariantId::MaxLen));
        CHECK(is_harmonic(NumericalSemigroup(gens), InvariantId::MinLen));
    }
}

TEST_CASE("harmonic semigroups dissent only at F(S)") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 12; ++trial) {
        NumericalSemigroup s(oracle::random_gens(rng));
        for (InvariantId id : {InvariantId::MaxLen, InvariantId::MinLen}) {
            if (!is_harmonic(s, id)) continue;
            auto d = dissonance_bruteforce(s, id);
            if (d) CHECK(*d == s.frobenius());
        }
    }
}

TEST_CASE("formula equals brute force on random semigroups") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 8; ++trial) {
        NumericalSemigroup s(oracle::random_gens(rng));
        for (InvariantId id : {InvariantId::MaxLen, InvariantId::MinLen}) {
            auto formula = dissonance_from_numerator(s, id);
            auto brute = dissonance_bruteforce(s, id);
            if (formula && brute) REQUIRE(*formula == *brute);
        }
    }
}

TEST_CASE("lencount is rejected for dissonance analysis") {
    NumericalSemigroup s({9, 10, 23});
    CHECK_THROWS_AS(dissonance_bruteforce(s, InvariantId::LenCount), Error);
    CHECK_THROWS_AS(dissonance_from_numerator(s, InvariantId::LenCount), Error);
}

TEST_CASE("full report") {
    DissonanceReport rep = dissonance_report(NumericalSemigroup({9, 10, 23}), InvariantId::MaxLen);
    CHECK(rep.formula == 71);
    CHECK(rep.bruteforce == 71);
    CHECK_FALSE(rep.harmonic);
}
