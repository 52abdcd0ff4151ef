#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "starfold/monomial.hpp"
#include "test_util.hpp"

using namespace starfold;
using testutil::E;
using testutil::agree_on_box;
using testutil::box_points;
using testutil::random_ideal;

namespace {

// Independent saturation route: sat(I) equals the intersection of the colons
// I : z_i^N once N exceeds every exponent appearing in the generators.
MonomialIdeal saturate_by_variable_colons(const MonomialIdeal& I) {
    int s = I.vars();
    if (I.is_zero() || I.is_unit())
        return I;
    int N = 1;
    for (const Exponent& g : I.gens())
        for (int i = 0; i < s; ++i)
            N = std::max(N, g[i] + 1);
    MonomialIdeal acc = MonomialIdeal::unit(s);
    bool first = true;
    for (int i = 0; i < s; ++i) {
        std::vector<int> e(static_cast<std::size_t>(s), 0);
        e[static_cast<std::size_t>(i)] = N;
        MonomialIdeal q = colon(I, Exponent(e));
        acc = first ? q : intersect(acc, q);
        first = false;
    }
    return acc;
}

// u is in sat(I) iff for every variable some power of it pushes u into I.
bool saturation_member_oracle(const MonomialIdeal& I, const Exponent& u, int k_max) {
    for (int i = 0; i < I.vars(); ++i) {
        bool ok = false;
        Exponent v = u;
        for (int k = 0; k <= k_max && !ok; ++k) {
            if (I.member(v))
                ok = true;
            v = v.plus(Exponent::unit(I.vars(), i));
        }
        if (!ok)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("exponent basics") {
    Exponent u = E({2, 0, 1});
    CHECK(u.degree() == 3);
    CHECK(u.str() == "z1^2*z3");
    CHECK(Exponent::zero(3).str() == "1");
    CHECK(E({1, 1, 0}).divides(u) == false);
    CHECK(E({2, 0, 0}).divides(u));
    CHECK(u.lcm(E({0, 3, 1})) == E({2, 3, 1}));
    CHECK(u.plus(E({0, 1, 0})) == E({2, 1, 1}));
    CHECK(u.colon_by(E({1, 2, 0})) == E({1, 0, 1}));
    CHECK_THROWS_AS(E({1, -1}), ParameterError);
    CHECK_THROWS_AS(u.divides(E({1, 1})), DimensionError);
}

TEST_CASE("canonical order: degree ascending, then lex descending") {
    std::vector<Exponent> v = {E({1, 2}), E({3, 0}), E({0, 1}), E({2, 1})};
    std::sort(v.begin(), v.end(), canonical_less);
    CHECK(v == std::vector<Exponent>{E({0, 1}), E({3, 0}), E({2, 1}), E({1, 2})});
}

TEST_CASE("minimalize") {
    MonomialIdeal I = MonomialIdeal::make(
        2, {E({2, 1}), E({1, 2}), E({2, 2}), E({3, 0}), E({2, 1})});
    CHECK(I.gens() == std::vector<Exponent>{E({3, 0}), E({2, 1}), E({1, 2})});

    SUBCASE("idempotent") { CHECK(MonomialIdeal::make(2, I.gens()) == I); }

    SUBCASE("a degree-zero generator collapses to the unit ideal") {
        MonomialIdeal U = MonomialIdeal::make(2, {E({1, 1}), E({0, 0})});
        CHECK(U.is_unit());
        CHECK(U.gens().size() == 1);
    }

    SUBCASE("input order never matters") {
        std::mt19937 rng(13);
        std::vector<Exponent> gens = {E({2, 1}), E({1, 2}), E({2, 2}), E({3, 0}), E({0, 4})};
        MonomialIdeal ref = MonomialIdeal::make(2, gens);
        for (int trial = 0; trial < 20; ++trial) {
            std::shuffle(gens.begin(), gens.end(), rng);
            CHECK(MonomialIdeal::make(2, gens) == ref);
        }
    }
}

TEST_CASE("membership and containment") {
    MonomialIdeal I = MonomialIdeal::make(3, {E({1, 1, 0}), E({0, 0, 2})});
    CHECK(I.member(E({2, 1, 0})));
    CHECK(I.member(E({0, 0, 2})));
    CHECK_FALSE(I.member(E({1, 0, 1})));
    CHECK_FALSE(MonomialIdeal::zero(3).member(E({0, 0, 0})));
    CHECK(MonomialIdeal::unit(3).member(E({0, 0, 0})));

    CHECK(I.contains(MonomialIdeal::zero(3)));
    CHECK(MonomialIdeal::unit(3).contains(I));
    CHECK_FALSE(I.contains(MonomialIdeal::unit(3)));
    CHECK(I.contains(MonomialIdeal::make(3, {E({1, 1, 2})})));
}

TEST_CASE("intersect: pairwise lcm route against membership on a box") {
    MonomialIdeal I12 = MonomialIdeal::make(3, {E({1, 0, 0}), E({0, 1, 0})});
    MonomialIdeal I13 = MonomialIdeal::make(3, {E({1, 0, 0}), E({0, 0, 1})});
    MonomialIdeal I23 = MonomialIdeal::make(3, {E({0, 1, 0}), E({0, 0, 1})});
    MonomialIdeal J = intersect(intersect(I12, I13), I23);
    CHECK(J.gens() == std::vector<Exponent>{E({1, 1, 0}), E({1, 0, 1}), E({0, 1, 1})});

    for (const Exponent& u : box_points({2, 2, 2}))
        CHECK(J.member(u) == (I12.member(u) && I13.member(u) && I23.member(u)));

    SUBCASE("zero and unit behaviour") {
        CHECK(intersect(I12, MonomialIdeal::zero(3)).is_zero());
        CHECK(intersect(MonomialIdeal::unit(3), I12) == I12);
    }

    SUBCASE("random ideals, exhaustive degree box") {
        std::mt19937 rng(101);
        for (int trial = 0; trial < 30; ++trial) {
            MonomialIdeal A = random_ideal(rng, 3, 3, 4);
            MonomialIdeal B = random_ideal(rng, 3, 3, 4);
            MonomialIdeal C = intersect(A, B);
            for (const Exponent& u : box_points({4, 4, 4}))
                CHECK(C.member(u) == (A.member(u) && B.member(u)));
        }
    }

    SUBCASE("pair cap raises before work starts") {
        MonomialIdeal A = MonomialIdeal::make(3, {E({3, 0, 0}), E({0, 3, 0}), E({0, 0, 3})});
        MonomialIdeal B = MonomialIdeal::make(3, {E({1, 1, 1}), E({5, 0, 0})});
        CHECK_THROWS_AS(intersect(A, B, 5), ResourceError);
        CHECK_NOTHROW(intersect(A, B, 6));
    }
}

TEST_CASE("colon by a monomial") {
    // Generators of degree 3 below (2,2,1), coloned by z3, drop to the
    // degree-2 layer below (2,2,0).
    MonomialIdeal I = MonomialIdeal::make(
        3, {E({2, 1, 0}), E({2, 0, 1}), E({1, 2, 0}), E({1, 1, 1}), E({0, 2, 1})});
    MonomialIdeal Q = colon(I, E({0, 0, 1}));
    CHECK(Q.gens() == std::vector<Exponent>{E({2, 0, 0}), E({1, 1, 0}), E({0, 2, 0})});

    SUBCASE("adjunction u in I:w iff u+w in I, exhaustively") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 25; ++trial) {
            MonomialIdeal A = random_ideal(rng, 3, 3, 5);
            std::uniform_int_distribution<int> d(0, 2);
            Exponent w = E({d(rng), d(rng), d(rng)});
            MonomialIdeal Q2 = colon(A, w);
            for (const Exponent& u : box_points({3, 3, 3}))
                CHECK(Q2.member(u) == A.member(u.plus(w)));
        }
    }
}

TEST_CASE("colon by an ideal") {
    MonomialIdeal I = MonomialIdeal::make(2, {E({2, 0}), E({0, 2})});
    MonomialIdeal m = MonomialIdeal::make(2, {E({1, 0}), E({0, 1})});
    MonomialIdeal Q = colon(I, m);
    // u in I:J iff u+h in I for every generator h of J.
    for (const Exponent& u : box_points({3, 3})) {
        bool expect = true;
        for (const Exponent& h : m.gens())
            expect = expect && I.member(u.plus(h));
        CHECK(Q.member(u) == expect);
    }
    CHECK_THROWS_AS(colon(I, MonomialIdeal::zero(2)), ParameterError);
}

TEST_CASE("saturate") {
    SUBCASE("strips the embedded maximal component only") {
        MonomialIdeal I = MonomialIdeal::make(2, {E({1, 2}), E({2, 1})});
        CHECK(saturate(I) == MonomialIdeal::make(2, {E({1, 1})}));
    }
    SUBCASE("already saturated ideals are fixed") {
        MonomialIdeal P = MonomialIdeal::make(2, {E({1, 0})});
        CHECK(saturate(P) == P);
    }
    SUBCASE("maximal ideal goes to the unit ideal") {
        MonomialIdeal m = MonomialIdeal::make(3, {E({1, 0, 0}), E({0, 1, 0}), E({0, 0, 1})});
        CHECK(saturate(m).is_unit());
    }
    SUBCASE("zero and unit are fixed") {
        CHECK(saturate(MonomialIdeal::zero(2)).is_zero());
        CHECK(saturate(MonomialIdeal::unit(2)).is_unit());
    }
    SUBCASE("agrees with the variable-colon route and the membership oracle") {
        std::mt19937 rng(23);
        for (int trial = 0; trial < 25; ++trial) {
            MonomialIdeal A = random_ideal(rng, 3, 3, 4);
            MonomialIdeal S1 = saturate(A);
            CHECK(S1 == saturate_by_variable_colons(A));
            CHECK(S1.contains(A));
            CHECK(saturate(S1) == S1);
            for (const Exponent& u : box_points({3, 3, 3}))
                CHECK(S1.member(u) == saturation_member_oracle(A, u, 8));
        }
    }
}

TEST_CASE("power") {
    MonomialIdeal m = MonomialIdeal::make(2, {E({1, 0}), E({0, 1})});
    CHECK(power(m, 0).is_unit());
    CHECK(power(m, 2).gens() ==
          std::vector<Exponent>{E({2, 0}), E({1, 1}), E({0, 2})});
    CHECK(power(m, 3) == multiply(power(m, 2), m));
    CHECK(power(m, 2).contains(power(m, 3)));
    CHECK(power(MonomialIdeal::zero(2), 3).is_zero());
    CHECK_THROWS_AS(power(m, -1), ParameterError);
}

TEST_CASE("var_power_ideal") {
    MonomialIdeal V = var_power_ideal({0, 1}, 2, 3);
    CHECK(V.gens() == std::vector<Exponent>{E({2, 0, 0}), E({1, 1, 0}), E({0, 2, 0})});
    CHECK(var_power_ideal({0}, 0, 2).is_unit());
    CHECK(var_power_ideal({}, 1, 2).is_zero());
    CHECK_THROWS_AS(var_power_ideal({0, 0}, 1, 2), ParameterError);
    CHECK_THROWS_AS(var_power_ideal({2}, 1, 2), ParameterError);

    SUBCASE("membership shortcut matches generator divisibility") {
        for (int t = 1; t <= 4; ++t) {
            MonomialIdeal W = var_power_ideal({0, 2}, t, 3);
            for (const Exponent& u : box_points({4, 2, 4}))
                CHECK(W.member(u) == var_power_member({0, 2}, t, u));
        }
    }
}
