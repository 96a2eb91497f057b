#include "hypernum/hyperadd.hpp"

#include "testutil.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hypernum;
using testutil::hyper_of;
using testutil::magnitudes_with_relation;

TEST_CASE("hyper_add matches the defining clauses") {
    CHECK(hyper_add(Hyper::plus(2), Hyper::minus(1)) == HyperSet{Hyper::plus(1)});
    CHECK(hyper_add(Hyper::plus(1), Hyper::minus(1)) == HyperSet{Hyper::zero()});
    CHECK(hyper_add(Hyper::plus(1), Hyper::lambda(1)) == HyperSet{Hyper::lambda(2)});
    CHECK(hyper_add(Hyper::lambda(1), Hyper::lambda(1)) ==
          HyperSet{Hyper::lambda(2), Hyper::zero()});
    CHECK(hyper_add(Hyper::lambda(2), Hyper::lambda(1)) ==
          HyperSet{Hyper::lambda(3), Hyper::plus(1), Hyper::minus(1)});
    CHECK(hyper_add(Hyper::zero(), Hyper::minus(5)) == HyperSet{Hyper::minus(5)});

    CHECK(hyper_add(Hyper::minus(1), Hyper::minus(2)) == HyperSet{Hyper::minus(3)});
    CHECK(hyper_add(Hyper::plus(1), Hyper::minus(3)) == HyperSet{Hyper::minus(2)});
    CHECK(hyper_add(Hyper::minus(2), Hyper::lambda(Rational(1, 2))) ==
          HyperSet{Hyper::lambda(Rational(5, 2))});
}

TEST_CASE("additive inverses") {
    CHECK(neg(Hyper::plus(3)) == Hyper::minus(3));
    CHECK(neg(Hyper::lambda(5)) == Hyper::lambda(5));
    CHECK(neg(Hyper::zero()) == Hyper::zero());
    CHECK(neg(Hyper::minus(Rational(2, 7))) == Hyper::plus(Rational(2, 7)));

    testutil::Rng rng(101);
    for (int i = 0; i < 400; ++i) {
        Hyper x = testutil::random_hyper(rng);
        CHECK(hyper_add(x, neg(x)).contains(Hyper::zero()));
        CHECK(neg(neg(x)) == x);
    }
}

TEST_CASE("the inverse is unique, by case analysis over sign and magnitude order") {
    testutil::Rng rng(103);
    for (int i = 0; i < 120; ++i) {
        Hyper x = testutil::random_hyper(rng);
        // candidate inverses: zero, and every (sign, magnitude) combination
        // with magnitude below/equal/above mag(x)
        std::vector<Hyper> candidates = {Hyper::zero()};
        Rational base = x.is_zero() ? Rational(1) : mag(x);
        for (Sign s : kNonzeroSigns)
            for (const Rational& m :
                 {base * Rational(1, 2), base, base * Rational(2), base + Rational(1, 3)})
                candidates.push_back(Hyper::make(s, m));
        for (const Hyper& y : candidates) {
            bool inverts = hyper_add(x, y).contains(Hyper::zero());
            CHECK(inverts == (y == neg(x)));
        }
    }
}

TEST_CASE("hyper_add is commutative over every sign pattern and order relation") {
    testutil::Rng rng(107);
    for (Sign sx : kAllSigns)
        for (Sign sy : kAllSigns)
            for (int rel : {-1, 0, 1})
                for (int i = 0; i < 12; ++i) {
                    auto [a, b] = magnitudes_with_relation(rng, rel);
                    Hyper x = hyper_of(sx, a), y = hyper_of(sy, b);
                    CHECK(hyper_add(x, y) == hyper_add(y, x));
                }
}

TEST_CASE("zero is neutral") {
    testutil::Rng rng(109);
    for (int i = 0; i < 200; ++i) {
        Hyper x = testutil::random_hyper(rng);
        CHECK(hyper_add(Hyper::zero(), x) == HyperSet{x});
        CHECK(hyper_add(x, Hyper::zero()) == HyperSet{x});
    }
}

TEST_CASE("restriction to the classical line is ordinary addition") {
    testutil::Rng rng(113);
    for (int i = 0; i < 1000; ++i) {
        Rational r = testutil::random_rational(rng);
        Rational s = testutil::random_rational(rng);
        CHECK(hyper_add(embed_real(r), embed_real(s)) == HyperSet{embed_real(r + s)});
    }
}

TEST_CASE("hyper-sum cardinality is 1, 2, or 3 with exact multivalued cases") {
    testutil::Rng rng(127);
    for (Sign sx : kAllSigns)
        for (Sign sy : kAllSigns)
            for (int rel : {-1, 0, 1})
                for (int i = 0; i < 8; ++i) {
                    auto [a, b] = magnitudes_with_relation(rng, rel);
                    Hyper x = hyper_of(sx, a), y = hyper_of(sy, b);
                    std::size_t n = hyper_add(x, y).size();
                    CHECK(n >= 1);
                    CHECK(n <= 3);
                    bool lambda_pair = sx == Sign::Lambda && sy == Sign::Lambda;
                    CHECK((n == 3) == (lambda_pair && rel != 0));
                    CHECK((n == 2) == (lambda_pair && rel == 0));
                }
}

TEST_CASE("reversibility fails on the full system") {
    // (L,3) lies in (L,1) + (L,2), but (L,2) does not lie in
    // (L,3) + (-(L,1)); both memberships by direct evaluation.
    CHECK(hyper_add(Hyper::lambda(1), Hyper::lambda(2)).contains(Hyper::lambda(3)));
    CHECK_FALSE(hyper_add(Hyper::lambda(3), neg(Hyper::lambda(1))).contains(Hyper::lambda(2)));
}

TEST_CASE("set-lifted sums") {
    CHECK(hyper_add_sets(HyperSet{Hyper::zero()}, HyperSet{Hyper::lambda(1)}) ==
          HyperSet{Hyper::lambda(1)});
    CHECK(hyper_add_sets(HyperSet{Hyper::plus(1), Hyper::minus(1)}, HyperSet{Hyper::zero()}) ==
          HyperSet({Hyper::plus(1), Hyper::minus(1)}));
    CHECK(hyper_add_sets(HyperSet{Hyper::lambda(2)}, HyperSet{Hyper::lambda(1)}) ==
          HyperSet({Hyper::lambda(3), Hyper::plus(1), Hyper::minus(1)}));

    CHECK_THROWS_AS(hyper_add_sets(HyperSet{}, HyperSet{Hyper::zero()}), std::invalid_argument);
    CHECK_THROWS_AS(hyper_add_sets(HyperSet{Hyper::zero()}, HyperSet{}), std::invalid_argument);

    // union over all pairs, computed against a hand-rolled double loop
    testutil::Rng rng(131);
    for (int i = 0; i < 60; ++i) {
        HyperSet a, b;
        std::uniform_int_distribution<int> count(1, 3);
        for (int k = count(rng); k > 0; --k) a.insert(testutil::random_hyper(rng));
        for (int k = count(rng); k > 0; --k) b.insert(testutil::random_hyper(rng));
        HyperSet expected;
        for (const Hyper& u : a)
            for (const Hyper& v : b) expected.insert_all(hyper_add(u, v));
        CHECK(hyper_add_sets(a, b) == expected);
    }
}

TEST_CASE("fold_bracketings enumerates every shape") {
    auto single = fold_bracketings({Hyper::plus(7)});
    REQUIRE(single.size() == 1);
    CHECK(single.at("0") == HyperSet{Hyper::plus(7)});

    auto witness = fold_bracketings({Hyper::plus(1), Hyper::minus(1), Hyper::lambda(1)});
    REQUIRE(witness.size() == 2);
    CHECK(witness.at("((0 1) 2)") == HyperSet{Hyper::lambda(1)});
    CHECK(witness.at("(0 (1 2))") == HyperSet{Hyper::lambda(3)});

    auto classical = fold_bracketings({Hyper::plus(1), Hyper::plus(2), Hyper::plus(3)});
    REQUIRE(classical.size() == 2);
    for (const auto& [shape, set] : classical) CHECK(set == HyperSet{Hyper::plus(6)});

    // Catalan counts for n = 2, 4, 5
    CHECK(fold_bracketings({Hyper::plus(1), Hyper::plus(1)}).size() == 1);
    CHECK(fold_bracketings({Hyper::plus(1), Hyper::plus(1), Hyper::plus(1), Hyper::plus(1)})
              .size() == 5);
    CHECK(fold_bracketings(std::vector<Hyper>(5, Hyper::lambda(1))).size() == 14);

    CHECK_THROWS_AS(fold_bracketings({}), std::invalid_argument);
    CHECK_THROWS_AS(fold_bracketings(std::vector<Hyper>(13, Hyper::zero())),
                    std::invalid_argument);
}

TEST_CASE("bracketing shapes agree with direct evaluation") {
    testutil::Rng rng(137);
    for (int i = 0; i < 40; ++i) {
        Hyper x = testutil::random_hyper(rng);
        Hyper y = testutil::random_hyper(rng);
        Hyper z = testutil::random_hyper(rng);
        auto shapes = fold_bracketings({x, y, z});
        REQUIRE(shapes.size() == 2);
        CHECK(shapes.at("((0 1) 2)") ==
              hyper_add_sets(hyper_add(x, y), HyperSet{z}));
        CHECK(shapes.at("(0 (1 2))") ==
              hyper_add_sets(HyperSet{x}, hyper_add(y, z)));
    }
}
