#include "hypernum/hyperaxioms.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

using namespace hypernum;

namespace {

// Cyclic group Z/n with singleton sums.
FiniteHypermagma cyclic_group(std::size_t n) {
    FiniteHypermagma m;
    for (std::size_t i = 0; i < n; ++i) m.carrier.push_back(std::to_string(i));
    m.table.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.entry(i, j) = std::uint64_t{1} << ((i + j) % n);
    return m;
}

MulTable cyclic_field_mul(std::size_t n) {
    MulTable mul(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = (i * j) % n;
    return mul;
}

} // namespace

TEST_CASE("the four-sign table is a canonical commutative hypergroup") {
    auto fixture = fixture_hypermagma("sset");
    CHECK_FALSE(fixture.mul.has_value());
    AxiomReport report = check_axioms(fixture.magma);
    CHECK(report.commutative);
    CHECK(report.associative);
    REQUIRE(report.neutral.has_value());
    CHECK(*report.neutral == "0");
    CHECK(report.unique_inverses);
    CHECK(report.reversible);
    CHECK(report.all_pass());
    CHECK(report.counterexamples.empty());
}

TEST_CASE("inverses on the sign carrier match sign negation") {
    auto m = fixture_hypermagma("sset").magma;
    std::size_t zero = *m.index_of("0");
    for (Sign s : kAllSigns) {
        std::size_t i = *m.index_of(std::string(sign_token(s)));
        std::size_t expected = *m.index_of(std::string(sign_token(sign_negate(s))));
        int count = 0;
        for (std::size_t y = 0; y < m.size(); ++y)
            if (m.entry(i, y) >> zero & 1u) {
                CHECK(y == expected);
                ++count;
            }
        CHECK(count == 1);
    }
}

TEST_CASE("the three-sign fixture is a hyperfield") {
    auto fixture = fixture_hypermagma("sign_hyperfield");
    REQUIRE(fixture.mul.has_value());
    HyperfieldReport report = check_hyperfield(fixture.magma, *fixture.mul);
    CHECK(report.additive.all_pass());
    CHECK(report.zero_absorbing);
    CHECK(report.units_group);
    CHECK(report.distributive);
    CHECK(report.all_pass());
}

TEST_CASE("unknown fixture names are rejected") {
    CHECK_THROWS_AS(fixture_hypermagma("nope"), std::invalid_argument);
}

TEST_CASE("abelian groups with singleton sums pass all axioms") {
    for (std::size_t n : {1u, 2u, 3u, 4u, 6u}) {
        AxiomReport report = check_axioms(cyclic_group(n));
        INFO("cyclic group of order " << n);
        CHECK(report.all_pass());
    }
}

TEST_CASE("prime fields with singleton sums pass the hyperfield check") {
    for (std::size_t p : {2u, 3u, 5u}) {
        HyperfieldReport report = check_hyperfield(cyclic_group(p), cyclic_field_mul(p));
        INFO("prime field of order " << p);
        CHECK(report.all_pass());
    }
}

TEST_CASE("single-entry mutations are detected per axiom") {
    const FiniteHypermagma base = fixture_hypermagma("sset").magma;
    const std::size_t plus = *base.index_of("+");
    const std::size_t minus = *base.index_of("-");
    const std::size_t zero = *base.index_of("0");
    const std::size_t lambda = *base.index_of("L");

    SECTION("commutativity") {
        FiniteHypermagma m = base;
        m.entry(plus, minus) = std::uint64_t{1} << plus;
        AxiomReport r = check_axioms(m);
        CHECK_FALSE(r.commutative);
        // same mutation starves + of an inverse
        CHECK_FALSE(r.unique_inverses);
    }
    SECTION("associativity and neutral element") {
        FiniteHypermagma m = base;
        m.entry(zero, zero) = std::uint64_t{1} << lambda;
        AxiomReport r = check_axioms(m);
        CHECK(r.commutative); // diagonal mutation keeps symmetry
        CHECK_FALSE(r.associative);
        CHECK_FALSE(r.neutral.has_value());
    }
    SECTION("reversibility with unique inverses intact") {
        FiniteHypermagma m = base;
        // drop '-' from L + L
        m.entry(lambda, lambda) =
            (std::uint64_t{1} << zero) | (std::uint64_t{1} << plus) | (std::uint64_t{1} << lambda);
        AxiomReport r = check_axioms(m);
        CHECK(r.commutative);
        CHECK(r.neutral.has_value());
        CHECK(r.unique_inverses);
        CHECK_FALSE(r.reversible);
    }
    SECTION("every false flag carries a counterexample") {
        FiniteHypermagma m = base;
        m.entry(plus, minus) = std::uint64_t{1} << plus;
        AxiomReport r = check_axioms(m);
        bool saw_commutativity = false, saw_inverses = false;
        for (const auto& ce : r.counterexamples) {
            if (ce.axiom == "commutativity") saw_commutativity = true;
            if (ce.axiom == "unique inverses") saw_inverses = true;
            CHECK_FALSE(ce.note.empty());
        }
        CHECK(saw_commutativity);
        CHECK(saw_inverses);
    }
}

TEST_CASE("a corrupted sign hyperfield loses unique inverses") {
    auto fixture = fixture_hypermagma("sign_hyperfield");
    FiniteHypermagma m = fixture.magma;
    std::size_t plus = *m.index_of("+");
    std::size_t minus = *m.index_of("-");
    m.entry(plus, minus) = std::uint64_t{1} << plus;
    m.entry(minus, plus) = std::uint64_t{1} << plus;
    HyperfieldReport report = check_hyperfield(m, *fixture.mul);
    CHECK_FALSE(report.additive.unique_inverses);
    CHECK_FALSE(report.all_pass());
    bool witnessed = false;
    for (const auto& ce : report.additive.counterexamples)
        witnessed = witnessed || ce.axiom == "unique inverses";
    CHECK(witnessed);
}

TEST_CASE("malformed tables are rejected") {
    FiniteHypermagma empty_entry = fixture_hypermagma("sset").magma;
    empty_entry.entry(0, 0) = 0;
    CHECK_THROWS_AS(check_axioms(empty_entry), std::invalid_argument);

    FiniteHypermagma wrong_size = fixture_hypermagma("sset").magma;
    wrong_size.table.pop_back();
    CHECK_THROWS_AS(check_axioms(wrong_size), std::invalid_argument);

    FiniteHypermagma duplicate_label = fixture_hypermagma("sset").magma;
    duplicate_label.carrier[1] = "0";
    CHECK_THROWS_AS(check_axioms(duplicate_label), std::invalid_argument);

    FiniteHypermagma no_carrier;
    CHECK_THROWS_AS(check_axioms(no_carrier), std::invalid_argument);

    FiniteHypermagma too_big = cyclic_group(65);
    CHECK_THROWS_AS(check_axioms(too_big), std::invalid_argument);

    FiniteHypermagma m = fixture_hypermagma("sign_hyperfield").magma;
    MulTable bad_mul(4, 0);
    CHECK_THROWS_AS(check_hyperfield(m, bad_mul), std::invalid_argument);
}

TEST_CASE("table files parse to the bundled fixtures") {
    const char* text = R"(# four-sign table
carrier: 0 + - L
0 + 0 = {0}
0 + + = {+}
0 + - = {-}
0 + L = {L}
+ + 0 = {+}
+ + + = {+}
+ + - = {+, 0, -}
+ + L = {L}
- + 0 = {-}
- + + = {+, 0, -}
- + - = {-}
- + L = {L}
L + 0 = {L}
L + + = {L}
L + - = {L}
L + L = {0, +, -, L}
)";
    HypermagmaFixture parsed = parse_hypermagma_table(text);
    CHECK_FALSE(parsed.mul.has_value());
    FiniteHypermagma expected = fixture_hypermagma("sset").magma;
    CHECK(parsed.magma.carrier == expected.carrier);
    CHECK(parsed.magma.table == expected.table);
    CHECK(check_axioms(parsed.magma).all_pass());
}

TEST_CASE("table files may carry a multiplication table") {
    const char* text = R"(carrier: 0 1
0 + 0 = {0}
0 + 1 = {1}
1 + 0 = {1}
1 + 1 = {0}
0 * 0 = 0
0 * 1 = 0
1 * 0 = 0
1 * 1 = 1
)";
    HypermagmaFixture parsed = parse_hypermagma_table(text);
    REQUIRE(parsed.mul.has_value());
    CHECK(check_hyperfield(parsed.magma, *parsed.mul).all_pass());
}

TEST_CASE("table parse errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_hypermagma_table(text);
        } catch (const TableParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };

    CHECK(line_of("carrier: a\na + a = {a}\na + a = {a}\n") == 3);    // duplicate entry
    CHECK(line_of("carrier: a\na + b = {a}\n") == 2);                 // unknown label
    CHECK(line_of("a + a = {a}\n") == 1);                             // carrier not first
    CHECK(line_of("carrier: a\na + a = {}\n") == 2);                  // empty set
    CHECK(line_of("carrier: a\nwhat\n") == 2);                        // unrecognized line
    CHECK(line_of("carrier: a a\n") == 1);                            // duplicate label
    CHECK(line_of("carrier: a\n") == 1);                              // missing entries
    CHECK(line_of("carrier: a b\na + a = {a}\na + b = {a}\nb + a = {a}\nb + b = {b}\na * a = a\n") ==
          6); // incomplete '*' table
    CHECK(line_of("") == 1);                                          // missing carrier
    CHECK(line_of("carrier: a\na + a = {a,}\n") == 2);                // trailing comma
}

TEST_CASE("whitespace-insensitive tokenization") {
    const char* text = "carrier:   a\n  a   +  a=   {a}  \n";
    HypermagmaFixture parsed = parse_hypermagma_table(text);
    CHECK(parsed.magma.size() == 1);
    CHECK(parsed.magma.entry(0, 0) == 1);
}
