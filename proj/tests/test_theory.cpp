#include "dcasm/error.hpp"
#include "dcasm/random_theory.hpp"
#include "dcasm/theory.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dcasm;

namespace {

const char* kSupplierWithNull = R"(
part(p1;p2;p3).
supplier(acme;foo).
supplies(acme,p1;;foo,p2).
subpart(p1,p2).
#null omega.
supplier(omega).
supplies(omega,p3).
#una omega p1.
#una omega p2.
#una omega p3.
)";

ConstId c(const Signature& sig, const char* name) { return *sig.find_constant(name); }

} // namespace

TEST(ParseTheory, SupplierWithNull) {
    const TheorySpec t = parse_theory(kSupplierWithNull);
    // 8 base facts and the two facts about omega.
    EXPECT_EQ(t.delta().size(), 10u);
    EXPECT_EQ(t.sigma().size(), 3u);
    const Signature& sig = t.signature();
    EXPECT_EQ(sig.num_constants(), 6u);
    EXPECT_TRUE(sig.is_null(c(sig, "omega")));
    EXPECT_FALSE(sig.is_null(c(sig, "acme")));
    EXPECT_TRUE(t.sigma().contains(ConstPair::of(c(sig, "omega"), c(sig, "p1"))));
    EXPECT_FALSE(t.sigma().contains(ConstPair::of(c(sig, "omega"), c(sig, "acme"))));
    EXPECT_EQ(sig.arity(*sig.find_predicate("supplies")), 2u);
}

TEST(ParseTheory, PooledTuplesExpandInOrder) {
    const TheorySpec t = parse_theory("supplies(acme,p1;;foo,p2).\nq(a;b,c).\n");
    ASSERT_EQ(t.delta().size(), 4u);
    const Signature& sig = t.signature();
    EXPECT_EQ(to_string(t.delta()[0].atoms[0], sig), "supplies(acme,p1)");
    EXPECT_EQ(to_string(t.delta()[1].atoms[0], sig), "supplies(foo,p2)");
    EXPECT_EQ(to_string(t.delta()[2].atoms[0], sig), "q(a,c)");
    EXPECT_EQ(to_string(t.delta()[3].atoms[0], sig), "q(b,c)");
}

TEST(ParseTheory, ListingSurfaceForms) {
    const TheorySpec t = parse_theory("1{s(foo,p1),s(foo,p3)}.\n#null w.\n:- w==p1.\n");
    ASSERT_EQ(t.delta().size(), 1u);
    EXPECT_EQ(t.delta()[0].atoms.size(), 2u);
    EXPECT_EQ(t.sigma().size(), 1u);
}

TEST(ParseTheory, EmptySourceWithDeclaredConstant) {
    const TheorySpec t = parse_theory("#const a.\n");
    EXPECT_TRUE(t.delta().empty());
    EXPECT_TRUE(t.sigma().empty());
    EXPECT_EQ(t.signature().num_constants(), 1u);
}

TEST(ParseTheory, UnclosedParenthesisReportsPosition) {
    try {
        parse_theory("part(p1");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 8u);
    }
}

TEST(ParseTheory, Errors) {
    EXPECT_THROW(parse_theory("p(a).\np(a,b).\n"), ParseError);       // arity clash
    EXPECT_THROW(parse_theory("p(a;b).\n#una a b.\n"), ParseError);  // both database constants
    EXPECT_THROW(parse_theory("p(a).\n#una a zz.\n"), ParseError);   // unknown constant
    EXPECT_THROW(parse_theory("p(X).\n"), ParseError);               // variables
    EXPECT_THROW(parse_theory("eq(a,b).\n"), ParseError);            // reserved
    EXPECT_THROW(parse_theory("p(a;b) | q.\n"), ParseError);         // pool in a disjunction
    EXPECT_THROW(parse_theory("#null w.\n#una w w.\n"), ParseError); // self pair
    EXPECT_THROW(parse_theory("p(a) $"), ParseError);
}

TEST(ParseTheory, ClauseNormalization) {
    const TheorySpec t = parse_theory("p(a) | p(b) | p(a).\np(a) | p(b).\np(b) | p(a).\n");
    ASSERT_EQ(t.delta().size(), 1u);
    EXPECT_EQ(t.delta()[0].atoms.size(), 2u);
}

TEST(RequiredUnaPairs, SupplierSignature) {
    const TheorySpec t = parse_theory(kSupplierWithNull);
    const auto pairs = required_una_pairs(t.signature());
    EXPECT_EQ(pairs.size(), 10u);
    const ConstId omega = c(t.signature(), "omega");
    for (const auto& pr : pairs) {
        EXPECT_NE(pr.first, omega);
        EXPECT_NE(pr.second, omega);
    }
    EXPECT_EQ(optional_una_pairs(t.signature()).size(), 5u);
}

TEST(RequiredUnaPairs, Degenerate) {
    Signature one;
    one.add_constant("a");
    EXPECT_TRUE(required_una_pairs(one).empty());
    Signature nulls;
    nulls.add_constant("w1", ConstKind::null_value);
    nulls.add_constant("w2", ConstKind::null_value);
    EXPECT_TRUE(required_una_pairs(nulls).empty());
    EXPECT_EQ(optional_una_pairs(nulls).size(), 1u);
}

TEST(RequiredUnaPairs, CountIsNChooseTwo) {
    for (std::size_t n = 0; n <= 7; ++n) {
        Signature sig;
        for (std::size_t i = 0; i < n; ++i) {
            sig.add_constant("c" + std::to_string(i));
        }
        sig.add_constant("w", ConstKind::null_value);
        std::size_t expected = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                ++expected;
            }
        }
        EXPECT_EQ(required_una_pairs(sig).size(), expected) << n;
    }
}

TEST(PrintTheory, RoundTripOnExamples) {
    for (const char* text : {kSupplierWithNull, "#const a.\n", "#pred r/0.\n#const a.\nr.\np(a) | r.\n"}) {
        const TheorySpec t = parse_theory(text);
        EXPECT_EQ(parse_theory(print_theory(t)), t) << print_theory(t);
    }
}

TEST(PrintTheory, RoundTripOnRandomTheories) {
    std::mt19937_64 rng(11);
    RandomBounds bounds;
    bounds.max_nulls = 2;
    for (int i = 0; i < 300; ++i) {
        const TheorySpec t = random_theory(rng, bounds);
        const std::string text = print_theory(t);
        EXPECT_EQ(parse_theory(text), t) << text;
        for (const auto& pr : required_una_pairs(t.signature())) {
            EXPECT_FALSE(t.sigma().contains(pr));
        }
    }
}

TEST(TheorySpec, AddUnaRejectsRequiredPairs) {
    TheorySpec t;
    const ConstId a = t.signature().add_constant("a");
    const ConstId b = t.signature().add_constant("b");
    const ConstId w = t.signature().add_constant("w", ConstKind::null_value);
    EXPECT_THROW(t.add_una(a, b), ValidationError);
    EXPECT_THROW(t.add_una(w, w), ValidationError);
    t.add_una(w, a);
    t.add_una(a, w);
    EXPECT_EQ(t.sigma().size(), 1u);
}
