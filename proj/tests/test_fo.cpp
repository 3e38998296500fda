#include "dcasm/axioms.hpp"
#include "dcasm/error.hpp"
#include "dcasm/oracle.hpp"
#include "dcasm/partitions.hpp"
#include "dcasm/program.hpp"
#include "dcasm/random_theory.hpp"
#include "dcasm/solver.hpp"

#include "support/fixtures.hpp"
#include "support/reference.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace dcasm;

namespace {

Signature constants(std::initializer_list<const char*> names) {
    Signature sig;
    for (const char* n : names) {
        sig.add_constant(n);
    }
    return sig;
}

std::vector<Diagram> sorted(std::vector<Diagram> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST(DcaAxiom, Renders) {
    EXPECT_EQ(to_string(dca_axiom(constants({"a", "b"})), constants({"a", "b"})), "forall X0 (X0 = a | X0 = b)");
    EXPECT_EQ(to_string(dca_axiom(constants({"a"})), constants({"a"})), "forall X0 X0 = a");
    EXPECT_THROW(dca_axiom(Signature{}), ValidationError);
}

TEST(DcaAxiom, SupplierWithNullCoversEveryConstant) {
    const TheorySpec t = parse_theory(fx::kSupplierWithNull);
    const Formula f = dca_axiom(t.signature());
    ASSERT_EQ(f.kind(), Formula::Kind::forall);
    EXPECT_EQ(f.child(0).children().size(), 6u);
    EXPECT_TRUE(is_sentence(f));
}

TEST(CompletionAxiom, SuppliesHasFourCases) {
    const TheorySpec t = parse_theory(fx::kSupplier);
    const Signature& sig = t.signature();
    const Formula f = completion_axiom(*sig.find_predicate("supplies"), sig, t.delta());
    EXPECT_EQ(to_string(f, sig),
              "forall X0 forall X1 (supplies(X0,X1) -> ((X0 = acme & X1 = p1) | (X0 = foo & X1 = p2) | "
              "(X0 = foo & X1 = p1) | (X0 = foo & X1 = p3)))");
}

TEST(CompletionAxiom, SupplierWithNull) {
    const TheorySpec t = parse_theory(fx::kSupplierWithNull);
    const Signature& sig = t.signature();
    EXPECT_EQ(to_string(completion_axiom(*sig.find_predicate("supplier"), sig, t.delta()), sig),
              "forall X0 (supplier(X0) -> (X0 = acme | X0 = foo | X0 = omega))");
}

TEST(CompletionAxiom, UnusedPredicate) {
    const TheorySpec t = parse_theory("#pred q/1.\np(a).\n");
    const Signature& sig = t.signature();
    EXPECT_EQ(to_string(completion_axiom(*sig.find_predicate("q"), sig, t.delta()), sig),
              "forall X0 (q(X0) -> false)");
}

TEST(TheoryAxioms, SupplierCounts) {
    const TheorySpec t = parse_theory(fx::kSupplier);
    const TheoryAxioms ax = theory_axioms(t);
    EXPECT_EQ(ax.unique_names.size(), 10u);
    EXPECT_EQ(ax.clauses.size(), 9u);
    EXPECT_EQ(ax.completion.size(), 4u);
    EXPECT_EQ(ax.all().size(), 24u);
}

TEST(TheoryAxioms, NullSupplierUnaSet) {
    const TheorySpec t = parse_theory(fx::kSupplierWithNull);
    const Signature& sig = t.signature();
    const auto pairs = theory_una_pairs(t);
    EXPECT_EQ(pairs.size(), 13u);
    const ConstId omega = *sig.find_constant("omega");
    EXPECT_FALSE(pairs.contains(ConstPair::of(omega, *sig.find_constant("acme"))));
    EXPECT_FALSE(pairs.contains(ConstPair::of(omega, *sig.find_constant("foo"))));
    EXPECT_EQ(theory_axioms(t).unique_names.size(), 13u);
}

TEST(TheoryAxioms, EmptyDelta) {
    const TheorySpec t = parse_theory("#const a.\n#pred p/1.\n");
    const TheoryAxioms ax = theory_axioms(t);
    EXPECT_TRUE(ax.clauses.empty());
    EXPECT_TRUE(ax.unique_names.empty());
    ASSERT_EQ(ax.completion.size(), 1u);
    EXPECT_EQ(to_string(ax.completion[0], t.signature()), "forall X0 (p(X0) -> false)");
    EXPECT_EQ(to_string(ax.domain_closure, t.signature()), "forall X0 X0 = a");
}

TEST(Eval, SupplierAndNullModels) {
    const TheorySpec t = parse_theory(fx::kSupplier);
    const Signature& sig = t.signature();
    const Diagram i3 = fx::supplier_models(sig)[2];
    const auto herbrand = DcaInterpretation::herbrand(sig, i3.atoms);
    EXPECT_TRUE(eval(Formula::atom(fx::atom(sig, "supplies(foo,p3)")), herbrand));
    const VarId x{0};
    EXPECT_TRUE(eval(Formula::forall(x, Formula::equal(Term::variable(x), Term::variable(x))), herbrand));
    for (const auto& f : theory_axioms(t).all()) {
        EXPECT_TRUE(eval(f, herbrand)) << to_string(f, sig);
    }

    const TheorySpec tn = parse_theory(fx::kSupplierWithNull);
    const Signature& sn = tn.signature();
    // Constants p1 p2 p3 acme foo omega; omega joins acme.
    const std::vector<std::size_t> rgs{0, 1, 2, 3, 4, 3};
    auto j2 = DcaInterpretation::from_partition(sn, rgs);
    const Diagram j2_diagram = fx::null_models(sn)[1];
    for (const auto& a : j2_diagram.atoms) {
        j2.set(a);
    }
    const Term omega = Term::constant(*sn.find_constant("omega"));
    const Term acme = Term::constant(*sn.find_constant("acme"));
    const Term foo = Term::constant(*sn.find_constant("foo"));
    EXPECT_TRUE(eval(Formula::equal(omega, acme), j2));
    EXPECT_FALSE(eval(Formula::equal(omega, foo), j2));
    for (const auto& f : theory_axioms(tn).all()) {
        EXPECT_TRUE(eval(f, j2)) << to_string(f, sn);
    }
    EXPECT_EQ(diagram_of(j2, sn), fx::null_models(sn)[1]);
}

TEST(Eval, UnboundVariableThrows) {
    const Signature sig = constants({"a"});
    const auto interp = DcaInterpretation::herbrand(sig, {});
    EXPECT_THROW(eval(Formula::equal(Term::variable(VarId{3}), Term::constant(const_id(0))), interp), Error);
}

// SM[F] evaluated through the second-order quantifier agrees with the
// reduct definition on small programs.
TEST(StabilityFormula, AgreesWithReductOnSmallPrograms) {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int round = 0; round < 200; ++round) {
        GroundProgram p = ref::random_choice_free_program(rng);
        const auto base = ref::herbrand_base(p.signature);
        if (base.size() > 7) {
            continue;
        }
        const Formula sm = stability_formula(program_formula(p), p.signature, p.intensional);
        ASSERT_TRUE(is_sentence(sm));
        ref::for_each_subset(base, [&](const ref::AtomSet& m) {
            const std::vector<Atom> atoms(m.begin(), m.end());
            const bool fo = eval(sm, DcaInterpretation::herbrand(p.signature, atoms));
            EXPECT_EQ(fo, ref::reduct_stable(p, m));
            ++checked;
        });
    }
    EXPECT_GT(checked, 500);
}

TEST(Star, ImplicationAndNegation) {
    Signature sig = constants({"a"});
    const PredId p = sig.add_predicate("p", 0);
    const PredId q = sig.add_predicate("q", 0);
    const std::vector<PredId> intensional{p, q};
    const Formula fp = Formula::atom(Atom{p, {}});
    const Formula fq = Formula::atom(Atom{q, {}});
    EXPECT_EQ(to_string(star(Formula::implication(fp, fq), intensional), sig),
              "((V0 -> V1) & (p -> q))");
    EXPECT_EQ(to_string(star(Formula::negation(fp), intensional), sig), "((V0 -> false) & ~p)");
    EXPECT_EQ(to_string(star(fp || fq, std::vector<PredId>{q}), sig), "(p | V1)");
}

TEST(Partitions, SmallListInLexicographicOrder) {
    const auto rgs = restricted_growth_strings(3);
    const std::vector<std::vector<std::size_t>> expected{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}};
    EXPECT_EQ(rgs, expected);
    const std::vector<Apart> apart{{0, 2}};
    const std::vector<std::vector<std::size_t>> kept{{0, 0, 1}, {0, 1, 1}, {0, 1, 2}};
    EXPECT_EQ(restricted_growth_strings(3, apart), kept);
}

TEST(Partitions, CountsMatchBruteForce) {
    std::mt19937_64 rng(3);
    for (std::size_t n = 0; n <= 6; ++n) {
        for (int round = 0; round < 6; ++round) {
            std::vector<Apart> apart;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (round > 0 && rng() % 3 == 0) {
                        apart.emplace_back(i, j);
                    }
                }
            }
            const auto rgs = restricted_growth_strings(n, apart);
            EXPECT_EQ(rgs.size(), ref::count_partitions(n, apart)) << n;
            EXPECT_TRUE(std::is_sorted(rgs.begin(), rgs.end()));
            EXPECT_EQ(std::adjacent_find(rgs.begin(), rgs.end()), rgs.end());
        }
    }
}

TEST(Oracle, SupplierHerbrandModels) {
    const TheorySpec t = parse_theory(fx::kSupplier);
    EXPECT_EQ(enumerate_dca_models(t), sorted(fx::supplier_models(t.signature())));
}

TEST(Oracle, SupplierWithNullModels) {
    const TheorySpec t = parse_theory(fx::kSupplierWithNull);
    EXPECT_EQ(enumerate_dca_models(t), sorted(fx::null_models(t.signature())));
}

TEST(Oracle, DisjunctionWithoutUniqueNames) {
    const TheorySpec t = parse_theory("#null a b.\np(a) | p(b).\n");
    const Signature& sig = t.signature();
    // Apart: p(a), p(b) or both. Merged: p holds of the single element.
    const std::vector<Diagram> expected{fx::diagram(sig, {"p(a)"}), fx::diagram(sig, {"p(b)"}),
                                        fx::diagram(sig, {"p(a)", "p(b)"}),
                                        fx::diagram(sig, {"p(a)", "p(b)", "eq(a,b)", "eq(b,a)"})};
    EXPECT_EQ(enumerate_dca_models(t), sorted(expected));
}

TEST(Oracle, FullSigmaGivesHerbrandModels) {
    std::mt19937_64 rng(17);
    RandomBounds bounds;
    bounds.max_nulls = 2;
    for (int i = 0; i < 60; ++i) {
        const TheorySpec t = random_theory(rng, bounds);
        auto all = required_una_pairs(t.signature());
        const auto optional = optional_una_pairs(t.signature());
        all.insert(optional.begin(), optional.end());
        const auto diagrams = enumerate_dca_models(t, all);
        std::vector<Diagram> expected;
        for (const auto& m : ref::completion_models(t)) {
            expected.push_back(ref::herbrand_diagram(m, t.signature()));
        }
        EXPECT_EQ(diagrams, sorted(expected)) << print_theory(t);
        for (const auto& d : diagrams) {
            EXPECT_NO_THROW(validate_diagram(d, t.signature()));
        }
    }
}

TEST(Oracle, Guardrails) {
    TheorySpec many;
    for (int i = 0; i < 11; ++i) {
        many.signature().add_constant("c" + std::to_string(i));
    }
    EXPECT_THROW(enumerate_dca_models(many), GuardrailError);

    std::string wide;
    for (int i = 0; i < 25; ++i) {
        wide += "p(c" + std::to_string(i % 5) + ",d" + std::to_string(i / 5) + ").\n";
    }
    EXPECT_THROW(enumerate_dca_models(parse_theory(wide)), GuardrailError);
    OracleOptions force;
    force.force = true;
    EXPECT_EQ(enumerate_dca_models(many, force).size(), 1u);
}

TEST(MinimalModels, Disjunction) {
    Signature sig = constants({"a", "b"});
    const PredId p = sig.add_predicate("p", 1);
    const Formula f = Formula::atom(Atom{p, {const_id(0)}}) || Formula::atom(Atom{p, {const_id(1)}});
    EXPECT_EQ(minimal_dca_models(f, sig), sorted(fx::disjunction_models(sig)));
}

TEST(MinimalModels, SingleFact) {
    Signature sig = constants({"a"});
    const PredId p = sig.add_predicate("p", 1);
    const auto models = minimal_dca_models(Formula::atom(Atom{p, {const_id(0)}}), sig);
    ASSERT_EQ(models.size(), 1u);
    EXPECT_EQ(models[0], fx::diagram(sig, {"p(a)"}));
}

TEST(MinimalModels, TwoConjunctionsHaveTwentyThree) {
    Signature sig = constants({"a", "b", "c", "d"});
    const PredId p = sig.add_predicate("p", 1);
    auto pa = [&](std::size_t i) { return Formula::atom(Atom{p, {const_id(i)}}); };
    const Formula f = (pa(0) && pa(1)) || (pa(2) && pa(3));
    EXPECT_EQ(minimal_dca_models(f, sig).size(), 23u);
}

TEST(Diagram, ClosureViolations) {
    const Signature sig = [] {
        Signature s = constants({"a", "b"});
        s.add_predicate("p", 1);
        return s;
    }();
    EXPECT_THROW(validate_diagram(fx::diagram(sig, {"eq(a,a)"}, false), sig), ClosureError);
    EXPECT_THROW(validate_diagram(fx::diagram(sig, {"eq(a,b)"}), sig), ClosureError);
    EXPECT_THROW(validate_diagram(fx::diagram(sig, {"p(a)", "eq(a,b)", "eq(b,a)"}), sig), ClosureError);
    EXPECT_NO_THROW(validate_diagram(fx::diagram(sig, {"p(a)", "p(b)", "eq(a,b)", "eq(b,a)"}), sig));
    const Signature three = constants({"a", "b", "c"});
    EXPECT_THROW(validate_diagram(fx::diagram(three, {"eq(a,b)", "eq(b,a)", "eq(b,c)", "eq(c,b)"}), three),
                 ClosureError);
}

TEST(Diagram, PrintsOneAtomPerLine) {
    Signature sig = constants({"a", "b"});
    sig.add_predicate("p", 1);
    const Diagram k3 = fx::disjunction_models(sig)[2];
    EXPECT_EQ(print_diagram(k3, sig), "p(a)\np(b)\neq(a,a)\neq(a,b)\neq(b,a)\neq(b,b)\n");
    EXPECT_EQ(diagram_line(k3, sig), "p(a) p(b) eq(a,a) eq(a,b) eq(b,a) eq(b,b)");
}
