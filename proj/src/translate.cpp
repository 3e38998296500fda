#include "dcasm/translate.hpp"

#include "dcasm/error.hpp"

#include <algorithm>

namespace dcasm {

GroundProgram delta_to_pi(const TheorySpec& theory) {
    GroundProgram out;
    out.signature = theory.signature();
    for (const auto& clause : theory.delta()) {
        if (clause.atoms.size() == 1) {
            out.rules.push_back(GroundRule::fact(clause.atoms.front()));
        } else {
            out.rules.push_back({RuleKind::cardinality_choice, clause.atoms, {}, RuleOrigin::source});
        }
    }
    out.all_intensional();
    return out;
}

std::set<ConstPair> una_pairs(const TheorySpec& theory, const UnaSelection& selection) {
    const Signature& sig = theory.signature();
    if (selection.mode == UnaMode::theory) {
        auto pairs = required_una_pairs(sig);
        pairs.insert(theory.sigma().begin(), theory.sigma().end());
        return pairs;
    }
    std::vector<bool> listed(sig.num_constants(), false);
    for (const auto& name : selection.constants) {
        auto c = sig.find_constant(name);
        if (!c) {
            throw ValidationError("unknown constant '" + name + "' in unique-name list");
        }
        listed[index(*c)] = true;
    }
    // Σ written in the source is kept; the list only replaces the rest.
    std::set<ConstPair> pairs = theory.sigma();
    for (std::size_t a = 0; a < sig.num_constants(); ++a) {
        for (std::size_t b = a + 1; b < sig.num_constants(); ++b) {
            const bool both_listed = listed[a] && listed[b];
            if (selection.mode == UnaMode::una ? both_listed : !both_listed) {
                pairs.insert({const_id(a), const_id(b)});
            }
        }
    }
    return pairs;
}

std::vector<GroundRule> una_constraints(const TheorySpec& theory, const UnaSelection& selection, PredId eq) {
    std::vector<GroundRule> out;
    for (const auto& pair : una_pairs(theory, selection)) {
        GroundRule rule = GroundRule::constraint({{Atom{eq, {pair.first, pair.second}}, true}});
        rule.origin = RuleOrigin::unique_names;
        out.push_back(std::move(rule));
    }
    return out;
}

GroundProgram eq_rewrite(const GroundProgram& program) {
    if (program.signature.find_predicate(kEqPredicate)) {
        throw ValidationError("predicate name '" + std::string(kEqPredicate) +
                              "' is reserved for the equality encoding");
    }
    GroundProgram out = program;
    const std::size_t source_predicates = out.signature.num_predicates();
    const PredId eq = out.signature.add_predicate(std::string(kEqPredicate), 2);
    out.eq = eq;
    const std::size_t n = out.signature.num_constants();
    auto eq_atom = [&](std::size_t a, std::size_t b) { return Atom{eq, {const_id(a), const_id(b)}}; };
    auto add = [&](RuleKind kind, std::vector<Atom> head, std::vector<Literal> body, RuleOrigin origin) {
        out.rules.push_back({kind, std::move(head), std::move(body), origin});
    };

    for (std::size_t x = 0; x < n; ++x) {
        add(RuleKind::fact, {eq_atom(x, x)}, {}, RuleOrigin::reflexivity);
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            add(RuleKind::disjunctive, {eq_atom(x, y)}, {{eq_atom(y, x), true}}, RuleOrigin::symmetry);
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                add(RuleKind::disjunctive, {eq_atom(x, z)}, {{eq_atom(x, y), true}, {eq_atom(y, z), true}},
                    RuleOrigin::transitivity);
            }
        }
    }
    // P(y1..yk) :- P(x1..xk), eq(x1,y1), ..., eq(xk,yk): odometer over 2k digits.
    for (std::size_t p = 0; p < source_predicates; ++p) {
        const std::size_t arity = out.signature.predicates()[p].arity;
        std::vector<std::size_t> digits(2 * arity, 0);
        bool more = true;
        while (more) {
            Atom from{pred_id(p), {}};
            Atom to{pred_id(p), {}};
            std::vector<Literal> body;
            for (std::size_t i = 0; i < arity; ++i) {
                from.args.push_back(const_id(digits[i]));
                to.args.push_back(const_id(digits[arity + i]));
            }
            body.push_back({from, true});
            for (std::size_t i = 0; i < arity; ++i) {
                body.push_back({eq_atom(digits[i], digits[arity + i]), true});
            }
            add(RuleKind::disjunctive, {to}, std::move(body), RuleOrigin::substitution);
            more = false;
            for (std::size_t k = digits.size(); k-- > 0;) {
                if (++digits[k] < n) {
                    more = true;
                    break;
                }
                digits[k] = 0;
            }
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            add(RuleKind::choice, {eq_atom(x, y)}, {}, RuleOrigin::eq_choice);
        }
    }
    out.all_intensional();
    return out;
}

GroundProgram compile(const TheorySpec& theory, const UnaSelection& selection) {
    theory.validate();
    GroundProgram out = eq_rewrite(delta_to_pi(theory));
    for (auto& rule : una_constraints(theory, selection, *out.eq)) {
        out.rules.push_back(std::move(rule));
    }
    return out;
}

} // namespace dcasm
