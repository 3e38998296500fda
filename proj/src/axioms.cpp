#include "dcasm/axioms.hpp"

#include "dcasm/error.hpp"

#include <algorithm>

namespace dcasm {

std::vector<Formula> TheoryAxioms::all() const {
    std::vector<Formula> out = clauses;
    out.insert(out.end(), completion.begin(), completion.end());
    out.insert(out.end(), unique_names.begin(), unique_names.end());
    out.push_back(domain_closure);
    return out;
}

Formula dca_axiom(const Signature& sig) {
    if (sig.num_constants() == 0) {
        throw ValidationError("the domain closure axiom is undefined for a signature without object constants");
    }
    const VarId x{0};
    std::vector<Formula> cases;
    for (std::size_t c = 0; c < sig.num_constants(); ++c) {
        cases.push_back(Formula::equal(Term::variable(x), Term::constant(const_id(c))));
    }
    return Formula::forall(x, Formula::disjunction(std::move(cases)));
}

Formula una_axiom(ConstPair pair) {
    return Formula::negation(Formula::equal(Term::constant(pair.first), Term::constant(pair.second)));
}

Formula clause_formula(const Clause& clause) {
    std::vector<Formula> parts;
    for (const auto& atom : clause.atoms) {
        parts.push_back(Formula::atom(atom));
    }
    return parts.size() == 1 ? parts.front() : Formula::disjunction(std::move(parts));
}

Formula completion_axiom(PredId pred, const Signature& sig, std::span<const Clause> delta) {
    std::vector<std::vector<ConstId>> tuples;
    for (const auto& clause : delta) {
        for (const auto& atom : clause.atoms) {
            if (atom.pred == pred && std::find(tuples.begin(), tuples.end(), atom.args) == tuples.end()) {
                tuples.push_back(atom.args);
            }
        }
    }
    std::vector<VarId> vars;
    std::vector<Term> args;
    for (std::size_t i = 0; i < sig.arity(pred); ++i) {
        vars.push_back(static_cast<VarId>(i));
        args.push_back(Term::variable(vars.back()));
    }
    std::vector<Formula> cases;
    for (const auto& tuple : tuples) {
        std::vector<Formula> eqs;
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            eqs.push_back(Formula::equal(args[i], Term::constant(tuple[i])));
        }
        cases.push_back(eqs.size() == 1 ? eqs.front() : Formula::conjunction(std::move(eqs)));
    }
    Formula rhs = cases.empty()        ? Formula::bottom()
                  : cases.size() == 1 ? cases.front()
                                      : Formula::disjunction(std::move(cases));
    return Formula::forall(vars, Formula::implication(Formula::atom(pred, args), std::move(rhs)));
}

std::set<ConstPair> theory_una_pairs(const TheorySpec& theory) {
    auto pairs = required_una_pairs(theory.signature());
    pairs.insert(theory.sigma().begin(), theory.sigma().end());
    return pairs;
}

TheoryAxioms theory_axioms(const TheorySpec& theory) { return theory_axioms(theory, theory_una_pairs(theory)); }

TheoryAxioms theory_axioms(const TheorySpec& theory, const std::set<ConstPair>& una) {
    const Signature& sig = theory.signature();
    TheoryAxioms out;
    out.domain_closure = dca_axiom(sig);
    for (const auto& pair : una) {
        out.unique_names.push_back(una_axiom(pair));
    }
    for (const auto& clause : theory.delta()) {
        out.clauses.push_back(clause_formula(clause));
    }
    for (std::size_t p = 0; p < sig.num_predicates(); ++p) {
        out.completion.push_back(completion_axiom(pred_id(p), sig, theory.delta()));
    }
    return out;
}

} // namespace dcasm
