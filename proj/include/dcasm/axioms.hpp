#pragma once

#include "dcasm/formula.hpp"
#include "dcasm/theory.hpp"

#include <set>
#include <span>
#include <vector>

namespace dcasm {

/// The sentences of T_{Δ,Σ}, grouped by role.
struct TheoryAxioms {
    Formula domain_closure = Formula::top();
    std::vector<Formula> unique_names;
    std::vector<Formula> clauses;
    std::vector<Formula> completion; // one per predicate, in declaration order

    /// Clauses first, then completion, unique names, domain closure: the
    /// order in which the oracle tests them (cheapest rejections first).
    std::vector<Formula> all() const;
};

/// forall x (x = a_1 | ... | x = a_k). Throws ValidationError when the
/// signature has no object constants.
Formula dca_axiom(const Signature& sig);

/// ~(a = b).
Formula una_axiom(ConstPair pair);

Formula clause_formula(const Clause& clause);

/// forall x (P(x) -> OR over a in W_P of (x = a)), where W_P lists the
/// argument tuples of P occurring in Δ (first-occurrence order). An empty
/// W_P gives forall x (P(x) -> false).
Formula completion_axiom(PredId pred, const Signature& sig, std::span<const Clause> delta);

/// Required unique-name pairs plus Σ.
std::set<ConstPair> theory_una_pairs(const TheorySpec& theory);

TheoryAxioms theory_axioms(const TheorySpec& theory);
/// Same, with an explicit unique-name pair set in place of required ∪ Σ.
TheoryAxioms theory_axioms(const TheorySpec& theory, const std::set<ConstPair>& una);

} // namespace dcasm
