#pragma once

#include "dcasm/program.hpp"
#include "dcasm/theory.hpp"

#include <set>
#include <string>
#include <vector>

namespace dcasm {

/// One cardinality rule 1{A_1,...,A_r} per clause of Δ; unit clauses become
/// facts. The program shares the theory's signature.
GroundProgram delta_to_pi(const TheorySpec& theory);

enum class UnaMode {
    theory, // required axioms plus Σ
    una,    // a != b for distinct a, b both in the list
    no_una  // a != b for distinct a, b with at least one outside the list
};

struct UnaSelection {
    UnaMode mode = UnaMode::theory;
    std::vector<std::string> constants;
};

/// The unique-name pairs selected by `selection`. The list modes replace the
/// required axioms; Σ from the theory is always kept. Throws ValidationError
/// for a constant not in the signature (list modes only).
std::set<ConstPair> una_pairs(const TheorySpec& theory, const UnaSelection& selection);

/// `:- eq(a,b).` per selected pair, a before b in declaration order.
std::vector<GroundRule> una_constraints(const TheorySpec& theory, const UnaSelection& selection, PredId eq);

/// Appends eq/2 to the signature and the ground instances of reflexivity,
/// symmetry, transitivity, substitution (per predicate) and the eq choice,
/// over all constants. Trivial instances are kept. Throws ValidationError
/// when the program already uses `eq`.
GroundProgram eq_rewrite(const GroundProgram& program);

/// eq_rewrite(delta_to_pi(Δ)) plus the selected unique-name constraints.
GroundProgram compile(const TheorySpec& theory, const UnaSelection& selection = {});

enum class EmitStyle { modern, legacy };

/// Solver-input text. Modern style prints every ground rule; legacy style
/// prints the Eq-rewrite schema with variables followed by the universe
/// predicate and `#domain`/`#hide` directives.
std::string emit_asp_text(const GroundProgram& program, EmitStyle style);

} // namespace dcasm
