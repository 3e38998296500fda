#pragma once

#include "dcasm/diagram.hpp"
#include "dcasm/interpretation.hpp"
#include "dcasm/program.hpp"
#include "dcasm/solver.hpp"

namespace dcasm {

/// eq(a,b) atoms become the pair (a,b); every other atom is kept. The
/// result is validated, so an answer set that is not closed under the
/// equality axioms raises ClosureError. Predicate ids are unchanged; eq is
/// the last predicate of a compiled signature, so the diagram also reads
/// correctly against the source theory's signature.
Diagram answer_set_to_diagram(const CandidateModel& model, const Signature& sig, PredId eq);
Diagram answer_set_to_diagram(const CandidateModel& model, const GroundProgram& program);

/// Universe = classes of the equality relation, each represented by its
/// least constant. Throws ClosureError on an invalid diagram.
DcaInterpretation quotient(const Diagram& d, const Signature& sig);

/// Validates both sides, then compares them as sets.
bool diagrams_equal_up_to_iso(const Diagram& a, const Diagram& b, const Signature& sig);

} // namespace dcasm
