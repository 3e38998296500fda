#include "dcasm/diagrams.hpp"

#include "dcasm/error.hpp"

namespace dcasm {

Diagram answer_set_to_diagram(const CandidateModel& model, const Signature& sig, PredId eq) {
    Diagram out;
    for (const auto& atom : model) {
        if (atom.pred == eq) {
            out.equalities.emplace_back(atom.args.at(0), atom.args.at(1));
        } else {
            out.atoms.push_back(atom);
        }
    }
    out.normalize();
    validate_diagram(out, sig);
    return out;
}

Diagram answer_set_to_diagram(const CandidateModel& model, const GroundProgram& program) {
    if (!program.eq) {
        throw ValidationError("program has no eq predicate");
    }
    return answer_set_to_diagram(model, program.signature, *program.eq);
}

DcaInterpretation quotient(const Diagram& d, const Signature& sig) {
    validate_diagram(d, sig);
    const std::size_t n = sig.num_constants();
    std::vector<std::size_t> class_of(n, n);
    std::size_t classes = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (class_of[i] != n) {
            continue;
        }
        for (const auto& [a, b] : d.equalities) {
            if (index(a) == i) {
                class_of[index(b)] = classes;
            }
        }
        ++classes;
    }
    auto interp = DcaInterpretation::from_partition(sig, class_of);
    for (const auto& atom : d.atoms) {
        interp.set(atom);
    }
    return interp;
}

bool diagrams_equal_up_to_iso(const Diagram& a, const Diagram& b, const Signature& sig) {
    validate_diagram(a, sig);
    validate_diagram(b, sig);
    return a == b;
}

} // namespace dcasm
