#pragma once

#include "dcasm/interpretation.hpp"
#include "dcasm/signature.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace dcasm {

/// Subset of the extended Herbrand base: ground atoms plus ground equalities
/// (ordered pairs, both directions and the reflexive ones listed explicitly).
/// Both vectors are kept sorted.
struct Diagram {
    std::vector<Atom> atoms;
    std::vector<std::pair<ConstId, ConstId>> equalities;

    bool operator==(const Diagram&) const = default;
    /// Canonical order: lexicographic over the atom list followed by the
    /// equalities, with equality ordered after every predicate.
    friend std::strong_ordering operator<=>(const Diagram& a, const Diagram& b);

    void normalize();
};

/// Throws ClosureError unless the equalities are reflexive, symmetric and
/// transitive over all constants of `sig` and the atoms are closed under
/// substitution of equals.
void validate_diagram(const Diagram& d, const Signature& sig);

/// D(I): every atom and equality of EHB_σ true in I.
Diagram diagram_of(const DcaInterpretation& interp, const Signature& sig);

/// One atom per line; equality a = b prints as eq(a,b).
std::string print_diagram(const Diagram& d, const Signature& sig);

/// Same atoms on one line, space separated.
std::string diagram_line(const Diagram& d, const Signature& sig);

} // namespace dcasm
