#pragma once

#include "dcasm/signature.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcasm {

enum class RuleKind {
    fact,               // A.
    disjunctive,        // H1 | ... | Hk :- B.   (k >= 1)
    constraint,         // :- B.
    choice,             // {A1; ...; Ak} :- B.
    cardinality_choice  // 1{A1, ..., Ar}.
};

/// Where a rule came from; legacy emission collapses the Eq-rewrite schema
/// instances back into one schematic rule per origin.
enum class RuleOrigin { source, reflexivity, symmetry, transitivity, substitution, eq_choice, unique_names };

struct Literal {
    Atom atom;
    bool positive = true;

    bool operator==(const Literal&) const = default;
};

struct GroundRule {
    RuleKind kind = RuleKind::fact;
    std::vector<Atom> head;
    std::vector<Literal> body;
    RuleOrigin origin = RuleOrigin::source;

    static GroundRule fact(Atom a) { return {RuleKind::fact, {std::move(a)}, {}, RuleOrigin::source}; }
    static GroundRule constraint(std::vector<Literal> body) { return {RuleKind::constraint, {}, std::move(body), RuleOrigin::source}; }

    bool operator==(const GroundRule&) const = default;
};

struct GroundProgram {
    Signature signature;
    std::vector<GroundRule> rules;
    /// Intensional predicates; every predicate of the signature by default.
    std::vector<PredId> intensional;
    /// Set once the Eq-rewrite has run.
    std::optional<PredId> eq;

    /// Marks every predicate intensional.
    void all_intensional();
    /// Throws ValidationError if a rule breaks its kind's shape or an atom
    /// does not fit the signature.
    void validate() const;

    bool operator==(const GroundProgram&) const = default;
};

/// Reads a ground program in the solver-input grammar: facts, `|`
/// disjunctions, `:-` bodies with `not`, `{...}` choices, `1{...}`
/// cardinality rules, `#const`/`#pred` declarations and `%` comments.
GroundProgram parse_program(std::string_view text);

std::string to_string(const GroundRule& rule, const Signature& sig);

/// Herbrand base size: sum over predicates of n^arity.
std::size_t herbrand_base_size(const Signature& sig);

} // namespace dcasm
