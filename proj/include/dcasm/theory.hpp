#pragma once

#include "dcasm/signature.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dcasm {

/// Positive ground clause A_1 | ... | A_r, r >= 1.
struct Clause {
    std::vector<Atom> atoms;

    bool operator==(const Clause&) const = default;
};

/// A relational theory with null values: signature, the clause set Δ and the
/// chosen optional unique-name axioms Σ.
class TheorySpec {
public:
    TheorySpec() = default;
    explicit TheorySpec(Signature sig) : signature_(std::move(sig)) {}

    /// Adds a clause after removing duplicate disjuncts; a clause with the same
    /// disjuncts as one already present (in any order) is dropped and false
    /// is returned.
    bool add_clause(std::vector<Atom> atoms);
    /// Adds a ≠ b to Σ. Throws ValidationError unless the axiom is optional.
    void add_una(ConstId a, ConstId b);

    const Signature& signature() const noexcept { return signature_; }
    Signature& signature() noexcept { return signature_; }
    const std::vector<Clause>& delta() const noexcept { return delta_; }
    const std::set<ConstPair>& sigma() const noexcept { return sigma_; }

    /// Distinct atoms of Δ in order of first occurrence.
    std::vector<Atom> delta_atoms() const;

    /// Checks every invariant; throws ValidationError.
    void validate() const;

    bool operator==(const TheorySpec&) const = default;

private:
    Signature signature_;
    std::vector<Clause> delta_;
    std::set<ConstPair> sigma_;
};

/// All unordered pairs of distinct database constants.
std::set<ConstPair> required_una_pairs(const Signature& sig);

/// All pairs whose unique-name axiom is optional (at least one null member).
std::set<ConstPair> optional_una_pairs(const Signature& sig);

TheorySpec parse_theory(std::string_view text);

/// Canonical source text; parse_theory(print_theory(t)) == t.
std::string print_theory(const TheorySpec& theory);

} // namespace dcasm
