#pragma once

#include "dcasm/formula.hpp"
#include "dcasm/signature.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dcasm {

/// Element of a finite universe, numbered 0..size-1.
using Element = std::size_t;

/// n-ary relation over a universe of k elements, stored as a k^n bitmap.
class Relation {
public:
    Relation() = default;
    Relation(std::size_t arity, std::size_t universe_size);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t universe_size() const noexcept { return universe_size_; }
    /// Number of tuples over the universe (k^n).
    std::size_t tuple_count() const noexcept { return bits_.size(); }

    bool contains(std::span<const Element> tuple) const { return bits_[offset(tuple)]; }
    void insert(std::span<const Element> tuple) { bits_[offset(tuple)] = true; }
    bool contains_index(std::size_t i) const { return bits_[i]; }
    void set_index(std::size_t i, bool value) { bits_[i] = value; }
    std::vector<Element> tuple_at(std::size_t i) const;

    bool operator==(const Relation&) const = default;

private:
    std::size_t offset(std::span<const Element> tuple) const;

    std::size_t arity_ = 0;
    std::size_t universe_size_ = 0;
    std::vector<bool> bits_;
};

/// Interpretation satisfying the domain closure axiom: every element is the
/// denotation of some object constant.
struct DcaInterpretation {
    /// Representative constant of each element: the least constant (in
    /// declaration order) of its class, ascending.
    std::vector<ConstId> universe;
    /// Object constant index -> element.
    std::vector<Element> denotation;
    /// Predicate index -> extension.
    std::vector<Relation> extensions;

    std::size_t size() const noexcept { return universe.size(); }

    /// Builds the interpretation with universe = classes of `class_of`
    /// (restricted-growth string over the constants) and empty extensions.
    static DcaInterpretation from_partition(const Signature& sig, std::span<const std::size_t> class_of);
    /// Herbrand interpretation: every constant denotes itself.
    static DcaInterpretation herbrand(const Signature& sig, std::span<const Atom> true_atoms);

    /// Makes P(c1..cn) true.
    void set(const Atom& atom);
    bool holds(const Atom& atom) const;
};

/// Values of free object variables (indexed by VarId) and of free predicate
/// variables (indexed by PredVarId).
struct Valuation {
    std::vector<std::optional<Element>> objects;
    std::vector<std::optional<Relation>> predicates;
};

/// Tarskian satisfaction; equality is identity of denotations. Throws
/// Error on an unbound variable or an ∃v whose search space exceeds 2^24.
bool eval(const Formula& f, const DcaInterpretation& interp, Valuation& env);
bool eval(const Formula& sentence, const DcaInterpretation& interp);

} // namespace dcasm
