#pragma once

#include "dcasm/signature.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace dcasm {

enum class VarId : std::uint32_t {};
enum class PredVarId : std::uint32_t {};

constexpr std::size_t index(VarId v) noexcept { return static_cast<std::size_t>(v); }
constexpr std::size_t index(PredVarId v) noexcept { return static_cast<std::size_t>(v); }

/// Object constant or object variable. There are no function terms.
struct Term {
    enum class Kind : std::uint8_t { constant, variable };

    Kind kind = Kind::constant;
    std::uint32_t id = 0;

    static Term constant(ConstId c) { return {Kind::constant, static_cast<std::uint32_t>(c)}; }
    static Term variable(VarId v) { return {Kind::variable, static_cast<std::uint32_t>(v)}; }

    bool is_variable() const noexcept { return kind == Kind::variable; }
    ConstId as_constant() const noexcept { return static_cast<ConstId>(id); }
    VarId as_variable() const noexcept { return static_cast<VarId>(id); }

    bool operator==(const Term&) const = default;
};

/// Immutable first-order formula, extended with predicate variables and the
/// existential second-order quantifier used by stability conditions.
/// Cheap to copy: subtrees are shared.
class Formula {
public:
    enum class Kind {
        top,
        bottom,
        atom,          // predicate constant applied to terms
        var_atom,      // predicate variable applied to terms
        equal,
        negation,
        conjunction,   // n-ary; empty means top
        disjunction,   // n-ary; empty means bottom
        implication,
        forall,
        exists,
        exists_pred
    };

    static Formula top();
    static Formula bottom();
    static Formula atom(PredId pred, std::vector<Term> args);
    static Formula atom(const Atom& ground);
    static Formula var_atom(PredVarId var, std::vector<Term> args);
    static Formula equal(Term lhs, Term rhs);
    static Formula negation(Formula f);
    static Formula conjunction(std::vector<Formula> parts);
    static Formula disjunction(std::vector<Formula> parts);
    static Formula implication(Formula lhs, Formula rhs);
    static Formula forall(VarId var, Formula body);
    static Formula exists(VarId var, Formula body);
    static Formula exists_pred(PredVarId var, std::size_t arity, Formula body);
    /// Wraps body in one forall per variable, outermost first.
    static Formula forall(std::span<const VarId> vars, Formula body);

    Kind kind() const noexcept;
    /// Operands of connectives; the body of quantifiers.
    std::span<const Formula> children() const noexcept;
    const Formula& child(std::size_t i) const { return children()[i]; }
    std::span<const Term> terms() const noexcept;
    PredId pred() const noexcept;
    PredVarId pred_var() const noexcept;
    VarId bound_var() const noexcept;
    std::size_t pred_var_arity() const noexcept;

    /// Structural equality.
    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

inline Formula operator&&(Formula a, Formula b) { return Formula::conjunction({std::move(a), std::move(b)}); }
inline Formula operator||(Formula a, Formula b) { return Formula::disjunction({std::move(a), std::move(b)}); }
inline Formula operator!(Formula a) { return Formula::negation(std::move(a)); }

/// ASCII rendering: `forall X0 (X0 = a | X0 = b)`, `~`, `&`, `|`, `->`,
/// `true`, `false`; predicate variable k prints as `V<k>`.
std::string to_string(const Formula& f, const Signature& sig);

/// True when no object or predicate variable occurs free.
bool is_sentence(const Formula& f);

/// F*(v): every atom of an intensional predicate P becomes the predicate
/// variable with the same index as P. Equalities, top and bottom are kept;
/// negation is read as F -> bottom and (F -> G)* = (F* -> G*) & (F -> G).
Formula star(const Formula& f, std::span<const PredId> intensional);

/// SM_p[F] = F & ~exists v ((v < p) & F*(v)), with one predicate variable per
/// intensional predicate (variable k stands for predicate k).
Formula stability_formula(const Formula& f, const Signature& sig, std::span<const PredId> intensional);

} // namespace dcasm
