#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dcasm {

enum class ConstId : std::uint32_t {};
enum class PredId : std::uint32_t {};

constexpr std::size_t index(ConstId c) noexcept { return static_cast<std::size_t>(c); }
constexpr std::size_t index(PredId p) noexcept { return static_cast<std::size_t>(p); }
constexpr ConstId const_id(std::size_t i) noexcept { return static_cast<ConstId>(i); }
constexpr PredId pred_id(std::size_t i) noexcept { return static_cast<PredId>(i); }

// Name of the binary predicate that stands in for equality after the Eq-rewrite.
inline constexpr std::string_view kEqPredicate = "eq";

enum class ConstKind { database, null_value };

struct ObjectConstant {
    std::string name;
    ConstKind kind = ConstKind::database;

    bool operator==(const ObjectConstant&) const = default;
};

struct PredicateSymbol {
    std::string name;
    std::size_t arity = 0;

    bool operator==(const PredicateSymbol&) const = default;
};

/// Finite first-order signature without function symbols of positive arity.
///
/// Object constants and predicates are numbered in declaration order; that
/// order is the canonical order used by every printer and sorter downstream.
class Signature {
public:
    /// Throws ValidationError if the name is taken.
    ConstId add_constant(std::string name, ConstKind kind = ConstKind::database);
    /// Returns the existing id, or declares a database constant.
    ConstId intern_constant(std::string_view name);
    void set_kind(ConstId c, ConstKind kind);

    /// Throws ValidationError if the name is taken.
    PredId add_predicate(std::string name, std::size_t arity);
    /// Returns the existing id; throws ValidationError on an arity clash.
    PredId intern_predicate(std::string_view name, std::size_t arity);

    std::optional<ConstId> find_constant(std::string_view name) const;
    std::optional<PredId> find_predicate(std::string_view name) const;

    const ObjectConstant& constant(ConstId c) const { return constants_.at(index(c)); }
    const PredicateSymbol& predicate(PredId p) const { return predicates_.at(index(p)); }
    const std::string& name(ConstId c) const { return constant(c).name; }
    const std::string& name(PredId p) const { return predicate(p).name; }
    std::size_t arity(PredId p) const { return predicate(p).arity; }
    bool is_null(ConstId c) const { return constant(c).kind == ConstKind::null_value; }

    std::size_t num_constants() const noexcept { return constants_.size(); }
    std::size_t num_predicates() const noexcept { return predicates_.size(); }
    std::span<const ObjectConstant> constants() const noexcept { return constants_; }
    std::span<const PredicateSymbol> predicates() const noexcept { return predicates_; }

    bool operator==(const Signature& other) const {
        return constants_ == other.constants_ && predicates_ == other.predicates_;
    }

private:
    std::vector<ObjectConstant> constants_;
    std::vector<PredicateSymbol> predicates_;
    std::map<std::string, ConstId, std::less<>> const_index_;
    std::map<std::string, PredId, std::less<>> pred_index_;
};

/// Ground atom P(c1,...,cn). Ordered by predicate then arguments, i.e. by
/// declaration order, which is the canonical atom order.
struct Atom {
    PredId pred{};
    std::vector<ConstId> args;

    auto operator<=>(const Atom&) const = default;
    bool operator==(const Atom&) const = default;
};

/// Unordered pair of distinct constants, stored with first < second.
struct ConstPair {
    ConstId first{};
    ConstId second{};

    static ConstPair of(ConstId a, ConstId b) { return a < b ? ConstPair{a, b} : ConstPair{b, a}; }

    auto operator<=>(const ConstPair&) const = default;
    bool operator==(const ConstPair&) const = default;
};

std::string to_string(const Atom& atom, const Signature& sig);

/// Throws ValidationError when the atom does not fit the signature.
void check_atom(const Atom& atom, const Signature& sig);

bool is_identifier(std::string_view name);

} // namespace dcasm
