#include "dcasm/signature.hpp"

#include "dcasm/error.hpp"

#include <cctype>

namespace dcasm {

ConstId Signature::add_constant(std::string name, ConstKind kind) {
    if (const_index_.contains(name)) {
        throw ValidationError("object constant '" + name + "' declared twice");
    }
    const ConstId id = const_id(constants_.size());
    const_index_.emplace(name, id);
    constants_.push_back({std::move(name), kind});
    return id;
}

ConstId Signature::intern_constant(std::string_view name) {
    if (auto found = find_constant(name)) {
        return *found;
    }
    return add_constant(std::string(name));
}

void Signature::set_kind(ConstId c, ConstKind kind) { constants_.at(index(c)).kind = kind; }

PredId Signature::add_predicate(std::string name, std::size_t arity) {
    if (pred_index_.contains(name)) {
        throw ValidationError("predicate '" + name + "' declared twice");
    }
    const PredId id = pred_id(predicates_.size());
    pred_index_.emplace(name, id);
    predicates_.push_back({std::move(name), arity});
    return id;
}

PredId Signature::intern_predicate(std::string_view name, std::size_t arity) {
    if (auto found = find_predicate(name)) {
        if (this->arity(*found) != arity) {
            throw ValidationError("predicate '" + std::string(name) + "' used with arity " +
                                  std::to_string(arity) + " but declared with arity " +
                                  std::to_string(this->arity(*found)));
        }
        return *found;
    }
    return add_predicate(std::string(name), arity);
}

std::optional<ConstId> Signature::find_constant(std::string_view name) const {
    auto it = const_index_.find(name);
    if (it == const_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<PredId> Signature::find_predicate(std::string_view name) const {
    auto it = pred_index_.find(name);
    if (it == pred_index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string to_string(const Atom& atom, const Signature& sig) {
    std::string out = sig.name(atom.pred);
    if (atom.args.empty()) {
        return out;
    }
    out += '(';
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += sig.name(atom.args[i]);
    }
    out += ')';
    return out;
}

void check_atom(const Atom& atom, const Signature& sig) {
    if (index(atom.pred) >= sig.num_predicates()) {
        throw ValidationError("atom uses an undeclared predicate");
    }
    if (atom.args.size() != sig.arity(atom.pred)) {
        throw ValidationError("atom " + sig.name(atom.pred) + " has " + std::to_string(atom.args.size()) +
                              " arguments, expected " + std::to_string(sig.arity(atom.pred)));
    }
    for (ConstId c : atom.args) {
        if (index(c) >= sig.num_constants()) {
            throw ValidationError("atom " + sig.name(atom.pred) + " uses an undeclared constant");
        }
    }
}

bool is_identifier(std::string_view name) {
    if (name.empty() || !std::islower(static_cast<unsigned char>(name.front()))) {
        return false;
    }
    for (char ch : name) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') {
            return false;
        }
    }
    return true;
}

} // namespace dcasm
