#include "dcasm/interpretation.hpp"

#include "dcasm/error.hpp"

#include <stdexcept>

namespace dcasm {

Relation::Relation(std::size_t arity, std::size_t universe_size) : arity_(arity), universe_size_(universe_size) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < arity; ++i) {
        count *= universe_size;
    }
    bits_.assign(count, false);
}

std::size_t Relation::offset(std::span<const Element> tuple) const {
    std::size_t off = 0;
    for (Element e : tuple) {
        off = off * universe_size_ + e;
    }
    return off;
}

std::vector<Element> Relation::tuple_at(std::size_t i) const {
    std::vector<Element> out(arity_);
    for (std::size_t k = arity_; k-- > 0;) {
        out[k] = i % universe_size_;
        i /= universe_size_;
    }
    return out;
}

DcaInterpretation DcaInterpretation::from_partition(const Signature& sig, std::span<const std::size_t> class_of) {
    if (class_of.size() != sig.num_constants()) {
        throw std::invalid_argument("partition size does not match the signature");
    }
    DcaInterpretation out;
    out.denotation.assign(class_of.begin(), class_of.end());
    for (std::size_t c = 0; c < class_of.size(); ++c) {
        if (class_of[c] == out.universe.size()) {
            out.universe.push_back(const_id(c));
        } else if (class_of[c] > out.universe.size()) {
            throw std::invalid_argument("class labels are not a restricted growth string");
        }
    }
    for (const auto& p : sig.predicates()) {
        out.extensions.emplace_back(p.arity, out.universe.size());
    }
    return out;
}

DcaInterpretation DcaInterpretation::herbrand(const Signature& sig, std::span<const Atom> true_atoms) {
    std::vector<std::size_t> identity(sig.num_constants());
    for (std::size_t i = 0; i < identity.size(); ++i) {
        identity[i] = i;
    }
    auto out = from_partition(sig, identity);
    for (const auto& atom : true_atoms) {
        out.set(atom);
    }
    return out;
}

void DcaInterpretation::set(const Atom& atom) {
    std::vector<Element> tuple;
    tuple.reserve(atom.args.size());
    for (ConstId c : atom.args) {
        tuple.push_back(denotation.at(index(c)));
    }
    extensions.at(index(atom.pred)).insert(tuple);
}

bool DcaInterpretation::holds(const Atom& atom) const {
    std::vector<Element> tuple;
    tuple.reserve(atom.args.size());
    for (ConstId c : atom.args) {
        tuple.push_back(denotation.at(index(c)));
    }
    return extensions.at(index(atom.pred)).contains(tuple);
}

namespace {

class Evaluator {
public:
    Evaluator(const DcaInterpretation& interp, Valuation& env) : interp_(interp), env_(env) {}

    bool run(const Formula& f) {
        using K = Formula::Kind;
        switch (f.kind()) {
            case K::top: return true;
            case K::bottom: return false;
            case K::atom: {
                load(f.terms());
                return interp_.extensions.at(index(f.pred())).contains(scratch_);
            }
            case K::var_atom: {
                const auto slot = index(f.pred_var());
                if (slot >= env_.predicates.size() || !env_.predicates[slot]) {
                    throw Error("unbound predicate variable V" + std::to_string(slot));
                }
                load(f.terms());
                return env_.predicates[slot]->contains(scratch_);
            }
            case K::equal: return element(f.terms()[0]) == element(f.terms()[1]);
            case K::negation: return !run(f.child(0));
            case K::conjunction:
                for (const auto& c : f.children()) {
                    if (!run(c)) {
                        return false;
                    }
                }
                return true;
            case K::disjunction:
                for (const auto& c : f.children()) {
                    if (run(c)) {
                        return true;
                    }
                }
                return false;
            case K::implication: return !run(f.child(0)) || run(f.child(1));
            case K::forall:
            case K::exists: return quantify(f, f.kind() == K::forall);
            case K::exists_pred: return exists_pred(f);
        }
        throw std::logic_error("eval: unknown formula kind");
    }

private:
    Element element(const Term& t) const {
        if (!t.is_variable()) {
            return interp_.denotation.at(index(t.as_constant()));
        }
        if (t.id >= env_.objects.size() || !env_.objects[t.id]) {
            throw Error("unbound object variable X" + std::to_string(t.id));
        }
        return *env_.objects[t.id];
    }

    void load(std::span<const Term> terms) {
        scratch_.clear();
        for (const auto& t : terms) {
            scratch_.push_back(element(t));
        }
    }

    bool quantify(const Formula& f, bool universal) {
        const auto slot = index(f.bound_var());
        if (slot >= env_.objects.size()) {
            env_.objects.resize(slot + 1);
        }
        const auto saved = env_.objects[slot];
        bool result = universal;
        for (Element e = 0; e < interp_.size(); ++e) {
            env_.objects[slot] = e;
            if (run(f.child(0)) != universal) {
                result = !universal;
                break;
            }
        }
        env_.objects[slot] = saved;
        return result;
    }

    bool exists_pred(const Formula& f) {
        const auto slot = index(f.pred_var());
        if (slot >= env_.predicates.size()) {
            env_.predicates.resize(slot + 1);
        }
        const auto saved = env_.predicates[slot];
        Relation rel(f.pred_var_arity(), interp_.size());
        const std::size_t width = rel.tuple_count();
        if (width > 24) {
            throw Error("second-order quantifier ranges over 2^" + std::to_string(width) + " relations");
        }
        bool found = false;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << width) && !found; ++mask) {
            for (std::size_t i = 0; i < width; ++i) {
                rel.set_index(i, (mask >> i) & 1U);
            }
            env_.predicates[slot] = rel;
            found = run(f.child(0));
        }
        env_.predicates[slot] = saved;
        return found;
    }

    const DcaInterpretation& interp_;
    Valuation& env_;
    std::vector<Element> scratch_;
};

} // namespace

bool eval(const Formula& f, const DcaInterpretation& interp, Valuation& env) {
    return Evaluator(interp, env).run(f);
}

bool eval(const Formula& sentence, const DcaInterpretation& interp) {
    Valuation env;
    return eval(sentence, interp, env);
}

} // namespace dcasm
