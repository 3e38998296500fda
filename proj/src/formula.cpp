#include "dcasm/formula.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dcasm {

struct Formula::Node {
    Kind kind;
    std::vector<Formula> children;
    std::vector<Term> terms;
    std::uint32_t symbol = 0; // predicate, predicate variable or bound variable
    std::size_t arity = 0;    // exists_pred only
};

Formula Formula::top() { return Formula(std::make_shared<const Node>(Node{Kind::top, {}, {}, 0, 0})); }

Formula Formula::bottom() { return Formula(std::make_shared<const Node>(Node{Kind::bottom, {}, {}, 0, 0})); }

Formula Formula::atom(PredId pred, std::vector<Term> args) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::atom, {}, std::move(args), static_cast<std::uint32_t>(pred), 0}));
}

Formula Formula::atom(const Atom& ground) {
    std::vector<Term> args;
    args.reserve(ground.args.size());
    for (ConstId c : ground.args) {
        args.push_back(Term::constant(c));
    }
    return atom(ground.pred, std::move(args));
}

Formula Formula::var_atom(PredVarId var, std::vector<Term> args) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::var_atom, {}, std::move(args), static_cast<std::uint32_t>(var), 0}));
}

Formula Formula::equal(Term lhs, Term rhs) {
    return Formula(std::make_shared<const Node>(Node{Kind::equal, {}, {lhs, rhs}, 0, 0}));
}

Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Kind::negation, {std::move(f)}, {}, 0, 0}));
}

Formula Formula::conjunction(std::vector<Formula> parts) {
    return Formula(std::make_shared<const Node>(Node{Kind::conjunction, std::move(parts), {}, 0, 0}));
}

Formula Formula::disjunction(std::vector<Formula> parts) {
    return Formula(std::make_shared<const Node>(Node{Kind::disjunction, std::move(parts), {}, 0, 0}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
    return Formula(
        std::make_shared<const Node>(Node{Kind::implication, {std::move(lhs), std::move(rhs)}, {}, 0, 0}));
}

Formula Formula::forall(VarId var, Formula body) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::forall, {std::move(body)}, {}, static_cast<std::uint32_t>(var), 0}));
}

Formula Formula::exists(VarId var, Formula body) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::exists, {std::move(body)}, {}, static_cast<std::uint32_t>(var), 0}));
}

Formula Formula::exists_pred(PredVarId var, std::size_t arity, Formula body) {
    return Formula(std::make_shared<const Node>(
        Node{Kind::exists_pred, {std::move(body)}, {}, static_cast<std::uint32_t>(var), arity}));
}

Formula Formula::forall(std::span<const VarId> vars, Formula body) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        body = forall(*it, std::move(body));
    }
    return body;
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }
std::span<const Formula> Formula::children() const noexcept { return node_->children; }
std::span<const Term> Formula::terms() const noexcept { return node_->terms; }
PredId Formula::pred() const noexcept { return static_cast<PredId>(node_->symbol); }
PredVarId Formula::pred_var() const noexcept { return static_cast<PredVarId>(node_->symbol); }
VarId Formula::bound_var() const noexcept { return static_cast<VarId>(node_->symbol); }
std::size_t Formula::pred_var_arity() const noexcept { return node_->arity; }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    return x.kind == y.kind && x.symbol == y.symbol && x.arity == y.arity && x.terms == y.terms &&
           x.children == y.children;
}

namespace {

std::string term_string(const Term& t, const Signature& sig) {
    if (t.is_variable()) {
        return "X" + std::to_string(t.id);
    }
    return sig.name(t.as_constant());
}

std::string args_string(std::span<const Term> terms, const Signature& sig) {
    if (terms.empty()) {
        return {};
    }
    std::string out = "(";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += term_string(terms[i], sig);
    }
    return out + ")";
}

void render(const Formula& f, const Signature& sig, std::string& out) {
    using K = Formula::Kind;
    auto nary = [&](const char* op, const char* empty) {
        if (f.children().empty()) {
            out += empty;
            return;
        }
        if (f.children().size() == 1) {
            render(f.child(0), sig, out);
            return;
        }
        out += '(';
        for (std::size_t i = 0; i < f.children().size(); ++i) {
            if (i > 0) {
                out += op;
            }
            render(f.child(i), sig, out);
        }
        out += ')';
    };
    switch (f.kind()) {
        case K::top: out += "true"; break;
        case K::bottom: out += "false"; break;
        case K::atom: out += sig.name(f.pred()) + args_string(f.terms(), sig); break;
        case K::var_atom:
            out += "V" + std::to_string(index(f.pred_var())) + args_string(f.terms(), sig);
            break;
        case K::equal:
            out += term_string(f.terms()[0], sig) + " = " + term_string(f.terms()[1], sig);
            break;
        case K::negation:
            out += '~';
            render(f.child(0), sig, out);
            break;
        case K::conjunction: nary(" & ", "true"); break;
        case K::disjunction: nary(" | ", "false"); break;
        case K::implication:
            out += '(';
            render(f.child(0), sig, out);
            out += " -> ";
            render(f.child(1), sig, out);
            out += ')';
            break;
        case K::forall:
        case K::exists:
            out += f.kind() == K::forall ? "forall X" : "exists X";
            out += std::to_string(index(f.bound_var())) + " ";
            render(f.child(0), sig, out);
            break;
        case K::exists_pred:
            out += "exists V" + std::to_string(index(f.pred_var())) + "/" + std::to_string(f.pred_var_arity()) + " ";
            render(f.child(0), sig, out);
            break;
    }
}

struct FreeVars {
    std::multiset<std::uint32_t> bound_objects;
    std::multiset<std::uint32_t> bound_preds;
    bool free_found = false;

    void visit(const Formula& f) {
        using K = Formula::Kind;
        if (free_found) {
            return;
        }
        auto check_terms = [&] {
            for (const auto& t : f.terms()) {
                if (t.is_variable() && !bound_objects.contains(t.id)) {
                    free_found = true;
                }
            }
        };
        switch (f.kind()) {
            case K::atom:
            case K::equal: check_terms(); break;
            case K::var_atom:
                check_terms();
                if (!bound_preds.contains(static_cast<std::uint32_t>(f.pred_var()))) {
                    free_found = true;
                }
                break;
            case K::forall:
            case K::exists: {
                auto it = bound_objects.insert(static_cast<std::uint32_t>(f.bound_var()));
                visit(f.child(0));
                bound_objects.erase(it);
                break;
            }
            case K::exists_pred: {
                auto it = bound_preds.insert(static_cast<std::uint32_t>(f.pred_var()));
                visit(f.child(0));
                bound_preds.erase(it);
                break;
            }
            default:
                for (const auto& c : f.children()) {
                    visit(c);
                }
        }
    }
};

std::uint32_t max_object_var(const Formula& f) {
    using K = Formula::Kind;
    std::uint32_t best = 0;
    for (const auto& t : f.terms()) {
        if (t.is_variable()) {
            best = std::max(best, t.id + 1);
        }
    }
    if (f.kind() == K::forall || f.kind() == K::exists) {
        best = std::max(best, static_cast<std::uint32_t>(f.bound_var()) + 1);
    }
    for (const auto& c : f.children()) {
        best = std::max(best, max_object_var(c));
    }
    return best;
}

} // namespace

std::string to_string(const Formula& f, const Signature& sig) {
    std::string out;
    render(f, sig, out);
    return out;
}

bool is_sentence(const Formula& f) {
    FreeVars scan;
    scan.visit(f);
    return !scan.free_found;
}

Formula star(const Formula& f, std::span<const PredId> intensional) {
    using K = Formula::Kind;
    auto starred = [&](const Formula& g) { return star(g, intensional); };
    auto all = [&](const Formula& g) {
        std::vector<Formula> out;
        out.reserve(g.children().size());
        for (const auto& c : g.children()) {
            out.push_back(starred(c));
        }
        return out;
    };
    switch (f.kind()) {
        case K::top:
        case K::bottom:
        case K::equal:
        case K::var_atom: return f;
        case K::atom:
            if (std::find(intensional.begin(), intensional.end(), f.pred()) == intensional.end()) {
                return f;
            }
            return Formula::var_atom(static_cast<PredVarId>(f.pred()),
                                     std::vector<Term>(f.terms().begin(), f.terms().end()));
        case K::negation:
            return Formula::conjunction(
                {Formula::implication(starred(f.child(0)), Formula::bottom()), f});
        case K::conjunction: return Formula::conjunction(all(f));
        case K::disjunction: return Formula::disjunction(all(f));
        case K::implication:
            return Formula::conjunction(
                {Formula::implication(starred(f.child(0)), starred(f.child(1))), f});
        case K::forall: return Formula::forall(f.bound_var(), starred(f.child(0)));
        case K::exists: return Formula::exists(f.bound_var(), starred(f.child(0)));
        case K::exists_pred: return Formula::exists_pred(f.pred_var(), f.pred_var_arity(), starred(f.child(0)));
    }
    throw std::logic_error("star: unknown formula kind");
}

Formula stability_formula(const Formula& f, const Signature& sig, std::span<const PredId> intensional) {
    const std::uint32_t first_free = max_object_var(f);
    std::vector<Formula> below;   // v_P(x) -> P(x)
    std::vector<Formula> above;   // P(x) -> v_P(x)
    for (PredId p : intensional) {
        std::vector<VarId> vars;
        std::vector<Term> args;
        for (std::size_t i = 0; i < sig.arity(p); ++i) {
            vars.push_back(static_cast<VarId>(first_free + i));
            args.push_back(Term::variable(vars.back()));
        }
        const auto v = Formula::var_atom(static_cast<PredVarId>(p), args);
        const auto real = Formula::atom(p, args);
        below.push_back(Formula::forall(vars, Formula::implication(v, real)));
        above.push_back(Formula::forall(vars, Formula::implication(real, v)));
    }
    Formula less = Formula::conjunction(
        {Formula::conjunction(std::move(below)), Formula::negation(Formula::conjunction(std::move(above)))});
    Formula body = Formula::conjunction({std::move(less), star(f, intensional)});
    for (auto it = intensional.rbegin(); it != intensional.rend(); ++it) {
        body = Formula::exists_pred(static_cast<PredVarId>(*it), sig.arity(*it), std::move(body));
    }
    return Formula::conjunction({f, Formula::negation(std::move(body))});
}

} // namespace dcasm
