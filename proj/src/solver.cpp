#include "dcasm/solver.hpp"

#include "dcasm/error.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace dcasm {

namespace {

// Dense numbering of the Herbrand base in canonical atom order.
class HerbrandIndex {
public:
    explicit HerbrandIndex(const Signature& sig) : n_(sig.num_constants()) {
        for (std::size_t p = 0; p < sig.num_predicates(); ++p) {
            offsets_.push_back(atoms_.size());
            const std::size_t arity = sig.predicates()[p].arity;
            std::vector<std::size_t> digits(arity, 0);
            bool more = true;
            while (more) {
                Atom atom{pred_id(p), {}};
                for (std::size_t d : digits) {
                    atom.args.push_back(const_id(d));
                }
                atoms_.push_back(std::move(atom));
                more = false;
                for (std::size_t k = arity; k-- > 0;) {
                    if (++digits[k] < n_) {
                        more = true;
                        break;
                    }
                    digits[k] = 0;
                }
                if (n_ == 0 && arity > 0) {
                    atoms_.pop_back();
                }
            }
        }
    }

    std::size_t size() const noexcept { return atoms_.size(); }
    const Atom& atom(std::size_t id) const { return atoms_[id]; }

    std::size_t id(const Atom& atom) const {
        std::size_t off = 0;
        for (ConstId c : atom.args) {
            off = off * n_ + index(c);
        }
        return offsets_[index(atom.pred)] + off;
    }

    std::size_t id(PredId pred, std::span<const Term> terms) const {
        std::size_t off = 0;
        for (const Term& t : terms) {
            if (t.is_variable()) {
                throw std::logic_error("non-ground term in a ground rule formula");
            }
            off = off * n_ + index(t.as_constant());
        }
        return offsets_[index(pred)] + off;
    }

private:
    std::size_t n_;
    std::vector<std::size_t> offsets_;
    std::vector<Atom> atoms_;
};

// CNF over u-variables; literal +(v+1) / -(v+1).
struct Cnf {
    bool contradiction = false;
    std::vector<std::vector<int>> clauses;

    static Cnf truth() { return {}; }
    static Cnf falsity() { return {true, {}}; }
    static Cnf constant(bool value) { return value ? truth() : falsity(); }
    static Cnf literal(int lit) { return {false, {{lit}}}; }
    bool is_true() const noexcept { return !contradiction && clauses.empty(); }
};

Cnf cnf_and(Cnf a, Cnf b) {
    if (a.contradiction || b.contradiction) {
        return Cnf::falsity();
    }
    a.clauses.insert(a.clauses.end(), std::make_move_iterator(b.clauses.begin()),
                     std::make_move_iterator(b.clauses.end()));
    return a;
}

Cnf cnf_or(Cnf a, Cnf b) {
    if (a.is_true() || b.is_true()) {
        return Cnf::truth();
    }
    if (a.contradiction) {
        return b;
    }
    if (b.contradiction) {
        return a;
    }
    Cnf out;
    for (const auto& ca : a.clauses) {
        for (const auto& cb : b.clauses) {
            std::vector<int> merged = ca;
            bool tautology = false;
            for (int lit : cb) {
                if (std::find(merged.begin(), merged.end(), -lit) != merged.end()) {
                    tautology = true;
                    break;
                }
                if (std::find(merged.begin(), merged.end(), lit) == merged.end()) {
                    merged.push_back(lit);
                }
            }
            if (!tautology) {
                out.clauses.push_back(std::move(merged));
            }
        }
    }
    return out;
}

// Plain DPLL; the instances are the u-variables of one candidate.
class Dpll {
public:
    Dpll(const std::vector<std::vector<int>>& clauses, std::size_t vars) : clauses_(clauses), vars_(vars) {}

    bool satisfiable() {
        std::vector<std::int8_t> assign(vars_, 0);
        return solve(assign);
    }

private:
    static int value(const std::vector<std::int8_t>& assign, int lit) {
        const int v = assign[static_cast<std::size_t>(std::abs(lit) - 1)];
        return lit > 0 ? v : -v;
    }

    bool propagate(std::vector<std::int8_t>& assign) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& clause : clauses_) {
                int open = 0;
                int last = 0;
                bool sat = false;
                for (int lit : clause) {
                    const int v = value(assign, lit);
                    if (v > 0) {
                        sat = true;
                        break;
                    }
                    if (v == 0) {
                        ++open;
                        last = lit;
                    }
                }
                if (sat) {
                    continue;
                }
                if (open == 0) {
                    return false;
                }
                if (open == 1) {
                    assign[static_cast<std::size_t>(std::abs(last) - 1)] = last > 0 ? 1 : -1;
                    changed = true;
                }
            }
        }
        return true;
    }

    bool solve(std::vector<std::int8_t>& assign) const {
        if (!propagate(assign)) {
            return false;
        }
        auto it = std::find(assign.begin(), assign.end(), 0);
        if (it == assign.end()) {
            return true;
        }
        for (std::int8_t choice : {std::int8_t{-1}, std::int8_t{1}}) {
            auto next = assign;
            next[static_cast<std::size_t>(it - assign.begin())] = choice;
            if (solve(next)) {
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<int>>& clauses_;
    std::size_t vars_;
};

Formula body_formula(const std::vector<Literal>& body) {
    std::vector<Formula> parts;
    for (const auto& lit : body) {
        auto a = Formula::atom(lit.atom);
        parts.push_back(lit.positive ? a : Formula::negation(a));
    }
    return parts.size() == 1 ? parts.front() : Formula::conjunction(std::move(parts));
}

Formula either(const Atom& a) { return Formula::disjunction({Formula::atom(a), Formula::negation(Formula::atom(a))}); }

} // namespace

Formula rule_to_formula(const GroundRule& rule) {
    auto guarded = [&](Formula head) {
        return rule.body.empty() ? head : Formula::implication(body_formula(rule.body), std::move(head));
    };
    auto some = [&] {
        std::vector<Formula> atoms;
        for (const auto& a : rule.head) {
            atoms.push_back(Formula::atom(a));
        }
        return atoms.size() == 1 ? atoms.front() : Formula::disjunction(std::move(atoms));
    };
    switch (rule.kind) {
        case RuleKind::fact: return Formula::atom(rule.head.front());
        case RuleKind::disjunctive: return guarded(some());
        case RuleKind::constraint: return Formula::negation(body_formula(rule.body));
        case RuleKind::choice: {
            std::vector<Formula> parts;
            for (const auto& a : rule.head) {
                parts.push_back(either(a));
            }
            return guarded(parts.size() == 1 ? parts.front() : Formula::conjunction(std::move(parts)));
        }
        case RuleKind::cardinality_choice: {
            std::vector<Formula> parts;
            for (const auto& a : rule.head) {
                parts.push_back(either(a));
            }
            parts.push_back(some());
            return guarded(Formula::conjunction(std::move(parts)));
        }
    }
    throw std::logic_error("rule_to_formula: unknown rule kind");
}

Formula program_formula(const GroundProgram& program) {
    std::vector<Formula> parts;
    for (const auto& rule : program.rules) {
        parts.push_back(rule_to_formula(rule));
    }
    return Formula::conjunction(std::move(parts));
}

struct StabilityChecker::Impl {
    HerbrandIndex hb;
    std::vector<Formula> formulas;
    std::vector<Formula> starred;
    std::vector<char> intensional;

    explicit Impl(const GroundProgram& program)
        : hb(program.signature), intensional(program.signature.num_predicates(), 0) {
        for (PredId p : program.intensional) {
            intensional.at(index(p)) = 1;
        }
        for (const auto& rule : program.rules) {
            formulas.push_back(rule_to_formula(rule));
            starred.push_back(star(formulas.back(), program.intensional));
        }
    }

    bool holds(const Formula& f, const std::vector<char>& model) const {
        using K = Formula::Kind;
        switch (f.kind()) {
            case K::top: return true;
            case K::bottom: return false;
            case K::atom: return model[hb.id(f.pred(), f.terms())] != 0;
            case K::equal: return f.terms()[0] == f.terms()[1];
            case K::negation: return !holds(f.child(0), model);
            case K::conjunction:
                return std::all_of(f.children().begin(), f.children().end(),
                                   [&](const Formula& c) { return holds(c, model); });
            case K::disjunction:
                return std::any_of(f.children().begin(), f.children().end(),
                                   [&](const Formula& c) { return holds(c, model); });
            case K::implication: return !holds(f.child(0), model) || holds(f.child(1), model);
            default: throw std::logic_error("unexpected quantifier or predicate variable in a ground rule");
        }
    }

    // CNF of f (positive) or of ~f (negative) over u-variables, the
    // unstarred atoms being evaluated at the model.
    Cnf to_cnf(const Formula& f, bool positive, const std::vector<char>& model, const std::vector<int>& uvar) const {
        using K = Formula::Kind;
        switch (f.kind()) {
            case K::top: return Cnf::constant(positive);
            case K::bottom: return Cnf::constant(!positive);
            case K::atom: return Cnf::constant((model[hb.id(f.pred(), f.terms())] != 0) == positive);
            case K::equal: return Cnf::constant((f.terms()[0] == f.terms()[1]) == positive);
            case K::var_atom: {
                const int v = uvar[hb.id(static_cast<PredId>(f.pred_var()), f.terms())];
                if (v < 0) {
                    return Cnf::constant(!positive); // u is below the model: false here
                }
                return Cnf::literal(positive ? v + 1 : -(v + 1));
            }
            case K::negation: return to_cnf(f.child(0), !positive, model, uvar);
            case K::conjunction:
            case K::disjunction: {
                const bool conjunctive = (f.kind() == K::conjunction) == positive;
                Cnf acc = Cnf::constant(conjunctive);
                for (const auto& c : f.children()) {
                    Cnf part = to_cnf(c, positive, model, uvar);
                    acc = conjunctive ? cnf_and(std::move(acc), std::move(part)) : cnf_or(std::move(acc), std::move(part));
                    if (conjunctive ? acc.contradiction : acc.is_true()) {
                        break;
                    }
                }
                return acc;
            }
            case K::implication:
                if (positive) {
                    Cnf lhs = to_cnf(f.child(0), false, model, uvar);
                    if (lhs.is_true()) {
                        return lhs;
                    }
                    return cnf_or(std::move(lhs), to_cnf(f.child(1), true, model, uvar));
                } else {
                    Cnf lhs = to_cnf(f.child(0), true, model, uvar);
                    if (lhs.contradiction) {
                        return lhs;
                    }
                    return cnf_and(std::move(lhs), to_cnf(f.child(1), false, model, uvar));
                }
            default: throw std::logic_error("unexpected quantifier in a ground rule");
        }
    }

    bool is_model(const std::vector<char>& model) const {
        return std::all_of(formulas.begin(), formulas.end(), [&](const Formula& f) { return holds(f, model); });
    }

    bool is_stable(const std::vector<char>& model) const {
        if (!is_model(model)) {
            return false;
        }
        std::vector<int> uvar(hb.size(), -1);
        int vars = 0;
        for (std::size_t id = 0; id < hb.size(); ++id) {
            if (model[id] && intensional[index(hb.atom(id).pred)]) {
                uvar[id] = vars++;
            }
        }
        if (vars == 0) {
            return true; // nothing strictly below the model
        }
        std::vector<std::vector<int>> clauses;
        for (const auto& f : starred) {
            Cnf part = to_cnf(f, true, model, uvar);
            if (part.contradiction) {
                return true;
            }
            for (auto& c : part.clauses) {
                clauses.push_back(std::move(c));
            }
        }
        std::vector<int> strict;
        for (int v = 0; v < vars; ++v) {
            strict.push_back(-(v + 1));
        }
        clauses.push_back(std::move(strict));
        return !Dpll(clauses, static_cast<std::size_t>(vars)).satisfiable();
    }

    std::vector<char> membership(const CandidateModel& model) const {
        std::vector<char> out(hb.size(), 0);
        for (const auto& atom : model) {
            out[hb.id(atom)] = 1;
        }
        return out;
    }
};

StabilityChecker::StabilityChecker(const GroundProgram& program) : impl_(std::make_unique<Impl>(program)) {}
StabilityChecker::~StabilityChecker() = default;
StabilityChecker::StabilityChecker(StabilityChecker&&) noexcept = default;
StabilityChecker& StabilityChecker::operator=(StabilityChecker&&) noexcept = default;

bool StabilityChecker::is_stable(const CandidateModel& model) const {
    return impl_->is_stable(impl_->membership(model));
}

bool StabilityChecker::is_model(const CandidateModel& model) const {
    return impl_->is_model(impl_->membership(model));
}

bool is_stable(const CandidateModel& model, const GroundProgram& program) {
    for (const auto& atom : model) {
        check_atom(atom, program.signature);
    }
    return StabilityChecker(program).is_stable(model);
}

namespace {

enum class Value : std::uint8_t { unknown, yes, no };

struct RuleData {
    RuleKind kind;
    std::vector<std::uint32_t> head;
    std::vector<std::uint32_t> pos;
    std::vector<std::uint32_t> neg;
};

class Search {
public:
    Search(const GroundProgram& program, const SolveOptions& options)
        : options_(options), hb_(program.signature), checker_(program) {
        occurs_.resize(hb_.size());
        // Extensional atoms need no support.
        extensional_.assign(hb_.size(), 1);
        for (PredId p : program.intensional) {
            for (std::size_t id = 0; id < hb_.size(); ++id) {
                if (hb_.atom(id).pred == p) {
                    extensional_[id] = 0;
                }
            }
        }
        pos_occurs_.resize(hb_.size());
        for (const auto& rule : program.rules) {
            RuleData data{rule.kind, {}, {}, {}};
            for (const auto& a : rule.head) {
                data.head.push_back(static_cast<std::uint32_t>(hb_.id(a)));
            }
            for (const auto& lit : rule.body) {
                (lit.positive ? data.pos : data.neg).push_back(static_cast<std::uint32_t>(hb_.id(lit.atom)));
            }
            const auto r = static_cast<std::uint32_t>(rules_.size());
            for (auto a : data.pos) {
                pos_occurs_[a].push_back(r);
            }
            rules_.push_back(std::move(data));
        }
        // Classical clause of each rule; choice rules are tautologies.
        for (const auto& rule : rules_) {
            if (rule.kind == RuleKind::choice) {
                continue;
            }
            std::vector<int> clause;
            for (auto a : rule.head) {
                clause.push_back(static_cast<int>(a) + 1);
            }
            for (auto a : rule.pos) {
                clause.push_back(-(static_cast<int>(a) + 1));
            }
            for (auto a : rule.neg) {
                clause.push_back(static_cast<int>(a) + 1);
            }
            const auto c = static_cast<std::uint32_t>(clauses_.size());
            for (int lit : clause) {
                auto& occ = occurs_[static_cast<std::size_t>(std::abs(lit) - 1)];
                if (occ.empty() || occ.back() != c) {
                    occ.push_back(c);
                }
            }
            clauses_.push_back(std::move(clause));
        }
    }

    std::vector<CandidateModel> run() {
        std::vector<Value> values(hb_.size(), Value::unknown);
        std::vector<std::uint32_t> work(clauses_.size());
        for (std::uint32_t c = 0; c < work.size(); ++c) {
            work[c] = c;
        }
        if (propagate(values, std::move(work))) {
            const auto open = static_cast<std::size_t>(std::count(values.begin(), values.end(), Value::unknown));
            if (!options_.force && open > options_.max_open_atoms) {
                throw GuardrailError("solver refused: " + std::to_string(open) +
                                     " atoms remain undecided after propagation, limit " +
                                     std::to_string(options_.max_open_atoms) + " (use --force)");
            }
            dfs(std::move(values));
        }
        std::sort(models_.begin(), models_.end());
        if (options_.max_models != 0 && models_.size() > options_.max_models) {
            models_.resize(options_.max_models);
        }
        return std::move(models_);
    }

private:
    static Value truth(const std::vector<Value>& values, int lit) {
        const Value v = values[static_cast<std::size_t>(std::abs(lit) - 1)];
        if (v == Value::unknown || lit > 0) {
            return v;
        }
        return v == Value::yes ? Value::no : Value::yes;
    }

    void enqueue(std::uint32_t atom, std::vector<std::uint32_t>& work) const {
        work.insert(work.end(), occurs_[atom].begin(), occurs_[atom].end());
    }

    bool unit_propagate(std::vector<Value>& values, std::vector<std::uint32_t>& work) const {
        while (!work.empty()) {
            const auto c = work.back();
            work.pop_back();
            int open = 0;
            int last = 0;
            bool sat = false;
            for (int lit : clauses_[c]) {
                const Value v = truth(values, lit);
                if (v == Value::yes) {
                    sat = true;
                    break;
                }
                if (v == Value::unknown) {
                    ++open;
                    last = lit;
                }
            }
            if (sat) {
                continue;
            }
            if (open == 0) {
                return false;
            }
            if (open == 1) {
                const auto atom = static_cast<std::uint32_t>(std::abs(last) - 1);
                values[atom] = last > 0 ? Value::yes : Value::no;
                enqueue(atom, work);
            }
        }
        return true;
    }

    // Atoms without non-circular support under the current assignment.
    // Returns false on conflict (a true atom is unsupported).
    bool falsify_unfounded(std::vector<Value>& values, std::vector<std::uint32_t>& work) const {
        std::vector<char> supported = extensional_;
        std::vector<std::uint32_t> missing(rules_.size(), 0);
        std::vector<char> usable(rules_.size(), 0);
        std::vector<std::uint32_t> ready;
        for (std::uint32_t r = 0; r < rules_.size(); ++r) {
            const auto& rule = rules_[r];
            if (rule.head.empty()) {
                continue;
            }
            const bool blocked =
                std::any_of(rule.pos.begin(), rule.pos.end(), [&](auto a) { return values[a] == Value::no; }) ||
                std::any_of(rule.neg.begin(), rule.neg.end(), [&](auto a) { return values[a] == Value::yes; });
            if (blocked) {
                continue;
            }
            usable[r] = 1;
            missing[r] = static_cast<std::uint32_t>(rule.pos.size());
            if (missing[r] == 0) {
                ready.push_back(r);
            }
        }
        while (!ready.empty()) {
            const auto r = ready.back();
            ready.pop_back();
            for (auto h : rules_[r].head) {
                if (supported[h] || values[h] == Value::no) {
                    continue;
                }
                supported[h] = 1;
                for (auto next : pos_occurs_[h]) {
                    if (usable[next] && --missing[next] == 0) {
                        ready.push_back(next);
                    }
                }
            }
        }
        for (std::uint32_t a = 0; a < hb_.size(); ++a) {
            if (supported[a]) {
                continue;
            }
            if (values[a] == Value::yes) {
                return false;
            }
            if (values[a] == Value::unknown) {
                values[a] = Value::no;
                enqueue(a, work);
            }
        }
        return true;
    }

    bool propagate(std::vector<Value>& values, std::vector<std::uint32_t> work) const {
        for (;;) {
            if (!unit_propagate(values, work)) {
                return false;
            }
            if (!falsify_unfounded(values, work)) {
                return false;
            }
            if (work.empty()) {
                return true;
            }
        }
    }

    void dfs(std::vector<Value> values) {
        auto it = std::find(values.begin(), values.end(), Value::unknown);
        if (it == values.end()) {
            std::vector<char> model(values.size(), 0);
            for (std::size_t i = 0; i < values.size(); ++i) {
                model[i] = values[i] == Value::yes;
            }
            if (checker_.is_stable(atoms_of(model))) {
                models_.push_back(atoms_of(model));
            }
            return;
        }
        const auto atom = static_cast<std::uint32_t>(it - values.begin());
        for (Value choice : {Value::yes, Value::no}) {
            auto next = values;
            next[atom] = choice;
            std::vector<std::uint32_t> work;
            enqueue(atom, work);
            if (propagate(next, std::move(work))) {
                dfs(std::move(next));
            }
        }
    }

    CandidateModel atoms_of(const std::vector<char>& model) const {
        CandidateModel out;
        for (std::size_t i = 0; i < model.size(); ++i) {
            if (model[i]) {
                out.push_back(hb_.atom(i));
            }
        }
        return out;
    }

    SolveOptions options_;
    HerbrandIndex hb_;
    StabilityChecker checker_;
    std::vector<RuleData> rules_;
    std::vector<char> extensional_;
    std::vector<std::vector<int>> clauses_;
    std::vector<std::vector<std::uint32_t>> occurs_;
    std::vector<std::vector<std::uint32_t>> pos_occurs_;
    std::vector<CandidateModel> models_;
};

} // namespace

std::vector<CandidateModel> enumerate_stable_models(const GroundProgram& program, const SolveOptions& options) {
    program.validate();
    return Search(program, options).run();
}

std::string model_line(const CandidateModel& model, const Signature& sig) {
    std::string out;
    for (const auto& atom : model) {
        if (!out.empty()) {
            out += ' ';
        }
        out += to_string(atom, sig);
    }
    return out;
}

} // namespace dcasm
