#include "dcasm/theory.hpp"

#include "dcasm/error.hpp"
#include "lexer.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace dcasm {

bool TheorySpec::add_clause(std::vector<Atom> atoms) {
    if (atoms.empty()) {
        throw ValidationError("a clause needs at least one atom");
    }
    Clause clause;
    for (auto& atom : atoms) {
        check_atom(atom, signature_);
        if (std::find(clause.atoms.begin(), clause.atoms.end(), atom) == clause.atoms.end()) {
            clause.atoms.push_back(std::move(atom));
        }
    }
    // Same disjuncts in another order is still the same clause.
    const std::set<Atom> key(clause.atoms.begin(), clause.atoms.end());
    for (const auto& old : delta_) {
        if (std::set<Atom>(old.atoms.begin(), old.atoms.end()) == key) {
            return false;
        }
    }
    delta_.push_back(std::move(clause));
    return true;
}

void TheorySpec::add_una(ConstId a, ConstId b) {
    if (index(a) >= signature_.num_constants() || index(b) >= signature_.num_constants()) {
        throw ValidationError("unique name axiom over an undeclared constant");
    }
    if (a == b) {
        throw ValidationError("unique name axiom " + signature_.name(a) + " != " + signature_.name(b) +
                              " relates a constant to itself");
    }
    if (!signature_.is_null(a) && !signature_.is_null(b)) {
        throw ValidationError("unique name axiom " + signature_.name(a) + " != " + signature_.name(b) +
                              " is required (both are database constants), not optional");
    }
    sigma_.insert(ConstPair::of(a, b));
}

std::vector<Atom> TheorySpec::delta_atoms() const {
    std::vector<Atom> out;
    std::set<Atom> seen;
    for (const auto& clause : delta_) {
        for (const auto& atom : clause.atoms) {
            if (seen.insert(atom).second) {
                out.push_back(atom);
            }
        }
    }
    return out;
}

void TheorySpec::validate() const {
    if (signature_.find_predicate(kEqPredicate)) {
        throw ValidationError("predicate name '" + std::string(kEqPredicate) + "' is reserved");
    }
    for (const auto& clause : delta_) {
        if (clause.atoms.empty()) {
            throw ValidationError("empty clause in delta");
        }
        for (const auto& atom : clause.atoms) {
            check_atom(atom, signature_);
        }
    }
    for (const auto& pair : sigma_) {
        if (pair.first == pair.second) {
            throw ValidationError("unique name axiom relates a constant to itself");
        }
        if (!signature_.is_null(pair.first) && !signature_.is_null(pair.second)) {
            throw ValidationError("sigma contains a required unique name axiom");
        }
    }
}

std::set<ConstPair> required_una_pairs(const Signature& sig) {
    std::set<ConstPair> out;
    for (std::size_t i = 0; i < sig.num_constants(); ++i) {
        for (std::size_t j = i + 1; j < sig.num_constants(); ++j) {
            if (!sig.is_null(const_id(i)) && !sig.is_null(const_id(j))) {
                out.insert({const_id(i), const_id(j)});
            }
        }
    }
    return out;
}

std::set<ConstPair> optional_una_pairs(const Signature& sig) {
    std::set<ConstPair> out;
    for (std::size_t i = 0; i < sig.num_constants(); ++i) {
        for (std::size_t j = i + 1; j < sig.num_constants(); ++j) {
            if (sig.is_null(const_id(i)) || sig.is_null(const_id(j))) {
                out.insert({const_id(i), const_id(j)});
            }
        }
    }
    return out;
}

namespace {

using detail::Lexer;
using detail::Tok;
using detail::Token;

struct PendingUna {
    Token first;
    Token second;
};

class TheoryReader {
public:
    explicit TheoryReader(std::string_view text) : lex_(text) {}

    TheorySpec read() {
        while (lex_.peek().kind != Tok::end) {
            if (lex_.peek().kind == Tok::directive) {
                directive();
            } else {
                clause();
            }
        }
        for (const auto& una : unas_) {
            auto a = constant_of(una.first);
            auto b = constant_of(una.second);
            try {
                theory_.add_una(a, b);
            } catch (const ValidationError& e) {
                lex_.fail(una.first, e.what());
            }
        }
        theory_.validate();
        return std::move(theory_);
    }

private:
    Signature& sig() { return theory_.signature(); }

    ConstId constant_of(const Token& tok) {
        auto c = sig().find_constant(tok.text);
        if (!c) {
            lex_.fail(tok, "unknown constant '" + tok.text + "' in #una");
        }
        return *c;
    }

    Token name(const char* context) {
        if (lex_.peek().kind == Tok::variable) {
            lex_.fail(lex_.peek(), "variables are not allowed in ground theories ('" + lex_.peek().text + "')");
        }
        return lex_.expect(Tok::identifier, context);
    }

    void directive() {
        const Token dir = lex_.next();
        if (dir.text == "null" || dir.text == "const") {
            do {
                const Token tok = name("in declaration");
                const ConstId c = sig().intern_constant(tok.text);
                if (dir.text == "null") {
                    sig().set_kind(c, ConstKind::null_value);
                }
            } while (lex_.peek().kind == Tok::identifier || lex_.peek().kind == Tok::variable);
        } else if (dir.text == "una") {
            PendingUna una{name("after #una"), name("as second #una constant")};
            unas_.push_back(std::move(una));
        } else if (dir.text == "pred") {
            const Token tok = name("after #pred");
            lex_.expect(Tok::slash, "in predicate declaration");
            const Token arity = lex_.expect(Tok::number, "as predicate arity");
            declare_predicate(tok, std::stoul(arity.text));
        } else {
            lex_.fail(dir, "unknown directive '#" + dir.text + "'");
        }
        lex_.expect(Tok::dot, "to end directive");
    }

    PredId declare_predicate(const Token& tok, std::size_t arity) {
        if (tok.text == kEqPredicate) {
            lex_.fail(tok, "predicate name '" + std::string(kEqPredicate) + "' is reserved");
        }
        try {
            return sig().intern_predicate(tok.text, arity);
        } catch (const ValidationError& e) {
            lex_.fail(tok, e.what());
        }
    }

    // One atom, possibly pooled: each argument may be `a;b`, tuples are
    // separated by `;;`. Returns the expansion.
    std::vector<Atom> pooled_atom() {
        const Token pred = name("at start of atom");
        std::vector<std::vector<std::vector<Token>>> tuples; // tuple -> argument -> alternatives
        if (lex_.accept(Tok::lparen)) {
            do {
                std::vector<std::vector<Token>> tuple;
                do {
                    std::vector<Token> alternatives;
                    do {
                        alternatives.push_back(name("as argument"));
                    } while (lex_.accept(Tok::semicolon));
                    tuple.push_back(std::move(alternatives));
                } while (lex_.accept(Tok::comma));
                tuples.push_back(std::move(tuple));
            } while (lex_.accept(Tok::double_semicolon));
            lex_.expect(Tok::rparen, "to close argument list");
        } else {
            tuples.emplace_back();
        }
        const std::size_t arity = tuples.front().size();
        for (const auto& tuple : tuples) {
            if (tuple.size() != arity) {
                lex_.fail(pred, "pooled tuples of '" + pred.text + "' have different lengths");
            }
        }
        const PredId p = declare_predicate(pred, arity);
        std::vector<Atom> out;
        for (const auto& tuple : tuples) {
            // Odometer over the alternatives of each argument position.
            std::vector<std::size_t> pick(tuple.size(), 0);
            bool more = true;
            while (more) {
                Atom atom{p, {}};
                for (std::size_t i = 0; i < tuple.size(); ++i) {
                    atom.args.push_back(sig().intern_constant(tuple[i][pick[i]].text));
                }
                out.push_back(std::move(atom));
                more = false;
                for (std::size_t k = tuple.size(); k-- > 0;) {
                    if (++pick[k] < tuple[k].size()) {
                        more = true;
                        break;
                    }
                    pick[k] = 0;
                }
            }
        }
        return out;
    }

    // `:- a == b.` is read as the unique-name axiom a != b.
    void una_constraint() {
        PendingUna una{name("after ':-'"), {}};
        lex_.expect(Tok::equals2, "in unique-name constraint");
        una.second = name("after '=='");
        lex_.expect(Tok::dot, "to end constraint");
        unas_.push_back(std::move(una));
    }

    // `1{A1,...,Ar}.` is the clause A1 | ... | Ar.
    void cardinality_clause() {
        const Token one = lex_.next();
        if (one.text != "1") {
            lex_.fail(one, "only the lower bound 1 is supported");
        }
        lex_.expect(Tok::lbrace, "after cardinality bound");
        std::vector<Atom> disjuncts;
        do {
            const Token at = lex_.peek();
            auto atom = pooled_atom();
            if (atom.size() != 1) {
                lex_.fail(at, "pools are only allowed in single-atom clauses");
            }
            disjuncts.push_back(std::move(atom.front()));
        } while (lex_.accept(Tok::comma));
        lex_.expect(Tok::rbrace, "to close cardinality rule");
        lex_.expect(Tok::dot, "to end clause");
        theory_.add_clause(std::move(disjuncts));
    }

    void clause() {
        if (lex_.accept(Tok::if_)) {
            return una_constraint();
        }
        if (lex_.peek().kind == Tok::number) {
            return cardinality_clause();
        }
        const Token start = lex_.peek();
        std::vector<Atom> disjuncts = pooled_atom();
        if (lex_.accept(Tok::dot)) {
            // A pooled fact stands for one unit clause per expansion.
            for (auto& atom : disjuncts) {
                theory_.add_clause({std::move(atom)});
            }
            return;
        }
        if (disjuncts.size() != 1) {
            lex_.fail(start, "pools are only allowed in single-atom clauses");
        }
        while (lex_.accept(Tok::pipe)) {
            const Token at = lex_.peek();
            auto more = pooled_atom();
            if (more.size() != 1) {
                lex_.fail(at, "pools are only allowed in single-atom clauses");
            }
            disjuncts.push_back(std::move(more.front()));
        }
        lex_.expect(Tok::dot, "to end clause");
        theory_.add_clause(std::move(disjuncts));
    }

    Lexer lex_;
    TheorySpec theory_;
    std::vector<PendingUna> unas_;
};

} // namespace

TheorySpec parse_theory(std::string_view text) { return TheoryReader(text).read(); }

std::string print_theory(const TheorySpec& theory) {
    const Signature& sig = theory.signature();
    std::string out;
    for (std::size_t i = 0; i < sig.num_constants(); ++i) {
        const auto& c = sig.constants()[i];
        out += c.kind == ConstKind::null_value ? "#null " : "#const ";
        out += c.name + ".\n";
    }
    for (const auto& p : sig.predicates()) {
        out += "#pred " + p.name + "/" + std::to_string(p.arity) + ".\n";
    }
    for (const auto& clause : theory.delta()) {
        for (std::size_t i = 0; i < clause.atoms.size(); ++i) {
            if (i > 0) {
                out += " | ";
            }
            out += to_string(clause.atoms[i], sig);
        }
        out += ".\n";
    }
    for (const auto& pair : theory.sigma()) {
        out += "#una " + sig.name(pair.first) + " " + sig.name(pair.second) + ".\n";
    }
    return out;
}

} // namespace dcasm
