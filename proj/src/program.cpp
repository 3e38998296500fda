#include "dcasm/program.hpp"

#include "dcasm/error.hpp"
#include "lexer.hpp"

namespace dcasm {

void GroundProgram::all_intensional() {
    intensional.clear();
    for (std::size_t p = 0; p < signature.num_predicates(); ++p) {
        intensional.push_back(pred_id(p));
    }
}

void GroundProgram::validate() const {
    for (const auto& rule : rules) {
        for (const auto& atom : rule.head) {
            check_atom(atom, signature);
        }
        for (const auto& lit : rule.body) {
            check_atom(lit.atom, signature);
        }
        switch (rule.kind) {
            case RuleKind::fact:
                if (rule.head.size() != 1 || !rule.body.empty()) {
                    throw ValidationError("a fact has one head atom and no body");
                }
                break;
            case RuleKind::constraint:
                if (!rule.head.empty()) {
                    throw ValidationError("a constraint has an empty head");
                }
                break;
            case RuleKind::disjunctive:
            case RuleKind::choice:
            case RuleKind::cardinality_choice:
                if (rule.head.empty()) {
                    throw ValidationError("rule without head atoms");
                }
                break;
        }
    }
}

std::size_t herbrand_base_size(const Signature& sig) {
    std::size_t total = 0;
    for (const auto& p : sig.predicates()) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < p.arity; ++i) {
            count *= sig.num_constants();
        }
        total += count;
    }
    return total;
}

namespace {

std::string join_atoms(const std::vector<Atom>& atoms, const Signature& sig, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += to_string(atoms[i], sig);
    }
    return out;
}

std::string body_text(const std::vector<Literal>& body, const Signature& sig) {
    std::string out;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        if (!body[i].positive) {
            out += "not ";
        }
        out += to_string(body[i].atom, sig);
    }
    return out;
}

} // namespace

std::string to_string(const GroundRule& rule, const Signature& sig) {
    std::string head;
    switch (rule.kind) {
        case RuleKind::fact:
        case RuleKind::disjunctive: head = join_atoms(rule.head, sig, "|"); break;
        case RuleKind::constraint: break;
        case RuleKind::choice: head = "{" + join_atoms(rule.head, sig, ";") + "}"; break;
        case RuleKind::cardinality_choice: head = "1{" + join_atoms(rule.head, sig, ",") + "}"; break;
    }
    if (rule.body.empty()) {
        return head + ".";
    }
    return (head.empty() ? ":- " : head + " :- ") + body_text(rule.body, sig) + ".";
}

namespace {

using detail::Lexer;
using detail::Tok;
using detail::Token;

class ProgramReader {
public:
    explicit ProgramReader(std::string_view text) : lex_(text) {}

    GroundProgram read() {
        while (lex_.peek().kind != Tok::end) {
            statement();
        }
        program_.all_intensional();
        program_.validate();
        return std::move(program_);
    }

private:
    Signature& sig() { return program_.signature; }

    Token name(const char* context) {
        if (lex_.peek().kind == Tok::variable) {
            lex_.fail(lex_.peek(), "variables are not allowed in ground programs ('" + lex_.peek().text + "')");
        }
        return lex_.expect(Tok::identifier, context);
    }

    Atom atom() {
        const Token pred = name("at start of atom");
        if (pred.text == "not") {
            lex_.fail(pred, "'not' is only allowed in rule bodies");
        }
        std::vector<Token> args;
        if (lex_.accept(Tok::lparen)) {
            do {
                args.push_back(name("as argument"));
                if (lex_.peek().kind == Tok::semicolon || lex_.peek().kind == Tok::double_semicolon) {
                    lex_.fail(lex_.peek(), "pools are not supported in ground programs");
                }
            } while (lex_.accept(Tok::comma));
            lex_.expect(Tok::rparen, "to close argument list");
        }
        Atom out;
        try {
            out.pred = sig().intern_predicate(pred.text, args.size());
        } catch (const ValidationError& e) {
            lex_.fail(pred, e.what());
        }
        for (const auto& arg : args) {
            out.args.push_back(sig().intern_constant(arg.text));
        }
        return out;
    }

    std::vector<Literal> body() {
        std::vector<Literal> out;
        do {
            bool positive = true;
            if (lex_.peek().kind == Tok::identifier && lex_.peek().text == "not") {
                lex_.next();
                positive = false;
            }
            out.push_back({atom(), positive});
        } while (lex_.accept(Tok::comma));
        return out;
    }

    void directive() {
        const Token dir = lex_.next();
        if (dir.text == "const") {
            do {
                sig().intern_constant(name("in #const").text);
            } while (lex_.peek().kind == Tok::identifier);
        } else if (dir.text == "pred") {
            const Token tok = name("after #pred");
            lex_.expect(Tok::slash, "in predicate declaration");
            const Token arity = lex_.expect(Tok::number, "as predicate arity");
            try {
                sig().intern_predicate(tok.text, std::stoul(arity.text));
            } catch (const ValidationError& e) {
                lex_.fail(tok, e.what());
            }
        } else {
            lex_.fail(dir, "unknown directive '#" + dir.text + "'");
        }
        lex_.expect(Tok::dot, "to end directive");
    }

    void statement() {
        const Token start = lex_.peek();
        GroundRule rule;
        switch (start.kind) {
            case Tok::directive: directive(); return;
            case Tok::if_:
                lex_.next();
                rule.kind = RuleKind::constraint;
                rule.body = body();
                lex_.expect(Tok::dot, "to end constraint");
                program_.rules.push_back(std::move(rule));
                return;
            case Tok::number: {
                if (start.text != "1") {
                    lex_.fail(start, "only the lower bound 1 is supported in cardinality rules");
                }
                lex_.next();
                lex_.expect(Tok::lbrace, "after cardinality bound");
                rule.kind = RuleKind::cardinality_choice;
                do {
                    rule.head.push_back(atom());
                } while (lex_.accept(Tok::comma) || lex_.accept(Tok::semicolon));
                lex_.expect(Tok::rbrace, "to close cardinality rule");
                break;
            }
            case Tok::lbrace:
                lex_.next();
                rule.kind = RuleKind::choice;
                do {
                    rule.head.push_back(atom());
                } while (lex_.accept(Tok::semicolon) || lex_.accept(Tok::comma));
                lex_.expect(Tok::rbrace, "to close choice rule");
                break;
            default:
                rule.kind = RuleKind::disjunctive;
                do {
                    rule.head.push_back(atom());
                } while (lex_.accept(Tok::pipe));
                break;
        }
        if (lex_.accept(Tok::if_)) {
            rule.body = body();
        }
        lex_.expect(Tok::dot, "to end rule");
        if (rule.kind == RuleKind::disjunctive && rule.head.size() == 1 && rule.body.empty()) {
            rule.kind = RuleKind::fact;
        }
        program_.rules.push_back(std::move(rule));
    }

    Lexer lex_;
    GroundProgram program_;
};

} // namespace

GroundProgram parse_program(std::string_view text) { return ProgramReader(text).read(); }

} // namespace dcasm
