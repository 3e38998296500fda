#include "dcasm/translate.hpp"

#include <set>
#include <utility>

namespace dcasm {

namespace {

std::string substitution_schema(const PredicateSymbol& p) {
    const std::string eq(kEqPredicate);
    if (p.arity == 0) {
        return p.name + " :- " + p.name + ".";
    }
    if (p.arity == 1) {
        return p.name + "(Y) :- " + p.name + "(X), " + eq + "(X,Y).";
    }
    std::string head = p.name + "(";
    std::string from = p.name + "(";
    std::string links;
    for (std::size_t i = 1; i <= p.arity; ++i) {
        const std::string x = "X" + std::to_string(i);
        const std::string y = "Y" + std::to_string(i);
        const char* sep = i == p.arity ? ")" : ",";
        head += y + sep;
        from += x + sep;
        links += ", " + eq + "(" + x + "," + y + ")";
    }
    return head + " :- " + from + links + ".";
}

std::string universe_name(const Signature& sig) {
    std::string name = "u";
    while (sig.find_predicate(name)) {
        name += '_';
    }
    return name;
}

} // namespace

std::string emit_asp_text(const GroundProgram& program, EmitStyle style) {
    const Signature& sig = program.signature;
    std::string out;
    if (style == EmitStyle::modern || !program.eq) {
        for (const auto& rule : program.rules) {
            out += to_string(rule, sig);
            out += '\n';
        }
        return out;
    }

    const std::string eq(kEqPredicate);
    std::set<std::pair<RuleOrigin, std::size_t>> emitted;
    for (const auto& rule : program.rules) {
        if (rule.origin == RuleOrigin::source || rule.origin == RuleOrigin::unique_names) {
            out += to_string(rule, sig);
            out += '\n';
            continue;
        }
        const std::size_t group = rule.origin == RuleOrigin::substitution ? index(rule.head.front().pred) : 0;
        if (!emitted.insert({rule.origin, group}).second) {
            continue;
        }
        switch (rule.origin) {
            case RuleOrigin::reflexivity: out += eq + "(X,X).\n"; break;
            case RuleOrigin::symmetry: out += eq + "(X,Y) :- " + eq + "(Y,X).\n"; break;
            case RuleOrigin::transitivity: out += eq + "(X,Z) :- " + eq + "(X,Y), " + eq + "(Y,Z).\n"; break;
            case RuleOrigin::substitution: out += substitution_schema(sig.predicates()[group]) + "\n"; break;
            case RuleOrigin::eq_choice: out += "{" + eq + "(X,Y)}.\n"; break;
            default: break;
        }
    }
    const std::string u = universe_name(sig);
    out += u + "(";
    for (std::size_t c = 0; c < sig.num_constants(); ++c) {
        out += (c > 0 ? ";" : "") + sig.constants()[c].name;
    }
    out += ").\n";
    out += "#domain " + u + "(X). #domain " + u + "(Y).\n";
    out += "#hide " + u + "/1.\n";
    return out;
}

} // namespace dcasm
