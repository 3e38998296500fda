#include "dcasm/diagram.hpp"

#include "dcasm/error.hpp"

#include <algorithm>
#include <set>

namespace dcasm {

namespace {

// An equality pair ranks after every real predicate.
std::vector<Atom> key_of(const Diagram& d) {
    std::vector<Atom> key = d.atoms;
    for (const auto& [a, b] : d.equalities) {
        key.push_back(Atom{static_cast<PredId>(~std::uint32_t{0}), {a, b}});
    }
    return key;
}

std::vector<std::string> lines_of(const Diagram& d, const Signature& sig) {
    std::vector<std::string> out;
    for (const auto& atom : d.atoms) {
        out.push_back(to_string(atom, sig));
    }
    for (const auto& [a, b] : d.equalities) {
        out.push_back(std::string(kEqPredicate) + "(" + sig.name(a) + "," + sig.name(b) + ")");
    }
    return out;
}

} // namespace

std::strong_ordering operator<=>(const Diagram& a, const Diagram& b) { return key_of(a) <=> key_of(b); }

void Diagram::normalize() {
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    std::sort(equalities.begin(), equalities.end());
    equalities.erase(std::unique(equalities.begin(), equalities.end()), equalities.end());
}

void validate_diagram(const Diagram& d, const Signature& sig) {
    const std::size_t n = sig.num_constants();
    std::vector<std::vector<bool>> eq(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : d.equalities) {
        if (index(a) >= n || index(b) >= n) {
            throw ClosureError("equality over an undeclared constant");
        }
        eq[index(a)][index(b)] = true;
    }
    auto name = [&](std::size_t i) { return sig.name(const_id(i)); };
    for (std::size_t a = 0; a < n; ++a) {
        if (!eq[a][a]) {
            throw ClosureError("equalities are not reflexive: missing " + name(a) + " = " + name(a));
        }
        for (std::size_t b = 0; b < n; ++b) {
            if (eq[a][b] && !eq[b][a]) {
                throw ClosureError("equalities are not symmetric: " + name(a) + " = " + name(b) + " without " +
                                   name(b) + " = " + name(a));
            }
            for (std::size_t c = 0; c < n; ++c) {
                if (eq[a][b] && eq[b][c] && !eq[a][c]) {
                    throw ClosureError("equalities are not transitive: missing " + name(a) + " = " + name(c));
                }
            }
        }
    }
    // With an equivalence relation in place, substitution closure is checked
    // one argument position at a time.
    const std::set<Atom> present(d.atoms.begin(), d.atoms.end());
    for (const auto& atom : d.atoms) {
        check_atom(atom, sig);
        for (std::size_t pos = 0; pos < atom.args.size(); ++pos) {
            for (std::size_t other = 0; other < n; ++other) {
                if (!eq[index(atom.args[pos])][other]) {
                    continue;
                }
                Atom moved = atom;
                moved.args[pos] = const_id(other);
                if (!present.contains(moved)) {
                    throw ClosureError("atoms are not closed under substitution: " + to_string(atom, sig) +
                                       " present but " + to_string(moved, sig) + " missing");
                }
            }
        }
    }
}

Diagram diagram_of(const DcaInterpretation& interp, const Signature& sig) {
    Diagram out;
    const std::size_t n = sig.num_constants();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (interp.denotation[a] == interp.denotation[b]) {
                out.equalities.emplace_back(const_id(a), const_id(b));
            }
        }
    }
    for (std::size_t p = 0; p < sig.num_predicates(); ++p) {
        const std::size_t arity = sig.predicates()[p].arity;
        std::vector<std::size_t> digits(arity, 0);
        bool more = true;
        while (more) {
            Atom atom{pred_id(p), {}};
            for (std::size_t d : digits) {
                atom.args.push_back(const_id(d));
            }
            if (interp.holds(atom)) {
                out.atoms.push_back(std::move(atom));
            }
            more = false;
            for (std::size_t k = arity; k-- > 0;) {
                if (++digits[k] < n) {
                    more = true;
                    break;
                }
                digits[k] = 0;
            }
        }
    }
    out.normalize();
    return out;
}

std::string print_diagram(const Diagram& d, const Signature& sig) {
    std::string out;
    for (const auto& line : lines_of(d, sig)) {
        out += line;
        out += '\n';
    }
    return out;
}

std::string diagram_line(const Diagram& d, const Signature& sig) {
    std::string out;
    for (const auto& line : lines_of(d, sig)) {
        if (!out.empty()) {
            out += ' ';
        }
        out += line;
    }
    return out;
}

} // namespace dcasm
