#pragma once

// Shared inputs and expected values.

#include "dcasm/diagram.hpp"
#include "dcasm/signature.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fx {

// Supplier and parts database, Foo supplying p1 or p3 (maybe both).
inline constexpr const char* kSupplier = R"(part(p1;p2;p3).
supplier(acme;foo).
supplies(acme,p1;;foo,p2).
subpart(p1,p2).
supplies(foo,p1) | supplies(foo,p3).
)";

// Same database with a null supplier omega of p3, kept apart from the parts.
inline constexpr const char* kSupplierWithNull = R"(part(p1;p2;p3).
supplier(acme;foo).
supplies(acme,p1;;foo,p2).
subpart(p1,p2).
#null omega.
supplier(omega).
supplies(omega,p3).
#una omega p1.
#una omega p2.
#una omega p3.
)";

// "p(a,b)" or "r" against a signature; unknown names throw.
inline dcasm::Atom atom(const dcasm::Signature& sig, std::string_view text) {
    const auto open = text.find('(');
    const std::string name(text.substr(0, open));
    const auto p = sig.find_predicate(name);
    if (!p) {
        throw std::invalid_argument("unknown predicate " + name);
    }
    dcasm::Atom out{*p, {}};
    if (open != std::string_view::npos) {
        std::string_view rest = text.substr(open + 1, text.size() - open - 2);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const auto c = sig.find_constant(rest.substr(0, comma));
            if (!c) {
                throw std::invalid_argument("unknown constant in " + std::string(text));
            }
            out.args.push_back(*c);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
    }
    return out;
}

// Diagram from atom texts; "eq(a,b)" entries are equalities. With
// `reflexive`, a=a is added for every constant.
inline dcasm::Diagram diagram(const dcasm::Signature& sig, const std::vector<std::string_view>& items,
                              bool reflexive = true) {
    dcasm::Diagram d;
    for (auto item : items) {
        if (item.starts_with("eq(")) {
            const auto comma = item.find(',');
            const auto a = sig.find_constant(item.substr(3, comma - 3));
            const auto b = sig.find_constant(item.substr(comma + 1, item.size() - comma - 2));
            if (!a || !b) {
                throw std::invalid_argument("unknown constant in " + std::string(item));
            }
            d.equalities.emplace_back(*a, *b);
        } else {
            d.atoms.push_back(atom(sig, item));
        }
    }
    if (reflexive) {
        for (std::size_t c = 0; c < sig.num_constants(); ++c) {
            d.equalities.emplace_back(dcasm::const_id(c), dcasm::const_id(c));
        }
    }
    d.normalize();
    return d;
}

inline dcasm::Diagram with(dcasm::Diagram d, const dcasm::Signature& sig, const std::vector<std::string_view>& more) {
    const dcasm::Diagram extra = diagram(sig, more, false);
    d.atoms.insert(d.atoms.end(), extra.atoms.begin(), extra.atoms.end());
    d.equalities.insert(d.equalities.end(), extra.equalities.begin(), extra.equalities.end());
    d.normalize();
    return d;
}

// The atoms shared by every model of the supplier database.
inline std::vector<std::string_view> supplier_common() {
    return {"part(p1)",          "part(p2)",         "part(p3)",      "supplier(acme)", "supplier(foo)",
            "supplies(acme,p1)", "supplies(foo,p2)", "subpart(p1,p2)"};
}

// I1, I2, I3: Foo supplies p3 only, p1 only, both (Herbrand, a=a added).
inline std::vector<dcasm::Diagram> supplier_models(const dcasm::Signature& sig) {
    const dcasm::Diagram base = diagram(sig, supplier_common());
    return {with(base, sig, {"supplies(foo,p3)"}), with(base, sig, {"supplies(foo,p1)"}),
            with(base, sig, {"supplies(foo,p1)", "supplies(foo,p3)"})};
}

// J1 (omega a new supplier), J2 (omega = Acme), J3 (omega = Foo).
inline std::vector<dcasm::Diagram> null_models(const dcasm::Signature& sig) {
    const dcasm::Diagram j1 = with(diagram(sig, supplier_common()), sig, {"supplier(omega)", "supplies(omega,p3)"});
    return {j1,
            with(j1, sig, {"supplies(acme,p3)", "supplies(omega,p1)", "eq(omega,acme)", "eq(acme,omega)"}),
            with(j1, sig, {"supplies(foo,p3)", "supplies(omega,p2)", "eq(omega,foo)", "eq(foo,omega)"})};
}

// K1, K2, K3 for p(a) | p(b) over {a, b}.
inline std::vector<dcasm::Diagram> disjunction_models(const dcasm::Signature& sig) {
    return {diagram(sig, {"p(a)"}), diagram(sig, {"p(b)"}), diagram(sig, {"p(a)", "p(b)", "eq(a,b)", "eq(b,a)"})};
}

} // namespace fx
