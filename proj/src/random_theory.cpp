#include "dcasm/random_theory.hpp"

#include <string>

namespace dcasm {

namespace {

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace

TheorySpec random_theory(std::mt19937_64& rng, const RandomBounds& bounds) {
    TheorySpec theory;
    Signature& sig = theory.signature();
    const std::size_t constants = draw(rng, 1, std::max<std::size_t>(1, bounds.max_constants));
    const std::size_t nulls = draw(rng, 0, bounds.max_nulls);
    for (std::size_t i = 0; i < constants; ++i) {
        sig.add_constant("c" + std::to_string(i));
    }
    for (std::size_t i = 0; i < nulls; ++i) {
        sig.add_constant("n" + std::to_string(i), ConstKind::null_value);
    }
    const std::size_t predicates = draw(rng, 1, std::max<std::size_t>(1, bounds.max_predicates));
    for (std::size_t i = 0; i < predicates; ++i) {
        sig.add_predicate("p" + std::to_string(i), draw(rng, 0, bounds.max_arity));
    }
    const std::size_t n = sig.num_constants();
    const std::size_t clauses = draw(rng, 0, bounds.max_clauses);
    for (std::size_t i = 0; i < clauses; ++i) {
        std::vector<Atom> atoms(draw(rng, 1, std::max<std::size_t>(1, bounds.max_width)));
        for (auto& atom : atoms) {
            atom.pred = pred_id(draw(rng, 0, predicates - 1));
            for (std::size_t k = 0; k < sig.arity(atom.pred); ++k) {
                atom.args.push_back(const_id(draw(rng, 0, n - 1)));
            }
        }
        theory.add_clause(std::move(atoms));
    }
    for (const auto& pair : optional_una_pairs(sig)) {
        if (draw(rng, 0, 1) == 1) {
            theory.add_una(pair.first, pair.second);
        }
    }
    return theory;
}

} // namespace dcasm
