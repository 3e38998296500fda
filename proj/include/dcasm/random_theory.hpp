#pragma once

#include "dcasm/theory.hpp"

#include <cstddef>
#include <random>

namespace dcasm {

/// Upper bounds for generated theories. Every count is drawn uniformly from
/// its range; there is always at least one database constant and one
/// predicate.
struct RandomBounds {
    std::size_t max_constants = 4; // database constants
    std::size_t max_nulls = 0;
    std::size_t max_predicates = 3;
    std::size_t max_arity = 2;
    std::size_t max_clauses = 5;
    std::size_t max_width = 3;
};

/// Constants are named c0, c1, ..., nulls n0, n1, ..., predicates p0, p1, ...
/// Σ is a random subset of the optional pairs (each kept with probability 1/2).
TheorySpec random_theory(std::mt19937_64& rng, const RandomBounds& bounds = {});

} // namespace dcasm
