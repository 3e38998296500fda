#pragma once

#include "dcasm/diagram.hpp"
#include "dcasm/formula.hpp"
#include "dcasm/theory.hpp"

#include <cstddef>
#include <set>
#include <vector>

namespace dcasm {

struct OracleOptions {
    bool force = false;
    std::size_t max_constants = 10;
    std::size_t max_atoms = 24;
};

/// Diagrams of all models of T_{Δ,Σ}, found by brute force: every partition
/// of the constants compatible with the unique-name axioms, every extension
/// the completion axioms admit, each candidate checked against every axiom
/// with eval. Sorted canonically.
std::vector<Diagram> enumerate_dca_models(const TheorySpec& theory, const OracleOptions& options = {});

/// Same with an explicit unique-name pair set instead of required ∪ Σ.
std::vector<Diagram> enumerate_dca_models(const TheorySpec& theory, const std::set<ConstPair>& una,
                                          const OracleOptions& options = {});

/// Diagrams of the DCA-models of `sentence` whose predicate extensions are
/// minimal among the models sharing the same equality relation. Constants
/// in an `apart` pair are kept distinct. Sorted canonically.
std::vector<Diagram> minimal_dca_models(const Formula& sentence, const Signature& sig,
                                        const OracleOptions& options = {},
                                        const std::set<ConstPair>& apart = {});

} // namespace dcasm
