#pragma once

#include "dcasm/formula.hpp"
#include "dcasm/program.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace dcasm {

/// Herbrand interpretation as its sorted, duplicate-free set of true atoms.
using CandidateModel = std::vector<Atom>;

/// First-order reading of a rule: fact A is A; H1|...|Hk :- B is B -> OR H;
/// :- B is ~B; {A} :- B is B -> (A | ~A); 1{A1..Ar} is
/// AND (Ai | ~Ai) & OR Ai.
Formula rule_to_formula(const GroundRule& rule);

/// Conjunction of rule_to_formula over all rules.
Formula program_formula(const GroundProgram& program);

/// Decides stability through the SM_p reading: M satisfies F and no u < M
/// (pointwise subset on the intensional predicates, strict somewhere)
/// satisfies F*(u), the unstarred parts being evaluated at M.
class StabilityChecker {
public:
    explicit StabilityChecker(const GroundProgram& program);
    ~StabilityChecker();
    StabilityChecker(StabilityChecker&&) noexcept;
    StabilityChecker& operator=(StabilityChecker&&) noexcept;

    bool is_stable(const CandidateModel& model) const;
    /// M satisfies F classically.
    bool is_model(const CandidateModel& model) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

bool is_stable(const CandidateModel& model, const GroundProgram& program);

struct SolveOptions {
    /// 0 = all. The first N in canonical order are returned.
    std::size_t max_models = 0;
    bool force = false;
    /// Refuse when more atoms than this remain undecided after root-level
    /// propagation, unless `force` is set.
    std::size_t max_open_atoms = 24;
};

/// All Herbrand stable models, sorted lexicographically by atom list.
/// Backtracking over atoms in canonical order with unit propagation on the
/// rules read as clauses and unfounded-set falsification; each complete
/// candidate is confirmed by StabilityChecker.
std::vector<CandidateModel> enumerate_stable_models(const GroundProgram& program, const SolveOptions& options = {});

/// Atoms separated by single spaces.
std::string model_line(const CandidateModel& model, const Signature& sig);

} // namespace dcasm
