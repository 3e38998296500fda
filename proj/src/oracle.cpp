#include "dcasm/oracle.hpp"

#include "dcasm/axioms.hpp"
#include "dcasm/error.hpp"
#include "dcasm/interpretation.hpp"
#include "dcasm/partitions.hpp"

#include <algorithm>
#include <cstdint>

namespace dcasm {

namespace {

constexpr std::size_t kHardAtomLimit = 30;

std::vector<Apart> apart_pairs(const std::set<ConstPair>& pairs) {
    std::vector<Apart> out;
    for (const auto& p : pairs) {
        out.emplace_back(index(p.first), index(p.second));
    }
    return out;
}

void check_constants(const Signature& sig, const OracleOptions& options) {
    if (sig.num_constants() == 0) {
        throw ValidationError("the signature has no object constants");
    }
    if (!options.force && sig.num_constants() > options.max_constants) {
        throw GuardrailError("oracle refused: " + std::to_string(sig.num_constants()) + " constants exceed the limit of " +
                             std::to_string(options.max_constants) + " (use --force)");
    }
}

void check_atoms(std::size_t atoms, const OracleOptions& options) {
    if ((!options.force && atoms > options.max_atoms) || atoms > kHardAtomLimit) {
        throw GuardrailError("oracle refused: " + std::to_string(atoms) + " candidate ground atoms exceed the limit of " +
                             std::to_string(options.force ? kHardAtomLimit : options.max_atoms));
    }
}

// A class-level atom: predicate plus offset of its element tuple.
struct Slot {
    std::size_t pred;
    std::size_t tuple;
};

void load(DcaInterpretation& interp, std::span<const Slot> slots, std::uint64_t mask) {
    for (auto& rel : interp.extensions) {
        for (std::size_t i = 0; i < rel.tuple_count(); ++i) {
            rel.set_index(i, false);
        }
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if ((mask >> i) & 1U) {
            interp.extensions[slots[i].pred].set_index(slots[i].tuple, true);
        }
    }
}

} // namespace

std::vector<Diagram> enumerate_dca_models(const TheorySpec& theory, const OracleOptions& options) {
    return enumerate_dca_models(theory, theory_una_pairs(theory), options);
}

std::vector<Diagram> enumerate_dca_models(const TheorySpec& theory, const std::set<ConstPair>& una,
                                          const OracleOptions& options) {
    const Signature& sig = theory.signature();
    check_constants(sig, options);
    const auto atoms = theory.delta_atoms();
    check_atoms(atoms.size(), options);
    const auto axioms = theory_axioms(theory, una).all();
    const auto apart = apart_pairs(una);

    std::vector<Diagram> out;
    for_each_partition(sig.num_constants(), apart, [&](std::span<const std::size_t> class_of) {
        auto interp = DcaInterpretation::from_partition(sig, class_of);
        // Any atom outside the images of Δ's atoms falsifies a completion
        // axiom, so only these slots are varied.
        std::vector<Slot> slots;
        for (const auto& atom : atoms) {
            std::vector<Element> tuple;
            for (ConstId c : atom.args) {
                tuple.push_back(interp.denotation[index(c)]);
            }
            std::size_t offset = 0;
            for (Element e : tuple) {
                offset = offset * interp.size() + e;
            }
            Slot slot{index(atom.pred), offset};
            const bool seen = std::any_of(slots.begin(), slots.end(), [&](const Slot& s) {
                return s.pred == slot.pred && s.tuple == slot.tuple;
            });
            if (!seen) {
                slots.push_back(slot);
            }
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            load(interp, slots, mask);
            const bool model = std::all_of(axioms.begin(), axioms.end(),
                                           [&](const Formula& f) { return eval(f, interp); });
            if (model) {
                out.push_back(diagram_of(interp, sig));
            }
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Diagram> minimal_dca_models(const Formula& sentence, const Signature& sig, const OracleOptions& options,
                                        const std::set<ConstPair>& apart) {
    check_constants(sig, options);
    if (!is_sentence(sentence)) {
        throw ValidationError("minimal_dca_models expects a sentence");
    }
    std::size_t widest = 0;
    for (const auto& p : sig.predicates()) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < p.arity; ++i) {
            count *= sig.num_constants();
        }
        widest += count;
    }
    check_atoms(widest, options);

    std::vector<Diagram> out;
    const auto apart_list = apart_pairs(apart);
    for_each_partition(sig.num_constants(), apart_list, [&](std::span<const std::size_t> class_of) {
        auto interp = DcaInterpretation::from_partition(sig, class_of);
        std::vector<Slot> slots;
        for (std::size_t p = 0; p < interp.extensions.size(); ++p) {
            for (std::size_t t = 0; t < interp.extensions[p].tuple_count(); ++t) {
                slots.push_back({p, t});
            }
        }
        std::vector<std::uint64_t> models;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            load(interp, slots, mask);
            if (eval(sentence, interp)) {
                models.push_back(mask);
            }
        }
        for (std::uint64_t m : models) {
            const bool minimal = std::none_of(models.begin(), models.end(), [&](std::uint64_t other) {
                return other != m && (other & m) == other;
            });
            if (minimal) {
                load(interp, slots, m);
                out.push_back(diagram_of(interp, sig));
            }
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace dcasm
