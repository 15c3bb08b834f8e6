#ifndef EMOLOG_SEARCH_HPP
#define EMOLOG_SEARCH_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "emolog/formula.hpp"
#include "emolog/model.hpp"

namespace emolog {

// ── Bounded model search ────────────────────────────────────────────────────
//
// Enumerates every preference model over the given signature with 1 to
// max_worlds worlds (named w0, w1, ...), in a fixed order: world count
// ascending, then per-agent partitions, per-agent strict orders, and
// per-variable valuations, each in its own generation order. With symmetry
// reduction on (the default), only models in canonical form are yielded:
// a model is canonical when its encoding is lexicographically least among
// all world relabelings. Every yielded model passes validate().

struct SearchBounds {
    std::size_t max_worlds = 3;
    std::vector<std::string> agents = {"a"};
    std::vector<std::string> vars = {"p"};
    std::size_t max_formula_depth = 2; // fragment sweep depth for separation
    std::size_t cap = 5000000;         // candidates examined; CapExceeded beyond
    bool symmetry_reduction = true;
};

// Stops early when the callback returns false.
void enumerate_models_stream(const SearchBounds& bounds,
                             const std::function<bool(const EpistemicModel&)>& fn);

std::vector<EpistemicModel> enumerate_models(const SearchBounds& bounds);

enum class SearchMode : std::uint8_t { Satisfy, Refute };

struct SearchOutcome {
    bool found = false;
    EpistemicModel model;       // meaningful when found
    std::string world;          // meaningful when found
    std::size_t models_examined = 0;
};

// First enumerated model and world (declared order) where the target holds
// (Satisfy) or fails (Refute). The target must be degree-free and use only
// the bounds signature.
SearchOutcome find_model(const Formula& target, SearchMode mode,
                         const SearchBounds& bounds);

struct EquivalenceOutcome {
    bool equivalent = false;
    std::size_t formulas_checked = 0;
    Formula distinguishing;     // meaningful when not equivalent
    std::string world;          // ditto; first in declared order
};

// Compares two models sharing worlds, agents and vars on every fragment
// formula up to max_depth, at every world, in enumeration order. Reports
// the first disagreement.
EquivalenceOutcome check_pair_equivalence(const EpistemicModel& a,
                                          const EpistemicModel& b,
                                          Fragment frag, std::size_t max_depth);

struct SeparationOutcome {
    bool found = false;
    EpistemicModel left, right;
    std::string world;              // disagrees on the target here
    std::size_t pairs_examined = 0;
    std::size_t formulas_checked = 0; // fragment formulas verified equal
};

// Looks for two models over the bounds signature and the same world count
// that agree on every fragment formula up to bounds.max_formula_depth yet
// disagree on the target somewhere. The target must lie outside the
// fragment (Error otherwise). The left model ranges over the canonical
// stream, the right over the unpruned stream, so the search is exhaustive
// up to joint relabeling.
SeparationOutcome find_separating_pair(Fragment frag, const Formula& target,
                                       const SearchBounds& bounds);

} // namespace emolog

#endif
