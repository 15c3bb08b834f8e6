#ifndef EMOLOG_MODEL_IO_HPP
#define EMOLOG_MODEL_IO_HPP

#include <string>

#include "emolog/model.hpp"

namespace emolog {

// Model file format: one JSON object.
//
//   {
//     "kind":      "preference" | "utility" | "goodness",
//     "agents":    ["s", "p"],
//     "vars":      ["gift"],
//     "worlds":    ["w", "u", "v", "t"],
//     "indist":    { "s": [["w"], ["u", "v"], ["t"]], ... },
//     "pref":      { "s": [["v", "t"], ["t", "w"]], ... }      (preference)
//     "utility":   { "s": { "w": 1, "u": 0.5, ... }, ... }     (utility)
//     "good":      { "s": ["w"], ... }                         (goodness)
//     "valuation": { "gift": ["w", "u"] }
//   }
//
// Exactly one of pref/utility/good is present and must match "kind".
// Unknown top-level keys are rejected. Preference edges are generators;
// loading takes the transitive closure (CycleError if that would make the
// order reflexive). Utility values may be JSON numbers or decimal strings;
// either way they are kept exact. The loaded model is validated and only
// returned when clean.

EpistemicModel load_model(const std::string& text);

// Inverse of load_model up to structural equality:
// load_model(serialize_model(m)) == m for any valid m.
std::string serialize_model(const EpistemicModel& m);

} // namespace emolog

#endif
