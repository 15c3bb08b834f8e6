#ifndef EMOLOG_MODEL_HPP
#define EMOLOG_MODEL_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "emolog/decimal.hpp"

namespace emolog {

// ── Models ──────────────────────────────────────────────────────────────────
//
// A model is a finite world set, one indistinguishability partition per
// agent, one comparison structure per agent, and a valuation. The comparison
// structure comes in three kinds:
//
//   Preference: a strict partial order per agent, stored transitively closed.
//               An edge (u, v) reads "u is strictly below v".
//   Utility:    a total map world -> exact decimal payoff per agent.
//   Goodness:   a nonempty set of good worlds per agent.
//
// Models are plain data; mutate freely while building, then run validate().
// Loaders and fixtures only hand out models that validated.

enum class ModelKind : std::uint8_t { Preference, Utility, Goodness };

using Edge = std::pair<std::string, std::string>;
using EdgeSet = std::set<Edge>;

struct EpistemicModel {
    ModelKind kind = ModelKind::Preference;

    std::vector<std::string> agents;
    std::vector<std::string> vars;
    std::vector<std::string> worlds; // declared order; all output follows it

    // agent -> partition of the world set
    std::map<std::string, std::vector<std::vector<std::string>>> indist;

    // exactly one of these three is populated, per kind
    std::map<std::string, EdgeSet> pref;
    std::map<std::string, std::map<std::string, Decimal>> utility;
    std::map<std::string, std::vector<std::string>> good;

    // var -> worlds where it holds
    std::map<std::string, std::set<std::string>> valuation;

    bool operator==(const EpistemicModel& o) const;
    bool operator!=(const EpistemicModel& o) const { return !(*this == o); }

    bool world_exists(const std::string& w) const;
    bool agent_exists(const std::string& a) const;
    bool var_exists(const std::string& v) const;
};

struct Violation {
    std::string code;   // short machine tag, e.g. "irreflexivity"
    std::string detail; // human form with the offending names
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Checks every structural invariant for the model's kind: known identifiers
// everywhere, indist a true partition of the world set, pref irreflexive and
// transitively closed, utilities total, good sets nonempty subsets.
ValidationReport validate(const EpistemicModel& m);

// Transitive closure of a set of strict-preference edges. Throws CycleError
// if the closure would contain a reflexive pair.
EdgeSet close_preferences(const EdgeSet& edges);

// Same model with every preference edge reversed, per agent.
// Preference kind only. Closure and validity are preserved.
EpistemicModel converse(const EpistemicModel& m);

// Preference model induced by a utility model: u strictly below v whenever
// the agent's payoff at u is strictly smaller than at v.
EpistemicModel preferences_from_utilities(const EpistemicModel& m);

// Set-level comparison: every world of lhs strictly below every world of
// rhs for the agent. Vacuously true when either side is empty.
bool set_prec(const EpistemicModel& m, const std::string& agent,
              const std::vector<std::string>& lhs,
              const std::vector<std::string>& rhs);

} // namespace emolog

#endif
