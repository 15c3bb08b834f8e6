#include "emolog/model.hpp"

#include <algorithm>

#include "emolog/errors.hpp"

namespace emolog {

bool EpistemicModel::operator==(const EpistemicModel& o) const {
    return kind == o.kind && agents == o.agents && vars == o.vars &&
           worlds == o.worlds && indist == o.indist && pref == o.pref &&
           utility == o.utility && good == o.good && valuation == o.valuation;
}

bool EpistemicModel::world_exists(const std::string& w) const {
    return std::find(worlds.begin(), worlds.end(), w) != worlds.end();
}

bool EpistemicModel::agent_exists(const std::string& a) const {
    return std::find(agents.begin(), agents.end(), a) != agents.end();
}

bool EpistemicModel::var_exists(const std::string& v) const {
    return std::find(vars.begin(), vars.end(), v) != vars.end();
}

EdgeSet close_preferences(const EdgeSet& edges) {
    EdgeSet closed = edges;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [a, b] : EdgeSet(closed)) {
            for (const auto& [c, d] : closed) {
                if (b == c && closed.insert({a, d}).second) grew = true;
            }
        }
    }
    for (const auto& [a, b] : closed)
        if (a == b)
            throw CycleError("preference cycle through \"" + a + "\"");
    return closed;
}

namespace {

void flag(ValidationReport& r, const std::string& code, const std::string& detail) {
    r.ok = false;
    r.violations.push_back({code, detail});
}

} // namespace

ValidationReport validate(const EpistemicModel& m) {
    ValidationReport r;

    std::set<std::string> world_set(m.worlds.begin(), m.worlds.end());
    if (world_set.size() != m.worlds.size())
        flag(r, "duplicate-world", "a world name is declared twice");
    if (m.worlds.empty()) flag(r, "no-worlds", "the world set is empty");
    std::set<std::string> agent_set(m.agents.begin(), m.agents.end());
    if (agent_set.size() != m.agents.size())
        flag(r, "duplicate-agent", "an agent name is declared twice");
    std::set<std::string> var_set(m.vars.begin(), m.vars.end());
    if (var_set.size() != m.vars.size())
        flag(r, "duplicate-var", "a variable name is declared twice");

    // partitions: one per agent, covering the worlds exactly once
    for (const auto& a : m.agents) {
        auto it = m.indist.find(a);
        if (it == m.indist.end()) {
            flag(r, "partition-missing", "agent \"" + a + "\" has no partition");
            continue;
        }
        std::set<std::string> covered;
        for (const auto& block : it->second) {
            if (block.empty())
                flag(r, "partition-empty-block", "agent \"" + a + "\" has an empty block");
            for (const auto& w : block) {
                if (!world_set.count(w))
                    flag(r, "unknown-world",
                         "partition of \"" + a + "\" mentions unknown world \"" + w + "\"");
                else if (!covered.insert(w).second)
                    flag(r, "partition-overlap",
                         "world \"" + w + "\" appears twice in the partition of \"" + a + "\"");
            }
        }
        if (covered != world_set)
            flag(r, "partition-cover",
                 "partition of \"" + a + "\" does not cover the world set");
    }
    for (const auto& [a, blocks] : m.indist) {
        (void)blocks;
        if (!agent_set.count(a))
            flag(r, "unknown-agent", "partition for unknown agent \"" + a + "\"");
    }

    // kind-specific comparison structure
    if (m.kind == ModelKind::Preference) {
        if (!m.utility.empty() || !m.good.empty())
            flag(r, "kind-mismatch", "preference model carries utility or goodness data");
        for (const auto& a : m.agents)
            if (!m.pref.count(a))
                flag(r, "pref-missing", "agent \"" + a + "\" has no preference relation");
        for (const auto& [a, edges] : m.pref) {
            if (!agent_set.count(a))
                flag(r, "unknown-agent", "preferences for unknown agent \"" + a + "\"");
            for (const auto& [lo, hi] : edges) {
                if (!world_set.count(lo) || !world_set.count(hi))
                    flag(r, "unknown-world",
                         "preference edge (" + lo + ", " + hi + ") of \"" + a +
                             "\" leaves the world set");
                if (lo == hi)
                    flag(r, "irreflexivity",
                         "world \"" + lo + "\" is strictly below itself for \"" + a + "\"");
            }
            for (const auto& [a1, b1] : edges)
                for (const auto& [a2, b2] : edges)
                    if (b1 == a2 && !edges.count({a1, b2}))
                        flag(r, "transitivity",
                             "edges (" + a1 + ", " + b1 + ") and (" + a2 + ", " + b2 +
                                 ") of \"" + a + "\" lack their composite");
        }
    } else if (m.kind == ModelKind::Utility) {
        if (!m.pref.empty() || !m.good.empty())
            flag(r, "kind-mismatch", "utility model carries preference or goodness data");
        for (const auto& a : m.agents) {
            auto it = m.utility.find(a);
            if (it == m.utility.end()) {
                flag(r, "utility-total", "agent \"" + a + "\" has no payoffs");
                continue;
            }
            for (const auto& w : m.worlds)
                if (!it->second.count(w))
                    flag(r, "utility-total",
                         "agent \"" + a + "\" has no payoff at world \"" + w + "\"");
            for (const auto& [w, val] : it->second) {
                (void)val;
                if (!world_set.count(w))
                    flag(r, "unknown-world",
                         "payoff of \"" + a + "\" at unknown world \"" + w + "\"");
            }
        }
        for (const auto& [a, payoffs] : m.utility) {
            (void)payoffs;
            if (!agent_set.count(a))
                flag(r, "unknown-agent", "payoffs for unknown agent \"" + a + "\"");
        }
    } else {
        if (!m.pref.empty() || !m.utility.empty())
            flag(r, "kind-mismatch", "goodness model carries preference or utility data");
        for (const auto& a : m.agents) {
            auto it = m.good.find(a);
            if (it == m.good.end() || it->second.empty()) {
                flag(r, "good-nonempty", "agent \"" + a + "\" has an empty good set");
                continue;
            }
            std::set<std::string> seen;
            for (const auto& w : it->second) {
                if (!world_set.count(w))
                    flag(r, "unknown-world",
                         "good set of \"" + a + "\" mentions unknown world \"" + w + "\"");
                else if (!seen.insert(w).second)
                    flag(r, "duplicate-world",
                         "good set of \"" + a + "\" repeats world \"" + w + "\"");
            }
        }
        for (const auto& [a, worlds] : m.good) {
            (void)worlds;
            if (!agent_set.count(a))
                flag(r, "unknown-agent", "good set for unknown agent \"" + a + "\"");
        }
    }

    // valuation
    for (const auto& [v, ws] : m.valuation) {
        if (!var_set.count(v))
            flag(r, "unknown-var", "valuation for undeclared variable \"" + v + "\"");
        for (const auto& w : ws)
            if (!world_set.count(w))
                flag(r, "unknown-world",
                     "variable \"" + v + "\" is true at unknown world \"" + w + "\"");
    }

    return r;
}

EpistemicModel converse(const EpistemicModel& m) {
    if (m.kind != ModelKind::Preference)
        throw Error("converse is only defined for preference models");
    EpistemicModel out = m;
    for (auto& [agent, edges] : out.pref) {
        (void)agent;
        EdgeSet reversed;
        for (const auto& [lo, hi] : edges) reversed.insert({hi, lo});
        edges = std::move(reversed);
    }
    return out;
}

EpistemicModel preferences_from_utilities(const EpistemicModel& m) {
    if (m.kind != ModelKind::Utility)
        throw Error("induced preferences need a utility model");
    EpistemicModel out;
    out.kind = ModelKind::Preference;
    out.agents = m.agents;
    out.vars = m.vars;
    out.worlds = m.worlds;
    out.indist = m.indist;
    out.valuation = m.valuation;
    for (const auto& a : m.agents) {
        const auto& payoff = m.utility.at(a);
        EdgeSet edges;
        for (const auto& u : m.worlds)
            for (const auto& v : m.worlds)
                if (payoff.at(u) < payoff.at(v)) edges.insert({u, v});
        out.pref[a] = std::move(edges);
    }
    return out;
}

bool set_prec(const EpistemicModel& m, const std::string& agent,
              const std::vector<std::string>& lhs,
              const std::vector<std::string>& rhs) {
    if (m.kind != ModelKind::Preference)
        throw EvalError("set comparison needs a preference model");
    auto it = m.pref.find(agent);
    if (it == m.pref.end()) throw EvalError("unknown agent \"" + agent + "\"");
    for (const auto& w : lhs)
        if (!m.world_exists(w)) throw EvalError("unknown world \"" + w + "\"");
    for (const auto& w : rhs)
        if (!m.world_exists(w)) throw EvalError("unknown world \"" + w + "\"");
    for (const auto& lo : lhs)
        for (const auto& hi : rhs)
            if (!it->second.count({lo, hi})) return false;
    return true;
}

} // namespace emolog
