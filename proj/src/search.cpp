#include "emolog/search.hpp"

#include <algorithm>
#include <cstdint>

#include "emolog/errors.hpp"
#include "emolog/semantics.hpp"

namespace emolog {

namespace {

// Every partition of {0..n-1} as a restricted growth string, in
// lexicographic order. rgs[i] is the block of world i; blocks are numbered
// by first appearance.
std::vector<std::vector<int>> partitions_of(std::size_t n) {
    std::vector<std::vector<int>> out;
    if (n == 0) return out;
    std::vector<int> rgs(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == n) {
            out.push_back(rgs);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(1, 1);
    return out;
}

// Every strict partial order on {0..n-1} as an edge list. Candidate edge
// sets run through subset bitmasks of the pair list (i, j), i != j, in
// ascending mask order; only transitive sets survive.
std::vector<std::vector<std::pair<int, int>>> orders_of(std::size_t n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < static_cast<int>(n); ++i)
        for (int j = 0; j < static_cast<int>(n); ++j)
            if (i != j) pairs.emplace_back(i, j);

    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
        for (auto& row : adj) std::fill(row.begin(), row.end(), false);
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1) {
                edges.push_back(pairs[k]);
                adj[pairs[k].first][pairs[k].second] = true;
            }
        bool ok = true;
        for (std::size_t i = 0; ok && i < n; ++i)
            for (std::size_t j = 0; ok && j < n; ++j) {
                if (!adj[i][j]) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (adj[j][k] && (i == k || !adj[i][k])) {
                        ok = false;
                        break;
                    }
            }
        if (ok) out.push_back(std::move(edges));
    }
    return out;
}

struct Candidate {
    std::size_t n = 0;
    std::vector<std::vector<int>> part;                // per agent
    std::vector<std::vector<std::pair<int, int>>> ord; // per agent
    std::vector<std::uint64_t> val;                    // per var, bit = world
};

// Flat comparable form of a candidate under a world relabeling. sigma maps
// old index to new index. Partitions are renumbered by first appearance and
// edge lists sorted, so equal encodings mean equal relabeled models.
std::vector<long long> encode(const Candidate& c, const std::vector<int>& sigma) {
    std::vector<long long> out;
    const auto n = static_cast<long long>(c.n);
    for (const auto& rgs : c.part) {
        std::vector<int> moved(c.n);
        for (std::size_t i = 0; i < c.n; ++i) moved[sigma[i]] = rgs[i];
        std::vector<int> rename(c.n, -1);
        int next = 0;
        for (std::size_t i = 0; i < c.n; ++i) {
            if (rename[moved[i]] < 0) rename[moved[i]] = next++;
            out.push_back(rename[moved[i]]);
        }
        out.push_back(-1);
    }
    for (const auto& edges : c.ord) {
        std::vector<long long> flat;
        flat.reserve(edges.size());
        for (auto [i, j] : edges)
            flat.push_back(static_cast<long long>(sigma[i]) * n + sigma[j]);
        std::sort(flat.begin(), flat.end());
        out.insert(out.end(), flat.begin(), flat.end());
        out.push_back(-2);
    }
    for (auto mask : c.val) {
        std::uint64_t moved = 0;
        for (std::size_t i = 0; i < c.n; ++i)
            if (mask >> i & 1) moved |= 1ull << sigma[i];
        out.push_back(static_cast<long long>(moved));
    }
    return out;
}

bool canonical(const Candidate& c) {
    std::vector<int> sigma(c.n);
    for (std::size_t i = 0; i < c.n; ++i) sigma[i] = static_cast<int>(i);
    const auto base = encode(c, sigma);
    while (std::next_permutation(sigma.begin(), sigma.end()))
        if (encode(c, sigma) < base) return false;
    return true;
}

EpistemicModel to_model(const Candidate& c, const std::vector<std::string>& agents,
                        const std::vector<std::string>& vars) {
    EpistemicModel m;
    m.kind = ModelKind::Preference;
    m.agents = agents;
    m.vars = vars;
    for (std::size_t i = 0; i < c.n; ++i)
        m.worlds.push_back("w" + std::to_string(i));
    for (std::size_t ai = 0; ai < agents.size(); ++ai) {
        const auto& rgs = c.part[ai];
        int count = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<std::string>> blocks(count);
        for (std::size_t i = 0; i < c.n; ++i)
            blocks[rgs[i]].push_back(m.worlds[i]);
        m.indist[agents[ai]] = std::move(blocks);

        EdgeSet es;
        for (auto [i, j] : c.ord[ai]) es.insert({m.worlds[i], m.worlds[j]});
        m.pref[agents[ai]] = std::move(es);
    }
    for (std::size_t vi = 0; vi < vars.size(); ++vi) {
        std::set<std::string> s;
        for (std::size_t i = 0; i < c.n; ++i)
            if (c.val[vi] >> i & 1) s.insert(m.worlds[i]);
        m.valuation[vars[vi]] = std::move(s);
    }
    return m;
}

struct GenCounter {
    std::size_t count = 0;
    std::size_t cap = 0;
};

// Streams every candidate with exactly n worlds. Returns false when fn asked
// to stop. Counts raw candidates against the cap, pruned or not.
bool generate_for_n(std::size_t n, const SearchBounds& bounds, GenCounter& gc,
                    const std::function<bool(const EpistemicModel&)>& fn) {
    const auto parts = partitions_of(n);
    const auto ords = orders_of(n);
    const std::size_t na = bounds.agents.size();
    const std::size_t nv = bounds.vars.size();
    const std::uint64_t vmax = 1ull << n;

    Candidate c;
    c.n = n;
    c.part.resize(na);
    c.ord.resize(na);
    c.val.assign(nv, 0);

    auto emit = [&]() -> bool {
        if (++gc.count > gc.cap)
            throw CapExceeded("model search exceeded its candidate cap", gc.count);
        if (bounds.symmetry_reduction && !canonical(c)) return true;
        return fn(to_model(c, bounds.agents, bounds.vars));
    };
    std::function<bool(std::size_t)> do_val = [&](std::size_t k) -> bool {
        if (k == nv) return emit();
        for (std::uint64_t mask = 0; mask < vmax; ++mask) {
            c.val[k] = mask;
            if (!do_val(k + 1)) return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> do_ord = [&](std::size_t k) -> bool {
        if (k == na) return do_val(0);
        for (const auto& o : ords) {
            c.ord[k] = o;
            if (!do_ord(k + 1)) return false;
        }
        return true;
    };
    std::function<bool(std::size_t)> do_part = [&](std::size_t k) -> bool {
        if (k == na) return do_ord(0);
        for (const auto& p : parts) {
            c.part[k] = p;
            if (!do_part(k + 1)) return false;
        }
        return true;
    };
    return do_part(0);
}

void check_target(const Formula& target, const SearchBounds& bounds,
                  const char* what) {
    if (target.empty()) throw Error(std::string(what) + " is empty");
    if (has_degree(target))
        throw Error(std::string(what) + " must be degree-free");
    auto ms = metrics(target);
    for (const auto& a : ms.agents_used)
        if (std::find(bounds.agents.begin(), bounds.agents.end(), a) ==
            bounds.agents.end())
            throw Error(std::string(what) + " uses agent '" + a +
                        "' outside the search signature");
    for (const auto& v : ms.vars_used)
        if (std::find(bounds.vars.begin(), bounds.vars.end(), v) ==
            bounds.vars.end())
            throw Error(std::string(what) + " uses variable '" + v +
                        "' outside the search signature");
}

} // namespace

void enumerate_models_stream(const SearchBounds& bounds,
                             const std::function<bool(const EpistemicModel&)>& fn) {
    GenCounter gc{0, bounds.cap};
    for (std::size_t n = 1; n <= bounds.max_worlds; ++n)
        if (!generate_for_n(n, bounds, gc, fn)) return;
}

std::vector<EpistemicModel> enumerate_models(const SearchBounds& bounds) {
    std::vector<EpistemicModel> out;
    enumerate_models_stream(bounds, [&](const EpistemicModel& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

SearchOutcome find_model(const Formula& target, SearchMode mode,
                         const SearchBounds& bounds) {
    check_target(target, bounds, "search target");
    SearchOutcome out;
    enumerate_models_stream(bounds, [&](const EpistemicModel& m) {
        ++out.models_examined;
        Evaluator ev(m);
        auto bits = ev.extension_value(target);
        if (mode == SearchMode::Refute) bits = ~bits;
        auto hit = bits.find_first();
        if (hit == boost::dynamic_bitset<>::npos) return true;
        out.found = true;
        out.model = m;
        out.world = m.worlds[hit];
        return false;
    });
    return out;
}

EquivalenceOutcome check_pair_equivalence(const EpistemicModel& a,
                                          const EpistemicModel& b,
                                          Fragment frag, std::size_t max_depth) {
    if (a.worlds != b.worlds || a.agents != b.agents || a.vars != b.vars)
        throw Error("pair equivalence needs models sharing worlds, agents and vars");
    Evaluator ea(a);
    Evaluator eb(b);
    EquivalenceOutcome out;
    out.equivalent = true;
    enumerate_formulas_stream(
        a.vars, a.agents, max_depth, frag, [&](const Formula& f) {
            ++out.formulas_checked;
            auto x = ea.extension_value(f);
            auto y = eb.extension_value(f);
            if (x == y) return true;
            out.equivalent = false;
            out.distinguishing = f;
            out.world = a.worlds[(x ^ y).find_first()];
            return false;
        });
    return out;
}

SeparationOutcome find_separating_pair(Fragment frag, const Formula& target,
                                       const SearchBounds& bounds) {
    check_target(target, bounds, "separation target");
    if (in_fragment(target, frag))
        throw Error("separation target lies inside the fragment");

    const auto probes = enumerate_formulas(bounds.vars, bounds.agents,
                                           bounds.max_formula_depth, frag);
    SeparationOutcome out;
    out.formulas_checked = probes.size();

    struct Profile {
        EpistemicModel model;
        boost::dynamic_bitset<> target_ext;
        std::vector<boost::dynamic_bitset<>> probe_ext;
    };
    GenCounter gc{0, bounds.cap};

    for (std::size_t n = 1; n <= bounds.max_worlds; ++n) {
        auto add_profile = [&](const EpistemicModel& m, std::vector<Profile>& into) {
            Evaluator ev(m);
            Profile p;
            p.model = m;
            p.target_ext = ev.extension_value(target);
            p.probe_ext.reserve(probes.size());
            for (const auto& f : probes) p.probe_ext.push_back(ev.extension_value(f));
            into.push_back(std::move(p));
        };
        std::vector<Profile> lefts, rights;
        SearchBounds canon = bounds;
        canon.symmetry_reduction = true;
        SearchBounds raw = bounds;
        raw.symmetry_reduction = false;
        generate_for_n(n, canon, gc, [&](const EpistemicModel& m) {
            add_profile(m, lefts);
            return true;
        });
        generate_for_n(n, raw, gc, [&](const EpistemicModel& m) {
            add_profile(m, rights);
            return true;
        });

        for (const auto& l : lefts)
            for (const auto& r : rights) {
                if (++out.pairs_examined > bounds.cap)
                    throw CapExceeded("separation search exceeded its pair cap",
                                      out.pairs_examined);
                if (l.target_ext == r.target_ext) continue;
                if (l.probe_ext != r.probe_ext) continue;
                out.found = true;
                out.left = l.model;
                out.right = r.model;
                out.world = l.model.worlds[(l.target_ext ^ r.target_ext).find_first()];
                return out;
            }
    }
    return out;
}

} // namespace emolog
