#include "emolog/semantics.hpp"

#include <limits>

#include "emolog/errors.hpp"

namespace emolog {

namespace {

using Bits = boost::dynamic_bitset<>;

constexpr std::size_t kNoBlock = std::numeric_limits<std::size_t>::max();

} // namespace

struct Evaluator::Impl {
    EpistemicModel m;
    std::size_t n = 0;
    std::map<std::string, std::size_t> windex;

    struct AgentData {
        std::vector<std::size_t> block_of; // world index -> block index
        std::vector<Bits> blocks;
        std::vector<Bits> above;      // preference: worlds strictly above
        std::vector<Decimal> payoff;  // utility
        Bits good;                    // goodness
    };
    std::map<std::string, AgentData> agents;
    std::map<std::string, Bits> val;

    std::map<const void*, Bits> memo; // persistent; keys pinned via pins
    std::vector<Formula> pins;

    explicit Impl(const EpistemicModel& model) : m(model), n(model.worlds.size()) {
        for (std::size_t i = 0; i < n; ++i) windex[m.worlds[i]] = i;
        for (const auto& [agent, partition] : m.indist) {
            AgentData d;
            d.block_of.assign(n, kNoBlock);
            for (const auto& block : partition) {
                Bits b(n);
                for (const auto& w : block) {
                    auto it = windex.find(w);
                    if (it == windex.end()) continue; // invalid models stay usable
                    b.set(it->second);
                    d.block_of[it->second] = d.blocks.size();
                }
                d.blocks.push_back(std::move(b));
            }
            agents[agent] = std::move(d);
        }
        for (const auto& [agent, edges] : m.pref) {
            auto& d = agents[agent];
            if (d.block_of.empty()) d.block_of.assign(n, kNoBlock);
            d.above.assign(n, Bits(n));
            for (const auto& [lo, hi] : edges) {
                auto l = windex.find(lo);
                auto h = windex.find(hi);
                if (l == windex.end() || h == windex.end()) continue;
                d.above[l->second].set(h->second);
            }
        }
        for (const auto& [agent, payoffs] : m.utility) {
            auto& d = agents[agent];
            if (d.block_of.empty()) d.block_of.assign(n, kNoBlock);
            d.payoff.assign(n, Decimal());
            for (const auto& [w, value] : payoffs) {
                auto it = windex.find(w);
                if (it != windex.end()) d.payoff[it->second] = value;
            }
        }
        for (const auto& [agent, worlds] : m.good) {
            auto& d = agents[agent];
            if (d.block_of.empty()) d.block_of.assign(n, kNoBlock);
            d.good.resize(n);
            for (const auto& w : worlds) {
                auto it = windex.find(w);
                if (it != windex.end()) d.good.set(it->second);
            }
        }
        for (const auto& v : m.vars) {
            Bits b(n);
            auto it = m.valuation.find(v);
            if (it != m.valuation.end())
                for (const auto& w : it->second) {
                    auto wi = windex.find(w);
                    if (wi != windex.end()) b.set(wi->second);
                }
            val[v] = std::move(b);
        }
    }

    std::size_t world_index(const std::string& w) const {
        auto it = windex.find(w);
        if (it == windex.end()) throw EvalError("unknown world \"" + w + "\"");
        return it->second;
    }

    const AgentData& agent_data(const std::string& a) const {
        auto it = agents.find(a);
        if (it == agents.end()) throw EvalError("unknown agent \"" + a + "\"");
        return it->second;
    }

    // Worlds whose whole block lies inside t: the knowledge clause, and the
    // emotion clause (a).
    Bits known_throughout(const AgentData& d, const Bits& t) const {
        Bits out(n);
        for (const auto& block : d.blocks)
            if (block.is_subset_of(t)) out |= block;
        return out;
    }

    // Emotion order condition (b); world independent.
    bool order_holds(Kind kind, const std::string& agent, const Bits& t) const {
        const auto& d = agent_data(agent);
        Bits f = ~t;
        switch (kind) {
        case Kind::Happy:
        case Kind::Sad: {
            if (m.kind == ModelKind::Preference) {
                if (d.above.empty())
                    throw EvalError("agent \"" + agent + "\" has no preference relation");
                const Bits& upper = kind == Kind::Happy ? t : f;
                const Bits& lower = kind == Kind::Happy ? f : t;
                for (std::size_t v = lower.find_first(); v != Bits::npos;
                     v = lower.find_next(v))
                    if (!upper.is_subset_of(d.above[v])) return false;
                return true;
            }
            if (m.kind == ModelKind::Goodness) {
                if (d.good.empty())
                    throw EvalError("agent \"" + agent + "\" has no good set");
                return kind == Kind::Happy ? d.good.is_subset_of(t)
                                           : d.good.is_subset_of(f);
            }
            throw EvalError("plain happy/sad modalities need a preference or "
                            "goodness model; use a degree under utilities");
        }
        case Kind::HappyDeg:
        case Kind::SadDeg:
            break;
        default:
            throw Error("order_holds on a non-emotion node");
        }
        if (m.kind != ModelKind::Utility)
            throw EvalError("degree-tagged modalities need a utility model");
        if (d.payoff.empty())
            throw EvalError("agent \"" + agent + "\" has no payoffs");
        return true; // degree handling happens in order_holds_deg
    }

    bool order_holds_deg(Kind kind, const std::string& agent, const Decimal& deg,
                         const Bits& t) const {
        order_holds(kind, agent, t); // kind/model checks
        const auto& d = agent_data(agent);
        Bits f = ~t;
        const Bits& lower = kind == Kind::HappyDeg ? f : t;
        const Bits& upper = kind == Kind::HappyDeg ? t : f;
        if (lower.none() || upper.none()) return true;
        bool first = true;
        Decimal lo_max, hi_min;
        for (std::size_t v = lower.find_first(); v != Bits::npos; v = lower.find_next(v)) {
            if (first || lo_max < d.payoff[v]) lo_max = d.payoff[v];
            first = false;
        }
        first = true;
        for (std::size_t v = upper.find_first(); v != Bits::npos; v = upper.find_next(v)) {
            if (first || d.payoff[v] < hi_min) hi_min = d.payoff[v];
            first = false;
        }
        return lo_max + deg <= hi_min;
    }

    Bits compute(const Formula& f, std::map<const void*, Bits>& table) const {
        auto hit = table.find(f.id());
        if (hit != table.end()) return hit->second;
        Bits out(n);
        switch (f.kind()) {
        case Kind::Var: {
            auto it = val.find(f.name());
            if (it == val.end())
                throw EvalError("unknown variable \"" + f.name() + "\"");
            out = it->second;
            break;
        }
        case Kind::Not:
            out = ~compute(f.child(), table);
            break;
        case Kind::Implies:
            out = ~compute(f.lhs(), table) | compute(f.rhs(), table);
            break;
        case Kind::Nec: {
            Bits c = compute(f.child(), table);
            if (c.all()) out.set();
            break;
        }
        case Kind::Knows: {
            Bits c = compute(f.child(), table);
            out = known_throughout(agent_data(f.agent()), c);
            break;
        }
        case Kind::Happy:
        case Kind::Sad: {
            Bits c = compute(f.child(), table);
            bool b = order_holds(f.kind(), f.agent(), c);
            bool witness = !c.all();
            if (b && witness) out = known_throughout(agent_data(f.agent()), c);
            break;
        }
        case Kind::HappyDeg:
        case Kind::SadDeg: {
            Bits c = compute(f.child(), table);
            bool b = order_holds_deg(f.kind(), f.agent(), f.degree(), c);
            bool witness = !c.all();
            if (b && witness) out = known_throughout(agent_data(f.agent()), c);
            break;
        }
        }
        table.emplace(f.id(), out);
        return out;
    }

    const Bits& ext_persistent(const Formula& f) {
        auto hit = memo.find(f.id());
        if (hit != memo.end()) return hit->second;
        pins.push_back(f); // keeps every node id in the memo alive
        compute(f, memo);
        return memo.at(f.id());
    }

    // Trace production. Extensions come from the persistent memo; the walk
    // only decides which (subformula, world) pairs to record.
    void visit(const Formula& f, std::size_t w, std::vector<TraceEntry>& trace) {
        const Bits& bits = ext_persistent(f);
        bool here = bits.test(w);
        switch (f.kind()) {
        case Kind::Var:
            trace.push_back({f, m.worlds[w], TraceTag::Boolean, here});
            return;
        case Kind::Not:
            trace.push_back({f, m.worlds[w], TraceTag::Boolean, here});
            visit(f.child(), w, trace);
            return;
        case Kind::Implies:
            trace.push_back({f, m.worlds[w], TraceTag::Boolean, here});
            visit(f.lhs(), w, trace);
            visit(f.rhs(), w, trace);
            return;
        case Kind::Nec: {
            trace.push_back({f, m.worlds[w], TraceTag::Necessity, here});
            const Bits& c = ext_persistent(f.child());
            std::size_t at = here ? w : (~c).find_first();
            visit(f.child(), at == Bits::npos ? w : at, trace);
            return;
        }
        case Kind::Knows: {
            trace.push_back({f, m.worlds[w], TraceTag::Knowledge, here});
            const Bits& c = ext_persistent(f.child());
            std::size_t at = w;
            if (!here) {
                const auto& d = agent_data(f.agent());
                std::size_t blk = d.block_of[w];
                if (blk != kNoBlock) {
                    Bits refuting = d.blocks[blk] & ~c;
                    if (refuting.any()) at = refuting.find_first();
                }
            }
            visit(f.child(), at, trace);
            return;
        }
        case Kind::Happy:
        case Kind::Sad:
        case Kind::HappyDeg:
        case Kind::SadDeg: {
            const Bits& c = ext_persistent(f.child());
            const auto& d = agent_data(f.agent());
            bool cond_b = f.kind() == Kind::HappyDeg || f.kind() == Kind::SadDeg
                              ? order_holds_deg(f.kind(), f.agent(), f.degree(), c)
                              : order_holds(f.kind(), f.agent(), c);
            std::size_t blk = d.block_of[w];
            bool cond_a = blk != kNoBlock && d.blocks[blk].is_subset_of(c);
            TraceTag tag = TraceTag::CondC;
            if (!cond_a) tag = TraceTag::CondA;
            else if (!cond_b) tag = TraceTag::CondB;
            trace.push_back({f, m.worlds[w], tag, here});
            std::size_t at = w;
            if (!cond_a && blk != kNoBlock) {
                Bits refuting = d.blocks[blk] & ~c;
                if (refuting.any()) at = refuting.find_first();
            } else if (cond_a && !cond_b) {
                Bits refuting = ~c;
                if (refuting.any()) at = refuting.find_first();
            }
            visit(f.child(), at, trace);
            return;
        }
        }
    }
};

Evaluator::Evaluator(const EpistemicModel& m) : impl_(std::make_unique<Impl>(m)) {}
Evaluator::~Evaluator() = default;

const EpistemicModel& Evaluator::model() const { return impl_->m; }

const boost::dynamic_bitset<>& Evaluator::extension_bits(const Formula& f) {
    return impl_->ext_persistent(f);
}

boost::dynamic_bitset<> Evaluator::extension_value(const Formula& f) const {
    std::map<const void*, Bits> local;
    return impl_->compute(f, local);
}

bool Evaluator::holds(const std::string& world, const Formula& f) {
    return impl_->ext_persistent(f).test(impl_->world_index(world));
}

std::vector<std::string> Evaluator::extension(const Formula& f) {
    const Bits& bits = impl_->ext_persistent(f);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < impl_->n; ++i)
        if (bits.test(i)) out.push_back(impl_->m.worlds[i]);
    return out;
}

bool Evaluator::valid(const Formula& f) { return impl_->ext_persistent(f).all(); }

Verdict Evaluator::eval_traced(const std::string& world, const Formula& f) {
    std::size_t w = impl_->world_index(world);
    Verdict v;
    impl_->visit(f, w, v.trace);
    v.holds = v.trace.front().outcome;
    return v;
}

namespace {

Verdict eval_kind(const EpistemicModel& m, ModelKind expected, const char* label,
                  const std::string& world, const Formula& f, bool want_trace) {
    if (m.kind != expected)
        throw EvalError(std::string(label) + " evaluation needs a matching model kind");
    Evaluator ev(m);
    if (want_trace) return ev.eval_traced(world, f);
    Verdict v;
    v.holds = ev.holds(world, f);
    return v;
}

} // namespace

Verdict eval(const EpistemicModel& m, const std::string& world, const Formula& f,
             bool want_trace) {
    return eval_kind(m, ModelKind::Preference, "preference", world, f, want_trace);
}

Verdict eval_utility(const EpistemicModel& m, const std::string& world,
                     const Formula& f, bool want_trace) {
    return eval_kind(m, ModelKind::Utility, "utility", world, f, want_trace);
}

Verdict eval_goodness(const EpistemicModel& m, const std::string& world,
                      const Formula& f, bool want_trace) {
    return eval_kind(m, ModelKind::Goodness, "goodness", world, f, want_trace);
}

Verdict eval_any(const EpistemicModel& m, const std::string& world, const Formula& f,
                 bool want_trace) {
    return eval_kind(m, m.kind, "model", world, f, want_trace);
}

std::vector<std::string> extension(const EpistemicModel& m, const Formula& f) {
    Evaluator ev(m);
    return ev.extension(f);
}

bool valid_in_model(const EpistemicModel& m, const Formula& f) {
    Evaluator ev(m);
    return ev.valid(f);
}

} // namespace emolog
