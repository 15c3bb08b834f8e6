#include "emolog/axioms.hpp"

#include <functional>

#include "emolog/errors.hpp"
#include "emolog/fixtures.hpp"
#include "emolog/semantics.hpp"

namespace emolog {

namespace {

struct SchemaTraits {
    const char* name;
    int arity;
    bool emotion_slot;
    bool uses_agent;
};

const SchemaTraits& traits(SchemaFamily f) {
    static const SchemaTraits table[] = {
        {"truth-n", 1, false, false},
        {"truth-k", 1, false, true},
        {"truth-e", 1, true, true},
        {"distributivity-n", 2, false, false},
        {"distributivity-k", 2, false, true},
        {"neg-intro-n", 1, false, false},
        {"neg-intro-k", 1, false, true},
        {"knowledge-of-necessity", 1, false, true},
        {"emotional-introspection", 1, true, true},
        {"emotional-consistency", 1, false, true},
        {"coherence-same", 2, true, true},
        {"coherence-opposite", 2, false, true},
        {"counterfactual", 1, true, true},
        {"predictability-h", 1, false, true},
        {"predictability-s", 1, false, true},
        {"substitution", 2, true, true},
    };
    return table[static_cast<std::size_t>(f)];
}

Formula emotion_of(Emotion e, const std::string& agent, const Formula& f) {
    return e == Emotion::Happy ? Formula::happy(agent, f) : Formula::sad(agent, f);
}

} // namespace

std::vector<SchemaFamily> all_schema_families() {
    std::vector<SchemaFamily> out;
    for (int i = 0; i <= static_cast<int>(SchemaFamily::Substitution); ++i)
        out.push_back(static_cast<SchemaFamily>(i));
    return out;
}

std::string schema_name(SchemaFamily f) { return traits(f).name; }
int schema_arity(SchemaFamily f) { return traits(f).arity; }
bool schema_has_emotion_slot(SchemaFamily f) { return traits(f).emotion_slot; }
bool schema_uses_agent(SchemaFamily f) { return traits(f).uses_agent; }

Formula instantiate(const AxiomSchema& schema, const std::string& agent,
                    const Formula& f, const Formula& g) {
    const auto& t = traits(schema.family);
    if ((t.arity == 2) == g.empty())
        throw ArityMismatch(std::string(t.name) + " takes " + std::to_string(t.arity) +
                            " formula slot(s)");
    if (t.emotion_slot && !schema.emotion)
        throw Error(std::string(t.name) + " needs an emotion for its E slot");

    auto E = [&](const Formula& body) { return emotion_of(*schema.emotion, agent, body); };
    using F = Formula;
    switch (schema.family) {
    case SchemaFamily::TruthN:
        return F::implies(F::nec(f), f);
    case SchemaFamily::TruthK:
        return F::implies(F::knows(agent, f), f);
    case SchemaFamily::TruthE:
        return F::implies(E(f), f);
    case SchemaFamily::DistributivityN:
        return F::implies(F::nec(F::implies(f, g)),
                          F::implies(F::nec(f), F::nec(g)));
    case SchemaFamily::DistributivityK:
        return F::implies(F::knows(agent, F::implies(f, g)),
                          F::implies(F::knows(agent, f), F::knows(agent, g)));
    case SchemaFamily::NegIntroN:
        return F::implies(F::neg(F::nec(f)), F::nec(F::neg(F::nec(f))));
    case SchemaFamily::NegIntroK:
        return F::implies(F::neg(F::knows(agent, f)),
                          F::knows(agent, F::neg(F::knows(agent, f))));
    case SchemaFamily::KnowledgeOfNecessity:
        return F::implies(F::nec(f), F::knows(agent, f));
    case SchemaFamily::EmotionalIntrospection:
        return F::implies(E(f), F::knows(agent, E(f)));
    case SchemaFamily::EmotionalConsistency:
        return F::implies(F::happy(agent, f), F::neg(F::sad(agent, f)));
    case SchemaFamily::CoherenceSame:
        return F::implies(F::conj(F::nbar(E(f)), F::nbar(E(g))),
                          F::disj(F::nec(F::implies(f, g)),
                                  F::nec(F::implies(g, f))));
    case SchemaFamily::CoherenceOpposite:
        return F::implies(
            F::conj(F::nbar(F::happy(agent, f)), F::nbar(F::sad(agent, g))),
            F::disj(F::nec(F::implies(f, F::neg(g))),
                    F::nec(F::implies(F::neg(g), f))));
    case SchemaFamily::Counterfactual:
        return F::implies(E(f), F::neg(F::nec(f)));
    case SchemaFamily::PredictabilityH:
        return F::implies(
            F::disj(F::nbar(F::happy(agent, f)), F::nbar(F::sad(agent, F::neg(f)))),
            F::implies(F::knows(agent, f), F::happy(agent, f)));
    case SchemaFamily::PredictabilityS:
        return F::implies(
            F::disj(F::nbar(F::happy(agent, F::neg(f))), F::nbar(F::sad(agent, f))),
            F::implies(F::knows(agent, f), F::sad(agent, f)));
    case SchemaFamily::Substitution:
        return F::implies(F::nec(F::iff(f, g)), F::implies(E(f), E(g)));
    }
    throw Error("unreachable");
}

namespace {

// One sweepable shape: either a schema family or a derived fact.
struct Shape {
    std::string name;
    int arity;
    bool emotion_slot;
    bool uses_agent;
    std::function<Formula(std::optional<Emotion>, const std::string&, const Formula&,
                          const Formula&)>
        build;
};

std::vector<Shape> schema_shapes() {
    std::vector<Shape> out;
    for (auto family : all_schema_families()) {
        const auto& t = traits(family);
        out.push_back({t.name, t.arity, t.emotion_slot, t.uses_agent,
                       [family](std::optional<Emotion> e, const std::string& a,
                                const Formula& f, const Formula& g) {
                           return instantiate({family, e}, a, f, g);
                       }});
    }
    return out;
}

std::vector<Shape> derived_shapes() {
    return {
        {"emotion-entails-knowledge", 1, true, true,
         [](std::optional<Emotion> e, const std::string& a, const Formula& f,
            const Formula&) {
             return Formula::implies(emotion_of(*e, a, f), Formula::knows(a, f));
         }},
        {"necessity-iterates", 1, false, false,
         [](std::optional<Emotion>, const std::string&, const Formula& f,
            const Formula&) {
             return Formula::implies(Formula::nec(f), Formula::nec(Formula::nec(f)));
         }},
        {"knowledge-iterates", 1, false, true,
         [](std::optional<Emotion>, const std::string& a, const Formula& f,
            const Formula&) {
             return Formula::implies(Formula::knows(a, f),
                                     Formula::knows(a, Formula::knows(a, f)));
         }},
    };
}

SweepReport run_sweep(const EpistemicModel& m, const SweepOptions& opts,
                      const std::vector<Shape>& shapes) {
    SweepReport report;
    auto slots = enumerate_formulas(m.vars, m.agents, opts.max_depth, Fragment::Full);
    Evaluator ev(m);

    for (const auto& shape : shapes) {
        if (!opts.family_filter.empty() &&
            shape.name.find(opts.family_filter) == std::string::npos)
            continue;
        ++report.schemas_checked;
        std::size_t family_count = 0;
        bool truncated = false;

        std::vector<std::optional<Emotion>> emotions;
        if (shape.emotion_slot) {
            emotions = {Emotion::Happy, Emotion::Sad};
        } else {
            emotions = {std::nullopt};
        }
        std::vector<std::string> agent_slots =
            shape.uses_agent ? m.agents : std::vector<std::string>{""};

        auto check = [&](std::optional<Emotion> e, const std::string& agent,
                         const Formula& f, const Formula& g) {
            if (family_count >= opts.per_schema_cap) {
                truncated = true;
                return;
            }
            ++family_count;
            if (++report.instances_checked > opts.instance_cap)
                throw CapExceeded("axiom sweep exceeded its instance cap",
                                  report.instances_checked);
            Formula instance = shape.build(e, agent, f, g);
            auto bits = ev.extension_value(instance);
            if (bits.all()) return;
            SweepFailure fail;
            fail.schema = shape.name;
            fail.emotion = e;
            fail.agent = agent;
            fail.f = f;
            fail.g = g;
            fail.instance = instance;
            for (std::size_t i = 0; i < m.worlds.size(); ++i)
                if (!bits.test(i)) fail.worlds.push_back(m.worlds[i]);
            report.failures.push_back(std::move(fail));
        };

        for (const auto& e : emotions) {
            for (const auto& agent : agent_slots) {
                for (const auto& f : slots) {
                    if (truncated) break;
                    if (shape.arity == 1) {
                        check(e, agent, f, Formula());
                    } else {
                        for (const auto& g : slots) {
                            if (truncated) break;
                            check(e, agent, f, g);
                        }
                    }
                }
            }
        }
    }
    return report;
}

} // namespace

SweepReport soundness_sweep(const EpistemicModel& m, const SweepOptions& opts) {
    return run_sweep(m, opts, schema_shapes());
}

SweepReport derived_fact_sweep(const EpistemicModel& m, const SweepOptions& opts) {
    return run_sweep(m, opts, derived_shapes());
}

CoherenceCounterexample goodness_coherence_counterexample() {
    CoherenceCounterexample ce;
    ce.model = fixture("battle-good-strict");
    Formula f = Formula::var("rus_s");
    Formula g = Formula::var("same");
    ce.instance = instantiate({SchemaFamily::CoherenceSame, Emotion::Happy}, "s", f, g);

    // demonstration world: the agent is happy about both slot formulas there
    Evaluator ev(ce.model);
    auto both = ev.extension_value(Formula::happy("s", f));
    both &= ev.extension_value(Formula::happy("s", g));
    std::size_t at = both.find_first();
    ce.world = ce.model.worlds[at == boost::dynamic_bitset<>::npos ? 0 : at];
    return ce;
}

} // namespace emolog
