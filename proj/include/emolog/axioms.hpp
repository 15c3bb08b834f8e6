#ifndef EMOLOG_AXIOMS_HPP
#define EMOLOG_AXIOMS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "emolog/formula.hpp"
#include "emolog/model.hpp"

namespace emolog {

// ── Axiom schemas ───────────────────────────────────────────────────────────
//
// Sixteen schema families. E marks a slot filled by either emotion.
//
//   truth-n                  N f -> f
//   truth-k                  K[a] f -> f
//   truth-e                  E[a] f -> f
//   distributivity-n         N (f -> g) -> (N f -> N g)
//   distributivity-k         K[a] (f -> g) -> (K[a] f -> K[a] g)
//   neg-intro-n              !N f -> N !N f
//   neg-intro-k              !K[a] f -> K[a] !K[a] f
//   knowledge-of-necessity   N f -> K[a] f
//   emotional-introspection  E[a] f -> K[a] E[a] f
//   emotional-consistency    H[a] f -> !S[a] f
//   coherence-same           Nbar E[a] f & Nbar E[a] g -> N (f -> g) | N (g -> f)
//   coherence-opposite       Nbar H[a] f & Nbar S[a] g -> N (f -> !g) | N (!g -> f)
//   counterfactual           E[a] f -> !N f
//   predictability-h         Nbar H[a] f | Nbar S[a] !f -> (K[a] f -> H[a] f)
//   predictability-s         Nbar H[a] !f | Nbar S[a] f -> (K[a] f -> S[a] f)
//   substitution             N (f <-> g) -> (E[a] f -> E[a] g)

enum class SchemaFamily : std::uint8_t {
    TruthN,
    TruthK,
    TruthE,
    DistributivityN,
    DistributivityK,
    NegIntroN,
    NegIntroK,
    KnowledgeOfNecessity,
    EmotionalIntrospection,
    EmotionalConsistency,
    CoherenceSame,
    CoherenceOpposite,
    Counterfactual,
    PredictabilityH,
    PredictabilityS,
    Substitution,
};

enum class Emotion : std::uint8_t { Happy, Sad };

struct AxiomSchema {
    SchemaFamily family;
    // Required iff the family has an E slot; ignored otherwise.
    std::optional<Emotion> emotion;
};

std::vector<SchemaFamily> all_schema_families();
std::string schema_name(SchemaFamily f);          // kebab-case as listed above
int schema_arity(SchemaFamily f);                 // formula slots, 1 or 2
bool schema_has_emotion_slot(SchemaFamily f);
bool schema_uses_agent(SchemaFamily f);

// Builds the schema instance with sugar already expanded. g is required
// exactly for two-slot families (ArityMismatch otherwise). Instances are
// degree-free and land in the Full fragment.
Formula instantiate(const AxiomSchema& schema, const std::string& agent,
                    const Formula& f, const Formula& g = Formula());

// ── Sweeps ──────────────────────────────────────────────────────────────────

struct SweepOptions {
    std::size_t max_depth = 1;           // slot formula enumeration depth
    std::size_t per_schema_cap = 20000;  // two-slot pairs truncate here,
                                         // deterministically (row major)
    std::size_t instance_cap = 2000000;  // total; CapExceeded beyond this
    std::string family_filter;           // substring match on schema_name
};

struct SweepFailure {
    std::string schema; // schema or derived-fact name
    std::optional<Emotion> emotion;
    std::string agent;  // empty when the shape has no agent slot
    Formula f, g;       // slot fillers (g empty for one-slot shapes)
    Formula instance;
    std::vector<std::string> worlds; // every world where it fails, declared order
};

struct SweepReport {
    std::size_t schemas_checked = 0;
    std::size_t instances_checked = 0;
    std::vector<SweepFailure> failures;
};

// Checks every schema instance over formulas enumerated from the model's own
// vars and agents. Works on preference and goodness models (EvalError on
// utility models, whose modalities need degrees). All sixteen families are
// expected to pass on valid preference models; coherence may fail on
// goodness models.
SweepReport soundness_sweep(const EpistemicModel& m, const SweepOptions& opts = {});

// Same mechanics for consequences of the schemas:
//
//   emotion-entails-knowledge   E[a] f -> K[a] f
//   necessity-iterates          N f -> N N f
//   knowledge-iterates          K[a] f -> K[a] K[a] f
SweepReport derived_fact_sweep(const EpistemicModel& m, const SweepOptions& opts = {});

// A concrete goodness model, coherence-same instance, and world where the
// instance fails. The same instance is valid on the preference battle model.
struct CoherenceCounterexample {
    EpistemicModel model; // the strict-good battle fixture
    Formula instance;
    std::string world;
};

CoherenceCounterexample goodness_coherence_counterexample();

} // namespace emolog

#endif
