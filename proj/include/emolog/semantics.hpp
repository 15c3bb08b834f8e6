#ifndef EMOLOG_SEMANTICS_HPP
#define EMOLOG_SEMANTICS_HPP

#include <boost/dynamic_bitset.hpp>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "emolog/formula.hpp"
#include "emolog/model.hpp"

namespace emolog {

// ── Satisfaction ────────────────────────────────────────────────────────────
//
// Bool/N/K clauses are shared by all three model kinds. The emotion clauses
// each have three conditions; writing T for the set of worlds satisfying f
// and F for its complement (over the whole model, not just reachable
// worlds):
//
//   knowledge (a): f holds throughout the agent's block of w
//   order     (b): H: every F-world strictly below every T-world
//                  S: every T-world strictly below every F-world
//                  H[a;d]: payoff(v) + d <= payoff(v') for all v in F, v' in T
//                  S[a;d]: payoff(v) + d <= payoff(v') for all v in T, v' in F
//                  goodness H: every good world is in T
//                  goodness S: every good world is in F
//   witness   (c): F is nonempty
//
// (b) and (c) do not depend on the evaluation world; only (a) does.

enum class TraceTag : std::uint8_t {
    Boolean,   // Var, !, ->
    Necessity, // N
    Knowledge, // K
    CondA,     // emotion knowledge condition
    CondB,     // emotion order condition
    CondC,     // emotion witness condition
};

struct TraceEntry {
    Formula formula;
    std::string world;
    TraceTag tag;
    bool outcome;
};

struct Verdict {
    bool holds = false;
    std::vector<TraceEntry> trace; // filled only when requested
};

// Fast repeated evaluation against one model. Extensions are computed
// bottom-up, one bitset over the declared world order per distinct
// subformula, and memoized for the lifetime of the evaluator. Not thread
// safe; use one instance per thread.
class Evaluator {
public:
    explicit Evaluator(const EpistemicModel& m);
    ~Evaluator();
    Evaluator(const Evaluator&) = delete;
    Evaluator& operator=(const Evaluator&) = delete;

    const EpistemicModel& model() const;

    // Bit i corresponds to model().worlds[i]. The result is memoized and the
    // formula pinned for the evaluator's lifetime.
    const boost::dynamic_bitset<>& extension_bits(const Formula& f);

    // As extension_bits but with a per-call memo only; nothing is retained.
    // For sweeps over more formulas than it is sensible to pin.
    boost::dynamic_bitset<> extension_value(const Formula& f) const;

    bool holds(const std::string& world, const Formula& f);
    std::vector<std::string> extension(const Formula& f);
    bool valid(const Formula& f);

    // As holds(), plus one trace entry per visited (subformula, world).
    // Entries are pre-order; each child is visited at a deterministically
    // chosen relevant world (the first counterexample world in declared
    // order when the parent clause failed). For emotion nodes the tag names
    // the first failing condition, or the witness condition on success.
    // The first entry always matches the returned verdict.
    Verdict eval_traced(const std::string& world, const Formula& f);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// One-shot wrappers; each builds a throwaway Evaluator. The model kind must
// match the semantics asked for. Degree-tagged modalities are rejected
// outside utility semantics; bare H/S are rejected under it.
Verdict eval(const EpistemicModel& m, const std::string& world,
             const Formula& f, bool want_trace = false);
Verdict eval_utility(const EpistemicModel& m, const std::string& world,
                     const Formula& f, bool want_trace = false);
Verdict eval_goodness(const EpistemicModel& m, const std::string& world,
                      const Formula& f, bool want_trace = false);

// Dispatches on m.kind.
Verdict eval_any(const EpistemicModel& m, const std::string& world,
                 const Formula& f, bool want_trace = false);

// Worlds where f holds, in declared order.
std::vector<std::string> extension(const EpistemicModel& m, const Formula& f);

// True when f holds at every world.
bool valid_in_model(const EpistemicModel& m, const Formula& f);

} // namespace emolog

#endif
