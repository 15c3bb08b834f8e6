#ifndef EMOLOG_FORMULA_HPP
#define EMOLOG_FORMULA_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "emolog/decimal.hpp"

namespace emolog {

// ── Abstract syntax ─────────────────────────────────────────────────────────
//
// Primitive constructors only. Conjunction, disjunction, biconditional and
// the "possibly" dual of N are sugar and expand at construction time:
//
//   a & b    = !(a -> !b)
//   a | b    = !a -> b
//   a <-> b  = (a -> b) & (b -> a)
//   Nbar a   = !N !a
//
// Happy/Sad come in a plain form (preference and goodness models) and a
// degree-tagged form (utility models).

enum class Kind : std::uint8_t {
    Var,      // propositional variable
    Not,      // !f
    Implies,  // f -> g
    Nec,      // N f, truth at every world
    Knows,    // K[agent] f
    Happy,    // H[agent] f
    Sad,      // S[agent] f
    HappyDeg, // H[agent;degree] f
    SadDeg,   // S[agent;degree] f
};

enum class Fragment : std::uint8_t {
    Full,      // every constructor
    NoSad,     // no S / S-degree
    NoHappy,   // no H / H-degree
    NoEmotion, // neither
};

class Formula {
public:
    Formula() = default; // empty handle; only valid as a "no child" slot

    // Primitive constructors.
    static Formula var(std::string name);
    static Formula neg(Formula f);
    static Formula implies(Formula lhs, Formula rhs);
    static Formula nec(Formula f);
    static Formula knows(std::string agent, Formula f);
    static Formula happy(std::string agent, Formula f);
    static Formula sad(std::string agent, Formula f);
    static Formula happy_deg(std::string agent, Decimal degree, Formula f);
    static Formula sad_deg(std::string agent, Decimal degree, Formula f);

    // Sugar; returns the expanded primitive form.
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    static Formula iff(Formula lhs, Formula rhs);
    static Formula nbar(Formula f);

    bool empty() const { return node_ == nullptr; }
    Kind kind() const;

    const std::string& name() const;  // Var
    const std::string& agent() const; // Knows/Happy/Sad and degree forms
    const Decimal& degree() const;    // HappyDeg/SadDeg

    const Formula& child() const; // unary forms
    const Formula& lhs() const;   // Implies
    const Formula& rhs() const;   // Implies

    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }

    // Identity of the underlying node; stable key for memo tables.
    const void* id() const { return node_.get(); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct FormulaMetrics {
    std::size_t depth = 0;      // leaves have depth 0
    std::size_t node_count = 0; // total constructor applications
    std::set<std::string> agents_used;
    std::set<std::string> vars_used;
};

FormulaMetrics metrics(const Formula& f);

// True when every constructor in f is allowed by the fragment.
bool in_fragment(const Formula& f, Fragment frag);

// True when f contains a degree-tagged modality.
bool has_degree(const Formula& f);

// Happy/sad swap: homomorphic on everything else, exchanges H and S.
// An involution; preserves depth and node count; maps NoSad onto NoHappy.
// Throws UnsupportedFormula on degree-tagged modalities.
Formula tau(const Formula& f);

// ── Enumeration ─────────────────────────────────────────────────────────────
//
// Yields every fragment formula over the signature with depth <= max_depth,
// each exactly once. Order: ascending depth; within a depth, constructor
// order Var, Not, Implies, Nec, Knows, Happy, Sad; agent slots in signature
// order; child slots by the child's own enumeration index (for Implies the
// left index is the major key). Degree-tagged forms are never produced.

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& vars,
                                        const std::vector<std::string>& agents,
                                        std::size_t max_depth, Fragment frag);

// Streaming variant for depths whose formula count does not fit in memory.
// Stops early when the callback returns false.
void enumerate_formulas_stream(const std::vector<std::string>& vars,
                               const std::vector<std::string>& agents,
                               std::size_t max_depth, Fragment frag,
                               const std::function<bool(const Formula&)>& fn);

} // namespace emolog

#endif
