#include "emolog/formula.hpp"

#include "emolog/errors.hpp"

namespace emolog {

struct Formula::Node {
    Kind kind;
    std::string label; // variable name or agent
    Decimal degree;
    Formula a; // unary child / implication left
    Formula b; // implication right
};

Formula Formula::var(std::string name) {
    Node n;
    n.kind = Kind::Var;
    n.label = std::move(name);
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::neg(Formula f) {
    Node n;
    n.kind = Kind::Not;
    n.a = std::move(f);
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
    Node n;
    n.kind = Kind::Implies;
    n.a = std::move(lhs);
    n.b = std::move(rhs);
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::nec(Formula f) {
    Node n;
    n.kind = Kind::Nec;
    n.a = std::move(f);
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::knows(std::string agent, Formula f) {
    Node n;
    n.kind = Kind::Knows;
    n.label = std::move(agent);
    n.a = std::move(f);
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::happy(std::string agent, Formula f) {
    Node n;
    n.kind = Kind::Happy;
    n.label = std::move(agent);
    n.a = std::move(f);
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::sad(std::string agent, Formula f) {
    Node n;
    n.kind = Kind::Sad;
    n.label = std::move(agent);
    n.a = std::move(f);
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::happy_deg(std::string agent, Decimal degree, Formula f) {
    Node n;
    n.kind = Kind::HappyDeg;
    n.label = std::move(agent);
    n.degree = degree;
    n.a = std::move(f);
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::sad_deg(std::string agent, Decimal degree, Formula f) {
    Node n;
    n.kind = Kind::SadDeg;
    n.label = std::move(agent);
    n.degree = degree;
    n.a = std::move(f);
    return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    return neg(implies(std::move(lhs), neg(std::move(rhs))));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
    return implies(neg(std::move(lhs)), std::move(rhs));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
    return conj(implies(lhs, rhs), implies(rhs, lhs));
}

Formula Formula::nbar(Formula f) { return neg(nec(neg(std::move(f)))); }

Kind Formula::kind() const {
    if (!node_) throw Error("kind() on an empty formula handle");
    return node_->kind;
}

const std::string& Formula::name() const {
    if (kind() != Kind::Var) throw Error("name() on a non-variable");
    return node_->label;
}

const std::string& Formula::agent() const {
    switch (kind()) {
    case Kind::Knows:
    case Kind::Happy:
    case Kind::Sad:
    case Kind::HappyDeg:
    case Kind::SadDeg:
        return node_->label;
    default:
        throw Error("agent() on a non-modal formula");
    }
}

const Decimal& Formula::degree() const {
    if (kind() != Kind::HappyDeg && kind() != Kind::SadDeg)
        throw Error("degree() on an untagged formula");
    return node_->degree;
}

const Formula& Formula::child() const {
    switch (kind()) {
    case Kind::Not:
    case Kind::Nec:
    case Kind::Knows:
    case Kind::Happy:
    case Kind::Sad:
    case Kind::HappyDeg:
    case Kind::SadDeg:
        return node_->a;
    default:
        throw Error("child() on a non-unary formula");
    }
}

const Formula& Formula::lhs() const {
    if (kind() != Kind::Implies) throw Error("lhs() on a non-implication");
    return node_->a;
}

const Formula& Formula::rhs() const {
    if (kind() != Kind::Implies) throw Error("rhs() on a non-implication");
    return node_->b;
}

bool Formula::operator==(const Formula& o) const {
    if (node_ == o.node_) return true;
    if (!node_ || !o.node_) return false;
    if (node_->kind != o.node_->kind) return false;
    switch (node_->kind) {
    case Kind::Var:
        return node_->label == o.node_->label;
    case Kind::Not:
    case Kind::Nec:
        return node_->a == o.node_->a;
    case Kind::Implies:
        return node_->a == o.node_->a && node_->b == o.node_->b;
    case Kind::Knows:
    case Kind::Happy:
    case Kind::Sad:
        return node_->label == o.node_->label && node_->a == o.node_->a;
    case Kind::HappyDeg:
    case Kind::SadDeg:
        return node_->label == o.node_->label && node_->degree == o.node_->degree &&
               node_->a == o.node_->a;
    }
    return false;
}

namespace {

void collect(const Formula& f, std::size_t depth, FormulaMetrics& m) {
    m.node_count += 1;
    if (depth > m.depth) m.depth = depth;
    switch (f.kind()) {
    case Kind::Var:
        m.vars_used.insert(f.name());
        return;
    case Kind::Implies:
        collect(f.lhs(), depth + 1, m);
        collect(f.rhs(), depth + 1, m);
        return;
    case Kind::Knows:
    case Kind::Happy:
    case Kind::Sad:
    case Kind::HappyDeg:
    case Kind::SadDeg:
        m.agents_used.insert(f.agent());
        collect(f.child(), depth + 1, m);
        return;
    case Kind::Not:
    case Kind::Nec:
        collect(f.child(), depth + 1, m);
        return;
    }
}

} // namespace

FormulaMetrics metrics(const Formula& f) {
    FormulaMetrics m;
    collect(f, 0, m);
    return m;
}

bool in_fragment(const Formula& f, Fragment frag) {
    switch (f.kind()) {
    case Kind::Var:
        return true;
    case Kind::Implies:
        return in_fragment(f.lhs(), frag) && in_fragment(f.rhs(), frag);
    case Kind::Happy:
    case Kind::HappyDeg:
        if (frag == Fragment::NoHappy || frag == Fragment::NoEmotion) return false;
        return in_fragment(f.child(), frag);
    case Kind::Sad:
    case Kind::SadDeg:
        if (frag == Fragment::NoSad || frag == Fragment::NoEmotion) return false;
        return in_fragment(f.child(), frag);
    default:
        return in_fragment(f.child(), frag);
    }
}

bool has_degree(const Formula& f) {
    switch (f.kind()) {
    case Kind::Var:
        return false;
    case Kind::HappyDeg:
    case Kind::SadDeg:
        return true;
    case Kind::Implies:
        return has_degree(f.lhs()) || has_degree(f.rhs());
    default:
        return has_degree(f.child());
    }
}

Formula tau(const Formula& f) {
    switch (f.kind()) {
    case Kind::Var:
        return f;
    case Kind::Not:
        return Formula::neg(tau(f.child()));
    case Kind::Implies:
        return Formula::implies(tau(f.lhs()), tau(f.rhs()));
    case Kind::Nec:
        return Formula::nec(tau(f.child()));
    case Kind::Knows:
        return Formula::knows(f.agent(), tau(f.child()));
    case Kind::Happy:
        return Formula::sad(f.agent(), tau(f.child()));
    case Kind::Sad:
        return Formula::happy(f.agent(), tau(f.child()));
    case Kind::HappyDeg:
    case Kind::SadDeg:
        throw UnsupportedFormula("happy/sad swap is undefined on degree-tagged modalities");
    }
    throw Error("unreachable");
}

namespace {

// Layered generator shared by both enumeration entry points. layers are
// keyed by exact depth; cumulative preserves the global enumeration order
// so implication operands can be walked left-major. The deepest layer is
// only retained when a further layer will need it.
bool generate(const std::vector<std::string>& vars,
              const std::vector<std::string>& agents, std::size_t max_depth,
              Fragment frag, const std::function<bool(const Formula&)>& fn) {
    std::vector<Formula> cumulative;
    std::vector<std::size_t> depth_of; // parallel to cumulative
    std::vector<Formula> current;

    for (const auto& v : vars) {
        current.push_back(Formula::var(v));
        if (!fn(current.back())) return false;
    }

    const bool with_happy = frag == Fragment::Full || frag == Fragment::NoSad;
    const bool with_sad = frag == Fragment::Full || frag == Fragment::NoHappy;

    for (std::size_t d = 0; d < max_depth; ++d) {
        std::size_t first_current = cumulative.size();
        for (auto& f : current) {
            cumulative.push_back(std::move(f));
            depth_of.push_back(d);
        }
        current.clear();
        const bool store = d + 1 < max_depth; // the last layer is emit-only
        auto emit = [&](Formula f) {
            if (!fn(f)) return false;
            if (store) current.push_back(std::move(f));
            return true;
        };
        for (std::size_t i = first_current; i < cumulative.size(); ++i)
            if (!emit(Formula::neg(cumulative[i]))) return false;
        for (std::size_t i = 0; i < cumulative.size(); ++i) {
            // at least one side must sit on the current depth frontier
            std::size_t jstart = depth_of[i] == d ? 0 : first_current;
            for (std::size_t j = jstart; j < cumulative.size(); ++j)
                if (!emit(Formula::implies(cumulative[i], cumulative[j])))
                    return false;
        }
        for (std::size_t i = first_current; i < cumulative.size(); ++i)
            if (!emit(Formula::nec(cumulative[i]))) return false;
        for (const auto& ag : agents)
            for (std::size_t i = first_current; i < cumulative.size(); ++i)
                if (!emit(Formula::knows(ag, cumulative[i]))) return false;
        if (with_happy)
            for (const auto& ag : agents)
                for (std::size_t i = first_current; i < cumulative.size(); ++i)
                    if (!emit(Formula::happy(ag, cumulative[i]))) return false;
        if (with_sad)
            for (const auto& ag : agents)
                for (std::size_t i = first_current; i < cumulative.size(); ++i)
                    if (!emit(Formula::sad(ag, cumulative[i]))) return false;
    }
    return true;
}

} // namespace

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& vars,
                                        const std::vector<std::string>& agents,
                                        std::size_t max_depth, Fragment frag) {
    std::vector<Formula> out;
    generate(vars, agents, max_depth, frag, [&](const Formula& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

void enumerate_formulas_stream(const std::vector<std::string>& vars,
                               const std::vector<std::string>& agents,
                               std::size_t max_depth, Fragment frag,
                               const std::function<bool(const Formula&)>& fn) {
    generate(vars, agents, max_depth, frag, fn);
}

} // namespace emolog
