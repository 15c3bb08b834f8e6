#include <doctest.h>

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "emolog/errors.hpp"
#include "emolog/formula.hpp"
#include "emolog/syntax.hpp"

using namespace emolog;

namespace {

Formula p() { return Formula::var("p"); }
Formula q() { return Formula::var("q"); }

// Formula count over a signature with nv vars and u unary constructors:
// depth 0 holds the vars, every deeper level adds one unary application or
// one implication whose deeper side sits exactly one level down.
std::size_t expected_count(std::size_t nv, std::size_t unary, std::size_t depth) {
    std::size_t c = nv;
    for (std::size_t d = 0; d < depth; ++d) c = nv + unary * c + c * c;
    return c;
}

std::size_t unary_ctors(std::size_t agents, Fragment frag) {
    std::size_t per_agent = 3; // K, H, S
    if (frag == Fragment::NoSad || frag == Fragment::NoHappy) per_agent = 2;
    if (frag == Fragment::NoEmotion) per_agent = 1;
    return 2 + per_agent * agents; // plus ! and N
}

} // namespace

TEST_CASE("sugar expands to primitives at construction") {
    auto a = p();
    auto b = q();
    CHECK(Formula::conj(a, b) == Formula::neg(Formula::implies(a, Formula::neg(b))));
    CHECK(Formula::disj(a, b) == Formula::implies(Formula::neg(a), b));
    CHECK(Formula::iff(a, b) ==
          Formula::conj(Formula::implies(a, b), Formula::implies(b, a)));
    CHECK(Formula::nbar(a) == Formula::neg(Formula::nec(Formula::neg(a))));
}

TEST_CASE("structural equality") {
    CHECK(p() == p());
    CHECK(p() != q());
    CHECK(Formula::knows("a", p()) == Formula::knows("a", p()));
    CHECK(Formula::knows("a", p()) != Formula::knows("b", p()));
    CHECK(Formula::happy("a", p()) != Formula::sad("a", p()));
    CHECK(Formula::happy_deg("a", Decimal::parse("1"), p()) ==
          Formula::happy_deg("a", Decimal::parse("1.0"), p()));
    CHECK(Formula::happy_deg("a", Decimal::parse("1"), p()) !=
          Formula::happy_deg("a", Decimal::parse("2"), p()));
    CHECK(Formula::happy("a", p()) != Formula::happy_deg("a", Decimal(0), p()));
}

TEST_CASE("metrics") {
    auto m0 = metrics(p());
    CHECK(m0.depth == 0);
    CHECK(m0.node_count == 1);
    CHECK(m0.agents_used.empty());
    CHECK(m0.vars_used == std::set<std::string>{"p"});

    auto m1 = metrics(Formula::happy("a", p()));
    CHECK(m1.depth == 1);
    CHECK(m1.node_count == 2);
    CHECK(m1.agents_used == std::set<std::string>{"a"});

    auto m2 = metrics(Formula::nec(Formula::implies(p(), p())));
    CHECK(m2.depth == 2);
    CHECK(m2.node_count == 4);
    CHECK(m2.vars_used == std::set<std::string>{"p"});

    auto m3 = metrics(Formula::implies(Formula::knows("a", p()),
                                       Formula::sad("b", q())));
    CHECK(m3.depth == 2);
    CHECK(m3.node_count == 5);
    CHECK(m3.agents_used == std::set<std::string>{"a", "b"});
    CHECK(m3.vars_used == std::set<std::string>{"p", "q"});
}

TEST_CASE("fragment membership") {
    auto h = Formula::happy("a", p());
    auto s = Formula::sad("a", p());
    CHECK(in_fragment(h, Fragment::Full));
    CHECK(in_fragment(h, Fragment::NoSad));
    CHECK_FALSE(in_fragment(h, Fragment::NoHappy));
    CHECK_FALSE(in_fragment(h, Fragment::NoEmotion));
    CHECK(in_fragment(s, Fragment::NoHappy));
    CHECK_FALSE(in_fragment(s, Fragment::NoSad));
    CHECK(in_fragment(Formula::knows("a", p()), Fragment::NoEmotion));
    // nesting counts
    CHECK_FALSE(in_fragment(Formula::knows("a", s), Fragment::NoSad));
    // degree-tagged modalities follow their emotion
    CHECK_FALSE(in_fragment(Formula::sad_deg("a", Decimal(1), p()), Fragment::NoSad));
    CHECK(in_fragment(Formula::happy_deg("a", Decimal(1), p()), Fragment::NoSad));
}

TEST_CASE("has_degree") {
    CHECK_FALSE(has_degree(Formula::happy("a", p())));
    CHECK(has_degree(Formula::happy_deg("a", Decimal(1), p())));
    CHECK(has_degree(Formula::neg(Formula::sad_deg("a", Decimal(0), p()))));
}

TEST_CASE("happy/sad swap") {
    CHECK(tau(Formula::happy("a", p())) == Formula::sad("a", p()));
    CHECK(tau(Formula::sad("a", p())) == Formula::happy("a", p()));
    CHECK(tau(Formula::implies(p(), p())) == Formula::implies(p(), p()));
    CHECK(tau(Formula::knows("a", Formula::sad("a", Formula::neg(p())))) ==
          Formula::knows("a", Formula::happy("a", Formula::neg(p()))));
    CHECK(tau(Formula::nec(p())) == Formula::nec(p()));
    CHECK_THROWS_AS(tau(Formula::happy_deg("a", Decimal(1), p())),
                    UnsupportedFormula);
}

TEST_CASE("swap is an involution preserving shape, over a full enumeration") {
    auto formulas = enumerate_formulas({"p"}, {"a"}, 3, Fragment::Full);
    for (const auto& f : formulas) {
        auto t = tau(f);
        CHECK(tau(t) == f);
        auto mf = metrics(f);
        auto mt = metrics(t);
        CHECK(mf.depth == mt.depth);
        CHECK(mf.node_count == mt.node_count);
        // the swap maps the sadness-free fragment onto the happiness-free one
        CHECK(in_fragment(f, Fragment::NoSad) == in_fragment(t, Fragment::NoHappy));
        CHECK(in_fragment(f, Fragment::NoHappy) == in_fragment(t, Fragment::NoSad));
    }
}

TEST_CASE("enumeration: depth 0 and depth 1 reference lists") {
    auto d0 = enumerate_formulas({"p"}, {"a"}, 0, Fragment::Full);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0] == p());

    auto d1 = enumerate_formulas({"p"}, {"a"}, 1, Fragment::Full);
    REQUIRE(d1.size() == 7);
    CHECK(d1[0] == p());
    CHECK(d1[1] == Formula::neg(p()));
    CHECK(d1[2] == Formula::implies(p(), p()));
    CHECK(d1[3] == Formula::nec(p()));
    CHECK(d1[4] == Formula::knows("a", p()));
    CHECK(d1[5] == Formula::happy("a", p()));
    CHECK(d1[6] == Formula::sad("a", p()));

    auto ns = enumerate_formulas({"p"}, {"a"}, 1, Fragment::NoSad);
    REQUIRE(ns.size() == 6);
    CHECK(ns[5] == Formula::happy("a", p()));

    auto nh = enumerate_formulas({"p"}, {"a"}, 1, Fragment::NoHappy);
    REQUIRE(nh.size() == 6);
    CHECK(nh[5] == Formula::sad("a", p()));

    auto ne = enumerate_formulas({"p"}, {"a"}, 1, Fragment::NoEmotion);
    CHECK(ne.size() == 5);
}

TEST_CASE("enumeration: agent and var slots follow signature order") {
    auto d1 = enumerate_formulas({"p", "q"}, {"a", "b"}, 1, Fragment::Full);
    // depth 0: p, q. then !p, !q, then the four implications in left-major
    // order, then N, then K/H/S with agent-major, child-minor order.
    REQUIRE(d1.size() == 2 + 2 + 4 + 2 + 3 * 4);
    CHECK(d1[0] == p());
    CHECK(d1[1] == q());
    CHECK(d1[2] == Formula::neg(p()));
    CHECK(d1[3] == Formula::neg(q()));
    CHECK(d1[4] == Formula::implies(p(), p()));
    CHECK(d1[5] == Formula::implies(p(), q()));
    CHECK(d1[6] == Formula::implies(q(), p()));
    CHECK(d1[7] == Formula::implies(q(), q()));
    CHECK(d1[8] == Formula::nec(p()));
    CHECK(d1[9] == Formula::nec(q()));
    CHECK(d1[10] == Formula::knows("a", p()));
    CHECK(d1[11] == Formula::knows("a", q()));
    CHECK(d1[12] == Formula::knows("b", p()));
    CHECK(d1[13] == Formula::knows("b", q()));
    CHECK(d1[14] == Formula::happy("a", p()));
    CHECK(d1[18] == Formula::sad("a", p()));
}

TEST_CASE("enumeration: counts match the closed recurrence") {
    struct Case {
        std::size_t nv, na, depth;
        Fragment frag;
    };
    for (const auto& c : {Case{1, 1, 2, Fragment::Full}, Case{1, 1, 3, Fragment::Full},
                          Case{1, 1, 3, Fragment::NoSad}, Case{2, 2, 2, Fragment::Full},
                          Case{1, 2, 2, Fragment::NoEmotion}}) {
        std::vector<std::string> vars(c.nv == 1 ? std::vector<std::string>{"p"}
                                                : std::vector<std::string>{"p", "q"});
        std::vector<std::string> agents(c.na == 1 ? std::vector<std::string>{"a"}
                                                  : std::vector<std::string>{"a", "b"});
        auto out = enumerate_formulas(vars, agents, c.depth, c.frag);
        CHECK(out.size() == expected_count(c.nv, unary_ctors(c.na, c.frag), c.depth));
    }
    // frozen spot values for the two sweep workhorses
    CHECK(enumerate_formulas({"p"}, {"a"}, 3, Fragment::Full).size() == 7651);
    CHECK(enumerate_formulas({"p"}, {"a"}, 3, Fragment::NoSad).size() == 3966);
}

TEST_CASE("enumeration: uniqueness, depth bound, fragment membership") {
    auto out = enumerate_formulas({"p", "q"}, {"a"}, 2, Fragment::NoSad);
    std::set<std::string> seen;
    std::size_t last_depth = 0;
    for (const auto& f : out) {
        auto m = metrics(f);
        CHECK(m.depth <= 2);
        CHECK(m.depth >= last_depth); // depth is the major sort key
        last_depth = m.depth;
        CHECK(in_fragment(f, Fragment::NoSad));
        CHECK_FALSE(has_degree(f));
        CHECK(seen.insert(print_formula(f)).second);
    }
}

TEST_CASE("streaming enumeration matches the vector form and stops early") {
    auto all = enumerate_formulas({"p"}, {"a"}, 2, Fragment::Full);
    std::vector<Formula> streamed;
    enumerate_formulas_stream({"p"}, {"a"}, 2, Fragment::Full,
                              [&](const Formula& f) {
                                  streamed.push_back(f);
                                  return true;
                              });
    REQUIRE(streamed.size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(streamed[i] == all[i]);

    std::size_t count = 0;
    enumerate_formulas_stream({"p"}, {"a"}, 2, Fragment::Full,
                              [&](const Formula&) { return ++count < 10; });
    CHECK(count == 10);
}
