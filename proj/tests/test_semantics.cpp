#include <doctest.h>

#include <string>
#include <vector>

#include "emolog/errors.hpp"
#include "emolog/fixtures.hpp"
#include "emolog/semantics.hpp"
#include "emolog/syntax.hpp"

using namespace emolog;

namespace {
using WorldList = std::vector<std::string>;

WorldList ext(const EpistemicModel& m, const std::string& f) {
    return extension(m, parse_formula(f));
}
} // namespace

TEST_CASE("gift: who is happy or sad about the gift, world by world") {
    auto g = fixture("gift");
    CHECK(ext(g, "gift") == WorldList{"w", "u"});
    CHECK(ext(g, "H[p] gift") == WorldList{"w", "u"});
    CHECK(ext(g, "H[s] gift") == WorldList{"w"});
    CHECK(ext(g, "H[s] H[p] gift") == WorldList{"w"});
    CHECK(ext(g, "H[p] H[s] gift") == WorldList{});
    CHECK(ext(g, "H[p] H[s] H[p] gift") == WorldList{});
    CHECK(ext(g, "S[s] !gift") == WorldList{"t"});
    CHECK(ext(g, "K[p] S[s] !gift") == WorldList{});
    CHECK(ext(g, "S[p] !gift") == WorldList{"v", "t"});
    CHECK(ext(g, "S[s] S[p] !gift") == WorldList{"t"});
    CHECK(ext(g, "K[p] S[s] S[p] !gift") == WorldList{});

    CHECK(eval(g, "u", parse_formula("H[p] gift")).holds);
    CHECK_FALSE(eval(g, "t", parse_formula("H[p] gift")).holds);
}

TEST_CASE("battle: emotions track the induced preferences") {
    auto b = fixture("battle");
    const WorldList diag{"(I,I)", "(R,R)"};
    const WorldList off{"(I,R)", "(R,I)"};

    CHECK_FALSE(eval(b, "(R,R)", parse_formula("H[p] rus_p")).holds);
    CHECK_FALSE(eval(b, "(R,R)", parse_formula("H[s] rus_s")).holds);

    CHECK(ext(b, "H[s] same") == diag);
    CHECK(ext(b, "H[p] same") == diag);
    CHECK(ext(b, "H[p] H[s] same") == diag);
    CHECK(ext(b, "H[s] H[p] H[s] same") == diag);

    CHECK(ext(b, "H[s] rus") == WorldList{"(R,R)"});
    CHECK_FALSE(eval(b, "(R,R)", parse_formula("H[p] rus")).holds);
    CHECK_FALSE(eval(b, "(R,R)", parse_formula("H[p] H[s] rus")).holds);

    CHECK(ext(b, "S[s] diff") == off);
    CHECK(ext(b, "S[p] diff") == off);
    CHECK(ext(b, "S[p] S[s] diff") == off);
}

TEST_CASE("lottery: knowing who won shapes the emotions") {
    auto l = fixture("lottery");
    CHECK(ext(l, "H[s] win_s") == WorldList{"u"});
    CHECK_FALSE(eval(l, "u", parse_formula("H[s] lost_p")).holds);
    CHECK_FALSE(eval(l, "u", parse_formula("K[p] H[s] win_s")).holds);
    CHECK(eval(l, "u", parse_formula("S[p] lost_p")).holds);
    CHECK(eval(l, "u", parse_formula("K[s] S[p] lost_p")).holds);
    CHECK(ext(l, "S[p] lost_p") == WorldList{"u", "v"});
}

TEST_CASE("the three-world pair splits on sadness only") {
    auto left = fixture("undef-left");
    auto right = fixture("undef-right");
    CHECK(eval(left, "w1", parse_formula("S[a] p")).holds);
    CHECK_FALSE(eval(right, "w1", parse_formula("S[a] p")).holds);
    CHECK(ext(left, "S[a] p") == WorldList{"w1"});
    CHECK(ext(right, "S[a] p") == WorldList{});
    // happiness is unsatisfiable in both
    for (const char* f : {"H[a] p", "H[a] !p", "H[a] N p", "H[a] K[a] p",
                          "H[a] S[a] p", "H[a] (p -> p)"}) {
        CHECK(ext(left, f) == WorldList{});
        CHECK(ext(right, f) == WorldList{});
    }
}

TEST_CASE("boolean, necessity and knowledge clauses") {
    auto g = fixture("gift");
    CHECK(eval(g, "w", parse_formula("gift")).holds);
    CHECK_FALSE(eval(g, "v", parse_formula("gift")).holds);
    CHECK(eval(g, "v", parse_formula("!gift")).holds);
    CHECK(eval(g, "v", parse_formula("gift -> gift")).holds);
    CHECK(eval(g, "w", parse_formula("N (gift | !gift)")).holds);
    CHECK_FALSE(eval(g, "w", parse_formula("N gift")).holds);
    // s tells w apart from everything, p does not tell w from u
    CHECK(eval(g, "w", parse_formula("K[s] gift")).holds);
    CHECK(eval(g, "w", parse_formula("K[p] gift")).holds);
    CHECK_FALSE(eval(g, "u", parse_formula("K[s] gift")).holds);
    CHECK(ext(g, "K[s] gift") == WorldList{"w"});
    CHECK(ext(g, "K[p] gift") == WorldList{"w", "u"});
}

TEST_CASE("emotions need a refuting world") {
    auto g = fixture("gift");
    // gift | !gift holds everywhere, so no emotion about it can hold
    CHECK(ext(g, "H[s] (gift | !gift)") == WorldList{});
    CHECK(ext(g, "S[s] (gift | !gift)") == WorldList{});
    // and nothing satisfies the contradiction, so the knowledge condition fails
    CHECK(ext(g, "H[s] (gift & !gift)") == WorldList{});
}

TEST_CASE("evaluation rejects out-of-model names and wrong semantics") {
    auto g = fixture("gift");
    CHECK_THROWS_AS(eval(g, "zzz", parse_formula("gift")), EvalError);
    CHECK_THROWS_AS(eval(g, "w", parse_formula("nope")), EvalError);
    CHECK_THROWS_AS(eval(g, "w", parse_formula("K[zzz] gift")), EvalError);
    CHECK_THROWS_AS(eval(g, "w", parse_formula("H[s;1] gift")), EvalError);
    // kind mismatches
    CHECK_THROWS_AS(eval(fixture("battle-util"), "(I,I)", parse_formula("same")),
                    EvalError);
    CHECK_THROWS_AS(eval_utility(g, "w", parse_formula("gift")), EvalError);
    CHECK_THROWS_AS(eval_goodness(g, "w", parse_formula("gift")), EvalError);
    // bare emotion under the degree semantics
    CHECK_THROWS_AS(eval_utility(fixture("battle-util"), "(I,I)",
                                 parse_formula("H[s] same")),
                    EvalError);
    // degree under the goodness semantics
    CHECK_THROWS_AS(eval_goodness(fixture("battle-good-broad"), "(I,I)",
                                  parse_formula("H[s;1] same")),
                    EvalError);
}

TEST_CASE("degree-tagged emotions on the payoff table") {
    auto u = fixture("battle-util");
    CHECK(eval_utility(u, "(I,I)", parse_formula("H[s;1] same")).holds);
    CHECK(eval_utility(u, "(R,R)", parse_formula("H[s;1] same")).holds);
    CHECK(eval_utility(u, "(R,R)", parse_formula("H[s;2] rus")).holds);
    CHECK_FALSE(eval_utility(u, "(R,R)", parse_formula("H[s;3] rus")).holds);
    CHECK(extension(u, parse_formula("H[s;1] same")) == WorldList{"(I,I)", "(R,R)"});
    // degree 0 asks for a weak gap only
    CHECK(eval_utility(u, "(R,R)", parse_formula("H[s;0] rus")).holds);
    // sadness mirrors: payoff of every satisfying world + d below every refuting one
    CHECK(eval_utility(u, "(I,R)", parse_formula("S[s;1] diff")).holds);
    CHECK_FALSE(eval_utility(u, "(I,R)", parse_formula("S[s;2] diff")).holds);
    // fractional degrees compare exactly
    CHECK(eval_utility(u, "(I,I)", parse_formula("H[s;0.5] same")).holds);
    CHECK(eval_any(u, "(I,I)", parse_formula("H[s;1] same")).holds);
}

TEST_CASE("goodness semantics on the broad and strict good sets") {
    auto broad = fixture("battle-good-broad");
    auto strict = fixture("battle-good-strict");
    CHECK(eval_goodness(broad, "(R,R)", parse_formula("H[s] same")).holds);
    CHECK_FALSE(eval_goodness(broad, "(R,R)", parse_formula("H[s] rus_s")).holds);
    CHECK(eval_goodness(strict, "(R,R)", parse_formula("H[s] same")).holds);
    CHECK(eval_goodness(strict, "(R,R)", parse_formula("H[s] rus_s")).holds);
    // sadness: the good worlds must all refute the formula
    CHECK(eval_goodness(strict, "(I,R)", parse_formula("S[s] diff")).holds);
    CHECK(eval_goodness(broad, "(I,R)", parse_formula("S[s] diff")).holds);
    CHECK_FALSE(eval_goodness(strict, "(R,R)", parse_formula("S[s] same")).holds);
    // knowledge condition still applies
    CHECK_FALSE(eval_goodness(strict, "(I,R)", parse_formula("H[s] same")).holds);
    CHECK(eval_goodness(strict, "(I,I)", parse_formula("H[s] same")).holds);
    CHECK(eval_goodness(strict, "(I,I)", parse_formula("H[p] same")).holds);
}

TEST_CASE("validity in a model") {
    auto g = fixture("gift");
    CHECK(valid_in_model(g, parse_formula("gift | !gift")));
    CHECK(valid_in_model(g, parse_formula("H[p] gift -> gift")));
    CHECK_FALSE(valid_in_model(g, parse_formula("gift")));
}

TEST_CASE("traces") {
    auto g = fixture("gift");

    auto quiet = eval(g, "w", parse_formula("H[p] gift"));
    CHECK(quiet.trace.empty());

    auto v = eval(g, "w", parse_formula("H[p] gift"), true);
    REQUIRE(!v.trace.empty());
    CHECK(v.holds);
    CHECK(v.trace.front().outcome == v.holds);
    CHECK(v.trace.front().world == "w");
    CHECK(v.trace.front().formula == parse_formula("H[p] gift"));

    // knowledge condition fails first: t's block contains v, which lacks the gift
    auto a = eval(g, "t", parse_formula("H[p] gift"), true);
    CHECK_FALSE(a.holds);
    CHECK(a.trace.front().tag == TraceTag::CondA);
    CHECK_FALSE(a.trace.front().outcome);

    // order condition fails first on the battle model
    auto b = fixture("battle");
    auto ob = eval(b, "(R,R)", parse_formula("H[p] rus_p"), true);
    CHECK_FALSE(ob.holds);
    CHECK(ob.trace.front().tag == TraceTag::CondB);

    // witness condition fails when the child holds everywhere
    auto oc = eval(g, "w", parse_formula("H[s] (gift | !gift)"), true);
    CHECK_FALSE(oc.holds);
    CHECK(oc.trace.front().tag == TraceTag::CondC);

    // non-emotional tags
    auto nk = eval(g, "u", parse_formula("K[s] gift"), true);
    CHECK(nk.trace.front().tag == TraceTag::Knowledge);
    CHECK_FALSE(nk.trace.front().outcome);
    auto nn = eval(g, "w", parse_formula("N gift"), true);
    CHECK(nn.trace.front().tag == TraceTag::Necessity);
    auto nb = eval(g, "w", parse_formula("gift"), true);
    CHECK(nb.trace.front().tag == TraceTag::Boolean);

    // every visited world is a real world; entries are nonempty formulas
    for (const auto& e : a.trace) {
        CHECK(g.world_exists(e.world));
        CHECK_FALSE(e.formula.empty());
    }
}

TEST_CASE("evaluator reuse matches one-shot evaluation") {
    auto g = fixture("gift");
    Evaluator ev(g);
    auto f1 = parse_formula("H[p] gift");
    auto f2 = parse_formula("S[p] !gift");
    CHECK(ev.extension(f1) == extension(g, f1));
    CHECK(ev.extension(f2) == extension(g, f2));
    CHECK(ev.holds("w", f1) == eval(g, "w", f1).holds);
    CHECK(ev.valid(parse_formula("gift | !gift")));
}
