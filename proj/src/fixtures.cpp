#include "emolog/fixtures.hpp"

#include "emolog/errors.hpp"

namespace emolog {

namespace {

EpistemicModel gift_model() {
    EpistemicModel m;
    m.kind = ModelKind::Preference;
    m.agents = {"s", "p"};
    m.vars = {"gift"};
    m.worlds = {"w", "u", "v", "t"};
    m.indist["s"] = {{"w"}, {"u", "v"}, {"t"}};
    m.indist["p"] = {{"w", "u"}, {"v", "t"}};
    auto order = close_preferences({{"v", "t"}, {"t", "w"}, {"t", "u"}});
    m.pref["s"] = order;
    m.pref["p"] = order;
    m.valuation["gift"] = {"w", "u"};
    return m;
}

EpistemicModel battle_util_model() {
    EpistemicModel m;
    m.kind = ModelKind::Utility;
    m.agents = {"s", "p"};
    m.vars = {"same", "diff", "rus_s", "rus_p", "rus"};
    m.worlds = {"(I,I)", "(I,R)", "(R,I)", "(R,R)"};
    for (const auto& a : m.agents) {
        std::vector<std::vector<std::string>> singletons;
        for (const auto& w : m.worlds) singletons.push_back({w});
        m.indist[a] = singletons;
    }
    m.utility["s"] = {{"(I,I)", Decimal(1)},
                      {"(I,R)", Decimal(0)},
                      {"(R,I)", Decimal(0)},
                      {"(R,R)", Decimal(3)}};
    m.utility["p"] = {{"(I,I)", Decimal(3)},
                      {"(I,R)", Decimal(0)},
                      {"(R,I)", Decimal(0)},
                      {"(R,R)", Decimal(1)}};
    m.valuation["same"] = {"(I,I)", "(R,R)"};
    m.valuation["diff"] = {"(I,R)", "(R,I)"};
    m.valuation["rus_s"] = {"(R,I)", "(R,R)"};
    m.valuation["rus_p"] = {"(I,R)", "(R,R)"};
    m.valuation["rus"] = {"(R,R)"};
    return m;
}

EpistemicModel battle_model() { return preferences_from_utilities(battle_util_model()); }

EpistemicModel battle_good_model(std::vector<std::string> good_s,
                                 std::vector<std::string> good_p) {
    auto base = battle_util_model();
    EpistemicModel m;
    m.kind = ModelKind::Goodness;
    m.agents = base.agents;
    m.vars = base.vars;
    m.worlds = base.worlds;
    m.indist = base.indist;
    m.valuation = base.valuation;
    m.good["s"] = std::move(good_s);
    m.good["p"] = std::move(good_p);
    return m;
}

EpistemicModel lottery_model() {
    EpistemicModel m;
    m.kind = ModelKind::Preference;
    m.agents = {"s", "p", "o"};
    m.vars = {"win_s", "lost_p"};
    m.worlds = {"u", "v", "w"};
    m.indist["s"] = {{"u"}, {"v", "w"}};
    m.indist["p"] = {{"w"}, {"u", "v"}};
    m.indist["o"] = {{"v"}, {"u", "w"}};
    m.pref["s"] = {{"v", "u"}, {"w", "u"}};
    m.pref["p"] = {{"u", "w"}, {"v", "w"}};
    m.pref["o"] = {{"u", "v"}, {"w", "v"}};
    m.valuation["win_s"] = {"u"};
    m.valuation["lost_p"] = {"u", "v"};
    return m;
}

EpistemicModel undef_model(bool with_order) {
    EpistemicModel m;
    m.kind = ModelKind::Preference;
    m.agents = {"a"};
    m.vars = {"p"};
    m.worlds = {"w1", "w2", "w3"};
    m.indist["a"] = {{"w1"}, {"w2", "w3"}};
    m.pref["a"] = with_order ? EdgeSet{{"w1", "w2"}, {"w3", "w2"}} : EdgeSet{};
    m.valuation["p"] = {"w1", "w3"};
    return m;
}

} // namespace

std::vector<FixtureInfo> fixture_list() {
    return {
        {"gift", "two co-authors and a mailed gift; four worlds, shared preferences"},
        {"battle", "two diners coordinating on a restaurant; preferences induced "
                   "from the payoff table"},
        {"battle-util", "the same coordination game with the raw payoffs kept"},
        {"lottery", "three ticket holders and exactly one winning world"},
        {"undef-left", "three worlds where sadness about p holds at w1"},
        {"undef-right", "the same frame with an empty preference order"},
        {"battle-good-broad", "the coordination game judged by good sets; both "
                              "coordinated outcomes count as good"},
        {"battle-good-strict", "the coordination game judged by good sets; each "
                               "diner counts only a favorite outcome as good"},
    };
}

bool is_fixture(const std::string& name) {
    for (const auto& info : fixture_list())
        if (info.name == name) return true;
    return false;
}

EpistemicModel fixture(const std::string& name) {
    if (name == "gift") return gift_model();
    if (name == "battle") return battle_model();
    if (name == "battle-util") return battle_util_model();
    if (name == "lottery") return lottery_model();
    if (name == "undef-left") return undef_model(true);
    if (name == "undef-right") return undef_model(false);
    if (name == "battle-good-broad")
        return battle_good_model({"(I,I)", "(R,R)"}, {"(I,I)", "(R,R)"});
    if (name == "battle-good-strict") return battle_good_model({"(R,R)"}, {"(I,I)"});
    throw Error("unknown fixture \"" + name + "\"");
}

} // namespace emolog
