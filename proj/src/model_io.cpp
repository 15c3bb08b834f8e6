#include "emolog/model_io.hpp"

#include <nlohmann/json.hpp>

#include "emolog/errors.hpp"

namespace emolog {

namespace {

using json = nlohmann::ordered_json;

const char* kind_name(ModelKind k) {
    switch (k) {
    case ModelKind::Preference:
        return "preference";
    case ModelKind::Utility:
        return "utility";
    case ModelKind::Goodness:
        return "goodness";
    }
    return "";
}

std::vector<std::string> string_list(const json& v) {
    return v.get<std::vector<std::string>>();
}

Decimal decimal_from(const json& v) {
    if (v.is_string()) return Decimal::parse(v.get<std::string>());
    if (v.is_number()) return Decimal::parse(v.dump());
    throw ParseError("utility values must be numbers or decimal strings");
}

EpistemicModel extract(const json& doc) {
    if (!doc.is_object()) throw ParseError("model file must be a JSON object");

    EpistemicModel m;
    std::string kind = doc.at("kind").get<std::string>();
    std::string payload_key;
    if (kind == "preference") {
        m.kind = ModelKind::Preference;
        payload_key = "pref";
    } else if (kind == "utility") {
        m.kind = ModelKind::Utility;
        payload_key = "utility";
    } else if (kind == "goodness") {
        m.kind = ModelKind::Goodness;
        payload_key = "good";
    } else {
        throw ParseError("unknown model kind \"" + kind + "\"");
    }

    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "kind" && key != "agents" && key != "vars" && key != "worlds" &&
            key != "indist" && key != "valuation" && key != payload_key)
            throw ParseError("unexpected key \"" + key + "\" in model file");
    }

    m.agents = string_list(doc.at("agents"));
    m.vars = string_list(doc.at("vars"));
    m.worlds = string_list(doc.at("worlds"));

    for (const auto& [agent, blocks] : doc.at("indist").items()) {
        std::vector<std::vector<std::string>> partition;
        for (const auto& block : blocks) partition.push_back(string_list(block));
        m.indist[agent] = std::move(partition);
    }

    const json& payload = doc.at(payload_key);
    if (m.kind == ModelKind::Preference) {
        for (const auto& [agent, edges] : payload.items()) {
            EdgeSet set;
            for (const auto& e : edges) {
                auto pair = string_list(e);
                if (pair.size() != 2)
                    throw ParseError("preference edges must be [lower, higher] pairs");
                set.insert({pair[0], pair[1]});
            }
            m.pref[agent] = std::move(set);
        }
    } else if (m.kind == ModelKind::Utility) {
        for (const auto& [agent, payoffs] : payload.items()) {
            std::map<std::string, Decimal> row;
            for (const auto& [world, value] : payoffs.items())
                row[world] = decimal_from(value);
            m.utility[agent] = std::move(row);
        }
    } else {
        for (const auto& [agent, worlds] : payload.items())
            m.good[agent] = string_list(worlds);
    }

    for (const auto& [var, worlds] : doc.at("valuation").items()) {
        auto list = string_list(worlds);
        m.valuation[var] = std::set<std::string>(list.begin(), list.end());
    }
    return m;
}

} // namespace

EpistemicModel load_model(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("model file is not valid JSON: ") + e.what());
    }

    EpistemicModel m;
    try {
        m = extract(doc);
    } catch (const Error&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed model file: ") + e.what());
    }

    if (m.kind == ModelKind::Preference)
        for (auto& [agent, edges] : m.pref) {
            (void)agent;
            edges = close_preferences(edges);
        }

    auto report = validate(m);
    if (!report.ok) {
        std::string msg = "model failed validation";
        if (!report.violations.empty())
            msg += ": " + report.violations.front().detail;
        throw ValidationError(msg);
    }
    return m;
}

std::string serialize_model(const EpistemicModel& m) {
    json doc;
    doc["kind"] = kind_name(m.kind);
    doc["agents"] = m.agents;
    doc["vars"] = m.vars;
    doc["worlds"] = m.worlds;

    json indist = json::object();
    for (const auto& [agent, blocks] : m.indist) indist[agent] = blocks;
    doc["indist"] = indist;

    if (m.kind == ModelKind::Preference) {
        json pref = json::object();
        for (const auto& [agent, edges] : m.pref) {
            json rows = json::array();
            for (const auto& [lo, hi] : edges) rows.push_back({lo, hi});
            pref[agent] = rows;
        }
        doc["pref"] = pref;
    } else if (m.kind == ModelKind::Utility) {
        json util = json::object();
        for (const auto& [agent, payoffs] : m.utility) {
            json row = json::object();
            for (const auto& [world, value] : payoffs) row[world] = value.str();
            util[agent] = row;
        }
        doc["utility"] = util;
    } else {
        json good = json::object();
        for (const auto& [agent, worlds] : m.good) good[agent] = worlds;
        doc["good"] = good;
    }

    json val = json::object();
    for (const auto& [var, worlds] : m.valuation)
        val[var] = std::vector<std::string>(worlds.begin(), worlds.end());
    doc["valuation"] = val;

    return doc.dump(2) + "\n";
}

} // namespace emolog
