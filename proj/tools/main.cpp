// Command-line front end. Exit codes: 0 holds/ok/found, 1 fails/refuted/
// exhausted/distinguished, 2 usage or input error, 3 resource cap hit.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "emolog/axioms.hpp"
#include "emolog/errors.hpp"
#include "emolog/fixtures.hpp"
#include "emolog/formula.hpp"
#include "emolog/model.hpp"
#include "emolog/model_io.hpp"
#include "emolog/search.hpp"
#include "emolog/semantics.hpp"
#include "emolog/syntax.hpp"

using njson = nlohmann::ordered_json;
using namespace emolog;

namespace {

// Fixture names win over file paths.
EpistemicModel resolve_model(const std::string& ref) {
    if (is_fixture(ref)) return fixture(ref);
    std::ifstream in(ref);
    if (!in) throw Error("no fixture or readable file named '" + ref + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_model(ss.str());
}

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += " ";
        out += xs[i];
    }
    return out;
}

void emit(const std::string& text) { std::fputs(text.c_str(), stdout); }

void emit_json(const njson& doc) { emit(doc.dump(2) + "\n"); }

const char* tag_name(TraceTag t) {
    switch (t) {
    case TraceTag::Boolean: return "boolean";
    case TraceTag::Necessity: return "necessity";
    case TraceTag::Knowledge: return "knowledge";
    case TraceTag::CondA: return "emotion-knowledge";
    case TraceTag::CondB: return "emotion-order";
    case TraceTag::CondC: return "emotion-witness";
    }
    return "?";
}

Fragment parse_fragment(const std::string& name) {
    if (name == "full") return Fragment::Full;
    if (name == "no-sad") return Fragment::NoSad;
    if (name == "no-happy") return Fragment::NoHappy;
    if (name == "no-emotion") return Fragment::NoEmotion;
    throw Error("unknown fragment '" + name + "'");
}

njson model_json(const EpistemicModel& m) {
    return njson::parse(serialize_model(m));
}

// ── check ───────────────────────────────────────────────────────────────────

int run_check(const std::string& ref, const std::string& world,
              const std::string& text, const std::string& semantics,
              bool trace, bool json) {
    auto m = resolve_model(ref);
    auto f = parse_formula(text);
    // utility models carry an induced preference order, so forcing pref on
    // them works; every other kind mismatch is an input error
    if (semantics == "pref" && m.kind == ModelKind::Utility)
        m = preferences_from_utilities(m);
    Verdict v;
    if (semantics.empty()) v = eval_any(m, world, f, trace);
    else if (semantics == "pref") v = eval(m, world, f, trace);
    else if (semantics == "util") v = eval_utility(m, world, f, trace);
    else v = eval_goodness(m, world, f, trace);

    if (json) {
        njson doc;
        doc["formula"] = print_formula(f);
        doc["world"] = world;
        doc["holds"] = v.holds;
        if (trace) {
            doc["trace"] = njson::array();
            for (const auto& e : v.trace)
                doc["trace"].push_back({{"formula", print_formula(e.formula)},
                                        {"world", e.world},
                                        {"tag", tag_name(e.tag)},
                                        {"outcome", e.outcome}});
        }
        emit_json(doc);
    } else {
        emit(print_formula(f) + (v.holds ? " holds at " : " fails at ") + world + "\n");
        for (const auto& e : v.trace)
            emit("  " + std::string(tag_name(e.tag)) +
                 (e.outcome ? " holds: " : " fails: ") + print_formula(e.formula) +
                 " @ " + e.world + "\n");
    }
    return v.holds ? 0 : 1;
}

// ── extension ───────────────────────────────────────────────────────────────

int run_extension(const std::string& ref, const std::string& text, bool json) {
    auto m = resolve_model(ref);
    auto f = parse_formula(text);
    auto worlds = extension(m, f);
    if (json) {
        njson doc;
        doc["formula"] = print_formula(f);
        doc["worlds"] = worlds;
        emit_json(doc);
    } else {
        emit(join(worlds) + "\n");
    }
    return 0;
}

// ── validate ────────────────────────────────────────────────────────────────

int run_validate(const std::string& ref, bool json) {
    std::string problem;
    try {
        resolve_model(ref);
    } catch (const ValidationError& e) {
        problem = e.what();
    } catch (const CycleError& e) {
        problem = e.what();
    }
    if (json) {
        njson doc;
        doc["ok"] = problem.empty();
        if (!problem.empty()) doc["error"] = problem;
        emit_json(doc);
    } else {
        emit(problem.empty() ? "ok\n" : problem + "\n");
    }
    return problem.empty() ? 0 : 1;
}

// ── axioms ──────────────────────────────────────────────────────────────────

int run_axioms(const std::string& ref, std::size_t depth, const std::string& schema,
               std::size_t cap, bool derived, bool json) {
    auto m = resolve_model(ref);
    SweepOptions opts;
    opts.max_depth = depth;
    opts.instance_cap = cap;
    opts.family_filter = schema;
    auto report = derived ? derived_fact_sweep(m, opts) : soundness_sweep(m, opts);

    if (json) {
        njson doc;
        doc["schemas_checked"] = report.schemas_checked;
        doc["instances_checked"] = report.instances_checked;
        doc["failures"] = njson::array();
        for (const auto& fail : report.failures) {
            njson row;
            row["schema"] = fail.schema;
            row["emotion"] = fail.emotion
                                 ? njson(*fail.emotion == Emotion::Happy ? "H" : "S")
                                 : njson(nullptr);
            row["agent"] = fail.agent;
            row["f"] = print_formula(fail.f);
            row["g"] = fail.g.empty() ? njson(nullptr) : njson(print_formula(fail.g));
            row["instance"] = print_formula(fail.instance);
            row["worlds"] = fail.worlds;
            doc["failures"].push_back(std::move(row));
        }
        emit_json(doc);
    } else {
        emit(std::to_string(report.schemas_checked) + " schemas, " +
             std::to_string(report.instances_checked) + " instances: " +
             std::to_string(report.failures.size()) + " failures\n");
        const std::size_t shown = std::min<std::size_t>(report.failures.size(), 20);
        for (std::size_t i = 0; i < shown; ++i) {
            const auto& fail = report.failures[i];
            std::string line = fail.schema;
            if (fail.emotion) line += *fail.emotion == Emotion::Happy ? " H" : " S";
            if (!fail.agent.empty()) line += " agent=" + fail.agent;
            line += " f=" + print_formula(fail.f);
            if (!fail.g.empty()) line += " g=" + print_formula(fail.g);
            line += " fails at " + join(fail.worlds);
            emit(line + "\n");
        }
        if (shown < report.failures.size())
            emit("... " + std::to_string(report.failures.size() - shown) +
                 " more failures\n");
    }
    return report.failures.empty() ? 0 : 1;
}

// ── dual ────────────────────────────────────────────────────────────────────

int run_dual(const std::string& formula_text, const std::string& model_ref,
             bool json) {
    if (formula_text.empty() == model_ref.empty())
        throw Error("dual needs exactly one of --formula or --model");
    if (!formula_text.empty()) {
        auto f = parse_formula(formula_text);
        auto t = tau(f);
        if (json) {
            njson doc;
            doc["formula"] = print_formula(f);
            doc["dual"] = print_formula(t);
            emit_json(doc);
        } else {
            emit(print_formula(t) + "\n");
        }
        return 0;
    }
    auto m = resolve_model(model_ref);
    emit(serialize_model(converse(m)));
    return 0;
}

// ── search ──────────────────────────────────────────────────────────────────

int run_search_find(const std::string& target_text, SearchBounds bounds,
                    bool refute, bool json) {
    auto target = parse_formula(target_text);
    auto mode = refute ? SearchMode::Refute : SearchMode::Satisfy;
    auto out = find_model(target, mode, bounds);
    if (json) {
        njson doc;
        doc["found"] = out.found;
        doc["models_examined"] = out.models_examined;
        if (out.found) {
            doc["world"] = out.world;
            doc["model"] = model_json(out.model);
        }
        emit_json(doc);
    } else if (out.found) {
        emit("found: " + print_formula(target) +
             (refute ? " fails at " : " holds at ") + out.world + " after " +
             std::to_string(out.models_examined) + " models\n");
        emit(serialize_model(out.model));
    } else {
        emit("exhausted " + std::to_string(out.models_examined) +
             " models without a witness\n");
    }
    return out.found ? 0 : 1;
}

int run_search_equiv(const std::string& left_ref, const std::string& right_ref,
                     const std::string& fragment, std::size_t depth, bool json) {
    auto left = resolve_model(left_ref);
    auto right = resolve_model(right_ref);
    auto out = check_pair_equivalence(left, right, parse_fragment(fragment), depth);
    if (json) {
        njson doc;
        doc["equivalent"] = out.equivalent;
        doc["formulas_checked"] = out.formulas_checked;
        doc["distinguishing"] = out.equivalent
                                    ? njson(nullptr)
                                    : njson(print_formula(out.distinguishing));
        doc["world"] = out.equivalent ? njson(nullptr) : njson(out.world);
        emit_json(doc);
    } else if (out.equivalent) {
        emit("equivalent: " + std::to_string(out.formulas_checked) +
             " formulas agree\n");
    } else {
        emit("distinguished by " + print_formula(out.distinguishing) + " at " +
             out.world + " after " + std::to_string(out.formulas_checked) +
             " formulas\n");
    }
    return out.equivalent ? 0 : 1;
}

int run_search_separate(const std::string& target_text, const std::string& fragment,
                        SearchBounds bounds, bool json) {
    auto target = parse_formula(target_text);
    auto out = find_separating_pair(parse_fragment(fragment), target, bounds);
    if (json) {
        njson doc;
        doc["found"] = out.found;
        doc["pairs_examined"] = out.pairs_examined;
        doc["formulas_checked"] = out.formulas_checked;
        if (out.found) {
            doc["world"] = out.world;
            doc["left"] = model_json(out.left);
            doc["right"] = model_json(out.right);
        }
        emit_json(doc);
    } else if (out.found) {
        emit("separated: " + print_formula(target) + " differs at " + out.world +
             ", " + std::to_string(out.formulas_checked) +
             " fragment formulas agree\n");
        emit("left:\n" + serialize_model(out.left));
        emit("right:\n" + serialize_model(out.right));
    } else {
        emit("exhausted " + std::to_string(out.pairs_examined) +
             " pairs without a separating pair\n");
    }
    return out.found ? 0 : 1;
}

// ── fixtures ────────────────────────────────────────────────────────────────

int run_fixtures(bool json) {
    if (json) {
        njson doc = njson::array();
        for (const auto& info : fixture_list())
            doc.push_back({{"name", info.name}, {"description", info.description}});
        emit_json(doc);
    } else {
        for (const auto& info : fixture_list()) {
            char line[256];
            std::snprintf(line, sizeof line, "%-19s %s\n", info.name.c_str(),
                          info.description.c_str());
            emit(line);
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"model checking for a logic of knowledge, happiness and sadness"};
    app.require_subcommand(1);
    int rc = 0;

    // check MODEL WORLD FORMULA
    std::string chk_model, chk_world, chk_formula, chk_semantics;
    bool chk_trace = false, chk_json = false;
    auto* chk = app.add_subcommand("check", "truth of a formula at a world");
    chk->add_option("model", chk_model, "fixture name or model file")->required();
    chk->add_option("world", chk_world, "evaluation world")->required();
    chk->add_option("formula", chk_formula, "formula text")->required();
    chk->add_option("--semantics", chk_semantics, "force pref, util or good")
        ->check(CLI::IsMember({"pref", "util", "good"}));
    chk->add_flag("--trace", chk_trace, "print the evaluation trace");
    chk->add_flag("--json", chk_json, "machine-readable output");
    chk->callback([&] {
        rc = run_check(chk_model, chk_world, chk_formula, chk_semantics, chk_trace,
                       chk_json);
    });

    // extension MODEL FORMULA
    std::string ext_model, ext_formula;
    bool ext_json = false;
    auto* extc = app.add_subcommand("extension", "worlds where a formula holds");
    extc->add_option("model", ext_model, "fixture name or model file")->required();
    extc->add_option("formula", ext_formula, "formula text")->required();
    extc->add_flag("--json", ext_json, "machine-readable output");
    extc->callback([&] { rc = run_extension(ext_model, ext_formula, ext_json); });

    // validate MODEL
    std::string val_model;
    bool val_json = false;
    auto* val = app.add_subcommand("validate", "structural invariants of a model");
    val->add_option("model", val_model, "fixture name or model file")->required();
    val->add_flag("--json", val_json, "machine-readable output");
    val->callback([&] { rc = run_validate(val_model, val_json); });

    // axioms MODEL
    std::string ax_model, ax_schema;
    std::size_t ax_depth = 1, ax_cap = 2000000;
    bool ax_derived = false, ax_json = false;
    auto* ax = app.add_subcommand("axioms", "axiom schema sweep over a model");
    ax->add_option("model", ax_model, "fixture name or model file")->required();
    ax->add_option("--depth", ax_depth, "slot formula depth (default 1)");
    ax->add_option("--schema", ax_schema, "only families whose name contains this");
    ax->add_option("--cap", ax_cap, "stop after this many instances");
    ax->add_flag("--derived", ax_derived, "sweep derived facts instead of schemas");
    ax->add_flag("--json", ax_json, "machine-readable output");
    ax->callback([&] {
        rc = run_axioms(ax_model, ax_depth, ax_schema, ax_cap, ax_derived, ax_json);
    });

    // dual --formula TEXT | --model MODEL
    std::string dual_formula, dual_model;
    bool dual_json = false;
    auto* dual = app.add_subcommand("dual", "happy/sad swap or preference converse");
    dual->add_option("--formula", dual_formula, "formula to swap");
    dual->add_option("--model", dual_model, "model whose order to reverse");
    dual->add_flag("--json", dual_json, "machine-readable output");
    dual->callback([&] { rc = run_dual(dual_formula, dual_model, dual_json); });

    // search find|equiv|separate
    auto* search = app.add_subcommand("search", "bounded model search");
    search->require_subcommand(1);

    std::string sf_target, sf_fragment = "full";
    SearchBounds sf_bounds;
    bool sf_refute = false, sf_json = false, sf_raw = false;
    auto* sfind = search->add_subcommand("find", "first model deciding a formula");
    sfind->add_option("target", sf_target, "formula to satisfy")->required();
    sfind->add_flag("--refute", sf_refute, "look for a failing world instead");
    sfind->add_option("--max-worlds", sf_bounds.max_worlds, "largest world count");
    sfind->add_option("--agent", sf_bounds.agents, "signature agents (default a)");
    sfind->add_option("--var", sf_bounds.vars, "signature variables (default p)");
    sfind->add_option("--cap", sf_bounds.cap, "candidate cap");
    sfind->add_flag("--no-symmetry", sf_raw, "keep relabeled duplicates");
    sfind->add_flag("--json", sf_json, "machine-readable output");
    sfind->callback([&] {
        sf_bounds.symmetry_reduction = !sf_raw;
        rc = run_search_find(sf_target, sf_bounds, sf_refute, sf_json);
    });

    std::string se_left, se_right, se_fragment = "full";
    std::size_t se_depth = 3;
    bool se_json = false;
    auto* sequiv = search->add_subcommand("equiv", "fragment equivalence of two models");
    sequiv->add_option("left", se_left, "fixture name or model file")->required();
    sequiv->add_option("right", se_right, "fixture name or model file")->required();
    sequiv->add_option("--fragment", se_fragment, "full, no-sad, no-happy, no-emotion")
        ->check(CLI::IsMember({"full", "no-sad", "no-happy", "no-emotion"}));
    sequiv->add_option("--depth", se_depth, "formula depth bound (default 3)");
    sequiv->add_flag("--json", se_json, "machine-readable output");
    sequiv->callback(
        [&] { rc = run_search_equiv(se_left, se_right, se_fragment, se_depth, se_json); });

    std::string sp_target, sp_fragment;
    SearchBounds sp_bounds;
    bool sp_json = false;
    auto* ssep = search->add_subcommand(
        "separate", "model pair agreeing on a fragment, split by a target");
    ssep->add_option("--target", sp_target, "formula outside the fragment")->required();
    ssep->add_option("--fragment", sp_fragment, "full, no-sad, no-happy, no-emotion")
        ->required()
        ->check(CLI::IsMember({"full", "no-sad", "no-happy", "no-emotion"}));
    ssep->add_option("--max-worlds", sp_bounds.max_worlds, "largest world count");
    ssep->add_option("--depth", sp_bounds.max_formula_depth,
                     "fragment sweep depth (default 2)");
    ssep->add_option("--agent", sp_bounds.agents, "signature agents (default a)");
    ssep->add_option("--var", sp_bounds.vars, "signature variables (default p)");
    ssep->add_option("--cap", sp_bounds.cap, "candidate and pair cap");
    ssep->add_flag("--json", sp_json, "machine-readable output");
    ssep->callback(
        [&] { rc = run_search_separate(sp_target, sp_fragment, sp_bounds, sp_json); });

    // fixtures
    bool fx_json = false;
    auto* fx = app.add_subcommand("fixtures", "list the built-in models");
    fx->add_flag("--json", fx_json, "machine-readable output");
    fx->callback([&] { rc = run_fixtures(fx_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CapExceeded& e) {
        std::fprintf(stderr, "error: %s (%zu)\n", e.what(), e.count);
        return 3;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return rc;
}
