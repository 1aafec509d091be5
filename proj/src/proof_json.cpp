#include "pcp/proof_json.hpp"

#include <json.hpp>

#include "pcp/errors.hpp"

namespace pcp {

namespace {

using Json = nlohmann::ordered_json;

Json term_to_json(const Term& t) {
    return t.is_var() ? "?" + t.name : t.name;
}

Json atom_to_json(const Atom& a) {
    Json args = Json::array();
    for (const Term& t : a.args) args.push_back(term_to_json(t));
    return Json{{"pred", a.predicate}, {"args", std::move(args)}};
}

Json map_to_json(const FormulaMap& m) {
    Json j = atom_to_json(m.atom);
    j["polarity"] = m.polarity == Polarity::plus ? "+" : "-";
    return j;
}

Json state_to_json(const State& s) {
    Json j = Json::array();
    for (const FormulaMap& m : s.maps) j.push_back(map_to_json(m));
    return j;
}

Json derivation_to_json(const Derivation& d) {
    if (const auto* aa = std::get_if<Derivation::ApplyAction>(&d.node)) {
        Json args = Json::array();
        for (const Term& t : aa->action.args) args.push_back(term_to_json(t));
        return Json{{"rule", "applyAction"}, {"action", aa->action.name}, {"args", std::move(args)}};
    }
    if (const auto* fr = std::get_if<Derivation::Frame>(&d.node)) {
        return Json{{"rule", "frame"},
                    {"map", map_to_json(fr->map)},
                    {"inner", derivation_to_json(*fr->inner)}};
    }
    if (const auto* wk = std::get_if<Derivation::Weakening>(&d.node)) {
        return Json{{"rule", "weakening"},
                    {"state", state_to_json(wk->new_pre)},
                    {"inner", derivation_to_json(*wk->inner)}};
    }
    if (const auto* sh = std::get_if<Derivation::Shrink>(&d.node)) {
        return Json{{"rule", "shrink"},
                    {"state", state_to_json(sh->new_post)},
                    {"inner", derivation_to_json(*sh->inner)}};
    }
    const auto& comp = std::get<Derivation::Composition>(d.node);
    return Json{{"rule", "composition"},
                {"left", derivation_to_json(*comp.left)},
                {"right", derivation_to_json(*comp.right)}};
}

[[noreturn]] void bad(const std::string& message) {
    throw Error(Errc::bad_proof_encoding, message);
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) bad("missing field '" + std::string(name) + "'");
    return *it;
}

std::string string_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_string()) bad("field '" + std::string(name) + "' must be a string");
    return v.get<std::string>();
}

Term term_from_json(const Json& j) {
    if (!j.is_string()) bad("terms must be strings");
    std::string text = j.get<std::string>();
    if (text.empty()) bad("empty term");
    if (text.front() == '?') {
        if (text.size() == 1) bad("'?' must be followed by a name");
        return Term::var(text.substr(1));
    }
    return Term::constant(text);
}

Atom atom_from_json(const Json& j) {
    if (!j.is_object()) bad("atoms must be objects");
    Atom atom;
    atom.predicate = normalize_identifier(string_field(j, "pred"));
    const Json& args = field(j, "args");
    if (!args.is_array()) bad("field 'args' must be an array");
    for (const Json& arg : args) atom.args.push_back(term_from_json(arg));
    return atom;
}

FormulaMap map_from_json(const Json& j) {
    FormulaMap m;
    m.atom = atom_from_json(j);
    std::string z = string_field(j, "polarity");
    if (z == "+") {
        m.polarity = Polarity::plus;
    } else if (z == "-") {
        m.polarity = Polarity::minus;
    } else {
        bad("polarity must be \"+\" or \"-\", got \"" + z + "\"");
    }
    return m;
}

State state_from_json(const Json& j) {
    if (!j.is_array()) bad("states must be arrays of formula maps");
    State s;
    for (const Json& item : j) s.maps.push_back(map_from_json(item));
    return s;
}

DerivationPtr derivation_from_json(const Json& j) {
    if (!j.is_object()) bad("derivation nodes must be objects");
    std::string rule = string_field(j, "rule");
    if (rule == "applyAction") {
        ActionInstance action;
        action.name = normalize_identifier(string_field(j, "action"));
        const Json& args = field(j, "args");
        if (!args.is_array()) bad("field 'args' must be an array");
        for (const Json& arg : args) action.args.push_back(term_from_json(arg));
        return deriv_apply_action(std::move(action));
    }
    if (rule == "frame") {
        return deriv_frame(map_from_json(field(j, "map")), derivation_from_json(field(j, "inner")));
    }
    if (rule == "weakening") {
        return deriv_weakening(state_from_json(field(j, "state")),
                               derivation_from_json(field(j, "inner")));
    }
    if (rule == "shrink") {
        return deriv_shrink(state_from_json(field(j, "state")),
                            derivation_from_json(field(j, "inner")));
    }
    if (rule == "composition") {
        return deriv_composition(derivation_from_json(field(j, "left")),
                                 derivation_from_json(field(j, "right")));
    }
    bad("unknown rule \"" + rule + "\"");
}

}  // namespace

std::string encode_derivation(const Derivation& d) {
    return derivation_to_json(d).dump();
}

DerivationPtr decode_derivation(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("malformed JSON");
    return derivation_from_json(j);
}

std::string encode_trace(const GenerationTrace& trace) {
    Json actions = Json::array();
    for (const ActionTrace& t : trace.actions) {
        Json args = Json::array();
        for (const Term& arg : t.action.args) args.push_back(term_to_json(arg));
        Json frames = Json::array();
        for (const FormulaMap& m : t.frames) frames.push_back(map_to_json(m));
        actions.push_back(Json{{"action", t.action.name},
                               {"args", std::move(args)},
                               {"pre", state_to_json(t.pre)},
                               {"post", state_to_json(t.post)},
                               {"frames", std::move(frames)},
                               {"worldBefore", state_to_json(t.world_before)},
                               {"worldAfter", state_to_json(t.world_after)}});
    }
    Json j{{"actions", std::move(actions)},
           {"ruleCounts",
            Json{{"applyAction", trace.counts.apply_action},
                 {"composition", trace.counts.composition},
                 {"weakening", trace.counts.weakening},
                 {"shrink", trace.counts.shrink},
                 {"frame", trace.counts.frame}}}};
    return j.dump();
}

std::string encode_translation(const Context& ctx, const ProblemTranslation* problem) {
    Json predicates = Json::array();
    for (const auto& [name, arity] : ctx.predicates) {
        predicates.push_back(Json{{"name", name}, {"arity", arity}});
    }
    Json schemas = Json::array();
    for (const ActionSchema& schema : ctx.schemas) {
        Json params = Json::array();
        for (const std::string& p : schema.params) params.push_back("?" + p);
        Json constraints = Json::array();
        for (const Constraint& c : schema.constraints) {
            constraints.push_back(Json{{"kind", c.kind == Constraint::Kind::eq ? "eq" : "neq"},
                                       {"left", term_to_json(c.left)},
                                       {"right", term_to_json(c.right)}});
        }
        schemas.push_back(Json{{"name", schema.name},
                               {"params", std::move(params)},
                               {"constraints", std::move(constraints)},
                               {"pre", state_to_json(schema.pre)},
                               {"post", state_to_json(schema.post)}});
    }
    Json j{{"context", Json{{"predicates", std::move(predicates)}, {"schemas", std::move(schemas)}}}};
    if (problem != nullptr) {
        j["problem"] = Json{{"init", state_to_json(problem->init)},
                            {"goal", state_to_json(problem->goal)}};
    }
    return j.dump();
}

}  // namespace pcp
