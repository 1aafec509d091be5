#include "pcp/checker.hpp"

#include "pcp/errors.hpp"
#include "pcp/stateops.hpp"

namespace pcp {

namespace {

bool constraint_holds(const Constraint& c) {
    if (c.left.is_var() || c.right.is_var()) {
        throw Error(Errc::non_ground_constraint, "constraint '" + to_string(c) + "' is not ground");
    }
    const bool equal = c.left == c.right;
    return c.kind == Constraint::Kind::eq ? equal : !equal;
}

}  // namespace

NormResult norm_constraints(const std::vector<Constraint>& constraints) {
    for (const Constraint& c : constraints) {
        if (!constraint_holds(c)) return NormResult::bottom;
    }
    return NormResult::top;
}

std::optional<Constraint> first_violated_constraint(const std::vector<Constraint>& constraints) {
    for (const Constraint& c : constraints) {
        if (!constraint_holds(c)) return c;
    }
    return std::nullopt;
}

Instantiation instantiate(const Context& ctx, const ActionInstance& action) {
    const ActionSchema* schema = ctx.find_schema(action.name);
    if (schema == nullptr) {
        throw Error(Errc::unknown_action, "no schema named '" + action.name + "' in context");
    }
    if (schema->params.size() != action.args.size()) {
        throw Error(Errc::arity_mismatch,
                    "action '" + action.name + "' expects " +
                        std::to_string(schema->params.size()) + " argument(s), got " +
                        std::to_string(action.args.size()));
    }

    Substitution sigma;
    for (std::size_t i = 0; i < schema->params.size(); ++i) {
        sigma.bindings.emplace(schema->params[i], action.args[i]);
    }

    std::vector<Constraint> grounded;
    grounded.reserve(schema->constraints.size());
    for (const Constraint& c : schema->constraints) {
        grounded.push_back(substitute_constraint(c, sigma));
    }
    if (auto violated = first_violated_constraint(grounded)) {
        throw Error(Errc::constraint_violated,
                    "constraint '" + to_string(*violated) + "' of action '" + action.name +
                        "' normalises to bottom");
    }

    State pre = substitute_state(schema->pre, sigma);
    State post = substitute_state(schema->post, sigma);
    return Instantiation{std::move(sigma), std::move(pre), std::move(post)};
}

namespace {

// One pass of the checker. Issues accumulate in `report`; a rule whose
// premises cannot even be formed yields no judgement and the parent skips the
// side conditions that would need it.
struct CheckWalker {
    const Context& ctx;
    std::vector<CheckIssue>& issues;

    void flag(const std::string& rule, const std::string& path, const std::string& message) {
        issues.push_back(CheckIssue{rule, path, message});
    }

    void require_valid(const std::string& rule, const std::string& path, const char* which,
                       const State& s) {
        if (!is_valid_state(s)) {
            flag(rule, path, std::string(which) + " state " + to_string(s) + " is not valid");
        }
    }

    static bool is_action_level(const Derivation& d) {
        if (std::holds_alternative<Derivation::ApplyAction>(d.node)) return true;
        if (const auto* fr = std::get_if<Derivation::Frame>(&d.node)) {
            return is_action_level(*fr->inner);
        }
        return false;
    }

    std::optional<Judgement> walk(const Derivation& d, const std::string& path) {
        if (const auto* aa = std::get_if<Derivation::ApplyAction>(&d.node)) {
            try {
                Instantiation inst = instantiate(ctx, aa->action);
                return Judgement{std::move(inst.pre), std::move(inst.post),
                                 plan_act(aa->action)};
            } catch (const Error& e) {
                flag("ApplyAction", path, e.what());
                return std::nullopt;
            }
        }

        if (const auto* fr = std::get_if<Derivation::Frame>(&d.node)) {
            if (!is_action_level(*fr->inner)) {
                flag("Frame", path,
                     "frame over a non-action derivation; the rule applies at action level only");
            }
            auto inner = walk(*fr->inner, path + ".inner");
            if (!inner) return std::nullopt;
            Judgement out = *inner;
            bool ok = true;
            if (state_mentions_atom(out.pre, fr->map.atom)) {
                flag("Frame", path, "framed atom '" + to_string(fr->map.atom) +
                                        "' already mapped in precondition " + to_string(out.pre));
                ok = false;
            }
            if (state_mentions_atom(out.post, fr->map.atom)) {
                flag("Frame", path, "framed atom '" + to_string(fr->map.atom) +
                                        "' already mapped in postcondition " + to_string(out.post));
                ok = false;
            }
            if (ok) {
                out.pre.maps.push_back(fr->map);
                out.post.maps.push_back(fr->map);
            }
            return out;
        }

        if (const auto* wk = std::get_if<Derivation::Weakening>(&d.node)) {
            auto inner = walk(*wk->inner, path + ".inner");
            require_valid("Weakening", path, "new pre", wk->new_pre);
            if (!inner) return std::nullopt;
            // Premise P' <: P.
            if (auto res = subtype_check(wk->new_pre, inner->pre);
                const auto* fail = std::get_if<SubtypeFailure>(&res)) {
                flag("Weakening", path,
                     "new precondition " + to_string(wk->new_pre) + " is missing map '" +
                         to_string(fail->missing) + "' of the inner precondition");
            }
            return Judgement{wk->new_pre, inner->post, inner->plan};
        }

        if (const auto* sh = std::get_if<Derivation::Shrink>(&d.node)) {
            auto inner = walk(*sh->inner, path + ".inner");
            require_valid("Shrink", path, "new post", sh->new_post);
            if (!inner) return std::nullopt;
            // Premise Q <: Q'.
            if (auto res = subtype_check(inner->post, sh->new_post);
                const auto* fail = std::get_if<SubtypeFailure>(&res)) {
                flag("Shrink", path, "inner postcondition " + to_string(inner->post) +
                                         " is missing map '" + to_string(fail->missing) +
                                         "' of the shrunk state");
            }
            return Judgement{inner->pre, sh->new_post, plan_seq(inner->plan, plan_shrink())};
        }

        const auto& comp = std::get<Derivation::Composition>(d.node);
        auto left = walk(*comp.left, path + ".left");
        auto right = walk(*comp.right, path + ".right");
        if (!left || !right) return std::nullopt;
        // Premise Q <: Q' between the two plans.
        if (auto res = subtype_check(left->post, right->pre);
            const auto* fail = std::get_if<SubtypeFailure>(&res)) {
            flag("Composition", path,
                 "left postcondition " + to_string(left->post) + " is missing map '" +
                     to_string(fail->missing) + "' of the right precondition");
        }
        return Judgement{left->pre, right->post, plan_seq(left->plan, right->plan)};
    }
};

}  // namespace

CheckReport check_derivation(const Context& ctx, const Derivation& d) {
    CheckReport report;
    CheckWalker walker{ctx, report.issues};
    report.judgement = walker.walk(d, "$");
    if (report.judgement) {
        // The rules operate on valid states; the conclusion must be one too.
        if (!is_valid_state(report.judgement->pre)) {
            walker.flag("Conclusion", "$",
                        "precondition " + to_string(report.judgement->pre) + " is not valid");
        }
        if (!is_valid_state(report.judgement->post)) {
            walker.flag("Conclusion", "$",
                        "postcondition " + to_string(report.judgement->post) + " is not valid");
        }
    }
    return report;
}

}  // namespace pcp
