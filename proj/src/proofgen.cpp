#include "pcp/proofgen.hpp"

#include "pcp/checker.hpp"
#include "pcp/errors.hpp"
#include "pcp/stateops.hpp"

namespace pcp {

GenerationResult generate_derivation(const Context& ctx, const State& init, const State& goal,
                                     const std::vector<ActionInstance>& plan) {
    if (plan.empty()) {
        throw Error(Errc::empty_plan, "cannot generate a derivation for an empty plan");
    }
    if (!is_valid_state(init)) {
        throw Error(Errc::invalid_state, "initial state " + to_string(init) + " is not valid");
    }
    if (!is_valid_state(goal)) {
        throw Error(Errc::invalid_state, "goal state " + to_string(goal) + " is not valid");
    }
    for (const ActionInstance& action : plan) {
        if (!action.ground()) {
            throw Error(Errc::unbound_variable,
                        "plan action '" + to_string(action) + "' is not ground");
        }
    }

    GenerationResult result;
    State world = init;
    DerivationPtr chain;

    for (std::size_t i = 0; i < plan.size(); ++i) {
        const ActionInstance& action = plan[i];
        const std::string where = "action " + std::to_string(i + 1) + " ('" + to_string(action) + "')";

        Instantiation inst = instantiate(ctx, action);

        // Framing preserves exactly the maps the action does not touch; that
        // is only sound when every precondition atom reappears in the
        // postcondition, which effect augmentation guarantees.
        for (const FormulaMap& m : inst.pre.maps) {
            if (!state_mentions_atom(inst.post, m.atom)) {
                throw Error(Errc::precondition_unsatisfied,
                            where + ": precondition map '" + to_string(m) +
                                "' does not occur in the postcondition, so the frame rule cannot "
                                "preserve it (no proof found by this strategy)");
            }
        }

        ActionTrace trace;
        trace.action = action;
        trace.pre = inst.pre;
        trace.post = inst.post;
        trace.world_before = world;
        for (const FormulaMap& m : world.maps) {
            if (!state_mentions_atom(inst.post, m.atom)) trace.frames.push_back(m);
        }

        State required = inst.pre;
        for (const FormulaMap& m : trace.frames) required.maps.push_back(m);
        if (auto res = subtype_check(world, required);
            const auto* fail = std::get_if<SubtypeFailure>(&res)) {
            throw Error(Errc::precondition_unsatisfied,
                        where + ": running state " + to_string(world) + " is missing map '" +
                            to_string(fail->missing) + "'");
        }

        DerivationPtr node = deriv_apply_action(action);
        for (const FormulaMap& m : trace.frames) {
            node = deriv_frame(m, std::move(node));
        }

        world = inst.post;
        for (const FormulaMap& m : trace.frames) world.maps.push_back(m);
        trace.world_after = world;

        result.trace.actions.push_back(std::move(trace));
        result.trace.counts.apply_action += 1;
        result.trace.counts.frame += static_cast<int>(result.trace.actions.back().frames.size());
        if (chain) {
            chain = deriv_composition(std::move(chain), std::move(node));
            result.trace.counts.composition += 1;
        } else {
            chain = std::move(node);
        }
    }

    if (auto res = subtype_check(world, goal); const auto* fail = std::get_if<SubtypeFailure>(&res)) {
        throw Error(Errc::goal_not_reached, "final state " + to_string(world) +
                                                " is missing goal map '" + to_string(fail->missing) +
                                                "'");
    }
    chain = deriv_shrink(goal, std::move(chain));
    result.trace.counts.shrink = 1;
    chain = deriv_weakening(init, std::move(chain));
    result.trace.counts.weakening = 1;

    result.derivation = std::move(chain);
    return result;
}

RuleCounts count_rules(const Derivation& d) {
    RuleCounts counts;
    if (std::holds_alternative<Derivation::ApplyAction>(d.node)) {
        counts.apply_action = 1;
        return counts;
    }
    auto add = [&counts](const RuleCounts& other) {
        counts.apply_action += other.apply_action;
        counts.composition += other.composition;
        counts.weakening += other.weakening;
        counts.shrink += other.shrink;
        counts.frame += other.frame;
    };
    if (const auto* fr = std::get_if<Derivation::Frame>(&d.node)) {
        counts.frame = 1;
        add(count_rules(*fr->inner));
    } else if (const auto* wk = std::get_if<Derivation::Weakening>(&d.node)) {
        counts.weakening = 1;
        add(count_rules(*wk->inner));
    } else if (const auto* sh = std::get_if<Derivation::Shrink>(&d.node)) {
        counts.shrink = 1;
        add(count_rules(*sh->inner));
    } else {
        const auto& comp = std::get<Derivation::Composition>(d.node);
        counts.composition = 1;
        add(count_rules(*comp.left));
        add(count_rules(*comp.right));
    }
    return counts;
}

}  // namespace pcp
