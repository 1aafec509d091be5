#include "pcp/semantics.hpp"

#include <utility>

#include "pcp/checker.hpp"
#include "pcp/errors.hpp"
#include "pcp/stateops.hpp"

namespace pcp {

bool satisfies(const World& w, Polarity z, const Formula& f) {
    if (const auto* conj = std::get_if<Formula::And>(&f.node)) {
        return satisfies(w, z, *conj->left) && satisfies(w, z, *conj->right);
    }
    if (const auto* neg = std::get_if<Formula::Neg>(&f.node)) {
        return negate(z) == Polarity::plus ? w.contains(neg->atom) : !w.contains(neg->atom);
    }
    const auto& pos = std::get<Formula::Pos>(f.node);
    return z == Polarity::plus ? w.contains(pos.atom) : !w.contains(pos.atom);
}

State normalize_formula(Polarity z, const Formula& f, State acc) {
    if (const auto* conj = std::get_if<Formula::And>(&f.node)) {
        return normalize_formula(z, *conj->right, normalize_formula(z, *conj->left, std::move(acc)));
    }
    if (const auto* neg = std::get_if<Formula::Neg>(&f.node)) {
        acc.maps.insert(acc.maps.begin(), FormulaMap{neg->atom, negate(z)});
        return acc;
    }
    const auto& pos = std::get<Formula::Pos>(f.node);
    acc.maps.insert(acc.maps.begin(), FormulaMap{pos.atom, z});
    return acc;
}

State normalize_formula(Polarity z, const Formula& f) {
    State result = normalize_formula(z, f, State{});
    for (std::size_t i = 0; i < result.maps.size(); ++i) {
        for (std::size_t j = i + 1; j < result.maps.size(); ++j) {
            if (result.maps[i].atom == result.maps[j].atom) {
                throw Error(Errc::contradictory_formula,
                            "atom '" + to_string(result.maps[i].atom) +
                                "' mapped more than once by normalisation");
            }
        }
    }
    return result;
}

ActionHandler canonical_handler(Context ctx) {
    return [ctx = std::move(ctx)](const ActionInstance& action, const World& w) -> World {
        Instantiation inst = instantiate(ctx, action);
        World out = w;
        for (const FormulaMap& m : inst.post.maps) {
            if (m.polarity == Polarity::minus) out.atoms.erase(m.atom);
        }
        for (const FormulaMap& m : inst.post.maps) {
            if (m.polarity == Polarity::plus) out.atoms.insert(m.atom);
        }
        return out;
    };
}

ActionHandler energy_handler(ActionHandler base, std::shared_ptr<EnergyMeter> meter) {
    return [base = std::move(base), meter = std::move(meter)](const ActionInstance& action,
                                                              const World& w) -> World {
        if (meter->remaining <= 0) {
            throw Error(Errc::out_of_energy,
                        "no energy left to apply action '" + to_string(action) + "'");
        }
        --meter->remaining;
        return base(action, w);
    };
}

namespace {

World evaluate_rec(const ActionHandler& handler, const Plan& plan, World w, int& position) {
    if (std::holds_alternative<Plan::Shrink>(plan.node)) {
        return w;
    }
    if (const auto* act = std::get_if<Plan::Act>(&plan.node)) {
        ++position;
        try {
            return handler(act->action, w);
        } catch (const Error& e) {
            throw Error(Errc::handler_failure, "action " + std::to_string(position) + " '" +
                                                   to_string(act->action) + "': " + e.what());
        }
    }
    const auto& seq = std::get<Plan::Seq>(plan.node);
    World mid = evaluate_rec(handler, *seq.left, std::move(w), position);
    return evaluate_rec(handler, *seq.right, std::move(mid), position);
}

}  // namespace

World evaluate_plan(const ActionHandler& handler, const Plan& plan, World w) {
    int position = 0;
    return evaluate_rec(handler, plan, std::move(w), position);
}

}  // namespace pcp
