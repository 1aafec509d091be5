// Possible-world satisfaction, formula-to-state normalisation, action
// handlers and the plan evaluation function.
#pragma once

#include <functional>
#include <memory>

#include "pcp/model.hpp"

namespace pcp {

// w |=z F per the declarative interpretation: conjunction distributes over z,
// negation flips z, w |=+ A iff A in w, w |=- A iff A not in w.
bool satisfies(const World& w, Polarity z, const Formula& f);

// norm_z. Conjunction recurses left then right, atoms prepend onto the
// accumulator. The two-argument overload starts from emp and reports a
// contradictory result (e.g. from A and not A) as ContradictoryFormula.
State normalize_formula(Polarity z, const Formula& f, State acc);
State normalize_formula(Polarity z, const Formula& f);

// Total mapping from ground action and world to the next world; failures are
// thrown as Error (e.g. OutOfEnergy, or instantiation errors from the
// canonical handler).
using ActionHandler = std::function<World(const ActionInstance&, const World&)>;

// Applies the action's grounded postcondition to the world: deletions first
// (atoms mapped to -), then insertions (atoms mapped to +).
ActionHandler canonical_handler(Context ctx);

// Mutable per-run budget; do not share one meter across concurrent runs.
struct EnergyMeter {
    long remaining = 0;
};

// Decrements the meter once per action and delegates to `base`; applying an
// action at budget 0 throws OutOfEnergy.
ActionHandler energy_handler(ActionHandler base, std::shared_ptr<EnergyMeter> meter);

// Evaluates the plan: shrink returns the world unchanged, actions go through
// the handler, sequences evaluate left then right. A handler failure aborts
// with the failing action's position (1-based over the flattened plan).
World evaluate_plan(const ActionHandler& handler, const Plan& plan, World w);

}  // namespace pcp
