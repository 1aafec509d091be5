// Automatic proof construction: walks the plan forward from the initial
// state, framing every untouched map around each action, then closes the
// derivation with one Shrink to the goal and one outermost Weakening.
#pragma once

#include <vector>

#include "pcp/derivation.hpp"
#include "pcp/model.hpp"

namespace pcp {

struct ActionTrace {
    ActionInstance action;
    State pre;    // grounded schema precondition
    State post;   // grounded schema postcondition
    std::vector<FormulaMap> frames;  // in running-state order
    State world_before;
    State world_after;
};

struct RuleCounts {
    int apply_action = 0;
    int composition = 0;
    int weakening = 0;
    int shrink = 0;
    int frame = 0;

    bool operator==(const RuleCounts&) const = default;
};

struct GenerationTrace {
    std::vector<ActionTrace> actions;
    RuleCounts counts;
};

struct GenerationResult {
    DerivationPtr derivation;
    GenerationTrace trace;
};

// Throws PreconditionUnsatisfied, GoalNotReached, InvalidState or an
// instantiation error. A failure here means this strategy found no proof,
// not that the plan is invalid.
GenerationResult generate_derivation(const Context& ctx, const State& init, const State& goal,
                                     const std::vector<ActionInstance>& plan);

// Counts rule nodes of a derivation tree; test aid for the trace invariant.
RuleCounts count_rules(const Derivation& d);

}  // namespace pcp
