// Derivation trees for the five proof rules and the judgements they conclude.
#pragma once

#include <memory>
#include <variant>

#include "pcp/model.hpp"

namespace pcp {

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

struct Derivation {
    struct ApplyAction {
        ActionInstance action;  // ground; binds the schema params positionally
    };
    // Frame is only legal around a single action: its transitive inner
    // derivation must bottom out at one ApplyAction.
    struct Frame {
        FormulaMap map;
        DerivationPtr inner;
    };
    struct Weakening {
        State new_pre;
        DerivationPtr inner;
    };
    struct Shrink {
        State new_post;
        DerivationPtr inner;
    };
    struct Composition {
        DerivationPtr left;
        DerivationPtr right;
    };

    std::variant<ApplyAction, Frame, Weakening, Shrink, Composition> node;
};

DerivationPtr deriv_apply_action(ActionInstance action);
DerivationPtr deriv_frame(FormulaMap map, DerivationPtr inner);
DerivationPtr deriv_weakening(State new_pre, DerivationPtr inner);
DerivationPtr deriv_shrink(State new_post, DerivationPtr inner);
DerivationPtr deriv_composition(DerivationPtr left, DerivationPtr right);

bool derivations_equal(const Derivation& a, const Derivation& b);

struct Judgement {
    State pre;
    State post;
    PlanPtr plan;
};

// The plan a derivation concludes, reconstructed without checking.
PlanPtr derivation_plan(const Derivation& d);

}  // namespace pcp
