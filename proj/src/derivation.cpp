#include "pcp/derivation.hpp"

namespace pcp {

DerivationPtr deriv_apply_action(ActionInstance action) {
    return std::make_shared<Derivation>(Derivation{Derivation::ApplyAction{std::move(action)}});
}

DerivationPtr deriv_frame(FormulaMap map, DerivationPtr inner) {
    return std::make_shared<Derivation>(Derivation{Derivation::Frame{std::move(map), std::move(inner)}});
}

DerivationPtr deriv_weakening(State new_pre, DerivationPtr inner) {
    return std::make_shared<Derivation>(
        Derivation{Derivation::Weakening{std::move(new_pre), std::move(inner)}});
}

DerivationPtr deriv_shrink(State new_post, DerivationPtr inner) {
    return std::make_shared<Derivation>(
        Derivation{Derivation::Shrink{std::move(new_post), std::move(inner)}});
}

DerivationPtr deriv_composition(DerivationPtr left, DerivationPtr right) {
    return std::make_shared<Derivation>(
        Derivation{Derivation::Composition{std::move(left), std::move(right)}});
}

bool derivations_equal(const Derivation& a, const Derivation& b) {
    if (a.node.index() != b.node.index()) return false;
    if (const auto* aa = std::get_if<Derivation::ApplyAction>(&a.node)) {
        return aa->action == std::get<Derivation::ApplyAction>(b.node).action;
    }
    if (const auto* fr = std::get_if<Derivation::Frame>(&a.node)) {
        const auto& other = std::get<Derivation::Frame>(b.node);
        return fr->map == other.map && derivations_equal(*fr->inner, *other.inner);
    }
    if (const auto* wk = std::get_if<Derivation::Weakening>(&a.node)) {
        const auto& other = std::get<Derivation::Weakening>(b.node);
        return wk->new_pre == other.new_pre && derivations_equal(*wk->inner, *other.inner);
    }
    if (const auto* sh = std::get_if<Derivation::Shrink>(&a.node)) {
        const auto& other = std::get<Derivation::Shrink>(b.node);
        return sh->new_post == other.new_post && derivations_equal(*sh->inner, *other.inner);
    }
    const auto& ca = std::get<Derivation::Composition>(a.node);
    const auto& cb = std::get<Derivation::Composition>(b.node);
    return derivations_equal(*ca.left, *cb.left) && derivations_equal(*ca.right, *cb.right);
}

PlanPtr derivation_plan(const Derivation& d) {
    if (const auto* aa = std::get_if<Derivation::ApplyAction>(&d.node)) {
        return plan_act(aa->action);
    }
    if (const auto* fr = std::get_if<Derivation::Frame>(&d.node)) {
        return derivation_plan(*fr->inner);
    }
    if (const auto* wk = std::get_if<Derivation::Weakening>(&d.node)) {
        return derivation_plan(*wk->inner);
    }
    if (const auto* sh = std::get_if<Derivation::Shrink>(&d.node)) {
        return plan_seq(derivation_plan(*sh->inner), plan_shrink());
    }
    const auto& comp = std::get<Derivation::Composition>(d.node);
    return plan_seq(derivation_plan(*comp.left), derivation_plan(*comp.right));
}

}  // namespace pcp
