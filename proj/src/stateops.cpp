#include "pcp/stateops.hpp"

#include <algorithm>

namespace pcp {

bool is_valid_state(const State& s) {
    for (std::size_t i = 0; i < s.maps.size(); ++i) {
        for (std::size_t j = i + 1; j < s.maps.size(); ++j) {
            if (s.maps[i].atom == s.maps[j].atom) return false;
        }
    }
    return true;
}

SubtypeResult subtype_check(const State& sub, const State& super) {
    SubtypeWitness witness;
    witness.indices.reserve(super.maps.size());
    for (const FormulaMap& wanted : super.maps) {
        bool found = false;
        for (std::size_t i = 0; i < sub.maps.size(); ++i) {
            if (sub.maps[i] == wanted) {
                witness.indices.push_back(i);
                found = true;
                break;
            }
        }
        if (!found) return SubtypeFailure{wanted};
    }
    return witness;
}

bool is_subtype(const State& sub, const State& super) {
    return std::holds_alternative<SubtypeWitness>(subtype_check(sub, super));
}

bool states_equal_by_subtyping(const State& a, const State& b) {
    return is_subtype(a, b) && is_subtype(b, a);
}

State override_state(const State& p, const State& q) {
    State acc = p;
    for (const FormulaMap& m : q.maps) {
        std::erase_if(acc.maps, [&](const FormulaMap& existing) { return existing.atom == m.atom; });
        acc.maps.insert(acc.maps.begin(), m);
    }
    return acc;
}

bool wf_world_member(const World& w, const State& s) {
    for (const FormulaMap& m : s.maps) {
        const bool present = w.contains(m.atom);
        if (m.polarity == Polarity::plus && !present) return false;
        if (m.polarity == Polarity::minus && present) return false;
    }
    return true;
}

}  // namespace pcp
