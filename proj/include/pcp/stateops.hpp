// Subtyping order on states, the override operator, state validity and
// well-formed-world membership.
#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "pcp/model.hpp"

namespace pcp {

// true iff all atoms of the state are pairwise distinct.
bool is_valid_state(const State& s);

// For each formula map of the supertype (right-hand state), the index at
// which it occurs in the subtype (left-hand state). Replaying the witness
// reconstructs a NilSub/ASub derivation.
struct SubtypeWitness {
    std::vector<std::size_t> indices;
};

struct SubtypeFailure {
    FormulaMap missing;  // first map of the right-hand state absent from the left
};

using SubtypeResult = std::variant<SubtypeWitness, SubtypeFailure>;

// Decides sub <: super: every formula map of `super` occurs (same atom, same
// polarity) somewhere in `sub`. Failure reports the first missing map of
// `super`, left to right.
SubtypeResult subtype_check(const State& sub, const State& super);

bool is_subtype(const State& sub, const State& super);

// Mutual subtyping; exposed for completeness, unused by the checker.
bool states_equal_by_subtyping(const State& a, const State& b);

// P with Q's maps overriding P's on atom conflicts. Follows the defining
// equations: each map of Q is prepended in turn, dropping any map of the
// accumulator on the same atom. Valid inputs give a valid result.
State override_state(const State& p, const State& q);

// Membership of w in <w_S>: every positively mapped atom of s is in w and no
// negatively mapped atom is.
bool wf_world_member(const World& w, const State& s);

}  // namespace pcp
