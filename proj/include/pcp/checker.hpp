// Constraint normalisation, action instantiation and the independent proof
// checker for the five rules.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcp/derivation.hpp"
#include "pcp/model.hpp"

namespace pcp {

enum class NormResult { top, bottom };

// Top iff every equality has syntactically equal sides and every inequality
// has syntactically distinct sides, scanning left to right. All terms must be
// ground (NonGroundConstraint otherwise).
NormResult norm_constraints(const std::vector<Constraint>& constraints);

// First constraint that normalises to bottom, in recursion order.
std::optional<Constraint> first_violated_constraint(const std::vector<Constraint>& constraints);

struct Instantiation {
    Substitution sigma;
    State pre;
    State post;
};

// Grounds the schema named by the action, binding params positionally.
// Throws UnknownAction, ArityMismatch, ConstraintViolated or
// InconsistentInstantiation.
Instantiation instantiate(const Context& ctx, const ActionInstance& action);

struct CheckIssue {
    std::string rule;     // offending rule name
    std::string path;     // tree path, e.g. "$.inner.left"
    std::string message;  // offending map/state and what failed
};

struct CheckReport {
    std::optional<Judgement> judgement;  // conclusion, when derivable
    std::vector<CheckIssue> issues;      // all violated side conditions

    bool accepted() const { return judgement.has_value() && issues.empty(); }
};

// Computes the conclusion judgement bottom-up and validates every side
// condition of every rule. Reports all violations rather than failing fast.
CheckReport check_derivation(const Context& ctx, const Derivation& d);

}  // namespace pcp
