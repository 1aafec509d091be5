// PDDL front end for the STRIPS subset: domain, problem and plan files, plus
// the translation into contexts and initial/goal states.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pcp/model.hpp"

namespace pcp {

// A precondition/effect/goal element: a possibly negated atom, or a possibly
// negated equality between two terms.
struct Literal {
    enum class Kind { atom, equality };

    Kind kind = Kind::atom;
    bool negated = false;
    Atom atom;   // kind == atom
    Term left;   // kind == equality
    Term right;

    bool operator==(const Literal&) const = default;
};

struct ActionAst {
    std::string name;
    std::vector<std::string> params;
    std::vector<Literal> precondition;
    std::vector<Literal> effect;

    bool operator==(const ActionAst&) const = default;
};

struct DomainAst {
    std::string name;
    std::vector<std::string> requirements;
    std::vector<std::pair<std::string, int>> predicates;
    std::vector<ActionAst> actions;

    bool operator==(const DomainAst&) const = default;
};

struct ProblemAst {
    std::string name;
    std::string domain_name;
    std::vector<std::string> objects;
    std::vector<Atom> init;
    std::vector<Literal> goal;

    bool operator==(const ProblemAst&) const = default;
};

// Supported requirement keywords; anything else is rejected at parse time.
bool requirement_supported(const std::string& keyword);

DomainAst parse_domain(std::string_view text);
ProblemAst parse_problem(std::string_view text);

// One action per line, `(name arg ...)`; an optional leading `N:` step index
// is ignored, `;` starts a comment. An empty plan is an error.
std::vector<ActionInstance> parse_plan(std::string_view text);

std::string print_domain(const DomainAst& domain);
std::string print_problem(const ProblemAst& problem);

struct TranslateOptions {
    // Append every precondition map whose atom is absent from the effect to
    // the postcondition. Disabling this is for tests only; generated proofs
    // rely on it.
    bool effect_augmentation = true;
};

Context translate_domain(const DomainAst& domain, const TranslateOptions& options = {});

struct ProblemTranslation {
    State init;
    State goal;
    std::vector<Literal> goal_literals;  // file order, for the goal formula
};

ProblemTranslation translate_problem(const ProblemAst& problem, const Context& ctx,
                                     bool closed_world);

// Conjunction of the goal literals, or null when the goal is empty.
FormulaPtr goal_formula(const std::vector<Literal>& goal_literals);

}  // namespace pcp
