// Core vocabulary: terms, atoms, polarities, states, constraints, actions,
// plans, schemas, contexts, worlds and ground formulae.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace pcp {

// Identifiers are case-insensitive; we normalize to lower case on entry so
// domain, problem and plan files never disagree on spelling.
std::string normalize_identifier(const std::string& raw);

struct Term {
    enum class Kind { variable, constant };

    Kind kind = Kind::constant;
    std::string name;

    static Term var(const std::string& name);
    static Term constant(const std::string& name);

    bool is_var() const { return kind == Kind::variable; }
    bool is_const() const { return kind == Kind::constant; }

    bool operator==(const Term&) const = default;
    auto operator<=>(const Term&) const = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool ground() const;

    bool operator==(const Atom&) const = default;
    auto operator<=>(const Atom&) const = default;
};

Atom make_atom(const std::string& predicate, std::vector<Term> args = {});

enum class Polarity { plus, minus };

Polarity negate(Polarity z);

struct FormulaMap {
    Atom atom;
    Polarity polarity = Polarity::plus;

    bool operator==(const FormulaMap&) const = default;
};

// Ordered list of formula maps. Order is meaningful: it is preserved verbatim
// through parsing, translation and printing; the Weakening/Shrink rules exist
// to reorder. Validity (pairwise distinct atoms) is a separate check in
// stateops, never silently enforced here.
struct State {
    std::vector<FormulaMap> maps;

    bool empty() const { return maps.empty(); }
    std::size_t size() const { return maps.size(); }

    bool operator==(const State&) const = default;
};

bool state_mentions_atom(const State& s, const Atom& a);
std::optional<Polarity> state_polarity_of(const State& s, const Atom& a);

struct Constraint {
    enum class Kind { eq, neq };

    Kind kind = Kind::eq;
    Term left;
    Term right;

    bool operator==(const Constraint&) const = default;
};

struct ActionInstance {
    std::string name;
    std::vector<Term> args;

    bool ground() const;

    bool operator==(const ActionInstance&) const = default;
};

// Plan tree. `shrink` is a marker with no computational meaning; Seq is the
// binary sequencing node. Equality of plans is defined on flattened
// sequences, not on tree shape.
struct Plan;
using PlanPtr = std::shared_ptr<const Plan>;

struct Plan {
    struct Shrink {};
    struct Act {
        ActionInstance action;
    };
    struct Seq {
        PlanPtr left;
        PlanPtr right;
    };

    std::variant<Shrink, Act, Seq> node;
};

PlanPtr plan_shrink();
PlanPtr plan_act(ActionInstance action);
PlanPtr plan_seq(PlanPtr left, PlanPtr right);

struct ShrinkStep {
    bool operator==(const ShrinkStep&) const = default;
};
using PlanStep = std::variant<ShrinkStep, ActionInstance>;

// Left-to-right in-order traversal of Seq nodes; never empty.
std::vector<PlanStep> flatten(const Plan& plan);

bool plans_equal(const Plan& a, const Plan& b);

struct ActionSchema {
    std::string name;
    std::vector<std::string> params;
    std::vector<Constraint> constraints;
    State pre;
    State post;
};

struct Context {
    std::vector<ActionSchema> schemas;                // declaration order
    std::vector<std::pair<std::string, int>> predicates;  // name, arity
    std::set<std::string> constants;

    const ActionSchema* find_schema(const std::string& name) const;
    std::optional<int> predicate_arity(const std::string& name) const;
};

// Ground substitution: variable name -> constant term.
struct Substitution {
    std::map<std::string, Term> bindings;

    const Term* lookup(const std::string& var) const;
};

struct World {
    std::set<Atom> atoms;

    bool contains(const Atom& a) const { return atoms.count(a) != 0; }

    bool operator==(const World&) const = default;
};

// Ground PDDL formula: atoms, negated atoms and conjunction. Negation applies
// to atoms only, by construction.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    struct Pos {
        Atom atom;
    };
    struct Neg {
        Atom atom;
    };
    struct And {
        FormulaPtr left;
        FormulaPtr right;
    };

    std::variant<Pos, Neg, And> node;
};

FormulaPtr formula_pos(Atom atom);
FormulaPtr formula_neg(Atom atom);
FormulaPtr formula_and(FormulaPtr left, FormulaPtr right);

// Substitution application. substitute_state merges duplicate ground atoms of
// equal polarity and reports conflicting polarities as an inconsistency.
Term substitute_term(const Term& t, const Substitution& sigma);
Atom substitute_atom(const Atom& a, const Substitution& sigma);
Constraint substitute_constraint(const Constraint& c, const Substitution& sigma);
State substitute_state(const State& s, const Substitution& sigma);

// Rendering used by diagnostics and the CLI.
std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(Polarity z);
std::string to_string(const FormulaMap& m);
std::string to_string(const State& s);
std::string to_string(const Constraint& c);
std::string to_string(const ActionInstance& a);
std::string to_string(const Plan& f);
std::string to_string(const World& w);

}  // namespace pcp
