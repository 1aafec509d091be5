#include "pcp/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "pcp/errors.hpp"

namespace pcp {

std::string normalize_identifier(const std::string& raw) {
    if (raw.empty()) {
        throw Error(Errc::parse_error, "empty identifier");
    }
    std::string out = raw;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

Term Term::var(const std::string& name) {
    return Term{Kind::variable, normalize_identifier(name)};
}

Term Term::constant(const std::string& name) {
    return Term{Kind::constant, normalize_identifier(name)};
}

bool Atom::ground() const {
    return std::all_of(args.begin(), args.end(),
                       [](const Term& t) { return t.is_const(); });
}

Atom make_atom(const std::string& predicate, std::vector<Term> args) {
    return Atom{normalize_identifier(predicate), std::move(args)};
}

Polarity negate(Polarity z) {
    return z == Polarity::plus ? Polarity::minus : Polarity::plus;
}

bool state_mentions_atom(const State& s, const Atom& a) {
    return std::any_of(s.maps.begin(), s.maps.end(),
                       [&](const FormulaMap& m) { return m.atom == a; });
}

std::optional<Polarity> state_polarity_of(const State& s, const Atom& a) {
    for (const FormulaMap& m : s.maps) {
        if (m.atom == a) return m.polarity;
    }
    return std::nullopt;
}

bool ActionInstance::ground() const {
    return std::all_of(args.begin(), args.end(),
                       [](const Term& t) { return t.is_const(); });
}

PlanPtr plan_shrink() {
    return std::make_shared<Plan>(Plan{Plan::Shrink{}});
}

PlanPtr plan_act(ActionInstance action) {
    return std::make_shared<Plan>(Plan{Plan::Act{std::move(action)}});
}

PlanPtr plan_seq(PlanPtr left, PlanPtr right) {
    return std::make_shared<Plan>(Plan{Plan::Seq{std::move(left), std::move(right)}});
}

namespace {

void flatten_into(const Plan& plan, std::vector<PlanStep>& out) {
    if (std::holds_alternative<Plan::Shrink>(plan.node)) {
        out.emplace_back(ShrinkStep{});
    } else if (const auto* act = std::get_if<Plan::Act>(&plan.node)) {
        out.emplace_back(act->action);
    } else {
        const auto& seq = std::get<Plan::Seq>(plan.node);
        flatten_into(*seq.left, out);
        flatten_into(*seq.right, out);
    }
}

}  // namespace

std::vector<PlanStep> flatten(const Plan& plan) {
    std::vector<PlanStep> out;
    flatten_into(plan, out);
    return out;
}

bool plans_equal(const Plan& a, const Plan& b) {
    return flatten(a) == flatten(b);
}

const ActionSchema* Context::find_schema(const std::string& name) const {
    for (const ActionSchema& s : schemas) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

std::optional<int> Context::predicate_arity(const std::string& name) const {
    for (const auto& [pred, arity] : predicates) {
        if (pred == name) return arity;
    }
    return std::nullopt;
}

const Term* Substitution::lookup(const std::string& var) const {
    auto it = bindings.find(var);
    return it == bindings.end() ? nullptr : &it->second;
}

FormulaPtr formula_pos(Atom atom) {
    return std::make_shared<Formula>(Formula{Formula::Pos{std::move(atom)}});
}

FormulaPtr formula_neg(Atom atom) {
    return std::make_shared<Formula>(Formula{Formula::Neg{std::move(atom)}});
}

FormulaPtr formula_and(FormulaPtr left, FormulaPtr right) {
    return std::make_shared<Formula>(Formula{Formula::And{std::move(left), std::move(right)}});
}

Term substitute_term(const Term& t, const Substitution& sigma) {
    if (t.is_const()) return t;
    const Term* bound = sigma.lookup(t.name);
    if (bound == nullptr) {
        throw Error(Errc::unbound_variable, "variable '" + t.name + "' has no binding");
    }
    return *bound;
}

Atom substitute_atom(const Atom& a, const Substitution& sigma) {
    Atom out;
    out.predicate = a.predicate;
    out.args.reserve(a.args.size());
    for (const Term& t : a.args) {
        out.args.push_back(substitute_term(t, sigma));
    }
    return out;
}

Constraint substitute_constraint(const Constraint& c, const Substitution& sigma) {
    return Constraint{c.kind, substitute_term(c.left, sigma), substitute_term(c.right, sigma)};
}

State substitute_state(const State& s, const Substitution& sigma) {
    // Duplicate ground atoms with equal polarity collapse to the first
    // occurrence; a +/- clash on the same atom is the inconsistency the
    // checker must surface rather than resolve.
    State out;
    out.maps.reserve(s.maps.size());
    for (const FormulaMap& m : s.maps) {
        FormulaMap ground{substitute_atom(m.atom, sigma), m.polarity};
        if (auto existing = state_polarity_of(out, ground.atom)) {
            if (*existing != ground.polarity) {
                throw Error(Errc::inconsistent_instantiation,
                            "atom '" + to_string(ground.atom) +
                                "' instantiated with both polarities");
            }
            continue;
        }
        out.maps.push_back(std::move(ground));
    }
    return out;
}

std::string to_string(const Term& t) {
    return t.is_var() ? "?" + t.name : t.name;
}

std::string to_string(const Atom& a) {
    std::string out = a.predicate;
    for (const Term& t : a.args) {
        out += ' ';
        out += to_string(t);
    }
    return out;
}

std::string to_string(Polarity z) {
    return z == Polarity::plus ? "+" : "-";
}

std::string to_string(const FormulaMap& m) {
    return to_string(m.atom) + " -> " + to_string(m.polarity);
}

std::string to_string(const State& s) {
    if (s.maps.empty()) return "emp";
    std::string out = "{";
    for (std::size_t i = 0; i < s.maps.size(); ++i) {
        if (i != 0) out += " * ";
        out += to_string(s.maps[i]);
    }
    out += "}";
    return out;
}

std::string to_string(const Constraint& c) {
    return to_string(c.left) + (c.kind == Constraint::Kind::eq ? " = " : " != ") +
           to_string(c.right);
}

std::string to_string(const ActionInstance& a) {
    std::string out = a.name;
    for (const Term& t : a.args) {
        out += ' ';
        out += to_string(t);
    }
    return out;
}

std::string to_string(const Plan& f) {
    if (std::holds_alternative<Plan::Shrink>(f.node)) return "shrink";
    if (const auto* act = std::get_if<Plan::Act>(&f.node)) {
        return "(" + to_string(act->action) + ")";
    }
    const auto& seq = std::get<Plan::Seq>(f.node);
    return to_string(*seq.left) + " ; " + to_string(*seq.right);
}

std::string to_string(const World& w) {
    std::string out = "{";
    bool first = true;
    for (const Atom& a : w.atoms) {
        if (!first) out += ", ";
        out += to_string(a);
        first = false;
    }
    out += "}";
    return out;
}

}  // namespace pcp
