#include "pcp/pddl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pcp/errors.hpp"
#include "pcp/semantics.hpp"
#include "pcp/sexpr.hpp"

namespace pcp {

namespace {

[[noreturn]] void fail_at(const Sexpr& s, const std::string& message) {
    throw ParseError(s.line, s.column, message);
}

const std::string& expect_symbol(const Sexpr& s, const char* what) {
    if (!s.is_symbol()) fail_at(s, std::string("expected ") + what);
    return s.symbol();
}

const std::vector<Sexpr>& expect_list(const Sexpr& s, const char* what) {
    if (!s.is_list()) fail_at(s, std::string("expected ") + what);
    return s.items();
}

bool head_is(const Sexpr& s, const char* keyword) {
    return s.is_list() && !s.items().empty() && s.items().front().is_symbol() &&
           s.items().front().symbol() == keyword;
}

Term parse_term(const Sexpr& s, bool variables_allowed) {
    const std::string& sym = expect_symbol(s, "a term");
    if (!sym.empty() && sym.front() == '?') {
        if (!variables_allowed) fail_at(s, "variable '" + sym + "' not allowed here");
        if (sym.size() == 1) fail_at(s, "'?' must be followed by a name");
        return Term::var(sym.substr(1));
    }
    return Term::constant(sym);
}

Literal parse_literal(const Sexpr& s, bool variables_allowed) {
    const auto& items = expect_list(s, "a literal '(pred ...)', '(not ...)' or '(= t t)'");
    if (items.empty()) fail_at(s, "empty list where a literal was expected");
    const std::string& head = expect_symbol(items.front(), "a predicate, 'not' or '='");

    if (head == "not") {
        if (items.size() != 2) fail_at(s, "'not' takes exactly one argument");
        Literal inner = parse_literal(items[1], variables_allowed);
        if (inner.negated) fail_at(s, "nested 'not' is not allowed");
        inner.negated = true;
        return inner;
    }

    Literal lit;
    if (head == "=") {
        if (items.size() != 3) fail_at(s, "'=' takes exactly two terms");
        lit.kind = Literal::Kind::equality;
        lit.left = parse_term(items[1], variables_allowed);
        lit.right = parse_term(items[2], variables_allowed);
        return lit;
    }

    lit.kind = Literal::Kind::atom;
    lit.atom.predicate = normalize_identifier(head);
    for (std::size_t i = 1; i < items.size(); ++i) {
        lit.atom.args.push_back(parse_term(items[i], variables_allowed));
    }
    return lit;
}

// `(and L ...)` with nested conjunctions flattened; a bare literal is also
// accepted where a conjunction is expected.
void parse_condition(const Sexpr& s, bool variables_allowed, std::vector<Literal>& out) {
    if (head_is(s, "and")) {
        const auto& items = s.items();
        for (std::size_t i = 1; i < items.size(); ++i) {
            parse_condition(items[i], variables_allowed, out);
        }
        return;
    }
    out.push_back(parse_literal(s, variables_allowed));
}

std::pair<std::string, Sexpr> parse_define_header(std::string_view text, const char* kind) {
    Sexpr root = parse_single_sexpr(text);
    const auto& items = expect_list(root, "'(define ...)'");
    if (items.empty() || !items.front().is_symbol() || items.front().symbol() != "define") {
        fail_at(root, "expected '(define ...)'");
    }
    if (items.size() < 2) fail_at(root, std::string("expected '(") + kind + " name)'");
    const auto& header = expect_list(items[1], (std::string("'(") + kind + " name)'").c_str());
    if (header.size() != 2 || !header.front().is_symbol() || header.front().symbol() != kind) {
        fail_at(items[1], std::string("expected '(") + kind + " name)'");
    }
    return {normalize_identifier(expect_symbol(header[1], "a name")), std::move(root)};
}

ActionAst parse_action(const Sexpr& s) {
    const auto& items = s.items();
    if (items.size() < 2) fail_at(s, "expected '(:action name ...)'");

    ActionAst action;
    action.name = normalize_identifier(expect_symbol(items[1], "an action name"));

    std::size_t i = 2;
    std::set<std::string> seen_keywords;
    while (i < items.size()) {
        const std::string& keyword = expect_symbol(items[i], "':parameters', ':precondition' or ':effect'");
        if (!seen_keywords.insert(keyword).second) {
            fail_at(items[i], "duplicate '" + keyword + "' in action");
        }
        if (i + 1 >= items.size()) fail_at(items[i], "'" + keyword + "' is missing its argument");
        const Sexpr& value = items[i + 1];
        if (keyword == ":parameters") {
            for (const Sexpr& p : expect_list(value, "a parameter list")) {
                Term t = parse_term(p, true);
                if (!t.is_var()) fail_at(p, "parameters must be variables like '?x'");
                if (std::find(action.params.begin(), action.params.end(), t.name) !=
                    action.params.end()) {
                    fail_at(p, "duplicate parameter '?" + t.name + "'");
                }
                action.params.push_back(t.name);
            }
        } else if (keyword == ":precondition") {
            parse_condition(value, true, action.precondition);
        } else if (keyword == ":effect") {
            parse_condition(value, true, action.effect);
        } else {
            fail_at(items[i], "unknown action keyword '" + keyword +
                                  "', expected ':parameters', ':precondition' or ':effect'");
        }
        i += 2;
    }
    return action;
}

}  // namespace

bool requirement_supported(const std::string& keyword) {
    return keyword == ":strips" || keyword == ":equality" || keyword == ":negative-preconditions";
}

DomainAst parse_domain(std::string_view text) {
    auto [name, root] = parse_define_header(text, "domain");
    DomainAst domain;
    domain.name = name;

    const auto& items = root.items();
    for (std::size_t i = 2; i < items.size(); ++i) {
        const Sexpr& section = items[i];
        const auto& parts = expect_list(section, "a domain section like '(:predicates ...)'");
        if (parts.empty()) fail_at(section, "empty domain section");
        const std::string& keyword =
            expect_symbol(parts.front(), "':requirements', ':predicates' or ':action'");

        if (keyword == ":requirements") {
            for (std::size_t j = 1; j < parts.size(); ++j) {
                const std::string& req = expect_symbol(parts[j], "a requirement keyword");
                if (!requirement_supported(req)) {
                    throw Error(Errc::unsupported_requirement,
                                "'" + req + "' at line " + std::to_string(parts[j].line) +
                                    " (supported: :strips, :equality, :negative-preconditions)");
                }
                domain.requirements.push_back(req);
            }
        } else if (keyword == ":predicates") {
            for (std::size_t j = 1; j < parts.size(); ++j) {
                const auto& decl = expect_list(parts[j], "a predicate declaration '(name ?x ...)'");
                if (decl.empty()) fail_at(parts[j], "empty predicate declaration");
                std::string pred = normalize_identifier(expect_symbol(decl.front(), "a predicate name"));
                for (std::size_t k = 1; k < decl.size(); ++k) {
                    if (!parse_term(decl[k], true).is_var()) {
                        fail_at(decl[k], "predicate arguments must be variables like '?x'");
                    }
                }
                if (std::any_of(domain.predicates.begin(), domain.predicates.end(),
                                [&](const auto& p) { return p.first == pred; })) {
                    fail_at(parts[j], "duplicate predicate '" + pred + "'");
                }
                domain.predicates.emplace_back(std::move(pred), static_cast<int>(decl.size() - 1));
            }
        } else if (keyword == ":action") {
            ActionAst action = parse_action(section);
            if (std::any_of(domain.actions.begin(), domain.actions.end(),
                            [&](const ActionAst& a) { return a.name == action.name; })) {
                fail_at(section, "duplicate action '" + action.name + "'");
            }
            domain.actions.push_back(std::move(action));
        } else {
            fail_at(section, "unknown domain section '" + keyword +
                                 "', expected ':requirements', ':predicates' or ':action'");
        }
    }
    return domain;
}

ProblemAst parse_problem(std::string_view text) {
    auto [name, root] = parse_define_header(text, "problem");
    ProblemAst problem;
    problem.name = name;

    const auto& items = root.items();
    for (std::size_t i = 2; i < items.size(); ++i) {
        const Sexpr& section = items[i];
        const auto& parts = expect_list(section, "a problem section like '(:init ...)'");
        if (parts.empty()) fail_at(section, "empty problem section");
        const std::string& keyword =
            expect_symbol(parts.front(), "':domain', ':objects', ':init' or ':goal'");

        if (keyword == ":domain") {
            if (parts.size() != 2) fail_at(section, "':domain' takes exactly one name");
            problem.domain_name = normalize_identifier(expect_symbol(parts[1], "a domain name"));
        } else if (keyword == ":objects") {
            for (std::size_t j = 1; j < parts.size(); ++j) {
                Term t = parse_term(parts[j], false);
                if (std::find(problem.objects.begin(), problem.objects.end(), t.name) !=
                    problem.objects.end()) {
                    fail_at(parts[j], "duplicate object '" + t.name + "'");
                }
                problem.objects.push_back(t.name);
            }
        } else if (keyword == ":init") {
            for (std::size_t j = 1; j < parts.size(); ++j) {
                Literal lit = parse_literal(parts[j], false);
                if (lit.kind != Literal::Kind::atom || lit.negated) {
                    fail_at(parts[j], "':init' takes ground atoms only");
                }
                problem.init.push_back(std::move(lit.atom));
            }
        } else if (keyword == ":goal") {
            if (parts.size() != 2) fail_at(section, "':goal' takes exactly one formula");
            std::vector<Literal> literals;
            parse_condition(parts[1], false, literals);
            for (const Literal& lit : literals) {
                if (lit.kind == Literal::Kind::equality) {
                    fail_at(parts[1], "equality literals are not supported in goals");
                }
            }
            problem.goal = std::move(literals);
        } else {
            fail_at(section, "unknown problem section '" + keyword +
                                 "', expected ':domain', ':objects', ':init' or ':goal'");
        }
    }
    return problem;
}

std::vector<ActionInstance> parse_plan(std::string_view text) {
    std::vector<ActionInstance> actions;
    std::size_t line_start = 0;
    int line_number = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        std::string_view line = text.substr(
            line_start, line_end == std::string_view::npos ? std::string_view::npos
                                                           : line_end - line_start);
        ++line_number;

        if (auto comment = line.find(';'); comment != std::string_view::npos) {
            line = line.substr(0, comment);
        }
        std::string trimmed(line);
        std::erase(trimmed, '\r');
        std::size_t first = trimmed.find_first_not_of(" \t");
        if (first != std::string::npos) {
            trimmed = trimmed.substr(first);
            // Optional `N:` step index prefix.
            std::size_t digits = 0;
            while (digits < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[digits]))) {
                ++digits;
            }
            if (digits > 0 && digits < trimmed.size() && trimmed[digits] == ':') {
                trimmed = trimmed.substr(digits + 1);
            }

            if (trimmed.find_first_not_of(" \t") != std::string::npos) {
                Sexpr form = parse_single_sexpr(trimmed);
                const auto& items = expect_list(form, "a plan step '(action arg ...)'");
                if (items.empty()) fail_at(form, "empty plan step");
                ActionInstance action;
                action.name = normalize_identifier(expect_symbol(items.front(), "an action name"));
                for (std::size_t i = 1; i < items.size(); ++i) {
                    action.args.push_back(parse_term(items[i], false));
                }
                actions.push_back(std::move(action));
            }
        }

        if (line_end == std::string_view::npos) break;
        line_start = line_end + 1;
    }
    if (actions.empty()) {
        throw Error(Errc::empty_plan, "plan file contains no actions");
    }
    return actions;
}

namespace {

std::string term_text(const Term& t) {
    return t.is_var() ? "?" + t.name : t.name;
}

std::string literal_text(const Literal& lit) {
    std::string body;
    if (lit.kind == Literal::Kind::equality) {
        body = "(= " + term_text(lit.left) + " " + term_text(lit.right) + ")";
    } else {
        body = "(" + lit.atom.predicate;
        for (const Term& t : lit.atom.args) body += " " + term_text(t);
        body += ")";
    }
    return lit.negated ? "(not " + body + ")" : body;
}

std::string condition_text(const std::vector<Literal>& literals) {
    std::string out = "(and";
    for (const Literal& lit : literals) out += " " + literal_text(lit);
    out += ")";
    return out;
}

}  // namespace

std::string print_domain(const DomainAst& domain) {
    std::ostringstream out;
    out << "(define (domain " << domain.name << ")";
    if (!domain.requirements.empty()) {
        out << "\n  (:requirements";
        for (const std::string& req : domain.requirements) out << " " << req;
        out << ")";
    }
    if (!domain.predicates.empty()) {
        out << "\n  (:predicates";
        for (const auto& [pred, arity] : domain.predicates) {
            out << "\n    (" << pred;
            for (int i = 0; i < arity; ++i) out << " ?x" << i + 1;
            out << ")";
        }
        out << ")";
    }
    for (const ActionAst& action : domain.actions) {
        out << "\n  (:action " << action.name << "\n    :parameters (";
        for (std::size_t i = 0; i < action.params.size(); ++i) {
            if (i != 0) out << " ";
            out << "?" << action.params[i];
        }
        out << ")\n    :precondition " << condition_text(action.precondition)
            << "\n    :effect " << condition_text(action.effect) << ")";
    }
    out << ")\n";
    return out.str();
}

std::string print_problem(const ProblemAst& problem) {
    std::ostringstream out;
    out << "(define (problem " << problem.name << ")";
    if (!problem.domain_name.empty()) out << "\n  (:domain " << problem.domain_name << ")";
    if (!problem.objects.empty()) {
        out << "\n  (:objects";
        for (const std::string& obj : problem.objects) out << " " << obj;
        out << ")";
    }
    if (!problem.init.empty()) {
        out << "\n  (:init";
        for (const Atom& atom : problem.init) {
            out << "\n    (" << atom.predicate;
            for (const Term& t : atom.args) out << " " << term_text(t);
            out << ")";
        }
        out << ")";
    }
    if (!problem.goal.empty()) {
        out << "\n  (:goal " << condition_text(problem.goal) << ")";
    }
    out << ")\n";
    return out.str();
}

namespace {

void check_atom_against_context(const Atom& atom, const Context& ctx) {
    auto arity = ctx.predicate_arity(atom.predicate);
    if (!arity) {
        throw Error(Errc::unknown_predicate, "predicate '" + atom.predicate + "' is not declared");
    }
    if (*arity != static_cast<int>(atom.args.size())) {
        throw Error(Errc::arity_mismatch,
                    "predicate '" + atom.predicate + "' expects " + std::to_string(*arity) +
                        " argument(s), got " + std::to_string(atom.args.size()));
    }
}

void check_vars_in_params(const ActionAst& action, const std::vector<Term>& terms) {
    for (const Term& t : terms) {
        if (t.is_var() && std::find(action.params.begin(), action.params.end(), t.name) ==
                              action.params.end()) {
            throw Error(Errc::variable_not_in_params, "variable '?" + t.name +
                                                          "' of action '" + action.name +
                                                          "' is not a parameter");
        }
    }
}

void append_checked(State& state, FormulaMap map, const std::string& where) {
    if (state_mentions_atom(state, map.atom)) {
        throw Error(Errc::duplicate_atom,
                    "atom '" + to_string(map.atom) + "' mapped twice in " + where);
    }
    state.maps.push_back(std::move(map));
}

// Advances a row-major tuple odometer; false once every tuple has been seen.
bool advance_tuple(std::vector<std::size_t>& indices, std::size_t base) {
    for (std::size_t i = indices.size(); i-- > 0;) {
        if (++indices[i] < base) return true;
        indices[i] = 0;
    }
    return false;
}

}  // namespace

Context translate_domain(const DomainAst& domain, const TranslateOptions& options) {
    Context ctx;
    ctx.predicates = domain.predicates;

    for (const ActionAst& action : domain.actions) {
        ActionSchema schema;
        schema.name = action.name;
        schema.params = action.params;

        for (const Literal& lit : action.precondition) {
            if (lit.kind == Literal::Kind::equality) {
                check_vars_in_params(action, {lit.left, lit.right});
                schema.constraints.push_back(
                    Constraint{lit.negated ? Constraint::Kind::neq : Constraint::Kind::eq,
                               lit.left, lit.right});
                continue;
            }
            check_atom_against_context(lit.atom, ctx);
            check_vars_in_params(action, lit.atom.args);
            append_checked(schema.pre,
                           FormulaMap{lit.atom, lit.negated ? Polarity::minus : Polarity::plus},
                           "precondition of '" + action.name + "'");
        }

        for (const Literal& lit : action.effect) {
            if (lit.kind == Literal::Kind::equality) {
                throw Error(Errc::equality_in_effect,
                            "equality in effect of action '" + action.name + "'");
            }
            check_atom_against_context(lit.atom, ctx);
            check_vars_in_params(action, lit.atom.args);
            append_checked(schema.post,
                           FormulaMap{lit.atom, lit.negated ? Polarity::minus : Polarity::plus},
                           "effect of '" + action.name + "'");
        }

        if (options.effect_augmentation) {
            // The STRIPS assumption: a precondition atom the effect does not
            // mention is unchanged, so it is carried into the postcondition.
            for (const FormulaMap& m : schema.pre.maps) {
                if (!state_mentions_atom(schema.post, m.atom)) {
                    schema.post.maps.push_back(m);
                }
            }
        }

        ctx.schemas.push_back(std::move(schema));
    }
    return ctx;
}

ProblemTranslation translate_problem(const ProblemAst& problem, const Context& ctx,
                                     bool closed_world) {
    ProblemTranslation out;

    for (const Atom& atom : problem.init) {
        check_atom_against_context(atom, ctx);
        if (state_mentions_atom(out.init, atom)) continue;  // repeated :init fact
        out.init.maps.push_back(FormulaMap{atom, Polarity::plus});
    }

    if (closed_world) {
        // Every ground atom over the declared predicates and objects that is
        // not listed in :init is mapped to minus.
        std::vector<Term> objects;
        objects.reserve(problem.objects.size());
        for (const std::string& name : problem.objects) objects.push_back(Term::constant(name));

        for (const auto& [pred, arity] : ctx.predicates) {
            if (arity > 0 && objects.empty()) continue;
            std::vector<std::size_t> indices(static_cast<std::size_t>(arity), 0);
            do {
                Atom atom;
                atom.predicate = pred;
                for (std::size_t idx : indices) atom.args.push_back(objects[idx]);
                if (!state_mentions_atom(out.init, atom)) {
                    out.init.maps.push_back(FormulaMap{std::move(atom), Polarity::minus});
                }
            } while (advance_tuple(indices, objects.size()));
        }
    }

    for (const Literal& lit : problem.goal) {
        check_atom_against_context(lit.atom, ctx);
    }
    out.goal_literals = problem.goal;

    if (!problem.goal.empty()) {
        // Normalisation conses maps onto the front, so feed the literals in
        // reverse to keep the goal state in file order.
        FormulaPtr conj;
        for (auto it = problem.goal.rbegin(); it != problem.goal.rend(); ++it) {
            FormulaPtr leaf = it->negated ? formula_neg(it->atom) : formula_pos(it->atom);
            conj = conj ? formula_and(std::move(conj), std::move(leaf)) : std::move(leaf);
        }
        out.goal = normalize_formula(Polarity::plus, *conj);
    }
    return out;
}

FormulaPtr goal_formula(const std::vector<Literal>& goal_literals) {
    FormulaPtr formula;
    for (const Literal& lit : goal_literals) {
        FormulaPtr leaf = lit.negated ? formula_neg(lit.atom) : formula_pos(lit.atom);
        formula = formula ? formula_and(std::move(formula), std::move(leaf)) : std::move(leaf);
    }
    return formula;
}

}  // namespace pcp
