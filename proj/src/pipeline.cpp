#include "pcp/pipeline.hpp"

#include <algorithm>
#include <memory>

#include "pcp/checker.hpp"
#include "pcp/errors.hpp"
#include "pcp/pddl.hpp"
#include "pcp/proof_json.hpp"
#include "pcp/proofgen.hpp"
#include "pcp/semantics.hpp"

namespace pcp {

namespace {

struct TranslatedProblem {
    Context ctx;
    ProblemTranslation problem;
    std::vector<ActionInstance> plan;  // only when a plan text was given
};

// Parse/translation failures surface as Verdict::error through `out`.
template <typename Result>
std::optional<TranslatedProblem> load_inputs(const std::string& domain_text,
                                             const std::string& problem_text,
                                             const std::string* plan_text,
                                             const PipelineOptions& options, Result& out) {
    try {
        TranslatedProblem loaded;
        DomainAst domain = parse_domain(domain_text);
        ProblemAst problem = parse_problem(problem_text);
        loaded.ctx = translate_domain(domain, TranslateOptions{options.effect_augmentation});
        for (const std::string& object : problem.objects) {
            loaded.ctx.constants.insert(object);
        }
        loaded.problem = translate_problem(problem, loaded.ctx, options.closed_world);
        if (plan_text != nullptr) {
            loaded.plan = parse_plan(*plan_text);
        }
        return loaded;
    } catch (const Error& e) {
        out.verdict = Verdict::error;
        out.diagnostics.push_back(e.what());
        return std::nullopt;
    }
}

PlanPtr plan_of_actions(const std::vector<ActionInstance>& actions) {
    PlanPtr plan;
    for (const ActionInstance& action : actions) {
        PlanPtr act = plan_act(action);
        plan = plan ? plan_seq(std::move(plan), std::move(act)) : std::move(act);
    }
    return plan;
}

std::vector<PlanStep> expected_steps(const std::vector<ActionInstance>& actions) {
    std::vector<PlanStep> steps;
    steps.reserve(actions.size() + 1);
    for (const ActionInstance& action : actions) steps.emplace_back(action);
    steps.emplace_back(ShrinkStep{});
    return steps;
}

void report_issues(const CheckReport& report, std::vector<std::string>& diagnostics) {
    for (const CheckIssue& issue : report.issues) {
        diagnostics.push_back(issue.rule + " at " + issue.path + ": " + issue.message);
    }
    if (!report.judgement && report.issues.empty()) {
        diagnostics.push_back("checker could not form a conclusion");
    }
}

// Conclusion must match the translated problem verbatim.
bool conclusion_matches(const Judgement& judgement, const ProblemTranslation& problem,
                        std::vector<std::string>& diagnostics) {
    bool ok = true;
    if (!(judgement.pre == problem.init)) {
        diagnostics.push_back("conclusion precondition " + to_string(judgement.pre) +
                              " does not match the initial state " + to_string(problem.init));
        ok = false;
    }
    if (!(judgement.post == problem.goal)) {
        diagnostics.push_back("conclusion postcondition " + to_string(judgement.post) +
                              " does not match the goal state " + to_string(problem.goal));
        ok = false;
    }
    return ok;
}

}  // namespace

VerifyResult run_verify(const std::string& domain_text, const std::string& problem_text,
                        const std::string& plan_text, const PipelineOptions& options) {
    VerifyResult result;
    auto loaded = load_inputs(domain_text, problem_text, &plan_text, options, result);
    if (!loaded) return result;

    GenerationResult generated;
    try {
        generated = generate_derivation(loaded->ctx, loaded->problem.init, loaded->problem.goal,
                                        loaded->plan);
    } catch (const Error& e) {
        result.verdict = Verdict::invalid;
        result.diagnostics.push_back(std::string("no proof found: ") + e.what());
        return result;
    }
    result.proof_json = encode_derivation(*generated.derivation);
    result.trace_json = encode_trace(generated.trace);

    // Defense in depth: the generated proof is re-checked by the independent
    // checker, so a generator bug cannot silently validate a plan.
    CheckReport report = check_derivation(loaded->ctx, *generated.derivation);
    if (!report.accepted()) {
        result.verdict = Verdict::invalid;
        report_issues(report, result.diagnostics);
        return result;
    }

    bool matches = conclusion_matches(*report.judgement, loaded->problem, result.diagnostics);
    if (flatten(*report.judgement->plan) != expected_steps(loaded->plan)) {
        result.diagnostics.push_back("conclusion plan " + to_string(*report.judgement->plan) +
                                     " does not match the input plan");
        matches = false;
    }
    result.verdict = matches ? Verdict::valid : Verdict::invalid;
    return result;
}

CheckProofResult run_check_proof(const std::string& domain_text, const std::string& problem_text,
                                 const std::string& proof_json, const PipelineOptions& options) {
    CheckProofResult result;
    auto loaded = load_inputs(domain_text, problem_text, nullptr, options, result);
    if (!loaded) return result;

    DerivationPtr derivation;
    try {
        derivation = decode_derivation(proof_json);
    } catch (const Error& e) {
        result.verdict = Verdict::error;
        result.diagnostics.push_back(e.what());
        return result;
    }

    CheckReport report = check_derivation(loaded->ctx, *derivation);
    if (!report.accepted()) {
        result.verdict = Verdict::invalid;
        report_issues(report, result.diagnostics);
        return result;
    }
    result.verdict = conclusion_matches(*report.judgement, loaded->problem, result.diagnostics)
                         ? Verdict::valid
                         : Verdict::invalid;
    return result;
}

ExecuteResult run_execute(const std::string& domain_text, const std::string& problem_text,
                          const std::string& plan_text, const PipelineOptions& options,
                          std::optional<long> energy) {
    ExecuteResult result;
    auto loaded = load_inputs(domain_text, problem_text, &plan_text, options, result);
    if (!loaded) return result;

    ActionHandler handler = canonical_handler(loaded->ctx);
    if (energy) {
        handler = energy_handler(std::move(handler),
                                 std::make_shared<EnergyMeter>(EnergyMeter{*energy}));
    }

    World initial;
    for (const FormulaMap& m : loaded->problem.init.maps) {
        if (m.polarity == Polarity::plus) initial.atoms.insert(m.atom);
    }

    World final_world;
    try {
        final_world = evaluate_plan(handler, *plan_of_actions(loaded->plan), std::move(initial));
    } catch (const Error& e) {
        result.verdict = Verdict::invalid;
        result.diagnostics.push_back(e.what());
        return result;
    }

    std::vector<std::string> atoms;
    atoms.reserve(final_world.atoms.size());
    for (const Atom& atom : final_world.atoms) atoms.push_back(to_string(atom));
    std::sort(atoms.begin(), atoms.end());
    for (const std::string& atom : atoms) result.world_listing += atom + "\n";

    FormulaPtr goal = goal_formula(loaded->problem.goal_literals);
    const bool satisfied = goal == nullptr || satisfies(final_world, Polarity::plus, *goal);
    if (!satisfied) {
        result.diagnostics.push_back("final world does not satisfy the goal");
    }
    result.verdict = satisfied ? Verdict::valid : Verdict::invalid;
    return result;
}

TranslateResult run_translate(const std::string& domain_text,
                              const std::optional<std::string>& problem_text,
                              const PipelineOptions& options) {
    TranslateResult result;
    try {
        DomainAst domain = parse_domain(domain_text);
        Context ctx = translate_domain(domain, TranslateOptions{options.effect_augmentation});
        if (problem_text) {
            ProblemAst problem = parse_problem(*problem_text);
            ProblemTranslation translated = translate_problem(problem, ctx, options.closed_world);
            result.json = encode_translation(ctx, &translated);
        } else {
            result.json = encode_translation(ctx, nullptr);
        }
        result.verdict = Verdict::valid;
    } catch (const Error& e) {
        result.verdict = Verdict::error;
        result.diagnostics.push_back(e.what());
    }
    return result;
}

}  // namespace pcp
