// Command-line front end: verify, check-proof, execute, translate. Talks to
// the library exclusively through the C API. Exit codes: 0 valid, 1 invalid,
// 2 parse/translation/IO error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pcp.h"

namespace {

constexpr int kExitError = 2;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool write_file(const std::string& path, const char* content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << (content != nullptr ? content : "");
    return static_cast<bool>(out);
}

struct DomainHandle {
    pcp_domain* ptr = nullptr;
    ~DomainHandle() { pcp_domain_free(ptr); }
};
struct ProblemHandle {
    pcp_problem* ptr = nullptr;
    ~ProblemHandle() { pcp_problem_free(ptr); }
};
struct PlanHandle {
    pcp_plan* ptr = nullptr;
    ~PlanHandle() { pcp_plan_free(ptr); }
};
struct VerdictHandle {
    pcp_verdict* ptr = nullptr;
    ~VerdictHandle() { pcp_verdict_free(ptr); }
};

void print_diagnostics(const pcp_verdict* verdict) {
    size_t count = pcp_verdict_diagnostic_count(verdict);
    for (size_t i = 0; i < count; ++i) {
        std::cerr << "pcp: " << pcp_verdict_diagnostic(verdict, i) << "\n";
    }
}

template <typename Parse, typename Handle>
bool parse_input(const std::string& path, Parse parse, Handle& handle, const char* what) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "pcp: cannot read " << what << " file '" << path << "'\n";
        return false;
    }
    char* error = nullptr;
    handle.ptr = parse(text->c_str(), &error);
    if (handle.ptr == nullptr) {
        std::cerr << "pcp: " << what << " '" << path
                  << "': " << (error != nullptr ? error : "parse failed") << "\n";
        pcp_string_free(error);
        return false;
    }
    pcp_string_free(error);
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plan verifier and executor for the STRIPS subset of PDDL"};
    app.require_subcommand(1);

    std::string domain_path;
    std::string problem_path;
    std::string plan_path;
    std::string proof_path;
    std::string emit_proof_path;
    std::string emit_trace_path;
    bool closed_world = false;
    long energy = -1;

    auto add_domain = [&](CLI::App* cmd) {
        cmd->add_option("--domain", domain_path, "PDDL domain file")->required();
    };
    auto add_problem = [&](CLI::App* cmd) {
        cmd->add_option("--problem", problem_path, "PDDL problem file")->required();
    };

    CLI::App* verify = app.add_subcommand(
        "verify", "Build a proof for the plan and check it against the problem");
    add_domain(verify);
    add_problem(verify);
    verify->add_option("--plan", plan_path, "plan file, one action per line")->required();
    verify->add_flag("--closed-world", closed_world,
                     "complete the initial state with negative maps");
    verify->add_option("--emit-proof", emit_proof_path, "write the derivation JSON here");
    verify->add_option("--emit-trace", emit_trace_path, "write the generation trace JSON here");

    CLI::App* check = app.add_subcommand("check-proof", "Check a previously emitted proof");
    add_domain(check);
    add_problem(check);
    check->add_option("--proof", proof_path, "derivation JSON file")->required();
    check->add_flag("--closed-world", closed_world,
                    "complete the initial state with negative maps");

    CLI::App* execute = app.add_subcommand(
        "execute", "Run the plan under the possible-world semantics and print the final world");
    add_domain(execute);
    add_problem(execute);
    execute->add_option("--plan", plan_path, "plan file, one action per line")->required();
    execute->add_option("--energy", energy, "action budget; each action consumes one unit");
    execute->add_flag("--closed-world", closed_world,
                      "complete the initial state with negative maps");

    CLI::App* translate =
        app.add_subcommand("translate", "Print the planning context (and init/goal) as JSON");
    add_domain(translate);
    translate->add_option("--problem", problem_path, "PDDL problem file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    unsigned flags = closed_world ? PCP_OPT_CLOSED_WORLD : 0;

    DomainHandle domain;
    if (!parse_input(domain_path, pcp_domain_parse, domain, "domain")) return kExitError;

    if (translate->parsed()) {
        ProblemHandle problem;
        if (!problem_path.empty() &&
            !parse_input(problem_path, pcp_problem_parse, problem, "problem")) {
            return kExitError;
        }
        VerdictHandle verdict;
        int status = pcp_translate(domain.ptr, problem.ptr, flags, &verdict.ptr);
        print_diagnostics(verdict.ptr);
        if (const char* json = pcp_verdict_json(verdict.ptr)) std::cout << json << "\n";
        return status;
    }

    ProblemHandle problem;
    if (!parse_input(problem_path, pcp_problem_parse, problem, "problem")) return kExitError;

    if (verify->parsed()) {
        PlanHandle plan;
        if (!parse_input(plan_path, pcp_plan_parse, plan, "plan")) return kExitError;
        VerdictHandle verdict;
        int status = pcp_verify(domain.ptr, problem.ptr, plan.ptr, flags, &verdict.ptr);
        print_diagnostics(verdict.ptr);
        if (!emit_proof_path.empty()) {
            const char* proof = pcp_verdict_proof_json(verdict.ptr);
            if (proof == nullptr) {
                std::cerr << "pcp: no proof was generated, nothing to emit\n";
            } else if (!write_file(emit_proof_path, proof)) {
                std::cerr << "pcp: cannot write proof to '" << emit_proof_path << "'\n";
                return kExitError;
            }
        }
        if (!emit_trace_path.empty()) {
            const char* trace = pcp_verdict_trace_json(verdict.ptr);
            if (trace == nullptr) {
                std::cerr << "pcp: no trace was generated, nothing to emit\n";
            } else if (!write_file(emit_trace_path, trace)) {
                std::cerr << "pcp: cannot write trace to '" << emit_trace_path << "'\n";
                return kExitError;
            }
        }
        std::cout << (status == PCP_VALID ? "valid" : status == PCP_INVALID ? "invalid" : "error")
                  << "\n";
        return status;
    }

    if (check->parsed()) {
        auto proof_text = read_file(proof_path);
        if (!proof_text) {
            std::cerr << "pcp: cannot read proof file '" << proof_path << "'\n";
            return kExitError;
        }
        VerdictHandle verdict;
        int status =
            pcp_check_proof(domain.ptr, problem.ptr, proof_text->c_str(), flags, &verdict.ptr);
        print_diagnostics(verdict.ptr);
        std::cout << (status == PCP_VALID ? "valid" : status == PCP_INVALID ? "invalid" : "error")
                  << "\n";
        return status;
    }

    // execute
    PlanHandle plan;
    if (!parse_input(plan_path, pcp_plan_parse, plan, "plan")) return kExitError;
    VerdictHandle verdict;
    int status = pcp_execute(domain.ptr, problem.ptr, plan.ptr, flags, energy, &verdict.ptr);
    print_diagnostics(verdict.ptr);
    if (const char* world = pcp_verdict_world(verdict.ptr)) std::cout << world;
    return status;
}
