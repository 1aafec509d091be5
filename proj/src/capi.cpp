// C bindings over the pipeline. Handles own parsed ASTs; every entry point
// catches and converts exceptions, nothing is allowed to unwind into C.
#include "pcp.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "pcp/errors.hpp"
#include "pcp/model.hpp"
#include "pcp/pddl.hpp"
#include "pcp/pipeline.hpp"

namespace {

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void set_error(char** error, const std::string& message) {
    if (error != nullptr) *error = copy_string(message);
}

pcp::PipelineOptions options_from_flags(unsigned flags) {
    pcp::PipelineOptions options;
    options.closed_world = (flags & PCP_OPT_CLOSED_WORLD) != 0;
    options.effect_augmentation = (flags & PCP_OPT_NO_EFFECT_AUGMENTATION) == 0;
    return options;
}

}  // namespace

struct pcp_domain {
    std::string text;
};

struct pcp_problem {
    std::string text;
};

struct pcp_plan {
    std::string text;
    size_t length = 0;
};

struct pcp_verdict {
    int status = PCP_ERROR;
    std::vector<std::string> diagnostics;
    std::string proof_json;
    std::string trace_json;
    std::string world;
    std::string json;
    bool has_proof = false;
    bool has_trace = false;
    bool has_world = false;
    bool has_json = false;
};

extern "C" {

pcp_domain* pcp_domain_parse(const char* text, char** error) {
    if (text == nullptr) {
        set_error(error, "domain text is NULL");
        return nullptr;
    }
    try {
        pcp::parse_domain(text);  // validate now, reuse the text later
        return new pcp_domain{text};
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return nullptr;
    }
}

pcp_problem* pcp_problem_parse(const char* text, char** error) {
    if (text == nullptr) {
        set_error(error, "problem text is NULL");
        return nullptr;
    }
    try {
        pcp::parse_problem(text);
        return new pcp_problem{text};
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return nullptr;
    }
}

pcp_plan* pcp_plan_parse(const char* text, char** error) {
    if (text == nullptr) {
        set_error(error, "plan text is NULL");
        return nullptr;
    }
    try {
        size_t length = pcp::parse_plan(text).size();
        return new pcp_plan{text, length};
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return nullptr;
    }
}

void pcp_domain_free(pcp_domain* domain) { delete domain; }
void pcp_problem_free(pcp_problem* problem) { delete problem; }
void pcp_plan_free(pcp_plan* plan) { delete plan; }

size_t pcp_plan_length(const pcp_plan* plan) { return plan == nullptr ? 0 : plan->length; }

int pcp_verify(const pcp_domain* domain, const pcp_problem* problem, const pcp_plan* plan,
               unsigned flags, pcp_verdict** out) {
    auto* verdict = new pcp_verdict{};
    if (domain == nullptr || problem == nullptr || plan == nullptr) {
        verdict->diagnostics.emplace_back("verify requires a domain, a problem and a plan");
    } else {
        try {
            pcp::VerifyResult result =
                pcp::run_verify(domain->text, problem->text, plan->text, options_from_flags(flags));
            verdict->status = static_cast<int>(result.verdict);
            verdict->diagnostics = std::move(result.diagnostics);
            if (!result.proof_json.empty()) {
                verdict->proof_json = std::move(result.proof_json);
                verdict->has_proof = true;
            }
            if (!result.trace_json.empty()) {
                verdict->trace_json = std::move(result.trace_json);
                verdict->has_trace = true;
            }
        } catch (const std::exception& e) {
            verdict->status = PCP_ERROR;
            verdict->diagnostics.emplace_back(e.what());
        }
    }
    int status = verdict->status;
    if (out != nullptr) {
        *out = verdict;
    } else {
        delete verdict;
    }
    return status;
}

int pcp_check_proof(const pcp_domain* domain, const pcp_problem* problem, const char* proof_json,
                    unsigned flags, pcp_verdict** out) {
    auto* verdict = new pcp_verdict{};
    if (domain == nullptr || problem == nullptr || proof_json == nullptr) {
        verdict->diagnostics.emplace_back("check-proof requires a domain, a problem and a proof");
    } else {
        try {
            pcp::CheckProofResult result = pcp::run_check_proof(domain->text, problem->text,
                                                                proof_json, options_from_flags(flags));
            verdict->status = static_cast<int>(result.verdict);
            verdict->diagnostics = std::move(result.diagnostics);
        } catch (const std::exception& e) {
            verdict->status = PCP_ERROR;
            verdict->diagnostics.emplace_back(e.what());
        }
    }
    int status = verdict->status;
    if (out != nullptr) {
        *out = verdict;
    } else {
        delete verdict;
    }
    return status;
}

int pcp_execute(const pcp_domain* domain, const pcp_problem* problem, const pcp_plan* plan,
                unsigned flags, long energy, pcp_verdict** out) {
    auto* verdict = new pcp_verdict{};
    if (domain == nullptr || problem == nullptr || plan == nullptr) {
        verdict->diagnostics.emplace_back("execute requires a domain, a problem and a plan");
    } else {
        try {
            std::optional<long> budget;
            if (energy >= 0) budget = energy;
            pcp::ExecuteResult result = pcp::run_execute(domain->text, problem->text, plan->text,
                                                         options_from_flags(flags), budget);
            verdict->status = static_cast<int>(result.verdict);
            verdict->diagnostics = std::move(result.diagnostics);
            verdict->world = std::move(result.world_listing);
            verdict->has_world = result.verdict != pcp::Verdict::error;
        } catch (const std::exception& e) {
            verdict->status = PCP_ERROR;
            verdict->diagnostics.emplace_back(e.what());
        }
    }
    int status = verdict->status;
    if (out != nullptr) {
        *out = verdict;
    } else {
        delete verdict;
    }
    return status;
}

int pcp_translate(const pcp_domain* domain, const pcp_problem* problem, unsigned flags,
                  pcp_verdict** out) {
    auto* verdict = new pcp_verdict{};
    if (domain == nullptr) {
        verdict->diagnostics.emplace_back("translate requires a domain");
    } else {
        try {
            std::optional<std::string> problem_text;
            if (problem != nullptr) problem_text = problem->text;
            pcp::TranslateResult result =
                pcp::run_translate(domain->text, problem_text, options_from_flags(flags));
            verdict->status = static_cast<int>(result.verdict);
            verdict->diagnostics = std::move(result.diagnostics);
            if (result.verdict == pcp::Verdict::valid) {
                verdict->json = std::move(result.json);
                verdict->has_json = true;
            }
        } catch (const std::exception& e) {
            verdict->status = PCP_ERROR;
            verdict->diagnostics.emplace_back(e.what());
        }
    }
    int status = verdict->status;
    if (out != nullptr) {
        *out = verdict;
    } else {
        delete verdict;
    }
    return status;
}

int pcp_verdict_status(const pcp_verdict* verdict) {
    return verdict == nullptr ? PCP_ERROR : verdict->status;
}

size_t pcp_verdict_diagnostic_count(const pcp_verdict* verdict) {
    return verdict == nullptr ? 0 : verdict->diagnostics.size();
}

const char* pcp_verdict_diagnostic(const pcp_verdict* verdict, size_t index) {
    if (verdict == nullptr || index >= verdict->diagnostics.size()) return nullptr;
    return verdict->diagnostics[index].c_str();
}

const char* pcp_verdict_proof_json(const pcp_verdict* verdict) {
    return verdict != nullptr && verdict->has_proof ? verdict->proof_json.c_str() : nullptr;
}

const char* pcp_verdict_trace_json(const pcp_verdict* verdict) {
    return verdict != nullptr && verdict->has_trace ? verdict->trace_json.c_str() : nullptr;
}

const char* pcp_verdict_world(const pcp_verdict* verdict) {
    return verdict != nullptr && verdict->has_world ? verdict->world.c_str() : nullptr;
}

const char* pcp_verdict_json(const pcp_verdict* verdict) {
    return verdict != nullptr && verdict->has_json ? verdict->json.c_str() : nullptr;
}

void pcp_verdict_free(pcp_verdict* verdict) { delete verdict; }

void pcp_string_free(char* text) { std::free(text); }

const char* pcp_version(void) { return "0.1.0"; }

}  // extern "C"
