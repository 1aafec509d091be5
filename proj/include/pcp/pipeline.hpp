// End-to-end operations behind the CLI: verify, check-proof, execute,
// translate. All take raw file texts and never throw; failures come back as
// verdicts with diagnostics.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pcp {

enum class Verdict { valid = 0, invalid = 1, error = 2 };

struct PipelineOptions {
    bool closed_world = false;
    bool effect_augmentation = true;  // disabling is for tests only
};

struct VerifyResult {
    Verdict verdict = Verdict::error;
    std::vector<std::string> diagnostics;
    std::string proof_json;  // empty when generation failed
    std::string trace_json;
};

// parse -> translate -> generate -> independently re-check the generated
// proof -> compare the checked conclusion against (init, goal, plan).
VerifyResult run_verify(const std::string& domain_text, const std::string& problem_text,
                        const std::string& plan_text, const PipelineOptions& options);

struct CheckProofResult {
    Verdict verdict = Verdict::error;
    std::vector<std::string> diagnostics;
};

CheckProofResult run_check_proof(const std::string& domain_text, const std::string& problem_text,
                                 const std::string& proof_json, const PipelineOptions& options);

struct ExecuteResult {
    Verdict verdict = Verdict::error;
    std::vector<std::string> diagnostics;
    std::string world_listing;  // final world, sorted ground atoms, one per line
};

ExecuteResult run_execute(const std::string& domain_text, const std::string& problem_text,
                          const std::string& plan_text, const PipelineOptions& options,
                          std::optional<long> energy);

struct TranslateResult {
    Verdict verdict = Verdict::error;
    std::vector<std::string> diagnostics;
    std::string json;
};

TranslateResult run_translate(const std::string& domain_text,
                              const std::optional<std::string>& problem_text,
                              const PipelineOptions& options);

}  // namespace pcp
