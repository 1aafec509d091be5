// Canonical JSON encodings: derivations (the checkable certificate), the
// generation trace, and the context/problem translation.
#pragma once

#include <string>

#include "pcp/derivation.hpp"
#include "pcp/model.hpp"
#include "pcp/pddl.hpp"
#include "pcp/proofgen.hpp"

namespace pcp {

// Canonical form: compact separators, fields in a fixed order. decode then
// encode reproduces a canonical document byte for byte.
std::string encode_derivation(const Derivation& d);

// Throws BadProofEncoding on malformed or truncated input.
DerivationPtr decode_derivation(const std::string& text);

std::string encode_trace(const GenerationTrace& trace);

// Context (and optionally init/goal) in the same state encoding the
// derivation JSON uses.
std::string encode_translation(const Context& ctx, const ProblemTranslation* problem);

}  // namespace pcp
