#pragma once

#include <stdexcept>
#include <string>

namespace pcp {

enum class Errc {
    // core / stateops
    unbound_variable,
    inconsistent_instantiation,
    // logic
    unknown_action,
    arity_mismatch,
    constraint_violated,
    non_ground_constraint,
    invalid_state,
    // semantics
    contradictory_formula,
    out_of_energy,
    handler_failure,
    // pddl
    parse_error,
    unsupported_requirement,
    unknown_predicate,
    variable_not_in_params,
    equality_in_effect,
    duplicate_atom,
    empty_plan,
    // proofgen
    precondition_unsatisfied,
    goal_not_reached,
    // serialization / io
    bad_proof_encoding,
    io_error,
};

// Stable tag used in diagnostics, e.g. "InconsistentInstantiation".
const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);

    Errc code() const { return code_; }

private:
    Errc code_;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& detail);

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace pcp
