#include "pcp/errors.hpp"

namespace pcp {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::unbound_variable: return "UnboundVariable";
        case Errc::inconsistent_instantiation: return "InconsistentInstantiation";
        case Errc::unknown_action: return "UnknownAction";
        case Errc::arity_mismatch: return "ArityMismatch";
        case Errc::constraint_violated: return "ConstraintViolated";
        case Errc::non_ground_constraint: return "NonGroundConstraint";
        case Errc::invalid_state: return "InvalidState";
        case Errc::contradictory_formula: return "ContradictoryFormula";
        case Errc::out_of_energy: return "OutOfEnergy";
        case Errc::handler_failure: return "HandlerFailure";
        case Errc::parse_error: return "ParseError";
        case Errc::unsupported_requirement: return "UnsupportedRequirement";
        case Errc::unknown_predicate: return "UnknownPredicate";
        case Errc::variable_not_in_params: return "VariableNotInParams";
        case Errc::equality_in_effect: return "EqualityInEffect";
        case Errc::duplicate_atom: return "DuplicateAtom";
        case Errc::empty_plan: return "EmptyPlan";
        case Errc::precondition_unsatisfied: return "PreconditionUnsatisfied";
        case Errc::goal_not_reached: return "GoalNotReached";
        case Errc::bad_proof_encoding: return "BadProofEncoding";
        case Errc::io_error: return "IoError";
    }
    return "Error";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

ParseError::ParseError(int line, int column, const std::string& detail)
    : Error(Errc::parse_error,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail),
      line_(line),
      column_(column) {}

}  // namespace pcp
