#include "activetime/error.hpp"

namespace activetime {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::DuplicateJobId: return "DuplicateJobId";
    case ErrorCode::InvalidWindow: return "InvalidWindow";
    case ErrorCode::NonLaminar: return "NonLaminar";
    case ErrorCode::EmptyInstance: return "EmptyInstance";
    case ErrorCode::InfeasibleSubinstance: return "InfeasibleSubinstance";
    case ErrorCode::InfeasibleInput: return "InfeasibleInput";
    case ErrorCode::PropertyViolation: return "PropertyViolation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RatioExceeded: return "RatioExceeded";
    case ErrorCode::SubsetLimitExceeded: return "SubsetLimitExceeded";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::HorizonTooLarge: return "HorizonTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::DegenerateWidth: return "DegenerateWidth";
    case ErrorCode::TooManyJobs: return "TooManyJobs";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

}  // namespace activetime
