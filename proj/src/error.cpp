#include "dhur/error.hpp"

namespace dhur {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::NonzeroSum: return "NONZERO_SUM";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::InvalidProfile: return "INVALID_PROFILE";
    case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::Underdetermined: return "UNDERDETERMINED";
    case ErrorCode::Inconsistent: return "INCONSISTENT";
    case ErrorCode::NegativeR: return "NEGATIVE_R";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::OnWall: return "ON_WALL";
    case ErrorCode::SamplingBudgetExceeded: return "SAMPLING_BUDGET_EXCEEDED";
    case ErrorCode::AdjacencyNotFound: return "ADJACENCY_NOT_FOUND";
    case ErrorCode::NotPolynomial: return "NOT_POLYNOMIAL";
    case ErrorCode::UnstableCase: return "UNSTABLE_CASE";
    case ErrorCode::NotAdjacent: return "NOT_ADJACENT";
    case ErrorCode::BlockUnbalanced: return "BLOCK_UNBALANCED";
    case ErrorCode::ParameterRange: return "PARAMETER_RANGE";
    case ErrorCode::CacheMismatch: return "CACHE_MISMATCH";
  }
  return "UNKNOWN";
}

}  // namespace dhur
