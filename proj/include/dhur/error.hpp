#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dhur {

enum class ErrorCode {
  DimensionMismatch,
  NonzeroSum,
  InvalidArgument,
  InvalidProfile,
  SizeMismatch,
  Underdetermined,
  Inconsistent,
  NegativeR,
  BudgetExceeded,
  OnWall,
  SamplingBudgetExceeded,
  AdjacencyNotFound,
  NotPolynomial,
  UnstableCase,
  NotAdjacent,
  BlockUnbalanced,
  ParameterRange,
  CacheMismatch,
};

std::string_view error_name(ErrorCode code);

// Every failure raised by the library carries a machine-readable code. `indices` is
// used by ON_WALL to report the offending wall.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::vector<int> indices = {})
      : std::runtime_error(what), code_(code), indices_(std::move(indices)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<int>& indices() const noexcept { return indices_; }

 private:
  ErrorCode code_;
  std::vector<int> indices_;
};

}  // namespace dhur
