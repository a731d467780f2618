#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wdg {

enum class ErrorCode {
  ParseError,
  DivisionByZero,
  BadIndex,
  SelfLoop,
  DuplicateEdge,
  NotSymmetric,
  NonzeroDiagonal,
  ShapeMismatch,
  LimitExceeded,
  DegenerateGraph,
  SizeBudgetExceeded,
  EmptyTemplate,
  Infeasible,
  IncompleteCsop,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library; `code()` identifies the
/// failure class named in each operation's contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wdg
