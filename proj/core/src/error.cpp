#include "wdg/error.hpp"

namespace wdg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::DegenerateGraph: return "DegenerateGraph";
    case ErrorCode::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorCode::EmptyTemplate: return "EmptyTemplate";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::IncompleteCsop: return "IncompleteCsop";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace wdg
