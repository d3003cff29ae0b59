#include "artinmut/error.hpp"

namespace artinmut {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::NotSkewSymmetrizable: return "matrix is not skew-symmetrizable";
    case ErrorCode::OutOfRange: return "vertex out of range";
    case ErrorCode::NotSquare: return "mutation rule requires a perfect square";
    case ErrorCode::NotCyclicallyOriented: return "chordless cycle is not cyclically oriented";
    case ErrorCode::NotFiniteType: return "diagram is not of finite type";
    case ErrorCode::NotConnected: return "diagram is not connected";
    case ErrorCode::BoundExceeded: return "size bound exceeded";
    case ErrorCode::BudgetExhausted: return "budget exhausted";
    case ErrorCode::AlphabetMismatch: return "alphabet mismatch";
    case ErrorCode::UnsupportedCycle: return "unsupported cycle";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace artinmut
