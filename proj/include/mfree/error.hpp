#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mfree {

enum class ErrorKind {
  NonPrime,
  SizeCapExceeded,
  CtxMismatch,
  DivisionByZero,
  NoSuchRoot,
  ShapeMismatch,
  AmbientMismatch,
  GroupMismatch,
  RandomBudgetExhausted,
  SplittingFieldInsufficient,
  UncertifiedInventory,
  PreconditionFailed,
  ParseError,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrime: return "NonPrime";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::CtxMismatch: return "CtxMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NoSuchRoot: return "NoSuchRoot";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::RandomBudgetExhausted: return "RandomBudgetExhausted";
    case ErrorKind::SplittingFieldInsufficient: return "SplittingFieldInsufficient";
    case ErrorKind::UncertifiedInventory: return "UncertifiedInventory";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace mfree
