#pragma once

#include <stdexcept>
#include <string>

namespace conepack {

// One code per named failure mode across the library.
enum class Errc {
  NegativeMatrixEntry,
  NonPositiveCapacity,
  EmptyRowOrColumn,
  IndexOutOfRange,
  DuplicateEntry,
  NonPositiveDual,
  ZeroGenerator,
  ZeroLoad,
  CostMismatch,
  BoundNotLower,
  IterationCapExceeded,
  InfeasibleAfterScaling,
  BoundBelowRange,
  NonPositiveLambda,
  NoPositiveCostGenerator,
  NonCombinatorialOperation,
  NoPath,
  NoCycle,
  Disconnected,
  InfeasibleNode,
  CyclicNetwork,
  RankDeficient,
  Unbounded,
  NoPositiveCost,
  TooLarge,
  InvalidArgument,
  ParseError,
  Internal,
};

class SolverError : public std::runtime_error {
 public:
  SolverError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw SolverError(code, what);
}

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NegativeMatrixEntry: return "NegativeMatrixEntry";
    case Errc::NonPositiveCapacity: return "NonPositiveCapacity";
    case Errc::EmptyRowOrColumn: return "EmptyRowOrColumn";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DuplicateEntry: return "DuplicateEntry";
    case Errc::NonPositiveDual: return "NonPositiveDual";
    case Errc::ZeroGenerator: return "ZeroGenerator";
    case Errc::ZeroLoad: return "ZeroLoad";
    case Errc::CostMismatch: return "CostMismatch";
    case Errc::BoundNotLower: return "BoundNotLower";
    case Errc::IterationCapExceeded: return "IterationCapExceeded";
    case Errc::InfeasibleAfterScaling: return "InfeasibleAfterScaling";
    case Errc::BoundBelowRange: return "BoundBelowRange";
    case Errc::NonPositiveLambda: return "NonPositiveLambda";
    case Errc::NoPositiveCostGenerator: return "NoPositiveCostGenerator";
    case Errc::NonCombinatorialOperation: return "NonCombinatorialOperation";
    case Errc::NoPath: return "NoPath";
    case Errc::NoCycle: return "NoCycle";
    case Errc::Disconnected: return "Disconnected";
    case Errc::InfeasibleNode: return "InfeasibleNode";
    case Errc::CyclicNetwork: return "CyclicNetwork";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::Unbounded: return "Unbounded";
    case Errc::NoPositiveCost: return "NoPositiveCost";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace conepack
