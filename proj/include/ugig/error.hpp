#pragma once

#include <stdexcept>
#include <string>

namespace ugig {

// Every failure the library reports deliberately (as opposed to programming
// errors, which assert) carries one of these codes so callers can branch
// without string-matching.
enum class ErrorCode {
  // input / format
  MalformedInput,
  MalformedBytes,
  DuplicateLabel,
  UnknownVertex,
  EdgeWithinPartition,
  BadParams,
  // geometric validity
  CollinearOverlap,
  EmptyRepresentation,
  ZeroLength,
  // graph shape
  OddCycle,
  NotATree,
  // certificates
  NotProper,
  InconsistentCertificate,
  PopulationMismatch,
  InconsistentEvents,
  // recognition
  BudgetExceeded,
  CapExceeded,
  InconsistentModel,
  SolverFailed,
  // ray / square maps
  NotAnEdge,
  NeighborhoodOverlap,
  BadEpsilon,
  BlockedSlide,
  NotTwoDirectional,
  NotUGIG,
  SquareTooSmall,
  // reduction
  InvalidInstance,
  NotPlanar,
  NotThreeConnected,
  BadGirth,
  AlreadyFourOccurrences,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ugig
