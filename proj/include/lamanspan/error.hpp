#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lamanspan {

enum class ErrorCode {
  NotASurface,
  Disconnected,
  DuplicateTriangle,
  TooSmall,
  UnknownVertex,
  UnknownEdge,
  NotContractible,
  BadInterval,
  StaleRecord,
  LabelMismatch,
  NoSuchMerge,
  NotOnCycle,
  Unreachable,
  CorruptEntry,
  WrongCount,
  NotInCatalog,
  MissedTriangle,
  SeedNotFound,
  BadStructure,
  NotExtendible,
  NotElongating,
  HypothesesViolated,
  NotSeparating,
  NotEmptyTriangle,
  CapLost,
  UnsupportedSurface,
  NotRigid,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace lamanspan
