#include "lamanspan/error.hpp"

namespace lamanspan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotASurface: return "NotASurface";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DuplicateTriangle: return "DuplicateTriangle";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::StaleRecord: return "StaleRecord";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::NoSuchMerge: return "NoSuchMerge";
    case ErrorCode::NotOnCycle: return "NotOnCycle";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::CorruptEntry: return "CorruptEntry";
    case ErrorCode::WrongCount: return "WrongCount";
    case ErrorCode::NotInCatalog: return "NotInCatalog";
    case ErrorCode::MissedTriangle: return "MissedTriangle";
    case ErrorCode::SeedNotFound: return "SeedNotFound";
    case ErrorCode::BadStructure: return "BadStructure";
    case ErrorCode::NotExtendible: return "NotExtendible";
    case ErrorCode::NotElongating: return "NotElongating";
    case ErrorCode::HypothesesViolated: return "HypothesesViolated";
    case ErrorCode::NotSeparating: return "NotSeparating";
    case ErrorCode::NotEmptyTriangle: return "NotEmptyTriangle";
    case ErrorCode::CapLost: return "CapLost";
    case ErrorCode::UnsupportedSurface: return "UnsupportedSurface";
    case ErrorCode::NotRigid: return "NotRigid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace lamanspan
