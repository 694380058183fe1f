#include "scenetemp/errors.hpp"

namespace scenetemp {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NoOverlap: return "NoOverlap";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::NoCompleteDays: return "NoCompleteDays";
    case ErrorCode::DateMismatch: return "DateMismatch";
    case ErrorCode::TooFewDays: return "TooFewDays";
    case ErrorCode::EmptyData: return "EmptyData";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::MeasurementDayAbsent: return "MeasurementDayAbsent";
    case ErrorCode::DateOutOfRange: return "DateOutOfRange";
    case ErrorCode::DegenerateX: return "DegenerateX";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::TooFewGroups: return "TooFewGroups";
    case ErrorCode::ZeroWithinVariance: return "ZeroWithinVariance";
    case ErrorCode::DateRangeMismatch: return "DateRangeMismatch";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InfeasibleDuration: return "InfeasibleDuration";
    case ErrorCode::BadConfig: return "BadConfig";
  }
  return "Unknown";
}

}  // namespace scenetemp
