#pragma once

#include <stdexcept>
#include <string>

namespace scenetemp {

// Error categories surfaced by the library. The CLI maps these to a
// machine-parseable "error: <code>: <message>" line on stderr.
enum class ErrorCode {
  MissingFile,
  SchemaMismatch,
  MalformedRow,
  EmptyInput,
  NoOverlap,
  InsufficientData,
  RankDeficient,
  TooFewPoints,
  NoCompleteDays,
  DateMismatch,
  TooFewDays,
  EmptyData,
  EmptyGrid,
  MeasurementDayAbsent,
  DateOutOfRange,
  DegenerateX,
  LengthMismatch,
  ZeroVariance,
  TooFewGroups,
  ZeroWithinVariance,
  DateRangeMismatch,
  InvalidSpec,
  InfeasibleDuration,
  BadConfig,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace scenetemp
