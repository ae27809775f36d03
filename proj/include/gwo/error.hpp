#pragma once

#include <stdexcept>
#include <string>

namespace gwo {

enum class ErrorCode {
  MalformedTable,
  SignatureMismatch,
  UnknownOperationName,
  UnknownObject,
  InvalidMorphism,
  NotACovering,
  NotTransitive,
  NotASubgroup,
  NotASubobject,
  InvalidAction,
  ComponentInvalid,
  CharacteristicGroupNotContained,
  SearchBudgetExceeded,
  ParseError,
  SchemaError,
  Usage,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for the whole library. The code distinguishes
/// schema/shape problems (CLI exit 2) from failed mathematical
/// preconditions (CLI exit 1).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gwo
