#include "gwo/error.hpp"

namespace gwo {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::UnknownOperationName: return "UnknownOperationName";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::NotACovering: return "NotACovering";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotASubobject: return "NotASubobject";
    case ErrorCode::InvalidAction: return "InvalidAction";
    case ErrorCode::ComponentInvalid: return "ComponentInvalid";
    case ErrorCode::CharacteristicGroupNotContained:
      return "CharacteristicGroupNotContained";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::Usage: return "Usage";
  }
  return "Error";
}

}  // namespace gwo
