#include "viswork/errors.hpp"

namespace viswork {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotCCW: return "NotCCW";
    case ErrorCode::ViewpointOutside: return "ViewpointOutside";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InvalidQuery: return "InvalidQuery";
    case ErrorCode::OverlapDegenerate: return "OverlapDegenerate";
    case ErrorCode::ChainNotIndependent: return "ChainNotIndependent";
    case ErrorCode::OffsetOutside: return "OffsetOutside";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace viswork
