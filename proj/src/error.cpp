#include "meadowlab/error.hpp"

namespace meadowlab {

const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::CharMismatch: return "CharMismatch";
    case ErrorCode::BadSubfield: return "BadSubfield";
    case ErrorCode::MissingPrime: return "MissingPrime";
    case ErrorCode::NotProduct: return "NotProduct";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::BadTable: return "BadTable";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InfiniteCarrier: return "InfiniteCarrier";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotSubalgebra: return "NotSubalgebra";
    case ErrorCode::NotICFSubalgebra: return "NotICFSubalgebra";
    case ErrorCode::NotEmbedding: return "NotEmbedding";
    case ErrorCode::NoCompatibleTwist: return "NoCompatibleTwist";
    case ErrorCode::BadDescriptor: return "BadDescriptor";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace meadowlab
