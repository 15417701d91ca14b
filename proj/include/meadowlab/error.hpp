#ifndef MEADOWLAB_ERROR_HPP
#define MEADOWLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace meadowlab {

enum class ErrorCode {
    NotPrime,
    BadDegree,
    SpecMismatch,
    CharMismatch,
    BadSubfield,
    MissingPrime,
    NotProduct,
    NotAField,
    BadTable,
    CapExceeded,
    InfiniteCarrier,
    UnboundVariable,
    SyntaxError,
    NotSubalgebra,
    NotICFSubalgebra,
    NotEmbedding,
    NoCompatibleTwist,
    BadDescriptor,
    Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace meadowlab

#endif
