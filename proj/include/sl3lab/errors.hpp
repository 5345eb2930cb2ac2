#pragma once

#include <stdexcept>
#include <string>

namespace sl3lab {

enum class Err {
    SingularMatrix,
    ComplexPair,
    NotDistinct,
    DetMismatch,
    NearZeroEigenvalue,
    BallTooLarge,
    ResidualTooLarge,
    NotBlockForm,
    ZeroLambda,
    NotCertified,
    NotReducible,
    NotRadialPair,
    NotTransverse,
    NotProximal,
    NoOverlap,
    LengthMismatch,
    IndexingUnsupported,
    ExactnessViolation,
    InvalidArgument,
    Io,
};

const char* err_name(Err e);

/// Library-wide exception carrying a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

} // namespace sl3lab
