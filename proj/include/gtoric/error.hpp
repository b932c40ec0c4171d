#pragma once

#include <stdexcept>
#include <string>

namespace gtoric {

enum class ErrorCode {
    NonSquare,
    NotExtendable,
    DegenerateCone,
    NonSimplicial,
    NotSmooth,
    NotFullDimensional,
    HypothesisViolation,
    InvalidArgument,
    UnsupportedDegree,
    IncompleteFan,
    ParseSyntax,
    ParseDimension,
    ParseBadIndex,
    DeclarationContradicted,
    IoError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

} // namespace gtoric
