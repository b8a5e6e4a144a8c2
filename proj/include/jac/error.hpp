#pragma once

#include <stdexcept>
#include <string>

namespace jac {

// Failure taxonomy shared by the library, the C API and the CLI. Parse-stage
// codes (Syntax, Arity) map to CLI exit code 2, everything else to 3.
enum class ErrCode {
    Syntax,
    Arity,
    BadIndex,
    ArityMismatch,
    DimMismatch,
    Singular,
    DegenerateTransvection,
    NotAUnitNonScalarDegree,
    NotAUnitBadBaseSymbol,
    NotAUnitResidueNotInF,
    NotAUnitSingularMatrix,
    FullRing,
    TooLarge,
    NotInvertibleAtom,
    PoleAtNonPositive,
    Unsupported,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrCode code() const { return code_; }

    bool parse_stage() const { return code_ == ErrCode::Syntax || code_ == ErrCode::Arity; }

private:
    ErrCode code_;
};

[[noreturn]] inline void fail(ErrCode code, const std::string& msg) { throw Error(code, msg); }

const char* errcode_name(ErrCode code);

} // namespace jac
