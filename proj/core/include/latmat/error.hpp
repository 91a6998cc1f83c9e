#pragma once

#include <stdexcept>
#include <string>

namespace latmat {

// Failure classes surfaced by the library. The CLI maps these onto its
// exit-code families: usage 64, precondition 65, verification 66,
// resource exhaustion 69.
enum class Errc {
    UsageError,
    ParseError,
    DomainError,
    NotAUnit,
    NegativeEntry,
    NotInvertible,
    NotABasis,
    PreconditionFailed,
    IdentityNotPositive,
    AssertionFailed,
    UnrecognizedD,
    VerificationFailed,
    InternalCheckFailed,
    ResourceExhausted,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace latmat
