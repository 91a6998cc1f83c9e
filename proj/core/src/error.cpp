#include "latmat/error.hpp"

namespace latmat {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::UsageError: return "UsageError";
        case Errc::ParseError: return "ParseError";
        case Errc::DomainError: return "DomainError";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::NegativeEntry: return "NegativeEntry";
        case Errc::NotInvertible: return "NotInvertible";
        case Errc::NotABasis: return "NotABasis";
        case Errc::PreconditionFailed: return "PreconditionFailed";
        case Errc::IdentityNotPositive: return "IdentityNotPositive";
        case Errc::AssertionFailed: return "AssertionFailed";
        case Errc::UnrecognizedD: return "UnrecognizedD";
        case Errc::VerificationFailed: return "VerificationFailed";
        case Errc::InternalCheckFailed: return "InternalCheckFailed";
        case Errc::ResourceExhausted: return "ResourceExhausted";
    }
    return "UnknownError";
}

}  // namespace latmat
