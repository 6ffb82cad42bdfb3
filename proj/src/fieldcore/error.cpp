#include "isogenix/error.hpp"

namespace isogenix {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::TooSmall: return "TooSmall";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case Errc::InsufficientPrecision: return "InsufficientPrecision";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::ConstantTermNotOne: return "ConstantTermNotOne";
    case Errc::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case Errc::NonzeroConstantTermInner: return "NonzeroConstantTermInner";
    case Errc::NotMonic: return "NotMonic";
    case Errc::SingularAtOrigin: return "SingularAtOrigin";
    case Errc::InconsistentInitialConditions: return "InconsistentInitialConditions";
    case Errc::ZeroInitialDerivative: return "ZeroInitialDerivative";
    case Errc::NoSolution: return "NoSolution";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::KernelNotRational: return "KernelNotRational";
    case Errc::InvalidDegree: return "InvalidDegree";
    case Errc::EvenDegree: return "EvenDegree";
    case Errc::ReconstructionFailed: return "ReconstructionFailed";
    case Errc::LoopStall: return "LoopStall";
    case Errc::SigmaRequired: return "SigmaRequired";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::NotFound: return "NotFound";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message, std::optional<std::size_t> index)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), index_(index) {}

}  // namespace isogenix
