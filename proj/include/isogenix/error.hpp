#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace isogenix {

enum class Errc {
  // fieldcore
  NotPrime,
  TooSmall,
  DivisionByZero,
  NotAUnit,
  ContextMismatch,
  ParseError,
  // polyseries
  CharacteristicTooSmall,
  InsufficientPrecision,
  ZeroConstantTerm,
  ConstantTermNotOne,
  NonzeroConstantTerm,
  NonzeroConstantTermInner,
  NotMonic,
  SingularAtOrigin,
  InconsistentInitialConditions,
  ZeroInitialDerivative,
  NoSolution,
  InexactDivision,
  // curvelab
  SingularCurve,
  PointNotOnCurve,
  FieldTooLarge,
  NotASubgroup,
  KernelNotRational,
  // isogenylab
  InvalidDegree,
  EvenDegree,
  ReconstructionFailed,
  LoopStall,
  SigmaRequired,
  VerificationFailed,
  // benchcli
  NotFound,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

/// Every library failure is reported through this exception; `code()` is the
/// stable, machine-readable part and `what()` carries the human context.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::optional<std::size_t> index = std::nullopt);

  Errc code() const noexcept { return code_; }
  /// Position of the offending entry for element-wise operations (e.g. batch inversion).
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
};

}  // namespace isogenix
