#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isogenix/curve.hpp"
#include "isogenix/poly.hpp"

namespace isogenix {

/// Abscissas of the nonzero kernel points and the elementary symmetric
/// functions of all l-1 of them (a +-P pair contributes its abscissa twice).
struct KernelData {
  std::vector<FieldElement> xs;
  FieldElement sigma;
  FieldElement sigma2;
  FieldElement sigma3;
};

/// Normalized isogeny I(x, y) = (N/D, y (N/D)').
struct Isogeny {
  Curve source;
  Curve target;
  unsigned long ell;
  Polynomial N;
  Polynomial D;
  FieldElement sigma;
  /// Present for odd l when D = g^2 was computed through g.
  std::optional<Polynomial> g;
};

/// sigma, sigma2, sigma3 of the roots of a monic D (read off its top coefficients).
KernelData kernel_data_from_polynomial(const Polynomial& D);

/// N from D through N D = [(l x - sigma) D - (3x^2 + A) D'] D - 2 (x^3 + A x + B)(D'' D - D'^2).
/// InexactDivision if D does not divide the right-hand side.
Polynomial numerator_from_denominator(const Curve& E, const Polynomial& D, const FieldElement& sigma, unsigned long ell);

/// Target curve coefficients from the symmetric functions of the kernel abscissas.
std::pair<FieldElement, FieldElement> velu_target(const Curve& E, unsigned long ell, const FieldElement& sigma,
                                                  const FieldElement& sigma2, const FieldElement& sigma3);

/// Vélu's construction from the nonzero points of a rational subgroup of order
/// kernel_points.size() + 1. NotASubgroup unless the points (with O) are closed.
std::pair<Curve, Isogeny> velu_from_kernel(const Curve& E, const std::vector<PointAffine>& kernel_points);
/// Both points over each abscissa (one for 2-torsion). KernelNotRational when an
/// abscissa does not lift to F_p.
std::vector<PointAffine> kernel_points_from_xs(const Curve& E, const std::vector<FieldElement>& xs);
/// The same construction from a monic kernel polynomial of degree l - 1.
std::pair<Curve, Isogeny> velu_from_kernel_polynomial(const Curve& E, const Polynomial& D, unsigned long ell);

/// Image of P; O for O and for kernel points. PointNotOnCurve if P (or its image) is off the curve.
PointAffine isogeny_apply(const Isogeny& I, const PointAffine& P);

struct VerificationReport {
  bool identity = false;     // (x^3+Ax+B)(N'D - ND')^2 = N^3 D + A~ N D^3 + B~ D^4
  bool invariants = false;   // degrees, monicity, sigma coefficient, g^2 = D
  bool morphism = false;     // I(P + Q) = I(P) + I(Q) on random pairs
  bool nonsingular = false;  // 4A~^3 + 27B~^2 != 0
  std::vector<std::string> failures;

  bool ok() const noexcept { return identity && invariants && morphism && nonsingular; }
  /// Name of the first failing check, empty when all pass.
  std::string first_failure() const { return failures.empty() ? std::string() : failures.front(); }
};

inline constexpr std::size_t kDefaultMorphismSamples = 8;

VerificationReport isogeny_verify(const Isogeny& I, std::size_t samples = kDefaultMorphismSamples,
                                  std::uint64_t seed = 0x5eed);

}  // namespace isogenix
