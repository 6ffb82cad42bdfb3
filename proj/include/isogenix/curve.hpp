#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "isogenix/field.hpp"
#include "isogenix/poly.hpp"

namespace isogenix {

class PointAffine {
 public:
  /// The identity O.
  PointAffine() = default;
  PointAffine(FieldElement x, FieldElement y);
  static PointAffine identity() { return PointAffine(); }

  bool is_identity() const noexcept { return !xy_.has_value(); }
  /// Coordinates; InvalidArgument on the identity.
  const FieldElement& x() const;
  const FieldElement& y() const;

  friend bool operator==(const PointAffine& a, const PointAffine& b);
  friend bool operator!=(const PointAffine& a, const PointAffine& b) { return !(a == b); }

 private:
  std::optional<std::pair<FieldElement, FieldElement>> xy_;
};

/// y^2 = x^3 + A x + B over F_p, nonsingular.
class Curve {
 public:
  /// SingularCurve when 4A^3 + 27B^2 = 0.
  Curve(FieldElement A, FieldElement B);
  static Curve from_longs(const FieldRef& field, long A, long B);

  const FieldRef& field() const noexcept { return A_.field(); }
  const FieldElement& A() const noexcept { return A_; }
  const FieldElement& B() const noexcept { return B_; }

  /// x^3 + A x + B.
  FieldElement rhs(const FieldElement& x) const;
  bool contains(const PointAffine& P) const;
  /// x^3 + A x + B as a polynomial.
  Polynomial cubic() const;

  friend bool operator==(const Curve& a, const Curve& b) { return a.A_ == b.A_ && a.B_ == b.B_; }
  friend bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }

 private:
  FieldElement A_;
  FieldElement B_;
};

bool is_nonsingular(const FieldElement& A, const FieldElement& B);

PointAffine point_neg(const PointAffine& P, const Curve& E);
/// Chord-and-tangent addition; PointNotOnCurve if an operand is off E.
PointAffine point_add(const PointAffine& P, const PointAffine& Q, const Curve& E);
/// Double-and-add; negative k multiplies -P.
PointAffine scalar_mul(const mpz_class& k, const PointAffine& P, const Curve& E);

/// A uniformly random affine point (never O).
PointAffine random_point(const Curve& E, std::mt19937_64& rng);

/// Default ceiling on p for exhaustive enumeration.
inline constexpr std::uint64_t kEnumerationBound = 1u << 20;

/// All of E(F_p) with O first, then ascending x and ascending y. FieldTooLarge above `bound`.
std::vector<PointAffine> enumerate_group(const Curve& E, std::uint64_t bound = kEnumerationBound);

/// #E(F_p) by a character sum; same bound as enumerate_group.
std::uint64_t group_order(const Curve& E, std::uint64_t bound = kEnumerationBound);

/// Coefficients c_1..c_n of wp(z) = 1/z^2 + sum c_i z^(2i).
class WpExpansion {
 public:
  WpExpansion(FieldRef field, Coeffs c) : field_(std::move(field)), c_(std::move(c)) {}

  std::size_t size() const noexcept { return c_.size(); }
  /// c_i for 1 <= i <= n.
  FieldElement c(std::size_t i) const;
  const Coeffs& raw() const noexcept { return c_; }
  const FieldRef& field() const noexcept { return field_; }

  friend bool operator==(const WpExpansion& a, const WpExpansion& b) { return a.c_ == b.c_; }

 private:
  FieldRef field_;
  Coeffs c_;
};

/// O(n^2) recurrence; needs p > 2n + 3.
WpExpansion wp_expand_quadratic(const Curve& E, std::size_t n);
/// Through R = 1/sqrt(wp) and its differential equation; needs 2..2n+3 to be units.
WpExpansion wp_expand_fast(const Curve& E, std::size_t n);
/// The same expansions from bare coefficients; singular (A, B) are allowed.
WpExpansion wp_expand_quadratic(const FieldElement& A, const FieldElement& B, std::size_t n);
WpExpansion wp_expand_fast(const FieldElement& A, const FieldElement& B, std::size_t n);

namespace detail {
/// Raw c_1..c_n (index 0 holds c_1) for curve coefficients A, B; preconditions are the caller's.
Coeffs wp_quadratic(const FieldContext& F, const mpz_class& A, const mpz_class& B, std::size_t n);
Coeffs wp_fast(const FieldContext& F, const mpz_class& A, const mpz_class& B, std::size_t n);
}  // namespace detail

}  // namespace isogenix
