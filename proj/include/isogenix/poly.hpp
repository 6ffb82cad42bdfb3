#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isogenix/detail/kernels.hpp"
#include "isogenix/field.hpp"

namespace isogenix {

/// Dense univariate polynomial over F_p, ascending coefficients, no trailing zeros.
class Polynomial {
 public:
  explicit Polynomial(FieldRef field);
  /// Takes canonical residues (not re-reduced); trailing zeros are trimmed.
  Polynomial(FieldRef field, Coeffs raw);
  Polynomial(FieldRef field, std::span<const FieldElement> coeffs);
  static Polynomial from_longs(FieldRef field, std::initializer_list<long> coeffs);
  static Polynomial from_strings(FieldRef field, const std::vector<std::string>& coeffs);
  static Polynomial monomial(FieldRef field, std::size_t degree);

  const FieldRef& field() const noexcept { return field_; }
  const Coeffs& raw() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  std::size_t size() const noexcept { return c_.size(); }

  FieldElement coeff(std::size_t i) const;
  FieldElement leading() const;
  std::vector<FieldElement> coefficients() const;
  std::vector<std::string> to_strings() const;

  FieldElement operator()(const FieldElement& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial scaled(const FieldElement& c) const;
  /// x^n * p(1/x), n >= degree.
  Polynomial reversed(std::size_t n) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  FieldRef field_;
  Coeffs c_;
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b, MulStrategy strategy = MulStrategy::Auto);
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);
/// a / b, failing with InexactDivision on a nonzero remainder.
Polynomial poly_exact_div(const Polynomial& a, const Polynomial& b);
Polynomial poly_gcd(Polynomial a, Polynomial b);
/// Π (x - r) over the given roots, with multiplicity.
Polynomial poly_from_roots(const FieldRef& field, std::span<const FieldElement> roots);

/// N/D in lowest terms with D monic.
class RationalFunction {
 public:
  /// Cancels the gcd and normalizes D; DivisionByZero for D = 0.
  RationalFunction(Polynomial numerator, Polynomial denominator);
  /// Skips the gcd when the caller already knows N and D are coprime.
  static RationalFunction from_coprime(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Coprime {};
  RationalFunction(Coprime, Polynomial numerator, Polynomial denominator);

  Polynomial num_;
  Polynomial den_;
};

}  // namespace isogenix
