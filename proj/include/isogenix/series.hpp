#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "isogenix/field.hpp"
#include "isogenix/poly.hpp"

namespace isogenix {

/// Truncated Laurent series  sum_i c[i] z^(v+i), known mod z^(v+n) where n = c.size() >= 1.
class Series {
 public:
  Series(FieldRef field, Coeffs raw, long valuation = 0);
  Series(FieldRef field, std::span<const FieldElement> coeffs, long valuation = 0);
  static Series zero(FieldRef field, std::size_t n, long valuation = 0);
  static Series one(FieldRef field, std::size_t n);
  static Series from_longs(FieldRef field, std::initializer_list<long> coeffs, long valuation = 0);
  /// p mod z^n.
  static Series from_poly(const Polynomial& p, std::size_t n);

  const FieldRef& field() const noexcept { return field_; }
  const Coeffs& raw() const noexcept { return c_; }
  std::size_t precision() const noexcept { return c_.size(); }
  long valuation() const noexcept { return v_; }
  /// Exponent at which knowledge stops: the series is known mod z^end().
  long end() const noexcept { return v_ + static_cast<long>(c_.size()); }

  /// Coefficient of z^(valuation + i).
  FieldElement coeff(std::size_t i) const;
  /// Coefficient of z^k; zero below the valuation, InsufficientPrecision at or past end().
  FieldElement at(long k) const;
  std::vector<FieldElement> coefficients() const;

  /// Keeps the first n stored terms.
  Series truncated(std::size_t n) const;
  /// Multiplies by z^k.
  Series shifted(long k) const;
  /// Ordinary-series coefficients of z^0..z^(n-1); fails if those are not all known
  /// or a nonzero negative-power term is present.
  Coeffs dense(std::size_t n, const char* what) const;
  Polynomial to_polynomial() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  /// Same field, valuation and stored coefficients.
  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  FieldRef field_;
  Coeffs c_;
  long v_;
};

Series series_reciprocal(const Series& f, std::size_t n);
Series series_log(const Series& g, std::size_t n);
Series series_exp(const Series& f, std::size_t n);
/// Loses one term of precision for ordinary series.
Series derivative(const Series& f);
/// Gains one term; constant of integration 0.
Series antiderivative(const Series& f);

Series solve_linear_ode(const Series& a, const Series& b, const Series& c, const FieldElement& alpha, std::size_t n);
/// G[j] is the coefficient of t^j in G(z, t).
Series solve_nonlinear_ode_sq(std::span<const Series> G, const FieldElement& alpha, const FieldElement& beta,
                              std::size_t n);
Series compose(const Series& f, const Series& g, std::size_t n);
RationalFunction pade_reconstruct(const Series& f, std::size_t max_num_deg, std::size_t max_den_deg);

/// Needs a nonempty list to know the field; the overload below also accepts n = 0.
Polynomial power_sums_to_poly(std::span<const FieldElement> power_sums);
Polynomial power_sums_to_poly(const FieldRef& field, std::span<const FieldElement> power_sums);
std::vector<FieldElement> poly_to_power_sums(const Polynomial& f, std::size_t n);

}  // namespace isogenix
