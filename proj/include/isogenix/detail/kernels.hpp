#pragma once

// Raw coefficient kernels. Vectors hold canonical residues, ascending degree;
// nothing here allocates shared state.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "isogenix/field.hpp"

namespace isogenix {

using Coeffs = std::vector<mpz_class>;

enum class MulStrategy { Auto, Schoolbook, Karatsuba, Kronecker };

/// Build-time thresholds (see CMake options ISOGENIX_KARATSUBA_MIN / ISOGENIX_KRONECKER_MIN).
std::size_t karatsuba_threshold() noexcept;
std::size_t kronecker_threshold() noexcept;

namespace detail {

void trim(Coeffs& a);

/// Full product of a[0..na) and b[0..nb).
Coeffs mul(const FieldContext& F, const mpz_class* a, std::size_t na, const mpz_class* b, std::size_t nb,
           MulStrategy s = MulStrategy::Auto);
Coeffs mul(const FieldContext& F, const Coeffs& a, const Coeffs& b, MulStrategy s = MulStrategy::Auto);

/// Product mod z^n (inputs are truncated to n first). Result has exactly n entries.
Coeffs mullow(const FieldContext& F, const Coeffs& a, const Coeffs& b, std::size_t n);
Coeffs sqrlow(const FieldContext& F, const Coeffs& a, std::size_t n);

/// Precisions for Newton lifting, ascending and ending at n: ..., ceil(n/2), n.
std::vector<std::size_t> newton_schedule(std::size_t n);

/// 1/f mod z^n; f[0] must be nonzero and f.size() >= n is not required (missing terms are zero).
Coeffs inverse(const FieldContext& F, const Coeffs& f, std::size_t n);

/// Term-wise derivative (drops the constant) and antiderivative with constant 0.
Coeffs derivative(const FieldContext& F, const Coeffs& f);
Coeffs integral(const FieldContext& F, const Coeffs& f, const std::vector<mpz_class>& inv);

/// log and exp mod z^n; `inv` must hold 1/k for k < n.
Coeffs log(const FieldContext& F, const Coeffs& g, std::size_t n, const std::vector<mpz_class>& inv);
Coeffs exp(const FieldContext& F, const Coeffs& f, std::size_t n, const std::vector<mpz_class>& inv);

/// Quotient and remainder for b with nonzero leading coefficient.
void divmod(const FieldContext& F, const Coeffs& a, const Coeffs& b, Coeffs& q, Coeffs& r);

/// Π (x - r_i) via a product tree.
Coeffs from_roots(const FieldContext& F, const std::vector<mpz_class>& roots);

/// Evaluate at a point (Horner).
mpz_class eval(const FieldContext& F, const Coeffs& a, const mpz_class& x);

}  // namespace detail
}  // namespace isogenix
