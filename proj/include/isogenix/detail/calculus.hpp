#pragma once

// Raw-residue versions of the series solvers. Callers validate preconditions
// (units, constant terms, precision); these only compute.

#include <utility>
#include <vector>

#include "isogenix/detail/kernels.hpp"

namespace isogenix::detail {

/// f mod z^n with a f' + b f = c, f(0) = alpha. a, b, c are read mod z^(n-1); a[0] != 0.
Coeffs solve_linear_ode(const FieldContext& F, const Coeffs& a, const Coeffs& b, const Coeffs& c,
                        const mpz_class& alpha, std::size_t n, const std::vector<mpz_class>& inv);

/// f mod z^n with f'^2 = sum_j G[j](z) f^j, f(0) = alpha, f'(0) = beta.
Coeffs solve_nonlinear_ode_sq(const FieldContext& F, const std::vector<Coeffs>& G, const mpz_class& alpha,
                              const mpz_class& beta, std::size_t n, const std::vector<mpz_class>& inv);

/// f(g) mod z^n by baby-step/giant-step; g[0] must be 0.
Coeffs compose(const FieldContext& F, const Coeffs& f, const Coeffs& g, std::size_t n);

/// Monic degree-n polynomial from power sums ps[i] = p_{i+1}, i < n.
Coeffs power_sums_to_poly(const FieldContext& F, const Coeffs& ps, const std::vector<mpz_class>& inv);

/// p_1..p_n of a monic polynomial.
Coeffs poly_to_power_sums(const FieldContext& F, const Coeffs& f, std::size_t n);

/// (P, Q) with deg P <= n, deg Q <= m, f Q = P mod z^(n+m+1), Q(0) != 0, Q monic.
/// Throws NoSolution when no such pair exists or the pair does not extend to all of f.
std::pair<Coeffs, Coeffs> pade(const FieldContext& F, const Coeffs& f, std::size_t n, std::size_t m);

}  // namespace isogenix::detail
