#pragma once

// Shared plumbing for the isogeny algorithms. Everything below works on raw residues.

#include <optional>

#include "isogenix/algorithms.hpp"
#include "isogenix/detail/calculus.hpp"
#include "isogenix/detail/kernels.hpp"

namespace isogenix::iso {

struct Inputs {
  const FieldContext& F;
  FieldRef field;
  mpz_class A, B, At, Bt;
};

/// Same field on both curves and l >= 1.
Inputs prepare(const Curve& E, const Curve& Et, unsigned long ell);
/// Checks sigma's field too.
Inputs prepare(const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& sigma);

/// True when the computation should go through g.
bool use_half(unsigned long ell, KernelMode mode);

/// The identity isogeny, for l = 1.
Isogeny trivial(const Curve& E, const Curve& Et, const AlgorithmOptions& opts);

/// h_1 = (A - A~)/5, h_2 = (B - B~)/7 (only the first n).
Coeffs initial_h(const Inputs& in, std::size_t n);

/// Power sums from h by the linear recurrence
///   h_i = k(2i+1) s_{i+1} + k(2i-1) A s_{i-1} + k(2i-2) B s_{i-2},
/// k = 1 for p_i of D and k = 2 for q_i of g. h[i] holds h_i. Returns s_0..s_count.
Coeffs psums_from_h(const Inputs& in, const Coeffs& h, const mpz_class& s0, const mpz_class& s1,
                    std::size_t count, unsigned long k);

/// Monic polynomial from s_0..s_count (s_0 ignored).
Coeffs poly_from_psums(const FieldContext& F, const Coeffs& s);

/// g with g^2 = D for odd l, from the halved power sums of D; q receives q_0..q_d.
/// ReconstructionFailed when D is not a square of that shape.
Coeffs kernel_half(const FieldContext& F, const Coeffs& D, unsigned long ell, Coeffs* q = nullptr);

/// Wraps up: N from D via the N/D identity, sigma stored as given.
Isogeny assemble(const Curve& E, const Curve& Et, unsigned long ell, Coeffs D, const FieldElement& sigma,
                 std::optional<Coeffs> g);

/// -coefficient of x^(l-2) in D.
FieldElement sigma_of(const FieldRef& field, const Coeffs& D, unsigned long ell);

Series series_of(const FieldRef& field, Coeffs c, long valuation = 0);
std::vector<FieldElement> elements_of(const FieldRef& field, const Coeffs& c);

}  // namespace isogenix::iso
