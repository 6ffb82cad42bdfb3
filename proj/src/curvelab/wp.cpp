#include "isogenix/curve.hpp"
#include "isogenix/detail/calculus.hpp"

namespace isogenix {

FieldElement WpExpansion::c(std::size_t i) const {
  if (i == 0 || i > c_.size()) throw Error(Errc::InvalidArgument, "c_i is indexed from 1 to n");
  return FieldElement(field_, c_[i - 1]);
}

namespace detail {

Coeffs wp_quadratic(const FieldContext& F, const mpz_class& A, const mpz_class& B, std::size_t n) {
  // c[k] holds c_k; c[0] unused.
  Coeffs c(n + 1);
  if (n >= 1) {
    F.mul(c[1], A, F.inv_small(5));
    F.neg(c[1], c[1]);
  }
  if (n >= 2) {
    F.mul(c[2], B, F.inv_small(7));
    F.neg(c[2], c[2]);
  }
  mpz_class acc, d;
  for (std::size_t k = 3; k <= n; ++k) {
    // sum_{i=1}^{k-2} c_i c_{k-1-i}, folded in half.
    acc = 0;
    const std::size_t m = k - 1;
    for (std::size_t i = 1; 2 * i < m; ++i) mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), c[m - i].get_mpz_t());
    acc *= 2;
    if (m % 2 == 0) mpz_addmul(acc.get_mpz_t(), c[m / 2].get_mpz_t(), c[m / 2].get_mpz_t());
    F.reduce_in_place(acc);
    F.mul(d, F.inv_small(k - 2), F.inv_small(2 * k + 3));
    F.mul_ui(d, d, 3);
    F.mul(c[k], acc, d);
  }
  c.erase(c.begin());
  return c;
}

Coeffs wp_fast(const FieldContext& F, const mpz_class& A, const mpz_class& B, std::size_t n) {
  if (n == 0) return {};
  const std::size_t nr = 2 * n + 4;
  auto inv = F.small_inverses(nr - 1);
  // R'^2 = B R^6 + A R^4 + 1.
  std::vector<Coeffs> G(7, Coeffs{});
  G[0] = {mpz_class(1)};
  G[4] = {A};
  G[6] = {B};
  Coeffs R = solve_nonlinear_ode_sq(F, G, mpz_class(0), mpz_class(1), nr, inv);
  Coeffs Q = sqrlow(F, R, nr + 1);
  Coeffs Qhat(Q.begin() + 2, Q.end());
  Coeffs W = inverse(F, Qhat, 2 * n + 3);
  Coeffs c(n);
  for (std::size_t i = 1; i <= n; ++i) c[i - 1] = W[2 * i + 2];
  return c;
}

}  // namespace detail

WpExpansion wp_expand_quadratic(const FieldElement& A, const FieldElement& B, std::size_t n) {
  require_same_field(*A.field(), *B.field());
  A.field()->require_units_upto(2 * n + 3, "wp_expand_quadratic");
  return WpExpansion(A.field(), detail::wp_quadratic(*A.field(), A.value(), B.value(), n));
}

WpExpansion wp_expand_fast(const FieldElement& A, const FieldElement& B, std::size_t n) {
  require_same_field(*A.field(), *B.field());
  A.field()->require_units_upto(2 * n + 3, "wp_expand_fast");
  return WpExpansion(A.field(), detail::wp_fast(*A.field(), A.value(), B.value(), n));
}

WpExpansion wp_expand_quadratic(const Curve& E, std::size_t n) { return wp_expand_quadratic(E.A(), E.B(), n); }

WpExpansion wp_expand_fast(const Curve& E, std::size_t n) { return wp_expand_fast(E.A(), E.B(), n); }

}  // namespace isogenix
