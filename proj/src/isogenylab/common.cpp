#include "common.hpp"

namespace isogenix::iso {

Inputs prepare(const Curve& E, const Curve& Et, unsigned long ell) {
  if (ell < 1) throw Error(Errc::InvalidDegree, "degree must be at least 1");
  require_same_field(*E.field(), *Et.field());
  const FieldRef& f = E.field();
  return Inputs{*f, f, E.A().value(), E.B().value(), Et.A().value(), Et.B().value()};
}

Inputs prepare(const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& sigma) {
  Inputs in = prepare(E, Et, ell);
  require_same_field(in.F, *sigma.field());
  return in;
}

bool use_half(unsigned long ell, KernelMode mode) {
  switch (mode) {
    case KernelMode::Full:
      return false;
    case KernelMode::Half:
      if (ell % 2 == 0) throw Error(Errc::EvenDegree, "g-mode needs an odd degree");
      return true;
    case KernelMode::Auto:
      break;
  }
  return ell % 2 == 1;
}

Isogeny trivial(const Curve& E, const Curve& Et, const AlgorithmOptions& opts) {
  const FieldRef& f = E.field();
  if (opts.workspace) *opts.workspace = IsogenyWorkspace{};
  std::optional<Polynomial> g;
  if (opts.mode != KernelMode::Full) g = Polynomial::from_longs(f, {1});
  return Isogeny{E, Et, 1, Polynomial::from_longs(f, {0, 1}), Polynomial::from_longs(f, {1}), FieldElement(f, 0L),
                 std::move(g)};
}

Coeffs initial_h(const Inputs& in, std::size_t n) {
  const FieldContext& F = in.F;
  Coeffs h(n + 1);
  if (n >= 1) {
    F.sub(h[1], in.A, in.At);
    F.mul(h[1], h[1], F.inv_small(5));
  }
  if (n >= 2) {
    F.sub(h[2], in.B, in.Bt);
    F.mul(h[2], h[2], F.inv_small(7));
  }
  return h;
}

Coeffs psums_from_h(const Inputs& in, const Coeffs& h, const mpz_class& s0, const mpz_class& s1,
                    std::size_t count, unsigned long k) {
  const FieldContext& F = in.F;
  Coeffs s(count + 1);
  s[0] = s0;
  if (count >= 1) s[1] = s1;
  mpz_class t, u;
  for (std::size_t i = 1; i + 1 <= count; ++i) {
    t = h[i];
    F.mul_ui(u, in.A, k * (2 * i - 1));
    F.mul(u, u, s[i - 1]);
    F.sub(t, t, u);
    if (i >= 2) {
      F.mul_ui(u, in.B, k * (2 * i - 2));
      F.mul(u, u, s[i - 2]);
      F.sub(t, t, u);
    }
    F.mul(s[i + 1], t, F.inv_small(k * (2 * i + 1)));
  }
  return s;
}

Coeffs poly_from_psums(const FieldContext& F, const Coeffs& s) {
  Coeffs ps(s.begin() + 1, s.end());
  return detail::power_sums_to_poly(F, ps, F.small_inverses(ps.size()));
}

Coeffs kernel_half(const FieldContext& F, const Coeffs& D, unsigned long ell, Coeffs* q) {
  const std::size_t d = (ell - 1) / 2;
  Coeffs ps = detail::poly_to_power_sums(F, D, d);
  const mpz_class half = F.inv_small(2);
  for (auto& x : ps) F.mul(x, x, half);
  Coeffs g = detail::power_sums_to_poly(F, ps, F.small_inverses(d));
  if (detail::mul(F, g, g) != D) throw Error(Errc::ReconstructionFailed, "reconstructed D is not a square");
  if (q) {
    q->assign(1, F.reduce(mpz_class(static_cast<unsigned long>(d))));
    q->insert(q->end(), ps.begin(), ps.end());
  }
  return g;
}

Isogeny assemble(const Curve& E, const Curve& Et, unsigned long ell, Coeffs D, const FieldElement& sigma,
                 std::optional<Coeffs> g) {
  const FieldRef& f = E.field();
  Polynomial Dp(f, std::move(D));
  Polynomial N = numerator_from_denominator(E, Dp, sigma, ell);
  std::optional<Polynomial> gp;
  if (g) gp = Polynomial(f, std::move(*g));
  return Isogeny{E, Et, ell, std::move(N), std::move(Dp), sigma, std::move(gp)};
}

FieldElement sigma_of(const FieldRef& field, const Coeffs& D, unsigned long ell) {
  if (ell < 2 || D.size() < ell) return FieldElement(field, 0L);
  return -FieldElement(field, D[ell - 2]);
}

Series series_of(const FieldRef& field, Coeffs c, long valuation) {
  if (c.empty()) c.emplace_back(0);
  return Series(field, std::move(c), valuation);
}

std::vector<FieldElement> elements_of(const FieldRef& field, const Coeffs& c) {
  std::vector<FieldElement> out;
  out.reserve(c.size());
  for (const auto& x : c) out.emplace_back(field, x);
  return out;
}

}  // namespace isogenix::iso
