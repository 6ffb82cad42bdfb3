#include "common.hpp"

namespace isogenix {

namespace {

using iso::Inputs;

struct AtkinSeries {
  Coeffs c;   // c_0 = 0, c_1..c_(l-2) of wp
  Coeffs Fz;  // F in Z = z^2, mod Z^l
  Coeffs G;   // exp(F) mod Z^l
};

// F(Z) = -sigma Z + 2 sum_{k=1}^{l-2} (l c_k - c~_k) Z^(k+1) / ((2k+1)(2k+2)), G = exp(F).
AtkinSeries atkin_series(const Inputs& in, unsigned long ell, const FieldElement& sigma) {
  const FieldContext& F = in.F;
  const std::size_t n = ell;
  const std::size_t nc = ell >= 3 ? ell - 2 : 1;
  AtkinSeries r;
  r.c = detail::wp_quadratic(F, in.A, in.B, nc);
  r.c.insert(r.c.begin(), mpz_class(0));
  Coeffs ct = detail::wp_quadratic(F, in.At, in.Bt, nc);
  ct.insert(ct.begin(), mpz_class(0));

  r.Fz.assign(n, mpz_class(0));
  if (n > 1) F.neg(r.Fz[1], sigma.value());
  mpz_class t;
  for (std::size_t k = 1; k + 2 <= ell; ++k) {
    F.mul_ui(t, r.c[k], ell);
    F.sub(t, t, ct[k]);
    F.mul_ui(t, t, 2);
    F.mul(t, t, F.inv_small(2 * k + 1));
    F.mul(r.Fz[k + 1], t, F.inv_small(2 * k + 2));
  }
  r.G = detail::exp(F, r.Fz, n, F.small_inverses(n - 1));
  return r;
}

void store_atkin(IsogenyWorkspace* ws, const FieldRef& field, const AtkinSeries& r) {
  if (!ws) return;
  ws->F = iso::series_of(field, r.Fz);
  ws->G = iso::series_of(field, r.G);
}

}  // namespace

Isogeny atkin1992(const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& sigma,
                  const AlgorithmOptions& opts) {
  Inputs in = iso::prepare(E, Et, ell, sigma);
  if (ell == 1) return iso::trivial(E, Et, opts);
  const bool half = iso::use_half(ell, opts.mode);
  const FieldContext& F = in.F;
  F.require_units_upto(2 * ell - 1, "atkin1992");
  if (opts.workspace) *opts.workspace = IsogenyWorkspace{};

  AtkinSeries s = atkin_series(in, ell, sigma);
  store_atkin(opts.workspace, in.field, s);

  // D(wp) = Z^(1-l) G with W = Z wp = 1 + sum c_k Z^(k+1): G = sum_i D_i Z^(l-1-i) W^i.
  // W^i is only read mod Z^(i+1), and the top coefficient is peeled first.
  const std::size_t n = ell;
  Coeffs W(n);
  W[0] = 1;
  for (std::size_t k = 1; k + 1 < n; ++k) W[k + 1] = s.c[k];
  std::vector<Coeffs> pw(n);
  Coeffs cur{1};
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) cur = detail::mullow(F, cur, W, n);
    pw[i].assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(std::min(cur.size(), i + 1)));
    pw[i].resize(i + 1);
  }
  Coeffs T = s.G;
  Coeffs D(n);
  mpz_class u;
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t sh = n - 1 - i;
    D[i] = T[sh];
    if (sgn(D[i]) == 0) continue;
    for (std::size_t j = 0; j <= i; ++j) {
      F.mul(u, D[i], pw[i][j]);
      F.sub(T[sh + j], T[sh + j], u);
    }
  }
  std::optional<Coeffs> g;
  if (half) g = iso::kernel_half(F, D, ell);
  return iso::assemble(E, Et, ell, std::move(D), sigma, std::move(g));
}

Isogeny atkin_modcomp(const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& sigma,
                      const AlgorithmOptions& opts) {
  Inputs in = iso::prepare(E, Et, ell, sigma);
  if (ell == 1) return iso::trivial(E, Et, opts);
  const bool half = iso::use_half(ell, opts.mode);
  const FieldContext& F = in.F;
  F.require_units_upto(2 * ell - 1, "atkin_modcomp");
  if (opts.workspace) *opts.workspace = IsogenyWorkspace{};

  AtkinSeries s = atkin_series(in, ell, sigma);
  store_atkin(opts.workspace, in.field, s);

  // J = sum a_i x^i with I(x) = wp^{-1}(1/x) = sqrt(x) J(x).
  const std::size_t n = ell;
  Coeffs a(std::max<std::size_t>(n, 3));
  a[0] = 1;
  F.mul(a[2], in.A, F.inv_small(10));
  F.neg(a[2], a[2]);
  mpz_class t, u;
  for (std::size_t i = 2; i + 1 < n; ++i) {
    F.mul_ui(t, in.B, 2 * i - 3);
    F.mul(t, t, a[i - 2]);
    F.mul_ui(u, in.A, 2 * i);
    F.mul(u, u, a[i - 1]);
    F.add(t, t, u);
    F.mul_ui(t, t, 2 * i - 1);
    F.mul(t, t, F.inv_small(2 * (i + 1)));
    F.mul(t, t, F.inv_small(2 * i + 3));
    F.neg(a[i + 1], t);
  }
  a.resize(n);

  // K = I^2 = x J^2, so G(K) = exp(F) at Z = z^2 = I^2.
  Coeffs K(n);
  Coeffs J2 = detail::sqrlow(F, a, n);
  for (std::size_t i = 1; i < n; ++i) K[i] = J2[i - 1];
  Coeffs GK = detail::compose(F, s.G, K, n);

  // D(1/x) x^(l-1) = J^(2-2l) G(K).
  auto inv = F.small_inverses(n - 1);
  Coeffs L = detail::log(F, a, n, inv);
  const mpz_class e = F.reduce(mpz_class(2) - mpz_class(2) * mpz_class(ell));
  for (auto& x : L) F.mul(x, x, e);
  Coeffs Jp = detail::exp(F, L, n, inv);
  Coeffs revD = detail::mullow(F, GK, Jp, n);
  Coeffs D(revD.rbegin(), revD.rend());

  if (opts.workspace) {
    opts.workspace->J = iso::series_of(in.field, a);
    opts.workspace->inv_wp = iso::series_of(in.field, K);
  }
  std::optional<Coeffs> g;
  if (half) g = iso::kernel_half(F, D, ell);
  return iso::assemble(E, Et, ell, std::move(D), sigma, std::move(g));
}

}  // namespace isogenix
