#include "common.hpp"

namespace isogenix {

namespace {

using iso::Inputs;

// D (and g in half mode) from h_1..h_n, recording the power sums.
Isogeny from_h(const Curve& E, const Curve& Et, unsigned long ell, const Inputs& in, const Coeffs& h,
               const FieldElement& sigma, bool half, IsogenyWorkspace* ws) {
  const FieldContext& F = in.F;
  if (half) {
    const std::size_t d = (ell - 1) / 2;
    mpz_class q1;
    F.mul(q1, sigma.value(), F.inv_small(2));
    Coeffs q = iso::psums_from_h(in, h, F.reduce(mpz_class(static_cast<unsigned long>(d))), q1, d, 2);
    Coeffs g = iso::poly_from_psums(F, q);
    if (ws) {
      ws->psums = iso::elements_of(in.field, q);
      ws->psums_halved = true;
    }
    Coeffs D = detail::mul(F, g, g);
    return iso::assemble(E, Et, ell, std::move(D), sigma, std::move(g));
  }
  Coeffs s = iso::psums_from_h(in, h, F.reduce(mpz_class(ell - 1)), sigma.value(), ell - 1, 1);
  if (ws) {
    ws->psums = iso::elements_of(in.field, s);
    ws->psums_halved = false;
  }
  return iso::assemble(E, Et, ell, iso::poly_from_psums(F, s), sigma, std::nullopt);
}

// Number of h_i the power-sum recurrence consumes; l >= 2.
std::size_t h_count(unsigned long ell, bool half) { return half ? (ell - 1) / 2 - 1 : ell - 2; }

void store_h(IsogenyWorkspace* ws, const FieldRef& field, const Coeffs& h) {
  if (!ws) return;
  Coeffs tail(h.size() > 1 ? h.begin() + 1 : h.end(), h.end());
  ws->h = iso::series_of(field, std::move(tail), 1);
}

struct FastResult {
  Coeffs C, S, T, U;
};

// T mod u^n with (T + 2u T')^2 = c (1 + A~ u^2 T^4 + B~ u^3 T^6), T(0) = 1.
// This is S'^2 = C (1 + A~ S^4 + B~ S^6) after S = x T(x^2), C(x) = c(x^2).
// Newton on T: the correction d solves d + 2u d' - a d = r with a = K/(2W),
// which the factor mu = exp(-int a/(2u)) turns into y_j (2j + 1) = (mu r)_j.
Coeffs solve_t(const Inputs& in, const Coeffs& c, std::size_t n) {
  const FieldContext& F = in.F;
  if (n == 0) return {};
  const std::vector<mpz_class> inv = F.small_inverses(2 * n);
  const mpz_class half = F.inv_small(2);
  Coeffs T{mpz_class(1)};
  for (std::size_t m : detail::newton_schedule(n)) {
    const std::size_t k = T.size();
    if (m <= k) continue;
    const std::size_t h = m - k;
    Coeffs T2 = detail::sqrlow(F, T, m);
    Coeffs T4 = detail::sqrlow(F, T2, m);
    Coeffs T6 = detail::mullow(F, T4, T2, m);
    Coeffs P(m);
    P[0] = 1;
    mpz_class t;
    for (std::size_t i = 2; i < m; ++i) {
      F.mul(P[i], in.At, T4[i - 2]);
      if (i < 3) continue;
      F.mul(t, in.Bt, T6[i - 3]);
      F.add(P[i], P[i], t);
    }
    Coeffs W(m);
    for (std::size_t i = 0; i < k; ++i) F.mul_ui(W[i], T[i], 2 * i + 1);
    Coeffs cP = detail::mullow(F, c, P, m);
    Coeffs W2 = detail::sqrlow(F, W, m);
    Coeffs phi(h);
    for (std::size_t i = 0; i < h; ++i) F.sub(phi[i], W2[k + i], cP[k + i]);

    // c P'(T) = u^2 K with K = c T^3 (4A~ + 6B~ u T^2), needed mod u^h.
    Coeffs T3 = detail::mullow(F, T2, T, h);
    Coeffs Q(h);
    F.mul_ui(Q[0], in.At, 4);
    F.mul_ui(t, in.Bt, 6);
    for (std::size_t i = 1; i < h; ++i) F.mul(Q[i], t, T2[i - 1]);
    Coeffs K = detail::mullow(F, c, detail::mullow(F, T3, Q, h), h);
    Coeffs iW = detail::inverse(F, W, h);
    // a/(2u) = u K/(4W).
    Coeffs aK = detail::mullow(F, K, iW, h);
    Coeffs e(h > 1 ? h - 1 : 0);
    const mpz_class quarter = F.inv_small(4);
    for (std::size_t i = 0; i + 2 < h; ++i) F.mul(e[i + 1], aK[i], quarter);
    Coeffs ie = detail::integral(F, e, inv);
    ie.resize(h);
    Coeffs neg(h);
    for (std::size_t i = 0; i < h; ++i) F.neg(neg[i], ie[i]);
    Coeffs mu = detail::exp(F, neg, h, inv);
    Coeffs imu = detail::exp(F, ie, h, inv);

    Coeffs r = detail::mullow(F, phi, iW, h);
    for (auto& x : r) F.mul(x, x, half);
    Coeffs y = detail::mullow(F, mu, r, h);
    for (std::size_t i = 0; i < h; ++i) {
      F.neg(y[i], y[i]);
      F.mul(y[i], y[i], F.inv_small(2 * (k + i) + 1));
    }
    Coeffs d = detail::mullow(F, imu, y, h);
    T.resize(m);
    for (std::size_t i = 0; i < h; ++i) T[k + i] = std::move(d[i]);
  }
  return T;
}

// C = 1/(1 + A x^4 + B x^6) mod x^(nS-1); S with S'^2 = C (1 + A~ S^4 + B~ S^6) mod x^nS;
// S = x T(x^2); U = 1/T^2 mod x^nU.
FastResult fast_series(const Inputs& in, std::size_t nS, std::size_t nU) {
  const FieldContext& F = in.F;
  const std::size_t nT = nS / 2;
  Coeffs den{1, 0, in.A, in.B};
  Coeffs c = detail::inverse(F, den, std::max<std::size_t>(nT, 1));
  FastResult r;
  r.T = solve_t(in, c, nT);
  r.C.assign(nS - 1, mpz_class(0));
  for (std::size_t i = 0; 2 * i < nS - 1 && i < c.size(); ++i) r.C[2 * i] = c[i];
  r.S.assign(nS, mpz_class(0));
  for (std::size_t k = 0; k < nT; ++k) r.S[2 * k + 1] = r.T[k];
  r.U = detail::inverse(F, detail::sqrlow(F, r.T, nU), nU);
  return r;
}

void store_fast(IsogenyWorkspace* ws, const FieldRef& field, const FastResult& r) {
  if (!ws) return;
  ws->C = iso::series_of(field, r.C);
  ws->S = iso::series_of(field, r.S);
  ws->T = iso::series_of(field, r.T);
  ws->U = iso::series_of(field, r.U);
}

}  // namespace

Isogeny elkies1998(const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& sigma,
                   const AlgorithmOptions& opts) {
  Inputs in = iso::prepare(E, Et, ell, sigma);
  if (ell == 1) return iso::trivial(E, Et, opts);
  const bool half = iso::use_half(ell, opts.mode);
  const FieldContext& F = in.F;
  F.require_units_upto(2 * ell - 1, "elkies1998");
  if (opts.workspace) *opts.workspace = IsogenyWorkspace{};

  const std::size_t n = h_count(ell, half);
  Coeffs h = iso::initial_h(in, n);
  mpz_class acc, t, u;
  for (std::size_t k = 3; k <= n; ++k) {
    // sum_{i=1}^{k-2} h_i h_{k-1-i}, folded in half.
    acc = 0;
    for (std::size_t i = 1, j = k - 2; i < j; ++i, --j) mpz_addmul(acc.get_mpz_t(), h[i].get_mpz_t(), h[j].get_mpz_t());
    acc *= 2;
    if (k % 2 == 1) {
      const std::size_t m = (k - 1) / 2;
      mpz_addmul(acc.get_mpz_t(), h[m].get_mpz_t(), h[m].get_mpz_t());
    }
    F.reduce_in_place(acc);
    F.mul_ui(acc, acc, 3);
    F.mul(acc, acc, F.inv_small(k - 2));
    F.mul_ui(u, in.A, 2 * k - 3);
    F.mul(u, u, h[k - 2]);
    F.sub(acc, acc, u);
    if (k > 3) {
      F.mul_ui(u, in.B, 2 * (k - 3));
      F.mul(u, u, h[k - 3]);
      F.sub(acc, acc, u);
    }
    F.mul(h[k], acc, F.inv_small(2 * k + 3));
  }
  store_h(opts.workspace, in.field, h);
  return from_h(E, Et, ell, in, h, sigma, half, opts.workspace);
}

Isogeny fast_elkies(const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& sigma,
                    const AlgorithmOptions& opts) {
  Inputs in = iso::prepare(E, Et, ell, sigma);
  if (ell == 1) return iso::trivial(E, Et, opts);
  const bool half = iso::use_half(ell, opts.mode);
  in.F.require_units_upto(2 * ell - 1, "fast_elkies");
  if (opts.workspace) *opts.workspace = IsogenyWorkspace{};

  FastResult r = half ? fast_series(in, ell + 1, (ell + 1) / 2) : fast_series(in, 2 * ell, ell);
  store_fast(opts.workspace, in.field, r);
  const std::size_t n = h_count(ell, half);
  Coeffs h(n + 1);
  for (std::size_t i = 1; i <= n; ++i) h[i] = r.U[i + 1];
  store_h(opts.workspace, in.field, h);
  return from_h(E, Et, ell, in, h, sigma, half, opts.workspace);
}

Isogeny fast_elkies_prime(const Curve& E, const Curve& Et, unsigned long ell, const AlgorithmOptions& opts) {
  Inputs in = iso::prepare(E, Et, ell);
  if (ell == 1) return iso::trivial(E, Et, opts);
  const bool half = iso::use_half(ell, opts.mode);
  const FieldContext& F = in.F;
  F.require_units_upto(8 * ell - 5, "fast_elkies_prime");
  if (opts.workspace) *opts.workspace = IsogenyWorkspace{};

  FastResult r = half ? fast_series(in, 4 * ell, 2 * ell) : fast_series(in, 8 * ell - 4, 4 * ell - 2);
  store_fast(opts.workspace, in.field, r);

  // U = x^l N(1/x) / (x^(l-1) D(1/x)).
  Coeffs P, Q;
  try {
    std::tie(P, Q) = detail::pade(F, r.U, ell, ell - 1);
  } catch (const Error& e) {
    if (e.code() != Errc::NoSolution) throw;
    throw Error(Errc::ReconstructionFailed, std::string("no rational function fits: ") + e.what());
  }
  const mpz_class q0inv = F.inverse(Q[0]);
  Coeffs D(ell), Npade(ell + 1);
  for (std::size_t i = 0; i < Q.size(); ++i) F.mul(D[ell - 1 - i], Q[i], q0inv);
  for (std::size_t i = 0; i < P.size(); ++i) F.mul(Npade[ell - i], P[i], q0inv);
  detail::trim(Npade);

  const FieldElement sigma = iso::sigma_of(in.field, D, ell);
  std::optional<Coeffs> g;
  if (half) {
    Coeffs q;
    g = iso::kernel_half(F, D, ell, &q);
    if (opts.workspace) {
      opts.workspace->psums = iso::elements_of(in.field, q);
      opts.workspace->psums_halved = true;
    }
  }
  Coeffs h(ell - 1);
  for (std::size_t i = 1; i + 1 < ell && i + 1 < r.U.size(); ++i) h[i] = r.U[i + 1];
  store_h(opts.workspace, in.field, h);

  try {
    Isogeny I = iso::assemble(E, Et, ell, std::move(D), sigma, std::move(g));
    if (I.N.raw() != Npade) throw Error(Errc::ReconstructionFailed, "numerator disagrees with the N/D identity");
    return I;
  } catch (const Error& e) {
    if (e.code() != Errc::InexactDivision) throw;
    throw Error(Errc::ReconstructionFailed, "reconstructed D does not satisfy the N/D identity");
  }
}

}  // namespace isogenix
