#include <algorithm>

#include "common.hpp"

namespace isogenix {

namespace {

using iso::Inputs;

// c_0..c_n of wp with c_0 = 0.
Coeffs wp_coeffs(const FieldContext& F, const mpz_class& A, const mpz_class& B, std::size_t n) {
  Coeffs c = detail::wp_quadratic(F, A, B, n);
  c.insert(c.begin(), mpz_class(0));
  return c;
}

// Truncated Laurent series in Z: sum co[i] Z^(v+i).
struct Laurent {
  long v = 0;
  Coeffs co;

  void normalize() {
    auto it = std::find_if(co.begin(), co.end(), [](const mpz_class& x) { return sgn(x) != 0; });
    v += static_cast<long>(it - co.begin());
    co.erase(co.begin(), it);
  }
};

}  // namespace

Isogeny stark1972(const Curve& E, const Curve& Et, unsigned long ell, const AlgorithmOptions& opts) {
  Inputs in = iso::prepare(E, Et, ell);
  if (ell == 1) return iso::trivial(E, Et, opts);
  const bool half = iso::use_half(ell, opts.mode);
  const FieldContext& F = in.F;
  const std::size_t P = 2 * ell - 1;
  F.require_units_upto(2 * (P - 1) + 3, "stark1972");
  if (opts.workspace) *opts.workspace = IsogenyWorkspace{};

  // Z wp(Z) = 1 + sum c_k Z^(k+1), in Z = z^2; its powers are cached per call.
  const Coeffs c = wp_coeffs(F, in.A, in.B, P - 1);
  const Coeffs ct = wp_coeffs(F, in.At, in.Bt, P - 1);
  std::vector<Coeffs> W(2);
  W[0] = Coeffs(P + 1);
  W[0][0] = 1;
  W[1] = Coeffs(P + 1);
  W[1][0] = 1;
  for (std::size_t k = 1; k + 1 <= P; ++k) W[1][k + 1] = c[k];
  auto wp_power = [&](std::size_t r) -> const Coeffs& {
    while (W.size() <= r) W.push_back(detail::mullow(F, W.back(), W[1], P + 1));
    return W[r];
  };

  Laurent T{-1, Coeffs(P + 1)};
  T.co[0] = 1;
  for (std::size_t k = 1; k + 1 <= P; ++k) T.co[k + 1] = ct[k];

  Coeffs qprev{1}, q;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > 2 * ell) throw Error(Errc::LoopStall, "continued fraction did not reach degree l-1");
    T.normalize();
    if (T.co.empty()) throw Error(Errc::LoopStall, "series exhausted before the denominator reached degree l-1");
    // Peel the principal part and constant term against powers of wp.
    Coeffs a;
    while (T.v <= 0 && !T.co.empty()) {
      const std::size_t r = static_cast<std::size_t>(-T.v);
      if (a.size() <= r) a.resize(r + 1);
      const mpz_class t = T.co[0];
      a[r] = t;
      const Coeffs& Wr = wp_power(r);
      mpz_class u;
      for (std::size_t i = 0; i < T.co.size() && i < Wr.size(); ++i) {
        F.mul(u, t, Wr[i]);
        F.sub(T.co[i], T.co[i], u);
      }
      if (T.co.size() > Wr.size()) throw Error(Errc::LoopStall, "wp powers known to too little precision");
      T.normalize();
    }
    Coeffs qnew = detail::mul(F, a, q);
    if (qnew.size() < qprev.size()) qnew.resize(qprev.size());
    for (std::size_t i = 0; i < qprev.size(); ++i) F.add(qnew[i], qnew[i], qprev[i]);
    detail::trim(qnew);
    qprev = std::move(q);
    q = std::move(qnew);
    const long deg = static_cast<long>(q.size()) - 1;
    if (deg > static_cast<long>(ell) - 1) throw Error(Errc::LoopStall, "denominator degree jumped past l-1");
    if (deg == static_cast<long>(ell) - 1) break;
    if (T.co.empty()) throw Error(Errc::LoopStall, "series exhausted before the denominator reached degree l-1");
    T = Laurent{-T.v, detail::inverse(F, T.co, T.co.size())};
  }

  const mpz_class lc = F.inverse(q.back());
  for (auto& x : q) F.mul(x, x, lc);
  const FieldElement sigma = iso::sigma_of(in.field, q, ell);
  try {
    std::optional<Coeffs> g;
    if (half) g = iso::kernel_half(F, q, ell);
    return iso::assemble(E, Et, ell, std::move(q), sigma, std::move(g));
  } catch (const Error& e) {
    if (e.code() != Errc::InexactDivision && e.code() != Errc::ReconstructionFailed) throw;
    throw Error(Errc::LoopStall, "continued-fraction denominator does not satisfy the N/D identity");
  }
}

Isogeny elkies1992(const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& sigma,
                   const AlgorithmOptions& opts) {
  Inputs in = iso::prepare(E, Et, ell, sigma);
  if (ell == 1) return iso::trivial(E, Et, opts);
  const bool half = iso::use_half(ell, opts.mode);
  const FieldContext& F = in.F;
  // Solve for s_2..s_(K+1); every (2k+1)! with k <= K must be a unit.
  const std::size_t d = half ? (ell - 1) / 2 : ell - 1;
  const std::size_t K = d - 1;
  F.require_units_upto(half ? ell + 2 : 2 * ell - 1, "elkies1992");
  if (opts.workspace) *opts.workspace = IsogenyWorkspace{};

  const std::size_t nc = std::max<std::size_t>(K, 1);
  const Coeffs c = wp_coeffs(F, in.A, in.B, nc);
  const Coeffs ct = wp_coeffs(F, in.At, in.Bt, nc);

  Coeffs s(d + 1);
  s[0] = F.reduce(mpz_class(static_cast<unsigned long>(d)));
  s[1] = sigma.value();
  const mpz_class scale = half ? F.inv_small(2) : mpz_class(1);
  if (half) F.mul(s[1], s[1], scale);

  // d^(2k) wp / dz^(2k) = sum_j mu[k][j] wp^j.
  std::vector<Coeffs> mu{Coeffs{0, 1}};
  mpz_class fact = 1, rhs, acc, u;
  for (std::size_t k = 1; k <= K; ++k) {
    const Coeffs& prev = mu.back();
    auto at = [&](long j) -> const mpz_class* {
      return j >= 0 && static_cast<std::size_t>(j) < prev.size() ? &prev[static_cast<std::size_t>(j)] : nullptr;
    };
    Coeffs row(k + 2);
    for (std::size_t j = 0; j < k + 2; ++j) {
      const long jl = static_cast<long>(j);
      acc = 0;
      if (auto x = at(jl - 1)) {
        F.mul_ui(u, *x, (2 * j - 2) * (2 * j - 1));
        F.add(acc, acc, u);
      }
      if (auto x = at(jl + 1)) {
        F.mul(u, *x, in.A);
        F.mul_ui(u, u, (2 * j + 1) * (2 * j + 2));
        F.add(acc, acc, u);
      }
      if (auto x = at(jl + 2)) {
        F.mul(u, *x, in.B);
        F.mul_ui(u, u, (2 * j + 2) * (2 * j + 4));
        F.add(acc, acc, u);
      }
      row[j] = acc;
    }
    mu.push_back(std::move(row));
    const Coeffs& m = mu.back();

    // (2k)! (c~_k - c_k) = 2^[half] sum_j mu[k][j] s_j.
    F.mul_ui(fact, fact, (2 * k - 1) * (2 * k));
    F.sub(rhs, ct[k], c[k]);
    F.mul(rhs, rhs, fact);
    F.mul(rhs, rhs, scale);
    for (std::size_t j = 0; j <= k; ++j) {
      F.mul(u, m[j], s[j]);
      F.sub(rhs, rhs, u);
    }
    F.mul(s[k + 1], rhs, F.inverse(m[k + 1]));
  }

  if (opts.workspace) {
    auto& ws = *opts.workspace;
    ws.psums = iso::elements_of(in.field, s);
    ws.psums_halved = half;
    for (const auto& row : mu) ws.mu.push_back(iso::elements_of(in.field, row));
  }
  Coeffs poly = iso::poly_from_psums(F, s);
  if (half) {
    Coeffs D = detail::mul(F, poly, poly);
    return iso::assemble(E, Et, ell, std::move(D), sigma, std::move(poly));
  }
  return iso::assemble(E, Et, ell, std::move(poly), sigma, std::nullopt);
}

}  // namespace isogenix
