#include <algorithm>
#include <cmath>

#include "isogenix/detail/calculus.hpp"

namespace isogenix::detail {

namespace {

Coeffs head(const Coeffs& a, std::size_t n) {
  Coeffs r(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(std::min(a.size(), n)));
  r.resize(n);
  return r;
}

// sum_j G[j] f^j mod z^w, Horner in t.
Coeffs horner(const FieldContext& F, const std::vector<Coeffs>& G, const Coeffs& f, std::size_t w) {
  Coeffs r(w);
  bool zero = true;
  for (std::size_t j = G.size(); j-- > 0;) {
    if (!zero) r = mullow(F, r, f, w);
    for (std::size_t i = 0; i < w && i < G[j].size(); ++i) F.add(r[i], r[i], G[j][i]);
    zero = zero && std::all_of(r.begin(), r.end(), [](const mpz_class& x) { return sgn(x) == 0; });
  }
  return r;
}

}  // namespace

Coeffs solve_linear_ode(const FieldContext& F, const Coeffs& a, const Coeffs& b, const Coeffs& c,
                        const mpz_class& alpha, std::size_t n, const std::vector<mpz_class>& inv) {
  if (n == 0) return {};
  if (n == 1) return {alpha};
  const std::size_t w = n - 1;
  Coeffs ai = inverse(F, head(a, w), w);
  Coeffs B = mullow(F, head(b, w), ai, w);
  Coeffs C = mullow(F, head(c, w), ai, w);
  Coeffs J = exp(F, integral(F, B, inv), n, inv);
  Coeffs I = integral(F, mullow(F, C, J, w), inv);
  I[0] = alpha;
  return mullow(F, I, inverse(F, J, n), n);
}

Coeffs solve_nonlinear_ode_sq(const FieldContext& F, const std::vector<Coeffs>& G, const mpz_class& alpha,
                              const mpz_class& beta, std::size_t n, const std::vector<mpz_class>& inv) {
  if (n == 0) return {};
  if (n == 1) return {alpha};
  // Precisions n, ceil((n+1)/2), ..., down to 2; each lift goes s -> 2s-1.
  std::vector<std::size_t> sched{n};
  while (sched.back() > 2) sched.push_back((sched.back() + 2) / 2);
  std::reverse(sched.begin(), sched.end());

  Coeffs f{alpha, beta};
  Coeffs Gt;
  std::vector<Coeffs> dG;
  dG.reserve(G.size() > 0 ? G.size() - 1 : 0);
  for (std::size_t j = 1; j < G.size(); ++j) {
    Coeffs d(G[j].size());
    for (std::size_t i = 0; i < d.size(); ++i) F.mul_ui(d[i], G[j][i], j);
    dG.push_back(std::move(d));
  }
  for (std::size_t m : sched) {
    if (m <= f.size()) continue;
    const std::size_t w = m - 1;
    Coeffs fp = derivative(F, f);
    Coeffs a(w);
    for (std::size_t i = 0; i < fp.size() && i < w; ++i) F.add(a[i], fp[i], fp[i]);
    Coeffs Gf = horner(F, G, f, w);
    Coeffs b = horner(F, dG, f, w);
    for (auto& x : b) F.neg(x, x);
    Coeffs c = sqrlow(F, fp, w);
    for (std::size_t i = 0; i < w; ++i) F.sub(c[i], Gf[i], c[i]);
    Coeffs f2 = solve_linear_ode(F, a, b, c, mpz_class(0), m, inv);
    f.resize(m);
    for (std::size_t i = 0; i < m; ++i) F.add(f[i], f[i], f2[i]);
  }
  return f;
}

Coeffs compose(const FieldContext& F, const Coeffs& f, const Coeffs& g, std::size_t n) {
  if (n == 0) return {};
  const std::size_t nf = std::min(f.size(), n);
  if (nf == 0) return Coeffs(n);
  const std::size_t k = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(double(nf)))));
  const std::size_t blocks = (nf + k - 1) / k;

  // Baby steps g^0..g^k mod z^n.
  std::vector<Coeffs> P(k + 1);
  P[0] = Coeffs(n);
  P[0][0] = 1;
  Coeffs gn = head(g, n);
  if (k >= 1) P[1] = gn;
  for (std::size_t i = 2; i <= k; ++i) P[i] = mullow(F, P[i - 1], gn, n);

  // Block j is only needed mod z^(n - jk) since (g^k)^j starts at z^(jk).
  std::vector<Coeffs> blk(blocks);
  mpz_class acc;
  for (std::size_t j = 0; j < blocks; ++j) {
    const std::size_t need = n > j * k ? n - j * k : 0;
    Coeffs& out = blk[j];
    out.assign(need, mpz_class(0));
    const std::size_t len = std::min(k, nf - j * k);
    for (std::size_t t = 0; t < need; ++t) {
      acc = 0;
      const std::size_t top = std::min(len - 1, t);
      for (std::size_t i = 0; i <= top; ++i) {
        mpz_addmul(acc.get_mpz_t(), f[j * k + i].get_mpz_t(), P[i][t].get_mpz_t());
      }
      F.reduce_in_place(acc);
      out[t] = acc;
    }
  }

  // Giant steps: Horner in g^k.
  Coeffs r = blk[blocks - 1];
  for (std::size_t j = blocks - 1; j-- > 0;) {
    const std::size_t need = n - j * k;
    Coeffs t = mullow(F, r, P[k], need);
    for (std::size_t i = 0; i < need; ++i) F.add(t[i], t[i], blk[j][i]);
    r = std::move(t);
  }
  r.resize(n);
  return r;
}

Coeffs power_sums_to_poly(const FieldContext& F, const Coeffs& ps, const std::vector<mpz_class>& inv) {
  const std::size_t n = ps.size();
  Coeffs e(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    F.mul(e[i], ps[i - 1], inv[i]);
    F.neg(e[i], e[i]);
  }
  Coeffs E = exp(F, e, n + 1, inv);
  return Coeffs(E.rbegin(), E.rend());
}

Coeffs poly_to_power_sums(const FieldContext& F, const Coeffs& f, std::size_t n) {
  if (n == 0) return {};
  const std::size_t d = f.size() - 1;
  Coeffs rev(std::min(d, n) + 1);
  for (std::size_t i = 0; i < rev.size(); ++i) rev[i] = f[d - i];
  Coeffs dr = derivative(F, rev);
  dr.resize(n);
  Coeffs q = mullow(F, dr, inverse(F, rev, n), n);
  for (auto& x : q) F.neg(x, x);
  return q;
}

}  // namespace isogenix::detail
