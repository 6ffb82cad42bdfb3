// Rational reconstruction through a half-gcd on (z^N, f).

#include "isogenix/detail/calculus.hpp"

namespace isogenix::detail {

namespace {

long deg(const Coeffs& a) { return static_cast<long>(a.size()) - 1; }

Coeffs shift_down(const Coeffs& a, std::size_t k) {
  if (a.size() <= k) return {};
  return Coeffs(a.begin() + static_cast<std::ptrdiff_t>(k), a.end());
}

Coeffs add(const FieldContext& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()));
  const mpz_class zero;
  for (std::size_t i = 0; i < r.size(); ++i) F.add(r[i], i < a.size() ? a[i] : zero, i < b.size() ? b[i] : zero);
  trim(r);
  return r;
}

Coeffs sub(const FieldContext& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()));
  const mpz_class zero;
  for (std::size_t i = 0; i < r.size(); ++i) F.sub(r[i], i < a.size() ? a[i] : zero, i < b.size() ? b[i] : zero);
  trim(r);
  return r;
}

Coeffs pmul(const FieldContext& F, const Coeffs& a, const Coeffs& b) {
  Coeffs r = mul(F, a, b);
  trim(r);
  return r;
}

// [[a b] [c d]] acting on column vectors.
struct Mat {
  Coeffs a{mpz_class(1)}, b, c, d{mpz_class(1)};

  bool identity() const { return a.size() == 1 && a[0] == 1 && b.empty() && c.empty() && d.size() == 1 && d[0] == 1; }
};

Mat mat_mul(const FieldContext& F, const Mat& x, const Mat& y) {
  Mat r;
  r.a = add(F, pmul(F, x.a, y.a), pmul(F, x.b, y.c));
  r.b = add(F, pmul(F, x.a, y.b), pmul(F, x.b, y.d));
  r.c = add(F, pmul(F, x.c, y.a), pmul(F, x.d, y.c));
  r.d = add(F, pmul(F, x.c, y.b), pmul(F, x.d, y.d));
  return r;
}

void apply(const FieldContext& F, const Mat& M, Coeffs& u, Coeffs& v) {
  Coeffs nu = add(F, pmul(F, M.a, u), pmul(F, M.b, v));
  Coeffs nv = add(F, pmul(F, M.c, u), pmul(F, M.d, v));
  u = std::move(nu);
  v = std::move(nv);
}

// Euclidean step (u, v) -> (v, u - q v), returned as the matrix [[0 1] [1 -q]].
Mat quotient_matrix(const FieldContext& F, const Coeffs& q) {
  Mat Q;
  Q.a.clear();
  Q.b = {mpz_class(1)};
  Q.c = {mpz_class(1)};
  Q.d = sub(F, {}, q);
  return Q;
}

// For deg u = n > deg v: M with (u', v') = M (u, v) consecutive remainders,
// deg u' >= ceil(n/2) > deg v'.
Mat hgcd(const FieldContext& F, const Coeffs& u, const Coeffs& v) {
  const long n = deg(u);
  const long m = (n + 1) / 2;
  if (deg(v) < m) return Mat{};
  Mat R = hgcd(F, shift_down(u, m), shift_down(v, m));
  Coeffs a = u, b = v;
  apply(F, R, a, b);
  if (deg(b) < m) return R;
  Coeffs q, r;
  divmod(F, a, b, q, r);
  const long k = 2 * m - deg(b);
  Mat S = hgcd(F, shift_down(b, k), shift_down(r, k));
  return mat_mul(F, S, mat_mul(F, quotient_matrix(F, q), R));
}

}  // namespace

std::pair<Coeffs, Coeffs> pade(const FieldContext& F, const Coeffs& f, std::size_t n, std::size_t m) {
  const std::size_t N = n + m + 1;
  Coeffs r0(N + 1);
  r0[N] = 1;
  Coeffs r1(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(std::min(f.size(), N)));
  trim(r1);

  // Stop at the first remainder of degree <= n; M tracks the cofactors.
  const long t = static_cast<long>(n) + 1;
  Mat M;
  while (deg(r1) >= t) {
    const long s = std::max(0L, 2 * t - deg(r0));
    Mat R = hgcd(F, shift_down(r0, s), shift_down(r1, s));
    if (R.identity()) {
      Coeffs q, r;
      divmod(F, r0, r1, q, r);
      R = quotient_matrix(F, q);
    }
    apply(F, R, r0, r1);
    M = mat_mul(F, R, M);
  }

  Coeffs P = r1;
  Coeffs Q = M.d;
  if (Q.empty() || deg(Q) > static_cast<long>(m) || sgn(Q[0]) == 0) {
    throw Error(Errc::NoSolution, "no rational function of degrees (" + std::to_string(n) + ", " +
                                      std::to_string(m) + ") matches the series");
  }
  const mpz_class lead = F.inverse(Q.back());
  for (auto& x : P) F.mul(x, x, lead);
  for (auto& x : Q) F.mul(x, x, lead);

  // The candidate comes from the first N terms; extra terms must agree too.
  if (f.size() > N) {
    Coeffs check = mullow(F, f, Q, f.size());
    for (std::size_t i = 0; i < check.size(); ++i) {
      const mpz_class& want = i < P.size() ? P[i] : mpz_class(0);
      if (check[i] != want) {
        throw Error(Errc::NoSolution, "reconstructed fraction disagrees with the series at z^" + std::to_string(i));
      }
    }
  }
  return {std::move(P), std::move(Q)};
}

}  // namespace isogenix::detail
