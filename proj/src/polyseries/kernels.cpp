#include "isogenix/detail/kernels.hpp"

#include <algorithm>
#include <bit>

#ifndef ISOGENIX_KARATSUBA_MIN
#define ISOGENIX_KARATSUBA_MIN 32
#endif
#ifndef ISOGENIX_KRONECKER_MIN
#define ISOGENIX_KRONECKER_MIN 8
#endif

static_assert(GMP_NUMB_BITS == 64 && GMP_NAIL_BITS == 0, "Kronecker packing assumes 64-bit limbs without nails");

namespace isogenix {

std::size_t karatsuba_threshold() noexcept { return ISOGENIX_KARATSUBA_MIN; }
std::size_t kronecker_threshold() noexcept { return ISOGENIX_KRONECKER_MIN; }

namespace detail {

namespace {

constexpr std::size_t kLimbBits = 64;

// -- schoolbook ---------------------------------------------------------------

// out[k] += sum a[i] b[k-i] over the integers, for k < limit.
void school_accumulate(const mpz_class* a, std::size_t na, const mpz_class* b, std::size_t nb, mpz_class* out,
                       std::size_t limit) {
  const std::size_t top = std::min(na + nb - 1, limit);
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t lo = k + 1 > nb ? k + 1 - nb : 0;
    const std::size_t hi = std::min(k, na - 1);
    mpz_ptr acc = out[k].get_mpz_t();
    for (std::size_t i = lo; i <= hi; ++i) mpz_addmul(acc, a[i].get_mpz_t(), b[k - i].get_mpz_t());
  }
}

// -- Karatsuba over Z -----------------------------------------------------------

// out[0..2n-1) = a*b for equal lengths, unreduced.
void kara_equal(const mpz_class* a, const mpz_class* b, std::size_t n, mpz_class* out) {
  if (n < ISOGENIX_KARATSUBA_MIN || n < 2) {
    for (std::size_t k = 0; k + 1 < 2 * n; ++k) out[k] = 0;
    school_accumulate(a, n, b, n, out, 2 * n - 1);
    return;
  }
  const std::size_t m = n / 2;
  const std::size_t h = n - m;
  std::vector<mpz_class> z0(2 * m - 1), z2(2 * h - 1), z1(2 * h - 1), sa(h), sb(h);
  kara_equal(a, b, m, z0.data());
  kara_equal(a + m, b + m, h, z2.data());
  for (std::size_t i = 0; i < h; ++i) {
    if (i < m) {
      mpz_add(sa[i].get_mpz_t(), a[i].get_mpz_t(), a[m + i].get_mpz_t());
      mpz_add(sb[i].get_mpz_t(), b[i].get_mpz_t(), b[m + i].get_mpz_t());
    } else {
      sa[i] = a[m + i];
      sb[i] = b[m + i];
    }
  }
  kara_equal(sa.data(), sb.data(), h, z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  for (std::size_t k = 0; k + 1 < 2 * n; ++k) out[k] = 0;
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[m + i] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * m + i] += z2[i];
}

// out[k] += (a*b)[k], arbitrary lengths.
void kara_accumulate(const mpz_class* a, std::size_t na, const mpz_class* b, std::size_t nb, mpz_class* out) {
  if (na < nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  if (nb < ISOGENIX_KARATSUBA_MIN) {
    school_accumulate(a, na, b, nb, out, na + nb - 1);
    return;
  }
  std::vector<mpz_class> tmp(2 * nb - 1);
  for (std::size_t off = 0; off < na; off += nb) {
    const std::size_t len = std::min(nb, na - off);
    if (len < nb) {
      kara_accumulate(b, nb, a + off, len, out + off);
    } else {
      kara_equal(a + off, b, nb, tmp.data());
      for (std::size_t i = 0; i < tmp.size(); ++i) out[off + i] += tmp[i];
    }
  }
}

// -- Kronecker substitution ---------------------------------------------------

void pack(const mpz_class* a, std::size_t n, std::size_t slot, std::vector<mp_limb_t>& buf) {
  buf.assign((n * slot) / kLimbBits + 3, 0);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_srcptr z = a[i].get_mpz_t();
    const std::size_t sz = mpz_size(z);
    if (sz == 0) continue;
    const mp_limb_t* d = mpz_limbs_read(z);
    const std::size_t o = i * slot;
    const std::size_t q = o / kLimbBits;
    const unsigned s = static_cast<unsigned>(o % kLimbBits);
    for (std::size_t j = 0; j < sz; ++j) {
      buf[q + j] |= d[j] << s;
      if (s != 0) buf[q + j + 1] |= d[j] >> (kLimbBits - s);
    }
  }
}

std::size_t normalized_size(const mp_limb_t* d, std::size_t n) {
  while (n > 0 && d[n - 1] == 0) --n;
  return n;
}

void unpack(const FieldContext& F, mpz_srcptr prod, std::size_t slot, std::size_t count, mpz_class* out) {
  const mp_limb_t* r = mpz_limbs_read(prod);
  const std::size_t rn = mpz_size(prod);
  const std::size_t full = slot / kLimbBits;
  const unsigned rem = static_cast<unsigned>(slot % kLimbBits);
  const std::size_t L = full + (rem != 0 ? 1 : 0);
  std::vector<mp_limb_t> t(L + 1);
  mpz_srcptr p = F.modulus().get_mpz_t();
  const bool one_limb = mpz_size(p) == 1;
  const mp_limb_t p0 = mpz_getlimbn(p, 0);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t o = i * slot;
    const std::size_t q = o / kLimbBits;
    if (q >= rn) {
      out[i] = 0;
      continue;
    }
    const unsigned s = static_cast<unsigned>(o % kLimbBits);
    for (std::size_t j = 0; j < L; ++j) {
      const mp_limb_t lo = q + j < rn ? r[q + j] : 0;
      const mp_limb_t hi = q + j + 1 < rn ? r[q + j + 1] : 0;
      t[j] = s != 0 ? (lo >> s) | (hi << (kLimbBits - s)) : lo;
    }
    if (rem != 0) t[full] &= (mp_limb_t(1) << rem) - 1;
    const std::size_t tn = normalized_size(t.data(), L);
    if (one_limb) {
      mpz_set_ui(out[i].get_mpz_t(), tn == 0 ? 0 : mpn_mod_1(t.data(), static_cast<mp_size_t>(tn), p0));
      continue;
    }
    mpz_t view;
    mpz_roinit_n(view, t.data(), static_cast<mp_size_t>(tn));
    mpz_tdiv_r(out[i].get_mpz_t(), view, p);
  }
}

Coeffs kronecker(const FieldContext& F, const mpz_class* a, std::size_t na, const mpz_class* b, std::size_t nb,
                 std::size_t limit) {
  const std::size_t k = std::min(na, nb);
  const std::size_t slot = 2 * F.bits() + std::bit_width(k);
  std::vector<mp_limb_t> ba, bb;
  pack(a, na, slot, ba);
  mpz_t xa, xb;
  mpz_roinit_n(xa, ba.data(), static_cast<mp_size_t>(normalized_size(ba.data(), ba.size())));
  mpz_class prod;
  if (a == b && na == nb) {
    mpz_mul(prod.get_mpz_t(), xa, xa);
  } else {
    pack(b, nb, slot, bb);
    mpz_roinit_n(xb, bb.data(), static_cast<mp_size_t>(normalized_size(bb.data(), bb.size())));
    mpz_mul(prod.get_mpz_t(), xa, xb);
  }
  const std::size_t count = std::min(na + nb - 1, limit);
  Coeffs out(count);
  unpack(F, prod.get_mpz_t(), slot, count, out.data());
  return out;
}

Coeffs mul_limited(const FieldContext& F, const mpz_class* a, std::size_t na, const mpz_class* b, std::size_t nb,
                   std::size_t limit, MulStrategy s) {
  if (na == 0 || nb == 0 || limit == 0) return {};
  const std::size_t k = std::min(na, nb);
  if (s == MulStrategy::Auto) {
    if (k >= ISOGENIX_KRONECKER_MIN) {
      s = MulStrategy::Kronecker;
    } else if (k >= ISOGENIX_KARATSUBA_MIN) {
      s = MulStrategy::Karatsuba;
    } else {
      s = MulStrategy::Schoolbook;
    }
  }
  if (s == MulStrategy::Kronecker) return kronecker(F, a, na, b, nb, limit);

  const std::size_t count = std::min(na + nb - 1, limit);
  Coeffs out;
  if (s == MulStrategy::Schoolbook) {
    out.resize(count);
    school_accumulate(a, na, b, nb, out.data(), count);
  } else {
    out.resize(na + nb - 1);
    kara_accumulate(a, na, b, nb, out.data());
    out.resize(count);
  }
  for (auto& c : out) F.reduce_in_place(c);
  return out;
}

}  // namespace

void trim(Coeffs& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Coeffs mul(const FieldContext& F, const mpz_class* a, std::size_t na, const mpz_class* b, std::size_t nb,
           MulStrategy s) {
  if (na == 0 || nb == 0) return {};
  return mul_limited(F, a, na, b, nb, na + nb - 1, s);
}

Coeffs mul(const FieldContext& F, const Coeffs& a, const Coeffs& b, MulStrategy s) {
  return mul(F, a.data(), a.size(), b.data(), b.size(), s);
}

Coeffs mullow(const FieldContext& F, const Coeffs& a, const Coeffs& b, std::size_t n) {
  const std::size_t na = std::min(a.size(), n);
  const std::size_t nb = std::min(b.size(), n);
  Coeffs out = mul_limited(F, a.data(), na, b.data(), nb, n, MulStrategy::Auto);
  out.resize(n);
  return out;
}

Coeffs sqrlow(const FieldContext& F, const Coeffs& a, std::size_t n) {
  const std::size_t na = std::min(a.size(), n);
  Coeffs out = mul_limited(F, a.data(), na, a.data(), na, n, MulStrategy::Auto);
  out.resize(n);
  return out;
}

std::vector<std::size_t> newton_schedule(std::size_t n) {
  std::vector<std::size_t> s{n};
  while (s.back() > 1) s.push_back((s.back() + 1) / 2);
  std::reverse(s.begin(), s.end());
  return s;
}

Coeffs inverse(const FieldContext& F, const Coeffs& f, std::size_t n) {
  if (n == 0) return {};
  Coeffs g{F.inverse(f.at(0))};
  Coeffs fm;
  for (std::size_t m : newton_schedule(n)) {
    const std::size_t k = g.size();
    if (m <= k) continue;
    fm.assign(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(std::min(m, f.size())));
    Coeffs e = mullow(F, fm, g, m);
    Coeffs h(e.begin() + static_cast<std::ptrdiff_t>(k), e.end());
    Coeffs t = mullow(F, g, h, m - k);
    g.resize(m);
    for (std::size_t i = 0; i < m - k; ++i) F.neg(g[k + i], t[i]);
  }
  return g;
}

Coeffs derivative(const FieldContext& F, const Coeffs& f) {
  if (f.size() <= 1) return {};
  Coeffs d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) F.mul_ui(d[i - 1], f[i], i);
  return d;
}

Coeffs integral(const FieldContext& F, const Coeffs& f, const std::vector<mpz_class>& inv) {
  Coeffs r(f.size() + 1);
  for (std::size_t i = 0; i < f.size(); ++i) F.mul(r[i + 1], f[i], inv[i + 1]);
  return r;
}

Coeffs log(const FieldContext& F, const Coeffs& g, std::size_t n, const std::vector<mpz_class>& inv) {
  if (n <= 1) return Coeffs(n);
  Coeffs gn(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(std::min(g.size(), n)));
  Coeffs d = derivative(F, gn);
  d.resize(n - 1);
  Coeffs q = mullow(F, d, inverse(F, gn, n - 1), n - 1);
  return integral(F, q, inv);
}

Coeffs exp(const FieldContext& F, const Coeffs& f, std::size_t n, const std::vector<mpz_class>& inv) {
  if (n == 0) return {};
  Coeffs g{mpz_class(1)};
  for (std::size_t m : newton_schedule(n)) {
    const std::size_t k = g.size();
    if (m <= k) continue;
    Coeffs L = log(F, g, m, inv);
    Coeffs h(m - k);
    for (std::size_t i = 0; i < m - k; ++i) {
      const mpz_class fi = k + i < f.size() ? f[k + i] : mpz_class(0);
      F.sub(h[i], fi, L[k + i]);
    }
    Coeffs t = mullow(F, g, h, m - k);
    g.resize(m);
    for (std::size_t i = 0; i < m - k; ++i) g[k + i] = std::move(t[i]);
  }
  return g;
}

void divmod(const FieldContext& F, const Coeffs& a, const Coeffs& b, Coeffs& q, Coeffs& r) {
  const std::size_t na = a.size(), nb = b.size();
  if (na < nb) {
    q.clear();
    r = a;
    return;
  }
  const std::size_t m = na - nb + 1;
  if (nb <= 64 || m <= 64) {
    const mpz_class lead_inv = F.inverse(b.back());
    r = a;
    q.assign(m, mpz_class(0));
    mpz_class c;
    for (std::size_t d = m; d-- > 0;) {
      F.mul(c, r[d + nb - 1], lead_inv);
      q[d] = c;
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i < nb; ++i) {
        mpz_submul(r[d + i].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
        F.reduce_in_place(r[d + i]);
      }
    }
    r.resize(nb - 1);
    trim(r);
    trim(q);
    return;
  }
  // Reversed-reciprocal division: rev(q) = rev(a) / rev(b) mod z^m.
  Coeffs ra(a.rbegin(), a.rbegin() + static_cast<std::ptrdiff_t>(m));
  Coeffs rb(b.rbegin(), b.rend());
  Coeffs rq = mullow(F, ra, inverse(F, rb, m), m);
  q.assign(rq.rbegin(), rq.rend());
  Coeffs qb = mullow(F, q, b, nb - 1);
  r.assign(nb - 1, mpz_class(0));
  for (std::size_t i = 0; i + 1 < nb; ++i) F.sub(r[i], a[i], qb[i]);
  trim(r);
  trim(q);
}

Coeffs from_roots(const FieldContext& F, const std::vector<mpz_class>& roots) {
  if (roots.empty()) return {mpz_class(1)};
  std::vector<Coeffs> level;
  level.reserve(roots.size());
  for (const auto& x : roots) {
    Coeffs c(2);
    F.neg(c[0], x);
    c[1] = 1;
    level.push_back(std::move(c));
  }
  while (level.size() > 1) {
    std::vector<Coeffs> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(mul(F, level[i], level[i + 1]));
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return level.front();
}

mpz_class eval(const FieldContext& F, const Coeffs& a, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    F.mul(acc, acc, x);
    F.add(acc, acc, a[i]);
  }
  return acc;
}

}  // namespace detail
}  // namespace isogenix
