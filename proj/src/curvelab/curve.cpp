#include "isogenix/curve.hpp"

#include <string>

namespace isogenix {

namespace {

struct Raw {
  bool inf = true;
  mpz_class x, y;
};

Raw to_raw(const PointAffine& P) {
  if (P.is_identity()) return {};
  return {false, P.x().value(), P.y().value()};
}

PointAffine from_raw(const FieldRef& field, const Raw& r) {
  if (r.inf) return PointAffine();
  return PointAffine(FieldElement(field, r.x), FieldElement(field, r.y));
}

Raw raw_add(const FieldContext& F, const mpz_class& A, const Raw& P, const Raw& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  mpz_class lambda, t;
  if (P.x == Q.x) {
    F.add(t, P.y, Q.y);
    if (sgn(t) == 0) return {};
    // Tangent: (3x^2 + A) / 2y.
    F.mul(lambda, P.x, P.x);
    F.mul_ui(lambda, lambda, 3);
    F.add(lambda, lambda, A);
    F.add(t, P.y, P.y);
  } else {
    F.sub(lambda, Q.y, P.y);
    F.sub(t, Q.x, P.x);
  }
  F.mul(lambda, lambda, F.inverse(t));
  Raw R{false, {}, {}};
  F.mul(R.x, lambda, lambda);
  F.sub(R.x, R.x, P.x);
  F.sub(R.x, R.x, Q.x);
  F.sub(t, P.x, R.x);
  F.mul(R.y, lambda, t);
  F.sub(R.y, R.y, P.y);
  return R;
}

void require_on(const Curve& E, const PointAffine& P) {
  if (!P.is_identity()) require_same_field(*E.field(), *P.x().field());
  if (!E.contains(P)) throw Error(Errc::PointNotOnCurve, "point is not on the curve");
}

mpz_class random_residue(const FieldContext& F, std::mt19937_64& rng) {
  mpz_class v = 0;
  for (std::size_t bits = 0; bits < F.bits() + 64; bits += 64) {
    v <<= 64;
    v += mpz_class(static_cast<unsigned long>(rng()));
  }
  return F.reduce(v);
}

}  // namespace

// -- PointAffine ----------------------------------------------------------------

PointAffine::PointAffine(FieldElement x, FieldElement y) : xy_(std::make_pair(std::move(x), std::move(y))) {
  require_same_field(*xy_->first.field(), *xy_->second.field());
}

const FieldElement& PointAffine::x() const {
  if (!xy_) throw Error(Errc::InvalidArgument, "the identity has no coordinates");
  return xy_->first;
}

const FieldElement& PointAffine::y() const {
  if (!xy_) throw Error(Errc::InvalidArgument, "the identity has no coordinates");
  return xy_->second;
}

bool operator==(const PointAffine& a, const PointAffine& b) {
  if (a.is_identity() || b.is_identity()) return a.is_identity() == b.is_identity();
  return a.xy_->first == b.xy_->first && a.xy_->second == b.xy_->second;
}

// -- Curve ----------------------------------------------------------------------

bool is_nonsingular(const FieldElement& A, const FieldElement& B) {
  FieldElement four(A.field(), 4L), tw7(A.field(), 27L);
  return !(four * A * A * A + tw7 * B * B).is_zero();
}

Curve::Curve(FieldElement A, FieldElement B) : A_(std::move(A)), B_(std::move(B)) {
  require_same_field(*A_.field(), *B_.field());
  if (!is_nonsingular(A_, B_)) {
    throw Error(Errc::SingularCurve, "4A^3 + 27B^2 = 0 for A = " + A_.to_string() + ", B = " + B_.to_string());
  }
}

Curve Curve::from_longs(const FieldRef& field, long A, long B) {
  return Curve(FieldElement(field, A), FieldElement(field, B));
}

FieldElement Curve::rhs(const FieldElement& x) const { return (x * x + A_) * x + B_; }

bool Curve::contains(const PointAffine& P) const {
  if (P.is_identity()) return true;
  if (!P.x().field()->same_as(*field())) return false;
  return P.y() * P.y() == rhs(P.x());
}

Polynomial Curve::cubic() const {
  return Polynomial(field(), Coeffs{B_.value(), A_.value(), mpz_class(0), mpz_class(1)});
}

PointAffine point_neg(const PointAffine& P, const Curve& E) {
  require_on(E, P);
  if (P.is_identity()) return P;
  return PointAffine(P.x(), -P.y());
}

PointAffine point_add(const PointAffine& P, const PointAffine& Q, const Curve& E) {
  require_on(E, P);
  require_on(E, Q);
  return from_raw(E.field(), raw_add(*E.field(), E.A().value(), to_raw(P), to_raw(Q)));
}

PointAffine scalar_mul(const mpz_class& k, const PointAffine& P, const Curve& E) {
  require_on(E, P);
  const FieldContext& F = *E.field();
  Raw base = to_raw(P);
  mpz_class e = k;
  if (e < 0) {
    e = -e;
    if (!base.inf) F.neg(base.y, base.y);
  }
  Raw acc;
  for (std::size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
    acc = raw_add(F, E.A().value(), acc, acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = raw_add(F, E.A().value(), acc, base);
  }
  return from_raw(E.field(), acc);
}

PointAffine random_point(const Curve& E, std::mt19937_64& rng) {
  const FieldRef& field = E.field();
  for (;;) {
    FieldElement x(field, random_residue(*field, rng));
    auto roots = field_sqrt(E.rhs(x));
    if (!roots) continue;
    const bool flip = (rng() & 1) != 0;
    return PointAffine(x, flip ? roots->second : roots->first);
  }
}

// -- exhaustive enumeration --------------------------------------------------------

namespace {

std::uint64_t small_modulus(const Curve& E, std::uint64_t bound) {
  const mpz_class& p = E.field()->modulus();
  if (p > bound || !p.fits_ulong_p()) {
    throw Error(Errc::FieldTooLarge, "p = " + p.get_str() + " exceeds the enumeration bound " + std::to_string(bound));
  }
  return p.get_ui();
}

// root[v] = the smaller square root of v, or -1 for non-residues.
std::vector<std::int64_t> sqrt_table(std::uint64_t p) {
  std::vector<std::int64_t> root(p, -1);
  for (std::uint64_t y = 0; y <= p / 2; ++y) root[(y * y) % p] = static_cast<std::int64_t>(y);
  return root;
}

}  // namespace

std::vector<PointAffine> enumerate_group(const Curve& E, std::uint64_t bound) {
  const std::uint64_t p = small_modulus(E, bound);
  const std::uint64_t A = E.A().value().get_ui(), B = E.B().value().get_ui();
  auto root = sqrt_table(p);
  std::vector<PointAffine> pts{PointAffine()};
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t v = ((x * x % p) * x + A * x + B) % p;
    const std::int64_t r = root[v];
    if (r < 0) continue;
    FieldElement fx(E.field(), mpz_class(static_cast<unsigned long>(x)));
    pts.emplace_back(fx, FieldElement(E.field(), mpz_class(static_cast<unsigned long>(r))));
    if (r != 0) pts.emplace_back(fx, FieldElement(E.field(), mpz_class(static_cast<unsigned long>(p - r))));
  }
  return pts;
}

std::uint64_t group_order(const Curve& E, std::uint64_t bound) {
  const std::uint64_t p = small_modulus(E, bound);
  const std::uint64_t A = E.A().value().get_ui(), B = E.B().value().get_ui();
  auto root = sqrt_table(p);
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::int64_t r = root[((x * x % p) * x + A * x + B) % p];
    if (r == 0) {
      count += 1;
    } else if (r > 0) {
      count += 2;
    }
  }
  return count;
}

}  // namespace isogenix
