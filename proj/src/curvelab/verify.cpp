#include <random>

#include "isogenix/isogeny.hpp"

namespace isogenix {

PointAffine isogeny_apply(const Isogeny& I, const PointAffine& P) {
  if (!I.source.contains(P)) throw Error(Errc::PointNotOnCurve, "point is not on the source curve");
  if (P.is_identity()) return P;
  const FieldElement& x = P.x();
  const FieldElement d = I.D(x);
  if (d.is_zero()) return PointAffine();
  const FieldElement n = I.N(x);
  const FieldElement w = I.N.derivative()(x) * d - n * I.D.derivative()(x);
  const FieldElement dinv = d.inverse();
  PointAffine Q(n * dinv, P.y() * w * dinv * dinv);
  if (!I.target.contains(Q)) throw Error(Errc::PointNotOnCurve, "image is not on the target curve");
  return Q;
}

namespace {

bool identity_holds(const Isogeny& I) {
  const Polynomial& N = I.N;
  const Polynomial& D = I.D;
  const Polynomial W = N.derivative() * D - N * D.derivative();
  const Polynomial lhs = I.source.cubic() * (W * W);
  const Polynomial D2 = D * D;
  const Polynomial inner = N * N + D2.scaled(I.target.A());
  const Polynomial rhs = N * D * inner + (D2 * D2).scaled(I.target.B());
  return lhs == rhs;
}

bool invariants_hold(const Isogeny& I) {
  const long ell = static_cast<long>(I.ell);
  if (ell < 1) return false;
  if (!I.source.field()->same_as(*I.target.field())) return false;
  if (I.N.degree() != ell || I.D.degree() != ell - 1) return false;
  if (!I.N.is_monic() || !I.D.is_monic()) return false;
  const FieldElement top = ell >= 2 ? I.D.coeff(static_cast<std::size_t>(ell - 2)) : FieldElement(I.sigma.field(), 0L);
  if (ell >= 2 ? top != -I.sigma : !I.sigma.is_zero()) return false;
  if (I.g && *I.g * *I.g != I.D) return false;
  return true;
}

bool morphism_holds(const Isogeny& I, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Curve& E = I.source;
  auto avoid = [&](const PointAffine& P) { return P.is_identity() || I.D(P.x()).is_zero(); };
  std::size_t tested = 0;
  for (std::size_t attempt = 0; tested < samples && attempt < 64 * samples; ++attempt) {
    PointAffine P = random_point(E, rng);
    PointAffine Q = random_point(E, rng);
    PointAffine S = point_add(P, Q, E);
    if (avoid(P) || avoid(Q) || avoid(S)) continue;
    ++tested;
    try {
      if (isogeny_apply(I, S) != point_add(isogeny_apply(I, P), isogeny_apply(I, Q), I.target)) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

}  // namespace

VerificationReport isogeny_verify(const Isogeny& I, std::size_t samples, std::uint64_t seed) {
  VerificationReport r;
  r.identity = identity_holds(I);
  if (!r.identity) r.failures.emplace_back("identity");
  r.invariants = invariants_hold(I);
  if (!r.invariants) r.failures.emplace_back("invariants");
  r.morphism = morphism_holds(I, samples, seed);
  if (!r.morphism) r.failures.emplace_back("morphism");
  r.nonsingular = is_nonsingular(I.target.A(), I.target.B());
  if (!r.nonsingular) r.failures.emplace_back("nonsingular");
  return r;
}

}  // namespace isogenix
