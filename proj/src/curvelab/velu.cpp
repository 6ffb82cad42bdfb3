#include <set>

#include "isogenix/isogeny.hpp"

namespace isogenix {

namespace {

using Key = std::pair<mpz_class, mpz_class>;

Key key_of(const PointAffine& P) { return {P.x().value(), P.y().value()}; }

// Grows the subgroup generated by the listed points one coset at a time and
// checks that it is exactly {O} plus the list.
void require_subgroup(const Curve& E, const std::vector<PointAffine>& pts) {
  std::set<Key> listed;
  for (const auto& P : pts) {
    if (P.is_identity()) throw Error(Errc::NotASubgroup, "kernel list must omit the identity");
    if (!E.contains(P)) throw Error(Errc::PointNotOnCurve, "kernel point is not on the source curve");
    if (!listed.insert(key_of(P)).second) throw Error(Errc::NotASubgroup, "kernel list repeats a point");
  }
  std::vector<PointAffine> H{PointAffine()};
  std::set<Key> inH;
  for (const auto& P : pts) {
    if (inH.count(key_of(P))) continue;
    // H <- H + <P>: add cosets H + kP until kP falls back into H.
    const std::size_t base = H.size();
    PointAffine kP = P;
    while (!kP.is_identity() && !inH.count(key_of(kP))) {
      for (std::size_t i = 0; i < base; ++i) {
        PointAffine Q = point_add(H[i], kP, E);
        if (Q.is_identity() || !listed.count(key_of(Q))) {
          throw Error(Errc::NotASubgroup, "kernel points are not closed under addition");
        }
        if (inH.insert(key_of(Q)).second) H.push_back(Q);
        if (H.size() > pts.size() + 1) throw Error(Errc::NotASubgroup, "generated group exceeds the list");
      }
      kP = point_add(kP, P, E);
    }
  }
  if (H.size() != pts.size() + 1) throw Error(Errc::NotASubgroup, "kernel points do not form a group");
}

}  // namespace

KernelData kernel_data_from_polynomial(const Polynomial& D) {
  if (!D.is_monic()) throw Error(Errc::NotMonic, "kernel polynomial must be monic");
  const long d = D.degree();
  const FieldRef& F = D.field();
  auto top = [&](long k) { return d - k >= 0 ? D.coeff(static_cast<std::size_t>(d - k)) : FieldElement(F, 0L); };
  return KernelData{{}, -top(1), top(2), -top(3)};
}

Polynomial numerator_from_denominator(const Curve& E, const Polynomial& D, const FieldElement& sigma,
                                      unsigned long ell) {
  const FieldRef& F = E.field();
  require_same_field(*F, *D.field());
  const Polynomial D1 = D.derivative();
  const Polynomial D2 = D1.derivative();
  const Polynomial lin(F, Coeffs{(-sigma).value(), F->reduce(mpz_class(ell))});
  const Polynomial quad(F, Coeffs{E.A().value(), mpz_class(0), mpz_class(3)});
  // N = L - 2f D'' + 2 f D'^2 / D; only the last term needs a division.
  const Polynomial& f = E.cubic();
  const Polynomial Q = poly_exact_div(f * (D1 * D1), D);
  return lin * D - quad * D1 - (f * D2 - Q).scaled(FieldElement(F, 2L));
}

std::pair<FieldElement, FieldElement> velu_target(const Curve& E, unsigned long ell, const FieldElement& s1,
                                                  const FieldElement& s2, const FieldElement& s3) {
  const FieldRef& F = E.field();
  const FieldElement m(F, mpz_class(ell - 1));
  const FieldElement& A = E.A();
  const FieldElement& B = E.B();
  const FieldElement t = A * m + FieldElement(F, 3L) * (s1 * s1 - FieldElement(F, 2L) * s2);
  const FieldElement w = FieldElement(F, 3L) * A * s1 + FieldElement(F, 2L) * B * m +
                         FieldElement(F, 5L) * (s1 * s1 * s1 - FieldElement(F, 3L) * s1 * s2 + FieldElement(F, 3L) * s3);
  return {A - FieldElement(F, 5L) * t, B - FieldElement(F, 7L) * w};
}

std::pair<Curve, Isogeny> velu_from_kernel_polynomial(const Curve& E, const Polynomial& D, unsigned long ell) {
  if (ell < 1) throw Error(Errc::InvalidDegree, "degree must be at least 1");
  if (D.degree() != static_cast<long>(ell) - 1) {
    throw Error(Errc::InvalidArgument, "kernel polynomial must have degree l - 1");
  }
  KernelData k = kernel_data_from_polynomial(D);
  auto [At, Bt] = velu_target(E, ell, k.sigma, k.sigma2, k.sigma3);
  Curve target(At, Bt);
  Polynomial N = numerator_from_denominator(E, D, k.sigma, ell);
  std::optional<Polynomial> g;
  Isogeny I{E, target, ell, std::move(N), D, k.sigma, std::move(g)};
  return {target, std::move(I)};
}

std::vector<PointAffine> kernel_points_from_xs(const Curve& E, const std::vector<FieldElement>& xs) {
  std::vector<PointAffine> pts;
  for (const auto& x : xs) {
    auto y = field_sqrt(E.rhs(x));
    if (!y) throw Error(Errc::KernelNotRational, "no rational point has abscissa " + x.to_string());
    pts.emplace_back(x, y->first);
    if (!y->first.is_zero()) pts.emplace_back(x, y->second);
  }
  return pts;
}

std::pair<Curve, Isogeny> velu_from_kernel(const Curve& E, const std::vector<PointAffine>& kernel_points) {
  require_subgroup(E, kernel_points);
  const unsigned long ell = static_cast<unsigned long>(kernel_points.size()) + 1;
  std::vector<FieldElement> xs;
  xs.reserve(kernel_points.size());
  for (const auto& P : kernel_points) xs.push_back(P.x());
  Polynomial D = poly_from_roots(E.field(), xs);
  return velu_from_kernel_polynomial(E, D, ell);
}

}  // namespace isogenix
