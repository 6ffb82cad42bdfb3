#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "isogenix/curve.hpp"
#include "isogenix/isogeny.hpp"

using namespace isogenix;
using namespace testutil;

namespace {

template <class Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an isogenix::Error");
  return Errc::InvalidArgument;
}

// Multiples P, 2P, ..., (l-1)P of a point of exact order l, or empty.
std::vector<PointAffine> cyclic_kernel(const Curve& E, unsigned long ell, std::mt19937_64& rng) {
  const std::uint64_t order = group_order(E);
  if (order % ell != 0) return {};
  for (int tries = 0; tries < 50; ++tries) {
    PointAffine P = scalar_mul(mpz_class(static_cast<unsigned long>(order / ell)), random_point(E, rng), E);
    if (P.is_identity()) continue;
    std::vector<PointAffine> ks{P};
    PointAffine Q = P;
    for (unsigned long k = 2; k < ell; ++k) {
      Q = point_add(Q, P, E);
      if (Q.is_identity()) break;
      ks.push_back(Q);
    }
    if (ks.size() == ell - 1 && point_add(Q, P, E).is_identity()) return ks;
  }
  return {};
}

}  // namespace

TEST_CASE("curve construction and group law") {
  auto F = make_field(mpz_class(101));
  CHECK(code_of([&] { Curve::from_longs(F, 0, 0); }) == Errc::SingularCurve);
  Curve E = Curve::from_longs(F, 1, 1);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    PointAffine P = random_point(E, rng);
    CHECK(E.contains(P));
    CHECK(point_add(P, point_neg(P, E), E).is_identity());
    CHECK(point_add(PointAffine(), P, E) == P);
    PointAffine five = P;
    for (int k = 0; k < 4; ++k) five = point_add(five, P, E);
    CHECK(scalar_mul(mpz_class(5), P, E) == five);
    CHECK(scalar_mul(mpz_class(-5), P, E) == point_neg(five, E));
  }
  PointAffine off(FieldElement(F, 1L), FieldElement(F, 1L));
  CHECK(code_of([&] { point_add(off, off, E); }) == Errc::PointNotOnCurve);
}

TEST_CASE("enumerate_group") {
  auto F5 = make_field(mpz_class(5));
  auto pts = enumerate_group(Curve::from_longs(F5, 1, 0));
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].is_identity());
  CHECK(pts[1] == PointAffine(FieldElement(F5, 0L), FieldElement(F5, 0L)));
  CHECK(pts[2] == PointAffine(FieldElement(F5, 2L), FieldElement(F5, 0L)));
  CHECK(pts[3] == PointAffine(FieldElement(F5, 3L), FieldElement(F5, 0L)));

  std::mt19937_64 rng(2);
  for (long p : {101L, 1009L, 10007L, 65537L}) {
    auto F = make_field(mpz_class(p));
    for (int i = 0; i < 5; ++i) {
      long A = static_cast<long>(rng() % p), B = static_cast<long>(rng() % p);
      if (!is_nonsingular(FieldElement(F, A), FieldElement(F, B))) continue;
      Curve E = Curve::from_longs(F, A, B);
      auto all = enumerate_group(E);
      CHECK(all.size() == group_order(E));
      const double n = static_cast<double>(all.size());
      CHECK(std::abs(n - (p + 1)) <= 2 * std::sqrt(double(p)));
      for (const auto& P : all) CHECK(E.contains(P));
    }
  }
  CHECK(code_of([&] { enumerate_group(Curve::from_longs(field62(), 1, 1)); }) == Errc::FieldTooLarge);
}

TEST_CASE("wp expansions") {
  auto F = make_field(mpz_class(101));
  auto z = wp_expand_quadratic(Curve::from_longs(F, 0, 1), 5);
  CHECK(z.c(1).is_zero());
  // A = B = 0 is singular, so check the recurrence by hand on c_3 = A^2/75 instead.
  Curve E = Curve::from_longs(F, 1, 1);
  auto q = wp_expand_quadratic(E, 4);
  CHECK(q.c(1).value() == 20);
  CHECK(q.c(2).value() == 72);
  CHECK(q.c(3) == FieldElement(F, 1L) / FieldElement(F, 75L));
  CHECK(wp_expand_fast(E, 4) == q);
  CHECK(code_of([&] { wp_expand_quadratic(Curve::from_longs(make_field(mpz_class(7)), 1, 1), 5); }) ==
        Errc::CharacteristicTooSmall);

  // Raw zero-coefficient case: wp = 1/z^2 exactly.
  auto zeros = detail::wp_fast(*F, mpz_class(0), mpz_class(0), 10);
  for (const auto& c : zeros) CHECK(sgn(c) == 0);

  std::mt19937_64 rng(3);
  auto G = field62();
  for (int i = 0; i < 3; ++i) {
    Curve C(FieldElement(G, random_residue(rng, *G)), FieldElement(G, random_residue(rng, *G)));
    auto a = wp_expand_quadratic(C, 512);
    auto b = wp_expand_fast(C, 512);
    CHECK(a == b);
    CHECK(a.c(1) == -C.A() / FieldElement(G, 5L));
    CHECK(a.c(2) == -C.B() / FieldElement(G, 7L));
  }
}

TEST_CASE("Velu: two-torsion kernel over F_1009") {
  auto F = make_field(mpz_class(1009));
  Curve E = Curve::from_longs(F, 1, 3);
  std::vector<FieldElement> xs{FieldElement(F, 66L), FieldElement(F, 333L), FieldElement(F, 610L)};
  auto kernel = kernel_points_from_xs(E, xs);
  REQUIRE(kernel.size() == 3);
  auto [Et, I] = velu_from_kernel(E, kernel);
  CHECK(I.D == Polynomial::from_longs(F, {3, 1, 0, 1}));
  CHECK(I.N == Polynomial::from_longs(F, {1, 985, 1007, 0, 1}));
  CHECK(Et == Curve::from_longs(F, 16, 192));
  CHECK(isogeny_verify(I).ok());
  long bad = 0;
  while (field_sqrt(E.rhs(FieldElement(F, bad))).has_value()) ++bad;
  CHECK(code_of([&] { kernel_points_from_xs(E, {FieldElement(F, bad)}); }) == Errc::KernelNotRational);
}

TEST_CASE("Velu: trivial kernel is the identity") {
  auto F = make_field(mpz_class(101));
  Curve E = Curve::from_longs(F, 1, 1);
  auto [Et, I] = velu_from_kernel(E, {});
  CHECK(Et == E);
  CHECK(I.N == Polynomial::from_longs(F, {0, 1}));
  CHECK(I.D == Polynomial::from_longs(F, {1}));
  CHECK(isogeny_verify(I).ok());
}

TEST_CASE("Velu rejects non-subgroups") {
  auto F = make_field(mpz_class(1009));
  Curve E = Curve::from_longs(F, 1, 3);
  std::mt19937_64 rng(4);
  PointAffine P = random_point(E, rng);
  CHECK(code_of([&] { velu_from_kernel(E, {P}); }) == Errc::NotASubgroup);
  CHECK(code_of([&] { velu_from_kernel(E, {PointAffine()}); }) == Errc::NotASubgroup);
  PointAffine T(FieldElement(F, 66L), FieldElement(F, 0L));
  CHECK(code_of([&] { velu_from_kernel(E, {T, T}); }) == Errc::NotASubgroup);
}

TEST_CASE("verify the printed F_101 isogeny") {
  auto F = make_field(mpz_class(101));
  Curve E = Curve::from_longs(F, 1, 1), Et = Curve::from_longs(F, 75, 16);
  auto g = Polynomial::from_longs(F, {5, 97, 24, 89, 76, 1});
  auto N = Polynomial::from_longs(F, {15, 24, 5, 15, 43, 81, 39, 71, 44, 61, 51, 1});
  Isogeny I{E, Et, 11, N, g * g, FieldElement(F, 50L), g};
  auto rep = isogeny_verify(I);
  CHECK(rep.ok());
  CHECK(I.D.coeff(9).value() == 51);

  Isogeny bad = I;
  bad.N = N + Polynomial::from_longs(F, {0, 0, 0, 1});
  auto r2 = isogeny_verify(bad);
  CHECK_FALSE(r2.identity);
  CHECK(r2.first_failure() == "identity");

  Isogeny wrong_sigma = I;
  wrong_sigma.sigma = FieldElement(F, 49L);
  CHECK_FALSE(isogeny_verify(wrong_sigma).invariants);

  // Image of a kernel point and of O.
  CHECK(isogeny_apply(I, PointAffine()).is_identity());
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    PointAffine P = random_point(E, rng);
    CHECK(Et.contains(isogeny_apply(I, P)));
  }
}

TEST_CASE("Velu oracle instances satisfy every check") {
  std::mt19937_64 rng(6);
  int built = 0;
  for (unsigned long ell : {2ul, 3ul, 4ul, 5ul, 6ul, 7ul, 9ul, 11ul, 13ul}) {
    for (int attempt = 0; attempt < 200 && built < 100; ++attempt) {
      const long p = 1009 + 2 * static_cast<long>(rng() % 4000);
      if (mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0) continue;
      auto F = make_field(mpz_class(p));
      FieldElement A(F, static_cast<long>(rng() % p)), B(F, static_cast<long>(rng() % p));
      if (!is_nonsingular(A, B)) continue;
      Curve E(A, B);
      auto ks = cyclic_kernel(E, ell, rng);
      if (ks.empty()) continue;
      auto [Et, I] = velu_from_kernel(E, ks);
      ++built;
      auto rep = isogeny_verify(I);
      CHECK(rep.ok());
      CHECK(I.D.coeff(ell - 2) == -I.sigma);
      for (const auto& K : ks) CHECK(I.D(K.x()).is_zero());
      CHECK(isogeny_apply(I, ks.front()).is_identity());
      break;
    }
  }
  CHECK(built >= 8);
}
