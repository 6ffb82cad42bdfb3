#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace isogenix;
using namespace testutil;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an isogenix::Error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("make_field validates the characteristic") {
  CHECK(make_field(mpz_class(101))->modulus() == 101);
  CHECK(make_field("1009")->bits() == 10);
  CHECK(code_of([] { make_field(mpz_class(4)); }) == Errc::NotPrime);
  CHECK(code_of([] { make_field(mpz_class(9)); }) == Errc::NotPrime);
  CHECK(code_of([] { make_field(mpz_class(2)); }) == Errc::TooSmall);
  CHECK(code_of([] { make_field(mpz_class(3)); }) == Errc::TooSmall);
  CHECK(code_of([] { make_field(mpz_class("4611686018427387849")); }) == Errc::NotPrime);
  CHECK(code_of([] { make_field("12a"); }) == Errc::ParseError);
}

TEST_CASE("contexts with equal moduli are interchangeable") {
  auto a = make_field(mpz_class(101));
  auto b = make_field(mpz_class(101));
  auto c = make_field(mpz_class(103));
  CHECK(FieldElement(a, 3L) + FieldElement(b, 4L) == FieldElement(a, 7L));
  CHECK(code_of([&] { (void)(FieldElement(a, 3L) + FieldElement(c, 4L)); }) == Errc::ContextMismatch);
}

TEST_CASE("arith examples over F_101") {
  auto F = make_field(mpz_class(101));
  CHECK(arith(FieldElement(F, 66L), FieldElement(F, 70L), FieldOp::Add).value() == 35);
  CHECK(arith(FieldElement(F, 1L), FieldElement(F, 2L), FieldOp::Div).value() == 51);
  CHECK(arith(FieldElement(F, 3L), FieldElement(F, 5L), FieldOp::Sub).value() == 99);
  CHECK(FieldElement(F, -1L).value() == 100);
  CHECK(code_of([&] { arith(FieldElement(F, 5L), FieldElement(F, 0L), FieldOp::Div); }) == Errc::DivisionByZero);
}

TEST_CASE("inv_small") {
  auto F = make_field(mpz_class(101));
  CHECK(inv_small(3, F).value() == 34);
  CHECK(code_of([&] { inv_small(101, F); }) == Errc::NotAUnit);
  CHECK(code_of([&] { inv_small(202, F); }) == Errc::NotAUnit);
  auto G = make_field(mpz_class(1009));
  FieldElement x = inv_small(7, G);
  CHECK((x * FieldElement(G, 7L)).value() == 1);
  CHECK(x.value() == 865);

  auto inv = G->small_inverses(1008);
  for (unsigned long k = 1; k <= 1008; ++k) CHECK(G->mul(inv[k], mpz_class(k)) == 1);
  CHECK(code_of([&] { G->small_inverses(1009); }) == Errc::NotAUnit);
  CHECK(code_of([&] { G->require_units_upto(1009, "test"); }) == Errc::CharacteristicTooSmall);
}

TEST_CASE("field_sqrt") {
  auto F = make_field(mpz_class(101));
  auto z = field_sqrt(FieldElement(F, 0L));
  REQUIRE(z);
  CHECK(z->first.value() == 0);
  auto r = field_sqrt(FieldElement(F, 4L));
  REQUIRE(r);
  CHECK(r->first.value() == 2);
  CHECK(r->second.value() == 99);
  CHECK_FALSE(field_sqrt(FieldElement(make_field(mpz_class(7)), 3L)));

  // p = 1 mod 8 exercises the Tonelli-Shanks branch, p = 3 mod 4 the direct one.
  std::mt19937_64 rng(11);
  for (const char* ps : {"4611686018427387847", "1000000000000000000000000000057", "257", "7681", "1009"}) {
    auto G = make_field(ps);
    for (int i = 0; i < 300; ++i) {
      FieldElement a(G, random_residue(rng, *G));
      auto s = field_sqrt(a * a);
      REQUIRE(s);
      CHECK((s->first == a || s->second == a));
      CHECK(s->first.value() <= s->second.value());
    }
  }
}

TEST_CASE("batch_inverse") {
  auto F7 = make_field(mpz_class(7));
  std::vector<FieldElement> v{FieldElement(F7, 2L), FieldElement(F7, 3L)};
  auto w = batch_inverse(v);
  CHECK(w[0].value() == 4);
  CHECK(w[1].value() == 5);
  std::vector<FieldElement> one{FieldElement(F7, 1L)};
  CHECK(batch_inverse(one)[0].value() == 1);

  auto F = field62();
  std::mt19937_64 rng(5);
  std::vector<FieldElement> big;
  for (int i = 0; i < 100; ++i) {
    mpz_class x = random_residue(rng, *F);
    if (x == 0) x = 1;
    big.emplace_back(F, x);
  }
  auto inv = batch_inverse(big);
  for (std::size_t i = 0; i < big.size(); ++i) CHECK(inv[i] == big[i].inverse());

  big[37] = FieldElement(F, 0L);
  try {
    batch_inverse(big);
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
    REQUIRE(e.index().has_value());
    CHECK(*e.index() == 37);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(2024);
  auto F = field62();
  for (int i = 0; i < 2000; ++i) {
    FieldElement a(F, random_residue(rng, *F)), b(F, random_residue(rng, *F)), c(F, random_residue(rng, *F));
    CHECK((a + b) - b == a);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == FieldElement(F, 1L));
    CHECK(a.value() < F->modulus());
  }
}
