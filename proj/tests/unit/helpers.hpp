#pragma once

#include <gmpxx.h>

#include <random>
#include <string>
#include <vector>

#include "isogenix/field.hpp"
#include "isogenix/poly.hpp"
#include "isogenix/series.hpp"

namespace testutil {

using namespace isogenix;

inline mpz_class random_residue(std::mt19937_64& rng, const FieldContext& F) {
  // Two 64-bit draws cover every modulus used in the tests (< 2^128).
  mpz_class hi(static_cast<unsigned long>(rng()));
  mpz_class lo(static_cast<unsigned long>(rng()));
  mpz_class v = (hi << 64) + lo;
  return F.reduce(v);
}

inline Coeffs random_coeffs(std::mt19937_64& rng, const FieldContext& F, std::size_t n) {
  Coeffs c(n);
  for (auto& x : c) x = random_residue(rng, F);
  return c;
}

inline Coeffs longs(const FieldContext& F, std::initializer_list<long> v) {
  Coeffs c;
  for (long x : v) c.push_back(F.from_long(x));
  return c;
}

inline std::vector<long> as_longs(const Coeffs& c) {
  std::vector<long> out;
  for (const auto& x : c) out.push_back(x.get_si());
  return out;
}

// A prime close to 2^62 (2^62 - 57).
inline FieldRef field62() { return make_field(mpz_class("4611686018427387847")); }

}  // namespace testutil
