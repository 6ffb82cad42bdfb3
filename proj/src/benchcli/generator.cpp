#include "isogenix/generator.hpp"

#include <cmath>

namespace isogenix {

namespace {

std::vector<unsigned long> prime_factors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long r = 2; r * r <= n; ++r) {
    if (n % r != 0) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

mpz_class random_below(std::mt19937_64& rng, const mpz_class& n) {
  // n fits comfortably in 64 bits wherever this is used.
  return mpz_class(static_cast<unsigned long>(rng() % n.get_ui()));
}

struct Attempt {
  Curve E;
  std::vector<PointAffine> kernel;
};

std::optional<Attempt> try_field(const FieldRef& F, unsigned long ell, std::mt19937_64& rng) {
  FieldElement A(F, random_below(rng, F->modulus()));
  FieldElement B(F, random_below(rng, F->modulus()));
  if (!is_nonsingular(A, B)) return std::nullopt;
  Curve E(A, B);
  const std::uint64_t order = group_order(E);
  if (order % ell != 0) return std::nullopt;
  auto P = point_of_order(E, mpz_class(static_cast<unsigned long>(order)), ell, rng);
  if (!P) return std::nullopt;
  return Attempt{E, cyclic_subgroup(*P, ell, E)};
}

GeneratedInstance finish(const Attempt& a, std::uint64_t seed) {
  auto [Et, I] = velu_from_kernel(a.E, a.kernel);
  // One abscissa per +-P pair, in the order P, 2P, ...
  std::vector<FieldElement> xs;
  const std::size_t ell = a.kernel.size() + 1;
  for (std::size_t k = 1; 2 * k <= ell; ++k) xs.push_back(a.kernel[k - 1].x());
  return GeneratedInstance{instance_from_isogeny(I, xs, seed), I, a.kernel};
}

void check_request(const mpz_class& p_hi, unsigned long ell) {
  if (ell < 2) throw Error(Errc::InvalidDegree, "generator needs l >= 2");
  if (p_hi > kEnumerationBound) {
    throw Error(Errc::FieldTooLarge, "p must not exceed the enumeration bound " + std::to_string(kEnumerationBound));
  }
}

}  // namespace

std::vector<PointAffine> cyclic_subgroup(const PointAffine& P, unsigned long ell, const Curve& E) {
  if (P.is_identity()) return {};
  std::vector<PointAffine> out{P};
  PointAffine Q = P;
  for (unsigned long k = 2; k < ell; ++k) {
    Q = point_add(Q, P, E);
    if (Q.is_identity()) return {};
    out.push_back(Q);
  }
  if (!point_add(Q, P, E).is_identity()) return {};
  return out;
}

std::optional<PointAffine> point_of_order(const Curve& E, const mpz_class& order, unsigned long ell,
                                          std::mt19937_64& rng, int tries) {
  if (ell == 0 || order % ell != 0) return std::nullopt;
  const mpz_class cof = order / ell;
  const auto primes = prime_factors(ell);
  for (int t = 0; t < tries; ++t) {
    PointAffine P = scalar_mul(cof, random_point(E, rng), E);
    if (P.is_identity() || !scalar_mul(mpz_class(ell), P, E).is_identity()) continue;
    bool exact = true;
    for (unsigned long r : primes) {
      if (scalar_mul(mpz_class(ell / r), P, E).is_identity()) exact = false;
    }
    if (exact) return P;
  }
  return std::nullopt;
}

GeneratedInstance generate_instance(const mpz_class& p, unsigned long ell, std::uint64_t seed, std::size_t budget) {
  return generate_instance(p, p, ell, seed, budget);
}

GeneratedInstance generate_instance(const mpz_class& p_lo, const mpz_class& p_hi, unsigned long ell,
                                    std::uint64_t seed, std::size_t budget) {
  check_request(p_hi, ell);
  const mpz_class lo = std::max(p_lo, mpz_class(8 * ell - 4));
  if (lo > p_hi) {
    throw Error(Errc::NotFound, "no prime in range exceeds 8l-5 = " + std::to_string(8 * ell - 5));
  }
  // Hasse: #E <= p + 1 + 2 sqrt(p) bounds the order of any rational point.
  const double hasse = p_hi.get_d() + 1 + 2 * std::sqrt(p_hi.get_d());
  if (static_cast<double>(ell) > hasse) throw Error(Errc::NotFound, "l exceeds the Hasse bound for every p in range");

  std::mt19937_64 rng(seed);
  const mpz_class width = p_hi - lo + 1;
  FieldRef fixed;
  if (lo == p_hi) fixed = make_field(lo);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    FieldRef F = fixed;
    if (!F) {
      mpz_class q = lo + random_below(rng, width);
      mpz_class pr;
      mpz_nextprime(pr.get_mpz_t(), mpz_class(q - 1).get_mpz_t());
      if (pr > p_hi) continue;
      F = make_field(pr);
    }
    if (auto a = try_field(F, ell, rng)) return finish(*a, seed);
  }
  throw Error(Errc::NotFound, "no curve with a rational point of order " + std::to_string(ell) + " within " +
                                  std::to_string(budget) + " attempts");
}

}  // namespace isogenix
