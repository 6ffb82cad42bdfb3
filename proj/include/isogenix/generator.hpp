#pragma once

#include <cstdint>
#include <vector>

#include "isogenix/instance.hpp"

namespace isogenix {

inline constexpr std::size_t kDefaultGenBudget = 4096;

struct GeneratedInstance {
  InstanceFile file;
  Isogeny isogeny;
  /// Nonzero kernel points P, 2P, ..., (l-1)P.
  std::vector<PointAffine> kernel;
};

/// Random curves over F_p (seeded, deterministic) until one has a rational point of
/// exact order l, then Vélu. Needs p within the enumeration bound and p > 8l-5 so
/// that every algorithm applies; NotFound when impossible or the budget runs out.
GeneratedInstance generate_instance(const mpz_class& p, unsigned long ell, std::uint64_t seed,
                                    std::size_t budget = kDefaultGenBudget);
/// Same, drawing a fresh prime from [p_lo, p_hi] for each attempt.
GeneratedInstance generate_instance(const mpz_class& p_lo, const mpz_class& p_hi, unsigned long ell,
                                    std::uint64_t seed, std::size_t budget = kDefaultGenBudget);

/// Multiples P, ..., (l-1)P when P has exact order l, else empty.
std::vector<PointAffine> cyclic_subgroup(const PointAffine& P, unsigned long ell, const Curve& E);
/// A point of exact order l found as [order/l]R for random R, or nullopt after `tries`.
std::optional<PointAffine> point_of_order(const Curve& E, const mpz_class& order, unsigned long ell,
                                          std::mt19937_64& rng, int tries = 32);

}  // namespace isogenix
