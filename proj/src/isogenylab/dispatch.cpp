#include <array>

#include "common.hpp"

namespace isogenix {

namespace {

struct Entry {
  AlgorithmId id;
  const char* name;
  bool sigma;
};

constexpr std::array<Entry, 7> kTable{{
    {AlgorithmId::Elkies1992, "elkies1992", true},
    {AlgorithmId::Elkies1998, "elkies1998", true},
    {AlgorithmId::FastElkies, "fast-elkies", true},
    {AlgorithmId::FastElkiesPrime, "fast-elkies-prime", false},
    {AlgorithmId::Stark1972, "stark1972", false},
    {AlgorithmId::Atkin1992, "atkin1992", true},
    {AlgorithmId::AtkinModComp, "atkin-modcomp", true},
}};

constexpr std::array<AlgorithmId, 7> kIds{AlgorithmId::Elkies1992,      AlgorithmId::Elkies1998, AlgorithmId::FastElkies,
                                          AlgorithmId::FastElkiesPrime, AlgorithmId::Stark1972,  AlgorithmId::Atkin1992,
                                          AlgorithmId::AtkinModComp};

const Entry& entry(AlgorithmId id) {
  for (const auto& e : kTable) {
    if (e.id == id) return e;
  }
  throw Error(Errc::InvalidArgument, "unknown algorithm");
}

}  // namespace

const char* algorithm_name(AlgorithmId id) noexcept {
  for (const auto& e : kTable) {
    if (e.id == id) return e.name;
  }
  return "?";
}

std::optional<AlgorithmId> parse_algorithm(std::string_view name) noexcept {
  for (const auto& e : kTable) {
    if (name == e.name) return e.id;
  }
  return std::nullopt;
}

bool requires_sigma(AlgorithmId id) noexcept {
  for (const auto& e : kTable) {
    if (e.id == id) return e.sigma;
  }
  return false;
}

std::span<const AlgorithmId> all_algorithms() noexcept { return kIds; }

Isogeny compute_isogeny(AlgorithmId algo, const Curve& E, const Curve& Et, unsigned long ell,
                        const std::optional<FieldElement>& sigma, const AlgorithmOptions& opts) {
  const Entry& e = entry(algo);
  if (e.sigma && !sigma) throw Error(Errc::SigmaRequired, std::string(e.name) + " needs sigma");
  Isogeny I = [&] {
    switch (algo) {
      case AlgorithmId::Elkies1992:
        return elkies1992(E, Et, ell, *sigma, opts);
      case AlgorithmId::Elkies1998:
        return elkies1998(E, Et, ell, *sigma, opts);
      case AlgorithmId::FastElkies:
        return fast_elkies(E, Et, ell, *sigma, opts);
      case AlgorithmId::FastElkiesPrime:
        return fast_elkies_prime(E, Et, ell, opts);
      case AlgorithmId::Stark1972:
        return stark1972(E, Et, ell, opts);
      case AlgorithmId::Atkin1992:
        return atkin1992(E, Et, ell, *sigma, opts);
      case AlgorithmId::AtkinModComp:
        return atkin_modcomp(E, Et, ell, *sigma, opts);
    }
    throw Error(Errc::InvalidArgument, "unknown algorithm");
  }();
  VerificationReport rep = isogeny_verify(I);
  if (!rep.ok()) {
    throw Error(Errc::VerificationFailed, std::string(e.name) + " output failed the " + rep.first_failure() + " check");
  }
  return I;
}

}  // namespace isogenix
