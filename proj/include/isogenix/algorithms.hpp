#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "isogenix/isogeny.hpp"
#include "isogenix/series.hpp"

namespace isogenix {

enum class AlgorithmId { Elkies1992, Elkies1998, FastElkies, FastElkiesPrime, Stark1972, Atkin1992, AtkinModComp };

/// CLI spelling: "elkies1992", "elkies1998", "fast-elkies", "fast-elkies-prime",
/// "stark1972", "atkin1992", "atkin-modcomp".
const char* algorithm_name(AlgorithmId id) noexcept;
std::optional<AlgorithmId> parse_algorithm(std::string_view name) noexcept;
bool requires_sigma(AlgorithmId id) noexcept;
std::span<const AlgorithmId> all_algorithms() noexcept;

/// Whether an odd-degree computation goes through g (D = g^2) or D directly.
/// Auto picks g for odd l. Half with even l fails with EvenDegree.
enum class KernelMode { Auto, Half, Full };

/// Intermediates, filled in by whichever algorithm ran.
struct IsogenyWorkspace {
  /// h_i as the coefficient of z^i (valuation 1).
  std::optional<Series> h;
  /// p_0, p_1, ... or, when psums_halved, q_0, q_1, ...
  std::vector<FieldElement> psums;
  bool psums_halved = false;
  std::optional<Series> S, T, U, C;
  /// Atkin's F and exp(F), in Z = z^2.
  std::optional<Series> F, G;
  /// mu[k][j], j = 0..k+1.
  std::vector<std::vector<FieldElement>> mu;
  /// I(x)^2 = x J(x)^2, where I(x) = wp^{-1}(1/x).
  std::optional<Series> inv_wp;
  /// J = sum a_i x^i.
  std::optional<Series> J;
};

struct AlgorithmOptions {
  KernelMode mode = KernelMode::Auto;
  IsogenyWorkspace* workspace = nullptr;
};

Isogeny elkies1998(const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& sigma,
                   const AlgorithmOptions& opts = {});
Isogeny fast_elkies(const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& sigma,
                    const AlgorithmOptions& opts = {});
/// sigma is recovered by rational reconstruction. ReconstructionFailed when the
/// curves are not related by a normalized l-isogeny.
Isogeny fast_elkies_prime(const Curve& E, const Curve& Et, unsigned long ell, const AlgorithmOptions& opts = {});
/// LoopStall when the continued fraction does not produce a degree l-1 denominator.
Isogeny stark1972(const Curve& E, const Curve& Et, unsigned long ell, const AlgorithmOptions& opts = {});
Isogeny atkin1992(const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& sigma,
                  const AlgorithmOptions& opts = {});
Isogeny atkin_modcomp(const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& sigma,
                      const AlgorithmOptions& opts = {});
/// Odd l goes through g; even l is handled in D-mode.
Isogeny elkies1992(const Curve& E, const Curve& Et, unsigned long ell, const FieldElement& sigma,
                   const AlgorithmOptions& opts = {});

/// Runs the chosen algorithm and isogeny_verify. SigmaRequired when the algorithm
/// needs sigma and none is given; VerificationFailed when the result does not check.
Isogeny compute_isogeny(AlgorithmId algo, const Curve& E, const Curve& Et, unsigned long ell,
                        const std::optional<FieldElement>& sigma, const AlgorithmOptions& opts = {});

}  // namespace isogenix
