#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isogenix/isogeny.hpp"

namespace isogenix {

/// JSON instance: decimal strings, coefficient arrays ascending with the leading 1 stored.
struct InstanceFile {
  std::string p, A, B, At, Bt;
  unsigned long ell = 0;
  std::optional<std::string> sigma;
  std::optional<std::vector<std::string>> D, N;
  std::optional<std::vector<std::string>> kernel_xs;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

std::string instance_to_json(const InstanceFile& inst, int indent = 2);
/// ParseError on malformed JSON or fields; InvalidArgument when D or N has the wrong length.
InstanceFile instance_from_json(std::string_view text);

/// An instance with its field objects built.
struct ResolvedInstance {
  FieldRef field;
  Curve E, Et;
  unsigned long ell;
  std::optional<FieldElement> sigma;
  std::optional<Polynomial> D, N;
  std::vector<FieldElement> kernel_xs;
};

ResolvedInstance resolve_instance(const InstanceFile& inst);
/// The isogeny the instance claims; InvalidArgument without D and N.
Isogeny claimed_isogeny(const ResolvedInstance& inst);

InstanceFile instance_from_isogeny(const Isogeny& I, const std::vector<FieldElement>& kernel_xs = {},
                                   std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace isogenix
