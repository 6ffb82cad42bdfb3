#include "isogenix/instance.hpp"

#include <json.hpp>

namespace isogenix {

namespace {

using nlohmann::json;

std::vector<std::string> strings_of(const Polynomial& p) { return p.to_strings(); }

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(Errc::ParseError, std::string("instance is missing \"") + key + "\"");
  return *it;
}

std::string decimal(const json& v, const char* key) {
  if (!v.is_string()) throw Error(Errc::ParseError, std::string("\"") + key + "\" must be a decimal string");
  std::string s = v.get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(Errc::ParseError, std::string("\"") + key + "\" is not a decimal string: " + s);
  }
  return s;
}

std::optional<std::vector<std::string>> decimal_list(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_array()) throw Error(Errc::ParseError, std::string("\"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& v : *it) out.push_back(decimal(v, key));
  return out;
}

}  // namespace

std::string instance_to_json(const InstanceFile& inst, int indent) {
  json j;
  j["p"] = inst.p;
  j["A"] = inst.A;
  j["B"] = inst.B;
  j["At"] = inst.At;
  j["Bt"] = inst.Bt;
  j["ell"] = inst.ell;
  if (inst.sigma) j["sigma"] = *inst.sigma;
  if (inst.D) j["D"] = *inst.D;
  if (inst.N) j["N"] = *inst.N;
  if (inst.kernel_xs) j["kernel_xs"] = *inst.kernel_xs;
  if (inst.seed) j["seed"] = *inst.seed;
  return j.dump(indent);
}

InstanceFile instance_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::ParseError, "instance must be a JSON object");
  InstanceFile inst;
  inst.p = decimal(field(j, "p"), "p");
  inst.A = decimal(field(j, "A"), "A");
  inst.B = decimal(field(j, "B"), "B");
  inst.At = decimal(field(j, "At"), "At");
  inst.Bt = decimal(field(j, "Bt"), "Bt");
  const json& ell = field(j, "ell");
  if (!ell.is_number_unsigned()) throw Error(Errc::ParseError, "\"ell\" must be a non-negative integer");
  inst.ell = ell.get<unsigned long>();
  if (auto it = j.find("sigma"); it != j.end() && !it->is_null()) inst.sigma = decimal(*it, "sigma");
  inst.D = decimal_list(j, "D");
  inst.N = decimal_list(j, "N");
  inst.kernel_xs = decimal_list(j, "kernel_xs");
  if (auto it = j.find("seed"); it != j.end() && !it->is_null()) {
    if (!it->is_number_unsigned()) throw Error(Errc::ParseError, "\"seed\" must be a non-negative integer");
    inst.seed = it->get<std::uint64_t>();
  }
  if (inst.D && inst.D->size() != inst.ell) {
    throw Error(Errc::InvalidArgument, "D must list l coefficients (degree l-1, leading 1 included)");
  }
  if (inst.N && inst.N->size() != inst.ell + 1) {
    throw Error(Errc::InvalidArgument, "N must list l+1 coefficients (degree l, leading 1 included)");
  }
  return inst;
}

ResolvedInstance resolve_instance(const InstanceFile& inst) {
  FieldRef F = make_field(inst.p);
  Curve E(FieldElement(F, inst.A), FieldElement(F, inst.B));
  Curve Et(FieldElement(F, inst.At), FieldElement(F, inst.Bt));
  ResolvedInstance r{F, E, Et, inst.ell, std::nullopt, std::nullopt, std::nullopt, {}};
  if (inst.sigma) r.sigma = FieldElement(F, *inst.sigma);
  if (inst.D) r.D = Polynomial::from_strings(F, *inst.D);
  if (inst.N) r.N = Polynomial::from_strings(F, *inst.N);
  if (inst.kernel_xs) {
    for (const auto& x : *inst.kernel_xs) r.kernel_xs.emplace_back(F, x);
  }
  return r;
}

Isogeny claimed_isogeny(const ResolvedInstance& inst) {
  if (!inst.D || !inst.N) throw Error(Errc::InvalidArgument, "instance carries no D and N to check");
  FieldElement sigma = inst.sigma ? *inst.sigma : kernel_data_from_polynomial(*inst.D).sigma;
  if (inst.ell == 1 && !inst.sigma) sigma = FieldElement(inst.field, 0L);
  return Isogeny{inst.E, inst.Et, inst.ell, *inst.N, *inst.D, sigma, std::nullopt};
}

InstanceFile instance_from_isogeny(const Isogeny& I, const std::vector<FieldElement>& kernel_xs,
                                   std::optional<std::uint64_t> seed) {
  InstanceFile f;
  f.p = I.source.field()->to_string();
  f.A = I.source.A().to_string();
  f.B = I.source.B().to_string();
  f.At = I.target.A().to_string();
  f.Bt = I.target.B().to_string();
  f.ell = I.ell;
  f.sigma = I.sigma.to_string();
  f.D = strings_of(I.D);
  f.N = strings_of(I.N);
  if (!kernel_xs.empty()) {
    std::vector<std::string> xs;
    for (const auto& x : kernel_xs) xs.push_back(x.to_string());
    f.kernel_xs = std::move(xs);
  }
  f.seed = seed;
  return f;
}

}  // namespace isogenix
