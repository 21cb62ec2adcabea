#include "specmult/axiom_profile.hpp"

#include "specmult/error.hpp"
#include "specmult/measure_class.hpp"

namespace specmult {

const char* regime_name(Regime r) noexcept {
  switch (r) {
    case Regime::None: return "none";
    case Regime::Salem: return "salem";
    case Regime::Chacon: return "chacon";
  }
  return "none";
}

Regime parse_regime(const std::string& name) {
  if (name == "none") return Regime::None;
  if (name == "salem") return Regime::Salem;
  if (name == "chacon") return Regime::Chacon;
  raise(ErrorKind::InvalidArgument, "unknown regime '" + name + "' (expected none, salem or chacon)");
}

void AxiomProfile::validate() const {
  if (self_similar && *self_similar < 2)
    raise(ErrorKind::InvalidArgument, "self_similar factor must be >= 2, got " + std::to_string(*self_similar));
  for (const auto& b : generic_bases)
    if (!is_valid_atom(b)) raise(ErrorKind::InvalidArgument, "invalid generic base symbol '" + b + "'");
  for (const auto& b : atomic_bases) {
    if (!is_valid_atom(b)) raise(ErrorKind::InvalidArgument, "invalid atomic base symbol '" + b + "'");
    if (generic_bases.count(b))
      raise(ErrorKind::InvalidArgument, "base '" + b + "' cannot be both atomic and generic");
  }
  for (const auto& [key, rule] : cross_base_rules) {
    (void)rule;
    if (key.first.empty() || key.second.empty() || key.first >= key.second)
      raise(ErrorKind::InvalidArgument, "cross-base rule needs two distinct ordered bases");
  }
}

std::optional<CrossRule> AxiomProfile::cross_rule(const std::string& a, const std::string& b) const {
  const auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  if (auto it = cross_base_rules.find(key); it != cross_base_rules.end()) return it->second;
  return std::nullopt;
}

void AxiomProfile::set_cross_rule(const std::string& a, const std::string& b, CrossRule rule) {
  if (a == b) raise(ErrorKind::InvalidArgument, "cross-base rule needs two distinct bases");
  cross_base_rules[a < b ? std::make_pair(a, b) : std::make_pair(b, a)] = rule;
}

}  // namespace specmult
