#include "specmult/gaussian.hpp"

#include "specmult/calculus.hpp"
#include "specmult/error.hpp"

namespace specmult {

namespace {

constexpr unsigned kMaxLevel = 6;

// Whether level `n` (n >= 2) lets the regime certify all levels above it.
bool certifies(const SpectralType& level, const AxiomProfile& profile) {
  for (const auto& t : level.terms()) {
    if (!t.mult.is_infinite()) return false;
    if (t.cls.is_lebesgue()) continue;
    if (profile.regime != Regime::Chacon || profile.is_atomic(t.cls.base) || t.cls.level < 2) return false;
  }
  return true;
}

std::string saturation_reason(const AxiomProfile& profile, unsigned n) {
  if (profile.regime == Regime::Salem)
    return "stop at level " + std::to_string(n) +
           ": salem rule, every class of level >= 2 is Lebesgue with infinite multiplicity, "
           "and Lebesgue absorbs all further convolutions";
  return "stop at level " + std::to_string(n) +
         ": chacon rule, symmetric powers of level >= 2 are pairwise disjoint from level 1 "
         "and homogeneous of infinite multiplicity at every higher level";
}

}  // namespace

FockExpansion exp_fock(const SpectralType& v, const AxiomProfile& profile) {
  if (profile.regime == Regime::None)
    raise(ErrorKind::NoSaturationRule,
          "profile '" + profile.name + "' has regime none; the Fock expansion cannot be certified");
  FockExpansion out;
  out.levels.push_back(v);
  out.trace.push_back("level 1: V = " + v.to_string());
  if (v.empty()) {
    out.saturated = true;
    out.trace.push_back("stop at level 1: V is zero, so every symmetric power vanishes");
    return out;
  }
  for (unsigned n = 2; n <= kMaxLevel; ++n) {
    out.levels.push_back(sym_power(v, n, profile));
    const SpectralType& lv = out.levels.back();
    out.trace.push_back("level " + std::to_string(n) + ": Sym^" + std::to_string(n) + " V has " +
                        std::to_string(lv.size()) + " classes after merging");
    if (certifies(lv, profile)) {
      out.saturated = true;
      out.trace.push_back(saturation_reason(profile, n));
      return out;
    }
  }
  raise(ErrorKind::NoSaturationRule, "regime '" + std::string(regime_name(profile.regime)) +
                                         "' did not certify saturation by level " + std::to_string(kMaxLevel));
}

MultiplicitySet fock_multiplicity_set(const FockExpansion& fock, const AxiomProfile& profile) {
  MultiplicitySet out = multiplicity_set(fock.levels.front());
  for (std::size_t i = 1; i < fock.levels.size(); ++i) {
    bool equivalent = false;
    try {
      equivalent = check_decided(fock.levels.front(), fock.levels[i], profile);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnknownRelation) throw;
      raise(ErrorKind::DisjointnessViolation, std::string("level 1 against level ") + std::to_string(i + 1) +
                                                  " is undecided (" + e.what() + ")");
    }
    if (equivalent)
      raise(ErrorKind::DisjointnessViolation,
            "a level-1 class is equivalent to a class of level " + std::to_string(i + 1));
    for (const auto& t : fock.levels[i].terms()) out.insert(t.mult);
  }
  return out;
}

MultiplicitySet exp_multiplicity_set(const SpectralType& v, const AxiomProfile& profile) {
  return fock_multiplicity_set(exp_fock(v, profile), profile);
}

FockExpansion gaussian_type(const SpectralType& u, const AxiomProfile& profile) {
  FockExpansion out = exp_fock(u, profile);
  out.has_constants = true;
  out.trace.insert(out.trace.begin(),
                   "level 0: constants (one-dimensional identity), excluded from the multiplicity set");
  return out;
}

}  // namespace specmult
