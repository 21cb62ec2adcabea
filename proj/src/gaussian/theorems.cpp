#include <algorithm>
#include <vector>

#include "specmult/calculus.hpp"
#include "specmult/error.hpp"
#include "specmult/gaussian.hpp"
#include "specmult/profiles.hpp"

namespace specmult {

Theorem1Result theorem1_multiplicity(const std::set<std::uint64_t>& multiplicities, Regime regime) {
  Theorem1Result out;
  AxiomProfile profile;
  switch (regime) {
    case Regime::Salem:
      profile = salem_profile();
      out.label = "mixing Gaussian automorphism (label only, not verified)";
      break;
    case Regime::Chacon:
      profile = chacon_profile();
      out.label = "non-mixing automorphism with singular spectrum (label only, not verified)";
      break;
    case Regime::None:
      raise(ErrorKind::InvalidArgument, "theorem1_multiplicity needs the salem or chacon regime");
  }
  out.multiplicities = exp_multiplicity_set(build_rotation_family(multiplicities), profile);
  return out;
}

namespace {

// Koopman operator of a factor: constants ⊕ rest.
struct Koopman {
  Multiplicity constants;
  SpectralType rest;
};

SpectralType scaled(const SpectralType& x, const Multiplicity& m, const AxiomProfile& profile) {
  std::vector<Term> terms = x.terms();
  for (auto& t : terms) t.mult = t.mult * m;
  return SpectralType::canonicalize(std::move(terms), profile);
}

// (c₁ ⊕ X) ⊗ (c₂ ⊕ Y) = c₁c₂ ⊕ c₂X ⊕ c₁Y ⊕ X⊗Y
Koopman product(const Koopman& a, const Koopman& b, const AxiomProfile& profile) {
  Koopman out;
  out.constants = a.constants * b.constants;
  out.rest = direct_sum(scaled(a.rest, b.constants, profile), scaled(b.rest, a.constants, profile), profile);
  out.rest = direct_sum(out.rest, tensor_product(a.rest, b.rest, profile), profile);
  return out;
}

}  // namespace

ProductResult theorem1_1_multiplicity(const std::set<std::uint64_t>& multiplicities) {
  if (multiplicities.empty()) raise(ErrorKind::EmptySet, "the multiplicity set M must be nonempty");
  ProductResult out;
  AxiomProfile& profile = out.profile;
  profile.name = "product";
  profile.regime = Regime::Salem;  // within-factor convolutions are absolutely continuous
  profile.generic_bases.clear();
  // The infinite product is truncated to max(|M|, 2) factors, multiplicities
  // assigned cyclically; further factors only add Lebesgue cross terms.
  const std::vector<std::uint64_t> ms(multiplicities.begin(), multiplicities.end());
  const std::size_t factors = std::max<std::size_t>(ms.size(), 2);
  std::vector<std::string> bases;
  for (const auto m : ms)
    if (m == 0) raise(ErrorKind::InvalidArgument, "multiplicities must be positive");
  for (std::size_t i = 0; i < factors; ++i) {
    bases.push_back("sigma_" + std::to_string(i + 1));
    profile.generic_bases.insert(bases.back());
  }
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = i + 1; j < bases.size(); ++j) profile.set_cross_rule(bases[i], bases[j], CrossRule::Lebesgue);

  Koopman acc{Multiplicity(1), SpectralType()};
  for (std::size_t i = 0; i < factors; ++i) {
    const Koopman factor{Multiplicity(1), SpectralType::single(MeasureClass::singular(bases[i]),
                                                               Multiplicity(ms[i % ms.size()]), profile)};
    acc = product(acc, factor, profile);
  }
  out.koopman = acc.rest;
  out.multiplicities = multiplicity_set(acc.rest);
  out.note = "disjointness of T from every Gaussian automorphism is asserted by the construction, not verified";
  return out;
}

}  // namespace specmult
