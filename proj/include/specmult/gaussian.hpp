#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "specmult/axiom_profile.hpp"
#include "specmult/multiplicity.hpp"
#include "specmult/spectral_type.hpp"

namespace specmult {

// Symmetric Fock exponential Exp(V) = ⊕_{n>=1} V^⊙n, truncated at the first
// level from which the profile's regime certifies every higher level.
struct FockExpansion {
  std::vector<SpectralType> levels;  // levels[n-1] is V^⊙n
  bool saturated = false;
  // Set by gaussian_type: the one-dimensional constants summand U^⊙0 = 1 is
  // part of the operator but excluded from multiplicity sets.
  bool has_constants = false;
  std::vector<std::string> trace;

  const SpectralType& level(unsigned n) const { return levels.at(n - 1); }
};

// Throws NoSaturationRule when the regime is None (or the regime's rule never
// applies within the level cap); propagates UnknownRelation.
FockExpansion exp_fock(const SpectralType& v, const AxiomProfile& profile);

// Union of the level multiplicity sets after checking that every level-1
// class is Disjoint from every higher-level class (DisjointnessViolation
// otherwise).
MultiplicitySet fock_multiplicity_set(const FockExpansion& fock, const AxiomProfile& profile);
MultiplicitySet exp_multiplicity_set(const SpectralType& v, const AxiomProfile& profile);

// Spectral type of the Gaussian automorphism G(U): ⊕_{n>=0} U^⊙n.
FockExpansion gaussian_type(const SpectralType& u, const AxiomProfile& profile);

struct Theorem1Result {
  MultiplicitySet multiplicities;
  // Dynamical label attached to the regime; not verified by the calculus.
  std::string label;
};

// exp_multiplicity_set(build_rotation_family(M)) under the Salem or Chacon
// profile. Throws EmptySet for M = ∅.
Theorem1Result theorem1_multiplicity(const std::set<std::uint64_t>& multiplicities, Regime regime);

struct ProductResult {
  MultiplicitySet multiplicities;
  // Koopman type of T₁×T₂×… on the orthocomplement of constants.
  SpectralType koopman;
  AxiomProfile profile;
  std::string note;
};

// Product T = T₁×T₂×… with T_i of homogeneous multiplicity m_i (one base
// symbol per m ∈ M) and every convolution between or within factors
// absolutely continuous.
ProductResult theorem1_1_multiplicity(const std::set<std::uint64_t>& multiplicities);

}  // namespace specmult
