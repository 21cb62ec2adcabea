#pragma once

#include <cstdint>
#include <vector>

#include "specmult/axiom_profile.hpp"
#include "specmult/spectral_type.hpp"

namespace specmult {

enum class RelationVerdict { Equivalent, Disjoint, Unknown };

const char* verdict_name(RelationVerdict v) noexcept;

// Class-level canonical form under a profile: Lebesgue collapses, and under
// the Salem regime any singular class of level >= 2 becomes Lebesgue.
MeasureClass canonical_class(const MeasureClass& c, const AxiomProfile& profile);

// Total and symmetric; Unknown is never promoted to either answer.
RelationVerdict relate(const MeasureClass& a, const MeasureClass& b, const AxiomProfile& profile);

// Throws UnknownRelation unless every class of `x` is decided (Disjoint or
// Equivalent) against every class of `y`; returns true if some pair is
// Equivalent.
bool check_decided(const SpectralType& x, const SpectralType& y, const AxiomProfile& profile);

SpectralType direct_sum(const SpectralType& x, const SpectralType& y, const AxiomProfile& profile);

// Convolution of two classes; the boolean is set when the result carries
// infinite multiplicity regardless of the factors' (Lebesgue against a
// continuous factor).
struct Convolved {
  MeasureClass cls;
  bool absorbing = false;
};
Convolved convolve(const MeasureClass& a, const MeasureClass& b, const AxiomProfile& profile);

SpectralType tensor_product(const SpectralType& x, const SpectralType& y, const AxiomProfile& profile);

// The multiset expansion of Sym^n before merging: one entry per multiset of
// classes, multiplicity counting the multisets of simple copies it stands for.
std::vector<Term> sym_power_terms(const SpectralType& x, unsigned n, const AxiomProfile& profile);
SpectralType sym_power(const SpectralType& x, unsigned n, const AxiomProfile& profile);

enum class PowerMode {
  Tagged,  // powers the profile has no rule for become fresh power_tag classes
  Strict,  // such powers raise UnknownPowerRule
};
SpectralType operator_power(const SpectralType& x, std::uint64_t k, const AxiomProfile& profile,
                            PowerMode mode = PowerMode::Tagged);

// Throws EmptyType for the zero type.
MultiplicitySet multiplicity_set(const SpectralType& x);

}  // namespace specmult
