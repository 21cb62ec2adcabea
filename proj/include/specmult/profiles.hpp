#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "specmult/axiom_profile.hpp"
#include "specmult/spectral_type.hpp"

namespace specmult {

// Built-in axiom systems. All three include generic rotations and use the
// single base "sigma".
AxiomProfile salem_profile();
AxiomProfile chacon_profile();
// chacon_profile() plus U^q ≅ q·U. Throws InvalidArgument for q < 2.
AxiomProfile self_similar_profile(std::uint64_t q);
// Toy profile whose base "delta" is the point mass at 1; every class is a
// single eigenvalue, so results can be checked against diagonal unitaries.
AxiomProfile atomic_profile();

// "salem", "chacon", "atomic" or "self-similar:<q>".
AxiomProfile builtin_profile(const std::string& name);

// ⊕_{m∈M} m·(g_m σ): one class per m, rotated by the generic generator g_m.
// Throws EmptySet for M = ∅ and InvalidArgument for a zero element.
SpectralType build_rotation_family(const std::set<std::uint64_t>& multiplicities,
                                   const std::string& base = "sigma");

}  // namespace specmult
