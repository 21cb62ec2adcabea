#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "specmult/phase.hpp"

namespace specmult {

enum class Regularity { Singular, Lebesgue };

// Symbolic spectral measure class: the rotation by `phase` of the
// `level`-fold convolution power of the measure named `base`, pushed forward
// under z -> z^power_tag.
//
// A base is either an atom ("sigma") or a composite of atoms joined by '*'
// ("s2*s3*s3"), the fresh symbol for a cross-base convolution. For composites
// the level equals the number of atoms.
struct MeasureClass {
  Regularity regularity = Regularity::Singular;
  std::string base = "sigma";
  std::uint32_t level = 1;
  std::uint64_t power_tag = 1;
  Phase phase;

  static constexpr std::string_view kLebesgueBase = "lebesgue";

  static MeasureClass lebesgue();
  static MeasureClass singular(std::string base, Phase phase = {}, std::uint32_t level = 1,
                               std::uint64_t power_tag = 1);

  bool is_lebesgue() const noexcept { return regularity == Regularity::Lebesgue; }

  // Lebesgue classes collapse to the single absorbing class; everything else
  // is returned unchanged.
  MeasureClass canonical() const;

  friend bool operator==(const MeasureClass&, const MeasureClass&) = default;
  // Field order (regularity, base, level, power_tag, phase) keeps classes that
  // differ only by phase adjacent after sorting.
  friend std::strong_ordering operator<=>(const MeasureClass& a, const MeasureClass& b);

  // "lebesgue", "sigma", "g3*sigma", "1/2*sigma^(2)", "sigma[^3]"
  std::string to_string() const;
};

// Sorted atom list of a base with the given level: ("sigma", 2) -> [sigma,
// sigma]; ("a*b", 2) -> [a, b].
std::vector<std::string> base_atoms(const std::string& base, std::uint32_t level);
// Inverse of base_atoms: a single distinct atom gives (atom, count), several
// give the composite symbol.
std::pair<std::string, std::uint32_t> base_from_atoms(std::vector<std::string> atoms);
bool is_valid_atom(std::string_view name) noexcept;

}  // namespace specmult
