#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace specmult {

// Which lemma certifies the behaviour of convolution powers of the base.
//   Salem  - every class of level >= 2 is absolutely continuous.
//   Chacon - classes of distinct levels are pairwise disjoint and every class
//            of level >= 2 has homogeneous infinite multiplicity.
enum class Regime { None, Salem, Chacon };

enum class CrossRule {
  Lebesgue,  // the convolution of the two bases is absolutely continuous
  Fresh,     // the convolution is a new singular class named by its atoms
};

const char* regime_name(Regime r) noexcept;
Regime parse_regime(const std::string& name);

// A rule set declaring the disjointness, equivalence and regularity facts the
// calculus may use. Profiles are plain data so they can be loaded from files.
struct AxiomProfile {
  std::string name = "custom";
  // Distinct rotations of one singular base are mutually singular.
  bool generic_rotations = true;
  Regime regime = Regime::None;
  // U^q is spectrally isomorphic to q copies of U.
  std::optional<std::uint64_t> self_similar;
  // Keyed by the lexicographically ordered pair of base symbols.
  std::map<std::pair<std::string, std::string>, CrossRule> cross_base_rules;
  // Cross-base convolutions without a rule produce a fresh composite symbol
  // instead of failing.
  bool symbolic_mode = false;
  // Atoms that are mutually generic: classes over distinct atom multisets
  // drawn from this set are disjoint.
  std::set<std::string> generic_bases = {"sigma"};
  // Atoms that denote the point mass at 1 (toy profiles for brute-force
  // comparison against diagonal unitaries).
  std::set<std::string> atomic_bases;
  // Pushforwards under distinct powers are mutually singular.
  bool power_tags_disjoint = true;

  // Throws InvalidArgument on a malformed profile.
  void validate() const;

  bool is_atomic(const std::string& base) const { return atomic_bases.count(base) != 0; }
  std::optional<CrossRule> cross_rule(const std::string& a, const std::string& b) const;
  void set_cross_rule(const std::string& a, const std::string& b, CrossRule rule);

  friend bool operator==(const AxiomProfile&, const AxiomProfile&) = default;
};

}  // namespace specmult
