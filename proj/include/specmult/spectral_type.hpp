#pragma once

#include <string>
#include <vector>

#include "specmult/axiom_profile.hpp"
#include "specmult/measure_class.hpp"
#include "specmult/multiplicity.hpp"

namespace specmult {

struct Term {
  MeasureClass cls;
  Multiplicity mult;

  friend bool operator==(const Term&, const Term&) = default;
};

// Canonical finite formal sum of pairwise-disjoint measure classes with
// multiplicities. The only way to obtain a non-empty value is through
// canonicalize(), which applies the profile's regularity rewrites, merges
// equivalent classes and refuses (UnknownRelation) when two classes cannot
// be decided.
class SpectralType {
 public:
  SpectralType() = default;

  static SpectralType canonicalize(std::vector<Term> terms, const AxiomProfile& profile);
  static SpectralType single(MeasureClass cls, Multiplicity mult, const AxiomProfile& profile);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const SpectralType&, const SpectralType&) = default;

  // "{g1*sigma:1, g3*sigma:3}"
  std::string to_string() const;

 private:
  std::vector<Term> terms_;  // sorted by class, no duplicates, no zero entries
};

}  // namespace specmult
