#include "specmult/profiles.hpp"

#include <charconv>
#include <limits>

#include "specmult/error.hpp"

namespace specmult {

AxiomProfile salem_profile() {
  AxiomProfile p;
  p.name = "salem";
  p.regime = Regime::Salem;
  return p;
}

AxiomProfile chacon_profile() {
  AxiomProfile p;
  p.name = "chacon";
  p.regime = Regime::Chacon;
  return p;
}

AxiomProfile self_similar_profile(std::uint64_t q) {
  if (q < 2) raise(ErrorKind::InvalidArgument, "self-similarity factor must be >= 2, got " + std::to_string(q));
  AxiomProfile p = chacon_profile();
  p.name = "self-similar:" + std::to_string(q);
  p.self_similar = q;
  return p;
}

AxiomProfile atomic_profile() {
  AxiomProfile p;
  p.name = "atomic";
  p.generic_bases.clear();
  p.atomic_bases = {"delta"};
  return p;
}

AxiomProfile builtin_profile(const std::string& name) {
  if (name == "salem") return salem_profile();
  if (name == "chacon") return chacon_profile();
  if (name == "atomic") return atomic_profile();
  constexpr std::string_view prefix = "self-similar:";
  if (name.rfind(prefix, 0) == 0) {
    std::uint64_t q = 0;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size();
    const auto [ptr, ec] = std::from_chars(first, last, q);
    if (ec != std::errc() || ptr != last || first == last)
      raise(ErrorKind::InvalidArgument, "malformed profile name '" + name + "'");
    return self_similar_profile(q);
  }
  raise(ErrorKind::InvalidArgument,
        "unknown profile '" + name + "' (expected salem, chacon, atomic or self-similar:<q>)");
}

SpectralType build_rotation_family(const std::set<std::uint64_t>& multiplicities, const std::string& base) {
  if (multiplicities.empty()) raise(ErrorKind::EmptySet, "the multiplicity set M must be nonempty");
  std::vector<Term> terms;
  for (const std::uint64_t m : multiplicities) {
    if (m == 0) raise(ErrorKind::InvalidArgument, "multiplicities must be positive");
    if (m > std::numeric_limits<std::uint32_t>::max())
      raise(ErrorKind::InvalidArgument, "multiplicity " + std::to_string(m) + " exceeds the generator index range");
    terms.push_back(Term{MeasureClass::singular(base, Phase::generator(static_cast<std::uint32_t>(m))), Multiplicity(m)});
  }
  AxiomProfile rotations;
  rotations.generic_bases = {base};
  return SpectralType::canonicalize(std::move(terms), rotations);
}

}  // namespace specmult
