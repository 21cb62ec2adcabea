#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "specmult/axiom_profile.hpp"
#include "specmult/multiplicity.hpp"
#include "specmult/rational.hpp"
#include "specmult/spectral_type.hpp"

namespace specmult {

// `copies` copies of the flow e^{2πi·frequency·t}·U_t over the base class
// `base`. At time t the component contributes the class of `base` rotated by
// frequency·t (mod 1).
struct FlowComponent {
  Rational frequency;
  std::uint64_t copies = 1;
  std::string base = "sigma";

  friend bool operator==(const FlowComponent&, const FlowComponent&) = default;
};

struct FlowSpec {
  std::vector<FlowComponent> components;
  AxiomProfile profile;

  // Throws InvalidArgument: empty flow, zero copies, repeated
  // (frequency, base) pairs, bad base symbols.
  void validate() const;

  friend bool operator==(const FlowSpec&, const FlowSpec&) = default;
};

// Frequencies 0 and 1/2 on one base: U = V ⊕ (−V) with simple spectrum.
FlowSpec theorem2_flow();

// For every prime p, m(p) simple components with frequencies j/p,
// j = 0..m(p)−1, on a base "s<p>" generic against every other prime's base.
// Throws InvalidMultiplicityFunction unless every key is prime and
// 1 <= m(p) <= p.
FlowSpec theorem4_flow(const std::map<std::uint64_t, std::uint64_t>& m);

bool is_prime(std::uint64_t n) noexcept;

// Time-t map U_t of the base flow. t must be positive.
SpectralType time_t_type(const FlowSpec& flow, const Rational& t);
// U_t at a generic (irrational) time: all distinct frequencies give distinct
// phases, encoded as integer multiples of one generic generator.
SpectralType generic_time_type(const FlowSpec& flow);

MultiplicitySet gaussian_time_t_multiplicity(const FlowSpec& flow, const Rational& t);
// The almost-everywhere value of M(G_t).
MultiplicitySet generic_multiplicity(const FlowSpec& flow);

// Components merged into one class at time t: indices into flow.components,
// one entry per class fed by at least two components.
std::vector<std::vector<std::size_t>> merged_components(const FlowSpec& flow, const Rational& t);

// Rational t in (lo, hi] with denominator <= max_denominator at which two
// components on one base collide, sorted ascending. Throws EmptyInterval when
// the interval contains no positive time.
std::vector<Rational> exceptional_times(const FlowSpec& flow, const Rational& lo, const Rational& hi,
                                        std::uint64_t max_denominator);

// Smallest positive integer n with M(G_n) = {1, ∞} ∪ target, or nullopt when
// no integer time realizes it. Collisions at integer n depend only on
// gcd(n, L) for L the lcm of the frequency denominators, so the search over
// the divisors of L is exhaustive; more than `max_candidates` divisors raises
// SearchBoundExceeded.
std::optional<Rational> theorem4_scan(const FlowSpec& flow, const std::set<std::uint64_t>& target,
                                      std::uint64_t max_candidates = 1u << 20);

// M(G(U^{3^k})) under the self-similar profile with q = 3.
MultiplicitySet theorem3_multiplicity(unsigned k);

struct TimeRecord {
  Rational t;
  MultiplicitySet multiplicities;
  std::vector<std::vector<std::size_t>> merged;
};

std::vector<TimeRecord> flow_scan(const FlowSpec& flow, std::vector<Rational> times);

}  // namespace specmult
