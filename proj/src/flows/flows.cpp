#include "specmult/flows.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "specmult/calculus.hpp"
#include "specmult/error.hpp"
#include "specmult/gaussian.hpp"
#include "specmult/profiles.hpp"

namespace specmult {

void FlowSpec::validate() const {
  if (components.empty()) raise(ErrorKind::InvalidArgument, "a flow needs at least one component");
  std::set<std::pair<Rational, std::string>> seen;
  for (const auto& c : components) {
    if (c.copies == 0) raise(ErrorKind::InvalidArgument, "component copies must be positive");
    if (!is_valid_atom(c.base)) raise(ErrorKind::InvalidArgument, "invalid base symbol '" + c.base + "'");
    if (!seen.insert({c.frequency, c.base}).second)
      raise(ErrorKind::InvalidArgument,
            "repeated component (" + c.frequency.to_string() + ", " + c.base + "); merge the copies instead");
  }
  profile.validate();
}

FlowSpec theorem2_flow() {
  FlowSpec flow;
  flow.components = {{Rational(0), 1, "sigma"}, {Rational(1, 2), 1, "sigma"}};
  flow.profile = chacon_profile();
  return flow;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (const std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
      if (e & 1) r = mulmod(r, a, m);
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (const std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

FlowSpec theorem4_flow(const std::map<std::uint64_t, std::uint64_t>& m) {
  if (m.empty()) raise(ErrorKind::InvalidMultiplicityFunction, "the multiplicity function is empty");
  FlowSpec flow;
  flow.profile = chacon_profile();
  flow.profile.name = "prime-phases";
  flow.profile.symbolic_mode = true;
  for (const auto& [p, mp] : m) {
    if (!is_prime(p)) raise(ErrorKind::InvalidMultiplicityFunction, std::to_string(p) + " is not prime");
    if (mp < 1 || mp > p)
      raise(ErrorKind::InvalidMultiplicityFunction,
            "m(" + std::to_string(p) + ") = " + std::to_string(mp) + " is outside [1, " + std::to_string(p) + "]");
    if (p > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      raise(ErrorKind::Overflow, "prime exceeds the rational range");
    const std::string base = "s" + std::to_string(p);
    flow.profile.generic_bases.insert(base);
    for (std::uint64_t j = 0; j < mp; ++j)
      flow.components.push_back({Rational(static_cast<std::int64_t>(j), static_cast<std::int64_t>(p)), 1, base});
  }
  return flow;
}

namespace {

void require_positive(const Rational& t) {
  if (t <= Rational(0)) raise(ErrorKind::InvalidArgument, "time must be positive, got " + t.to_string());
}

}  // namespace

SpectralType time_t_type(const FlowSpec& flow, const Rational& t) {
  require_positive(t);
  std::vector<Term> terms;
  terms.reserve(flow.components.size());
  for (const auto& c : flow.components)
    terms.push_back(Term{MeasureClass::singular(c.base, Phase::rational(c.frequency * t)), Multiplicity(c.copies)});
  return SpectralType::canonicalize(std::move(terms), flow.profile);
}

SpectralType generic_time_type(const FlowSpec& flow) {
  std::uint64_t lcm = 1;
  for (const auto& c : flow.components) lcm = lcm_u64(lcm, static_cast<std::uint64_t>(c.frequency.den()));
  std::vector<Term> terms;
  for (const auto& c : flow.components) {
    const Rational scaled = c.frequency * Rational(static_cast<std::int64_t>(lcm));
    terms.push_back(Term{MeasureClass::singular(c.base, Phase::generator(0, scaled.num())), Multiplicity(c.copies)});
  }
  return SpectralType::canonicalize(std::move(terms), flow.profile);
}

MultiplicitySet gaussian_time_t_multiplicity(const FlowSpec& flow, const Rational& t) {
  return exp_multiplicity_set(time_t_type(flow, t), flow.profile);
}

MultiplicitySet generic_multiplicity(const FlowSpec& flow) {
  return exp_multiplicity_set(generic_time_type(flow), flow.profile);
}

std::vector<std::vector<std::size_t>> merged_components(const FlowSpec& flow, const Rational& t) {
  require_positive(t);
  std::map<std::pair<std::string, Phase>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < flow.components.size(); ++i) {
    const auto& c = flow.components[i];
    groups[{c.base, Phase::rational(c.frequency * t)}].push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [key, idx] : groups)
    if (idx.size() > 1) out.push_back(std::move(idx));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> exceptional_times(const FlowSpec& flow, const Rational& lo, const Rational& hi,
                                        std::uint64_t max_denominator) {
  if (!(lo < hi) || hi <= Rational(0))
    raise(ErrorKind::EmptyInterval, "(" + lo.to_string() + ", " + hi.to_string() + "] contains no positive time");
  if (max_denominator == 0) raise(ErrorKind::InvalidArgument, "max_denominator must be >= 1");
  if (max_denominator > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    raise(ErrorKind::Overflow, "max_denominator out of range");

  // Nonzero frequency differences between components sharing a base.
  std::set<Rational> diffs;
  for (std::size_t i = 0; i < flow.components.size(); ++i)
    for (std::size_t j = i + 1; j < flow.components.size(); ++j)
      if (flow.components[i].base == flow.components[j].base) {
        Rational d = flow.components[i].frequency - flow.components[j].frequency;
        if (d < Rational(0)) d = -d;
        if (!d.is_zero()) diffs.insert(d);
      }

  const Rational start = lo < Rational(0) ? Rational(0) : lo;
  std::vector<Rational> out;
  if (diffs.empty()) return out;
  for (std::uint64_t b = 1; b <= max_denominator; ++b) {
    const auto den = static_cast<std::int64_t>(b);
    // numerators a with start < a/b <= hi
    const std::int64_t a_lo = (start * Rational(den)).floor() + 1;
    const std::int64_t a_hi = (hi * Rational(den)).floor();
    for (std::int64_t a = a_lo; a <= a_hi; ++a) {
      if (std::gcd(a, den) != 1) continue;
      const Rational t(a, den);
      if (std::any_of(diffs.begin(), diffs.end(), [&](const Rational& d) { return (d * t).is_integer(); }))
        out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Rational> theorem4_scan(const FlowSpec& flow, const std::set<std::uint64_t>& target,
                                      std::uint64_t max_candidates) {
  flow.validate();
  std::uint64_t lcm = 1;
  for (const auto& c : flow.components) lcm = lcm_u64(lcm, static_cast<std::uint64_t>(c.frequency.den()));

  // Divisors of lcm from its factorization.
  std::vector<std::pair<std::uint64_t, unsigned>> factors;
  std::uint64_t rest = lcm;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  std::uint64_t count = 1;
  for (const auto& [p, e] : factors) {
    count = checked_mul(count, std::uint64_t{e} + 1);
    if (count > max_candidates)
      raise(ErrorKind::SearchBoundExceeded, "lcm of denominators " + std::to_string(lcm) + " has more than " +
                                                std::to_string(max_candidates) + " divisors to examine");
  }
  std::vector<std::uint64_t> divisors{1};
  for (const auto& [p, e] : factors) {
    const std::size_t n = divisors.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  std::sort(divisors.begin(), divisors.end());

  MultiplicitySet wanted{Multiplicity(1), Multiplicity::infinity()};
  for (const auto v : target) wanted.insert(Multiplicity(v));
  for (const auto d : divisors) {
    const Rational t(static_cast<std::int64_t>(d));
    if (gaussian_time_t_multiplicity(flow, t) == wanted) return t;
  }
  return std::nullopt;
}

MultiplicitySet theorem3_multiplicity(unsigned k) {
  std::uint64_t power = 1;
  for (unsigned i = 0; i < k; ++i) power = checked_mul(power, std::uint64_t{3});
  const AxiomProfile profile = self_similar_profile(3);
  const SpectralType u = SpectralType::single(MeasureClass::singular("sigma"), Multiplicity(1), profile);
  return exp_multiplicity_set(operator_power(u, power, profile, PowerMode::Strict), profile);
}

std::vector<TimeRecord> flow_scan(const FlowSpec& flow, std::vector<Rational> times) {
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  std::vector<TimeRecord> out;
  out.reserve(times.size());
  for (const auto& t : times)
    out.push_back(TimeRecord{t, gaussian_time_t_multiplicity(flow, t), merged_components(flow, t)});
  return out;
}

}  // namespace specmult
