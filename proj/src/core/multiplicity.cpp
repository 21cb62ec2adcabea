#include "specmult/multiplicity.hpp"

#include <algorithm>
#include <cctype>

#include "specmult/error.hpp"

namespace specmult {

Multiplicity::Multiplicity(BigInt n) : value_(std::move(n)) {
  if (value_ < 0) raise(ErrorKind::InvalidArgument, "negative multiplicity");
}

std::optional<std::uint64_t> Multiplicity::to_u64() const {
  if (infinite_ || value_ > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return value_.convert_to<std::uint64_t>();
}

Multiplicity operator+(const Multiplicity& a, const Multiplicity& b) {
  if (a.infinite_ || b.infinite_) return Multiplicity::infinity();
  return Multiplicity(BigInt(a.value_ + b.value_));
}

Multiplicity operator*(const Multiplicity& a, const Multiplicity& b) {
  if (a.is_zero() || b.is_zero()) return Multiplicity(0);
  if (a.infinite_ || b.infinite_) return Multiplicity::infinity();
  return Multiplicity(BigInt(a.value_ * b.value_));
}

std::strong_ordering operator<=>(const Multiplicity& a, const Multiplicity& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Multiplicity::to_string(bool ascii) const {
  if (infinite_) return ascii ? "inf" : "∞";
  return value_.str();
}

Multiplicity Multiplicity::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "inf" || t == "infinity" || t == "∞") return infinity();
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    raise(ErrorKind::Parse, "not a multiplicity: '" + text + "'");
  return Multiplicity(BigInt(t));
}

Multiplicity multiset_count(const Multiplicity& m, unsigned k) {
  if (k == 0) return Multiplicity(1);
  if (m.is_zero()) return Multiplicity(0);
  if (m.is_infinite()) return Multiplicity::infinity();
  // C(m+k-1, k) = prod_{i=1..k} (m+i-1)/i, exact at every step.
  BigInt acc = 1;
  for (unsigned i = 1; i <= k; ++i) {
    acc *= m.value() + (i - 1);
    acc /= i;
  }
  return Multiplicity(acc);
}

std::string format_set(const MultiplicitySet& set, bool ascii) {
  std::string out = "{";
  bool first = true;
  for (const auto& m : set) {
    if (!first) out += ',';
    out += m.to_string(ascii);
    first = false;
  }
  return out + "}";
}

MultiplicitySet with_infinity(MultiplicitySet set) {
  set.insert(Multiplicity::infinity());
  return set;
}

}  // namespace specmult
