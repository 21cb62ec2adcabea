#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace specmult {

using BigInt = boost::multiprecision::cpp_int;

// A value in {0, 1, 2, ...} ∪ {∞}. Spectral types never store zero, but the
// arithmetic is closed over it. Addition and multiplication saturate at ∞
// (with 0 * ∞ = 0, the convention for an absent summand).
class Multiplicity {
 public:
  Multiplicity() = default;
  Multiplicity(std::uint64_t n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Multiplicity(BigInt n);

  static Multiplicity infinity() {
    Multiplicity m;
    m.infinite_ = true;
    return m;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_zero() const noexcept { return !infinite_ && value_.is_zero(); }
  // Undefined for ∞.
  const BigInt& value() const noexcept { return value_; }
  std::optional<std::uint64_t> to_u64() const;

  friend Multiplicity operator+(const Multiplicity& a, const Multiplicity& b);
  friend Multiplicity operator*(const Multiplicity& a, const Multiplicity& b);
  Multiplicity& operator+=(const Multiplicity& o) { return *this = *this + o; }

  friend bool operator==(const Multiplicity& a, const Multiplicity& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  // Finite values ascending, then ∞.
  friend std::strong_ordering operator<=>(const Multiplicity& a, const Multiplicity& b);

  // "∞" for infinity; `ascii` selects "inf" instead.
  std::string to_string(bool ascii = false) const;
  // Accepts decimal integers, "inf", "infinity" and "∞".
  static Multiplicity parse(const std::string& text);

 private:
  BigInt value_ = 0;
  bool infinite_ = false;
};

// Binomial C(m + k - 1, k): the number of k-element multisets drawn from m
// simple copies. Saturates to ∞ when m is ∞ and k >= 1.
Multiplicity multiset_count(const Multiplicity& m, unsigned k);

using MultiplicitySet = std::set<Multiplicity>;

// "{1,3,∞}"
std::string format_set(const MultiplicitySet& set, bool ascii = false);
MultiplicitySet with_infinity(MultiplicitySet set);

}  // namespace specmult
