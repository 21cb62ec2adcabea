#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "specmult/rational.hpp"

namespace specmult {

// A point z on the unit circle, written multiplicatively as
//
//   z = exp(2*pi*i * rational) * prod_j g_j^{e_j}
//
// where the g_j are abstract, rationally independent generic rotations.
// Phases form an abelian group; equality is exact.
class Phase {
 public:
  using Exponents = std::vector<std::pair<std::uint32_t, std::int64_t>>;

  Phase() = default;

  static Phase identity() { return Phase(); }
  static Phase rational(const Rational& turns);
  static Phase generator(std::uint32_t index, std::int64_t exponent = 1);
  // Exponents need not be sorted or merged; zero exponents are dropped.
  static Phase from_parts(const Rational& turns, Exponents exponents);

  const Rational& rational_part() const noexcept { return rational_; }
  // Sorted by generator index, no zero exponents.
  const Exponents& generic_part() const noexcept { return generic_; }

  bool is_identity() const noexcept { return rational_.is_zero() && generic_.empty(); }
  bool is_rational() const noexcept { return generic_.empty(); }

  friend Phase operator*(const Phase& a, const Phase& b);
  Phase inverse() const;
  Phase pow(std::int64_t k) const;

  friend bool operator==(const Phase&, const Phase&) = default;
  friend std::strong_ordering operator<=>(const Phase& a, const Phase& b);

  // e.g. "1", "1/2", "g3", "1/3*g1^2*g4^-1"
  std::string to_string() const;
  static Phase parse(const std::string& text);

  std::size_t hash() const noexcept;

 private:
  Rational rational_;
  Exponents generic_;
};

}  // namespace specmult
