#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace specmult {

// Exact rational with 64-bit numerator and denominator. Always reduced with a
// positive denominator; any arithmetic that would overflow throws
// Error(Overflow) instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }

  // Largest integer <= *this.
  std::int64_t floor() const noexcept;
  // *this - floor(*this), in [0, 1).
  Rational frac() const;

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p" or "p/q".
  std::string to_string() const;
  // Accepts "p", "p/q" and terminating decimals such as "0.25".
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace specmult

template <>
struct std::hash<specmult::Rational> {
  std::size_t operator()(const specmult::Rational& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 1000003u ^
           std::hash<std::int64_t>{}(r.den());
  }
};
