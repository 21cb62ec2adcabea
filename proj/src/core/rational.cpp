#include "specmult/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "specmult/error.hpp"

namespace specmult {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) raise(ErrorKind::Overflow, "64-bit addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) raise(ErrorKind::Overflow, "64-bit multiplication");
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) raise(ErrorKind::Overflow, "64-bit multiplication");
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd_u64(a, b), b);
}

namespace {

std::uint64_t uabs(std::int64_t v) noexcept {
  return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) raise(ErrorKind::InvalidArgument, "rational with zero denominator");
  if (num == std::numeric_limits<std::int64_t>::min() ||
      den == std::numeric_limits<std::int64_t>::min())
    raise(ErrorKind::Overflow, "rational component out of range");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = static_cast<std::int64_t>(std::gcd(uabs(num), uabs(den)));
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::frac() const {
  std::int64_t r = num_ % den_;
  if (r < 0) r += den_;
  return Rational(r, den_);
}

Rational Rational::operator-() const { return Rational(checked_mul(num_, std::int64_t{-1}), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  const auto g = static_cast<std::int64_t>(std::gcd(a.den_, b.den_));
  const std::int64_t da = a.den_ / g;
  const std::int64_t db = b.den_ / g;
  const std::int64_t num = checked_add(checked_mul(a.num_, db), checked_mul(b.num_, da));
  return Rational(num, checked_mul(a.den_, db));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first so small results never overflow through intermediates.
  const auto g1 = static_cast<std::int64_t>(std::gcd(uabs(a.num_), uabs(b.den_)));
  const auto g2 = static_cast<std::int64_t>(std::gcd(uabs(b.num_), uabs(a.den_)));
  const std::int64_t n1 = g1 ? a.num_ / g1 : a.num_;
  const std::int64_t d2 = g1 ? b.den_ / g1 : b.den_;
  const std::int64_t n2 = g2 ? b.num_ / g2 : b.num_;
  const std::int64_t d1 = g2 ? a.den_ / g2 : a.den_;
  return Rational(checked_mul(n1, n2), checked_mul(d1, d2));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) raise(ErrorKind::InvalidArgument, "division by zero rational");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs < rhs ? std::strong_ordering::less
                   : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    raise(ErrorKind::Parse, "not a rational number: '" + std::string(whole) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(trim(s.substr(0, slash)), text),
                    parse_int(trim(s.substr(slash + 1)), text));
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view ip = s.substr(0, dot);
    const std::string_view fp = s.substr(dot + 1);
    if (fp.size() > 17) raise(ErrorKind::Parse, "too many decimals: '" + std::string(text) + "'");
    const bool neg = !ip.empty() && ip.front() == '-';
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale = checked_mul(scale, std::int64_t{10});
    const std::int64_t whole = (ip.empty() || ip == "-" || ip == "+") ? 0 : parse_int(ip, text);
    const std::int64_t part = fp.empty() ? 0 : parse_int(fp, text);
    if (part < 0) raise(ErrorKind::Parse, "not a rational number: '" + std::string(text) + "'");
    const std::int64_t mag = checked_add(checked_mul(whole < 0 ? -whole : whole, scale), part);
    return Rational(neg ? -mag : mag, scale);
  }
  return Rational(parse_int(s, text));
}

}  // namespace specmult
