#include "specmult/phase.hpp"

#include <algorithm>
#include <charconv>

#include "specmult/error.hpp"

namespace specmult {

Phase Phase::rational(const Rational& turns) {
  Phase p;
  p.rational_ = turns.frac();
  return p;
}

Phase Phase::generator(std::uint32_t index, std::int64_t exponent) {
  return from_parts(Rational(0), {{index, exponent}});
}

Phase Phase::from_parts(const Rational& turns, Exponents exponents) {
  Phase p;
  p.rational_ = turns.frac();
  std::sort(exponents.begin(), exponents.end());
  for (const auto& [g, e] : exponents) {
    if (!p.generic_.empty() && p.generic_.back().first == g)
      p.generic_.back().second = checked_add(p.generic_.back().second, e);
    else
      p.generic_.emplace_back(g, e);
  }
  std::erase_if(p.generic_, [](const auto& ge) { return ge.second == 0; });
  return p;
}

Phase operator*(const Phase& a, const Phase& b) {
  Phase out;
  out.rational_ = (a.rational_ + b.rational_).frac();
  out.generic_.reserve(a.generic_.size() + b.generic_.size());
  auto i = a.generic_.begin();
  auto j = b.generic_.begin();
  while (i != a.generic_.end() || j != b.generic_.end()) {
    if (j == b.generic_.end() || (i != a.generic_.end() && i->first < j->first)) {
      out.generic_.push_back(*i++);
    } else if (i == a.generic_.end() || j->first < i->first) {
      out.generic_.push_back(*j++);
    } else {
      const std::int64_t e = checked_add(i->second, j->second);
      if (e != 0) out.generic_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

Phase Phase::inverse() const { return pow(-1); }

Phase Phase::pow(std::int64_t k) const {
  Phase out;
  out.rational_ = (rational_ * Rational(k)).frac();
  if (k == 0) return out;
  out.generic_.reserve(generic_.size());
  for (const auto& [g, e] : generic_) out.generic_.emplace_back(g, checked_mul(e, k));
  return out;
}

std::strong_ordering operator<=>(const Phase& a, const Phase& b) {
  if (auto c = a.rational_ <=> b.rational_; c != 0) return c;
  return a.generic_ <=> b.generic_;
}

std::string Phase::to_string() const {
  std::string out;
  if (!rational_.is_zero() || generic_.empty()) out = rational_.is_zero() ? "1" : rational_.to_string();
  for (const auto& [g, e] : generic_) {
    if (!out.empty()) out += '*';
    out += 'g' + std::to_string(g);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

namespace {

template <typename T>
T parse_number(std::string_view s, const std::string& whole) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    raise(ErrorKind::Parse, "malformed phase '" + whole + "'");
  return v;
}

}  // namespace

// The rational factor is written in turns ("1/2" is the rotation by pi);
// "1" alone denotes the identity.
Phase Phase::parse(const std::string& text) {
  Rational turns(0);
  Exponents exps;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto star = rest.find('*');
    std::string_view factor = rest.substr(0, star);
    rest = star == std::string_view::npos ? std::string_view() : rest.substr(star + 1);
    while (!factor.empty() && factor.front() == ' ') factor.remove_prefix(1);
    while (!factor.empty() && factor.back() == ' ') factor.remove_suffix(1);
    if (factor.empty()) raise(ErrorKind::Parse, "malformed phase '" + text + "'");
    if (factor.front() == 'g') {
      const auto caret = factor.find('^');
      const auto idx = parse_number<std::uint32_t>(factor.substr(1, caret == std::string_view::npos ? factor.npos : caret - 1), text);
      const std::int64_t e = caret == std::string_view::npos ? 1 : parse_number<std::int64_t>(factor.substr(caret + 1), text);
      exps.emplace_back(idx, e);
    } else {
      turns += Rational::parse(factor);
    }
  }
  return from_parts(turns, std::move(exps));
}

std::size_t Phase::hash() const noexcept {
  std::size_t h = std::hash<Rational>{}(rational_);
  for (const auto& [g, e] : generic_) h = h * 1099511628211u ^ (std::size_t(g) * 31u + std::size_t(e));
  return h;
}

}  // namespace specmult
