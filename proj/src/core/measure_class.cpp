#include "specmult/measure_class.hpp"

#include <algorithm>

#include "specmult/error.hpp"

namespace specmult {

MeasureClass MeasureClass::lebesgue() {
  MeasureClass c;
  c.regularity = Regularity::Lebesgue;
  c.base = std::string(kLebesgueBase);
  return c;
}

MeasureClass MeasureClass::singular(std::string base, Phase phase, std::uint32_t level,
                                    std::uint64_t power_tag) {
  if (level == 0) raise(ErrorKind::InvalidArgument, "measure class level must be positive");
  if (power_tag == 0) raise(ErrorKind::InvalidArgument, "power tag must be positive");
  MeasureClass c;
  c.base = std::move(base);
  c.level = level;
  c.power_tag = power_tag;
  c.phase = std::move(phase);
  return c;
}

MeasureClass MeasureClass::canonical() const {
  if (is_lebesgue()) return lebesgue();
  return *this;
}

std::strong_ordering operator<=>(const MeasureClass& a, const MeasureClass& b) {
  if (auto c = a.regularity <=> b.regularity; c != 0) return c;
  if (auto c = a.base <=> b.base; c != 0) return c;
  if (auto c = a.level <=> b.level; c != 0) return c;
  if (auto c = a.power_tag <=> b.power_tag; c != 0) return c;
  return a.phase <=> b.phase;
}

std::string MeasureClass::to_string() const {
  if (is_lebesgue()) return std::string(kLebesgueBase);
  std::string out;
  if (!phase.is_identity()) out = phase.to_string() + "*";
  const bool composite = base.find('*') != std::string::npos;
  out += composite ? "(" + base + ")" : base;
  if (level != 1 && !composite) out += "^(" + std::to_string(level) + ")";
  if (power_tag != 1) out += "[^" + std::to_string(power_tag) + "]";
  return out;
}

bool is_valid_atom(std::string_view name) noexcept {
  if (name.empty() || name == MeasureClass::kLebesgueBase) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '-' || c == '.' || c == '@';
  });
}

std::vector<std::string> base_atoms(const std::string& base, std::uint32_t level) {
  std::vector<std::string> atoms;
  if (base.find('*') == std::string::npos) {
    atoms.assign(level, base);
    return atoms;
  }
  std::size_t start = 0;
  while (true) {
    const auto star = base.find('*', start);
    atoms.push_back(base.substr(start, star - start));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

std::pair<std::string, std::uint32_t> base_from_atoms(std::vector<std::string> atoms) {
  if (atoms.empty()) raise(ErrorKind::InvalidArgument, "empty atom list");
  std::sort(atoms.begin(), atoms.end());
  const auto n = static_cast<std::uint32_t>(atoms.size());
  if (atoms.front() == atoms.back()) return {atoms.front(), n};
  std::string out = atoms.front();
  for (std::size_t i = 1; i < atoms.size(); ++i) out += '*' + atoms[i];
  return {out, n};
}

}  // namespace specmult
