#include "specmult/spectral_type.hpp"

#include <algorithm>

#include "relation_rules.hpp"
#include "specmult/calculus.hpp"

namespace specmult {

namespace {

// Profile rewrites on a single term. Idempotent.
void rewrite_term(Term& t, const AxiomProfile& profile) {
  MeasureClass& c = t.cls;
  if (c.is_lebesgue()) {
    c = MeasureClass::lebesgue();
    return;
  }
  if (profile.is_atomic(c.base)) {
    c.level = 1;
    c.power_tag = 1;
    return;
  }
  if (c.level >= 2) {
    if (profile.regime == Regime::Salem) {
      c = MeasureClass::lebesgue();
      t.mult = Multiplicity::infinity();
    } else if (profile.regime == Regime::Chacon) {
      t.mult = Multiplicity::infinity();
    }
  }
}

}  // namespace

SpectralType SpectralType::canonicalize(std::vector<Term> terms, const AxiomProfile& profile) {
  std::erase_if(terms, [](const Term& t) { return t.mult.is_zero(); });
  for (auto& t : terms) rewrite_term(t, profile);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.cls < b.cls; });

  SpectralType out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().cls == t.cls)
      out.terms_.back().mult += t.mult;
    else
      out.terms_.push_back(std::move(t));
  }

  // Every remaining pair must be decided Disjoint.
  std::vector<detail::GroupInfo> groups;
  for (std::size_t i = 0; i < out.terms_.size(); ++i) {
    const MeasureClass& c = out.terms_[i].cls;
    if (i > 0 && detail::same_group(out.terms_[i - 1].cls, c)) {
      if (detail::phase_verdict(groups.back(), profile) != RelationVerdict::Disjoint)
        detail::unknown_relation(out.terms_[i - 1].cls, c);
      continue;
    }
    groups.push_back(detail::group_info(c, profile));
  }
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j)
      if (detail::group_verdict(groups[i], groups[j], profile) != RelationVerdict::Disjoint)
        detail::unknown_relation(*groups[i].rep, *groups[j].rep);
  return out;
}

SpectralType SpectralType::single(MeasureClass cls, Multiplicity mult, const AxiomProfile& profile) {
  return canonicalize({Term{std::move(cls), std::move(mult)}}, profile);
}

std::string SpectralType::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ", ";
    out += terms_[i].cls.to_string() + ":" + terms_[i].mult.to_string();
  }
  return out + "}";
}

}  // namespace specmult
