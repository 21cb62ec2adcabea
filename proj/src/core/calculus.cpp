#include "specmult/calculus.hpp"

#include <algorithm>
#include <limits>

#include "relation_rules.hpp"
#include "specmult/error.hpp"

namespace specmult {

const char* verdict_name(RelationVerdict v) noexcept {
  switch (v) {
    case RelationVerdict::Equivalent: return "Equivalent";
    case RelationVerdict::Disjoint: return "Disjoint";
    case RelationVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace detail {

GroupInfo group_info(const MeasureClass& rep, const AxiomProfile& profile) {
  GroupInfo g;
  g.rep = &rep;
  if (rep.is_lebesgue()) return g;
  g.atomic = profile.is_atomic(rep.base);
  const auto atoms = base_atoms(rep.base, 1);
  g.all_generic = std::all_of(atoms.begin(), atoms.end(),
                              [&](const std::string& a) { return profile.generic_bases.count(a) != 0; });
  return g;
}

RelationVerdict group_verdict(const GroupInfo& ga, const GroupInfo& gb, const AxiomProfile& profile) {
  const MeasureClass& a = *ga.rep;
  const MeasureClass& b = *gb.rep;
  if (a.regularity != b.regularity) return RelationVerdict::Disjoint;
  if (ga.atomic != gb.atomic) return RelationVerdict::Disjoint;  // atom against continuous measure
  if (ga.atomic) return RelationVerdict::Unknown;
  if (a.base == b.base) {
    if (a.level != b.level)
      return profile.regime == Regime::Chacon ? RelationVerdict::Disjoint : RelationVerdict::Unknown;
    return profile.power_tags_disjoint ? RelationVerdict::Disjoint : RelationVerdict::Unknown;
  }
  return ga.all_generic && gb.all_generic ? RelationVerdict::Disjoint : RelationVerdict::Unknown;
}

RelationVerdict phase_verdict(const GroupInfo& g, const AxiomProfile& profile) {
  if (g.atomic) return RelationVerdict::Disjoint;  // distinct point masses
  if (g.rep->is_lebesgue()) return RelationVerdict::Equivalent;
  return profile.generic_rotations ? RelationVerdict::Disjoint : RelationVerdict::Unknown;
}

void unknown_relation(const MeasureClass& a, const MeasureClass& b) {
  raise(ErrorKind::UnknownRelation,
        "the profile cannot decide " + a.to_string() + " against " + b.to_string());
}

}  // namespace detail

MeasureClass canonical_class(const MeasureClass& c, const AxiomProfile& profile) {
  if (c.is_lebesgue()) return MeasureClass::lebesgue();
  MeasureClass out = c;
  if (profile.is_atomic(c.base)) {
    out.level = 1;
    out.power_tag = 1;
  } else if (profile.regime == Regime::Salem && c.level >= 2) {
    return MeasureClass::lebesgue();
  }
  return out;
}

RelationVerdict relate(const MeasureClass& a, const MeasureClass& b, const AxiomProfile& profile) {
  const MeasureClass ca = canonical_class(a, profile);
  const MeasureClass cb = canonical_class(b, profile);
  if (ca == cb) return RelationVerdict::Equivalent;
  const auto ga = detail::group_info(ca, profile);
  if (detail::same_group(ca, cb)) return detail::phase_verdict(ga, profile);
  return detail::group_verdict(ga, detail::group_info(cb, profile), profile);
}

bool check_decided(const SpectralType& x, const SpectralType& y, const AxiomProfile& profile) {
  // Terms are sorted, so each group is a contiguous run.
  struct Run {
    detail::GroupInfo info;
    std::size_t begin, end;
  };
  auto runs = [&](const SpectralType& t) {
    std::vector<Run> out;
    const auto& ts = t.terms();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (i > 0 && detail::same_group(ts[i - 1].cls, ts[i].cls)) {
        out.back().end = i + 1;
        continue;
      }
      out.push_back(Run{detail::group_info(ts[i].cls, profile), i, i + 1});
    }
    return out;
  };
  const auto rx = runs(x);
  const auto ry = runs(y);
  bool equivalent = false;
  for (const auto& gx : rx) {
    for (const auto& gy : ry) {
      if (!detail::same_group(*gx.info.rep, *gy.info.rep)) {
        if (detail::group_verdict(gx.info, gy.info, profile) != RelationVerdict::Disjoint)
          detail::unknown_relation(*gx.info.rep, *gy.info.rep);
        continue;
      }
      const auto pv = detail::phase_verdict(gx.info, profile);
      for (std::size_t i = gx.begin; i < gx.end; ++i) {
        for (std::size_t j = gy.begin; j < gy.end; ++j) {
          if (x.terms()[i].cls == y.terms()[j].cls) {
            equivalent = true;
          } else if (pv != RelationVerdict::Disjoint) {
            detail::unknown_relation(x.terms()[i].cls, y.terms()[j].cls);
          }
        }
      }
    }
  }
  return equivalent;
}

SpectralType direct_sum(const SpectralType& x, const SpectralType& y, const AxiomProfile& profile) {
  std::vector<Term> terms = x.terms();
  terms.insert(terms.end(), y.terms().begin(), y.terms().end());
  return SpectralType::canonicalize(std::move(terms), profile);
}

namespace {

std::vector<std::string> tagged_atoms(const MeasureClass& c) {
  auto atoms = base_atoms(c.base, c.level);
  if (c.power_tag != 1)
    for (auto& a : atoms) a += "@" + std::to_string(c.power_tag);
  return atoms;
}

}  // namespace

Convolved convolve(const MeasureClass& a, const MeasureClass& b, const AxiomProfile& profile) {
  const MeasureClass ca = canonical_class(a, profile);
  const MeasureClass cb = canonical_class(b, profile);
  if (ca.is_lebesgue() || cb.is_lebesgue()) {
    const MeasureClass& other = ca.is_lebesgue() ? cb : ca;
    const bool continuous = other.is_lebesgue() || !profile.is_atomic(other.base);
    return {MeasureClass::lebesgue(), continuous};
  }
  const bool atomic_a = profile.is_atomic(ca.base);
  const bool atomic_b = profile.is_atomic(cb.base);
  Phase phase = ca.phase * cb.phase;
  if (atomic_a && atomic_b) {
    if (ca.base != cb.base) raise(ErrorKind::UnknownConvolution, "(" + ca.base + ", " + cb.base + ")");
    return {MeasureClass::singular(ca.base, std::move(phase)), false};
  }
  if (atomic_a || atomic_b) {
    // A point mass only rotates the other factor.
    MeasureClass out = atomic_a ? cb : ca;
    out.phase = std::move(phase);
    return {out, false};
  }
  if (ca.power_tag == cb.power_tag && ca.base == cb.base) {
    if (ca.base.find('*') == std::string::npos)
      return {MeasureClass::singular(ca.base, std::move(phase), ca.level + cb.level, ca.power_tag), false};
    auto atoms = base_atoms(ca.base, ca.level);
    const auto again = atoms;
    atoms.insert(atoms.end(), again.begin(), again.end());
    auto [base, level] = base_from_atoms(std::move(atoms));
    return {MeasureClass::singular(std::move(base), std::move(phase), level, ca.power_tag), false};
  }

  std::string name_a = ca.base;
  std::string name_b = cb.base;
  std::uint64_t tag = ca.power_tag;
  std::vector<std::string> atoms;
  if (ca.power_tag == cb.power_tag) {
    atoms = base_atoms(ca.base, ca.level);
    const auto more = base_atoms(cb.base, cb.level);
    atoms.insert(atoms.end(), more.begin(), more.end());
  } else {
    tag = 1;
    atoms = tagged_atoms(ca);
    const auto more = tagged_atoms(cb);
    atoms.insert(atoms.end(), more.begin(), more.end());
    if (ca.power_tag != 1) name_a += "@" + std::to_string(ca.power_tag);
    if (cb.power_tag != 1) name_b += "@" + std::to_string(cb.power_tag);
  }
  auto rule = profile.cross_rule(name_a, name_b);
  if (!rule && profile.symbolic_mode) rule = CrossRule::Fresh;
  if (!rule) raise(ErrorKind::UnknownConvolution, "no rule for (" + name_a + ", " + name_b + ")");
  if (*rule == CrossRule::Lebesgue) return {MeasureClass::lebesgue(), true};
  auto [base, level] = base_from_atoms(std::move(atoms));
  return {MeasureClass::singular(std::move(base), std::move(phase), level, tag), false};
}

SpectralType tensor_product(const SpectralType& x, const SpectralType& y, const AxiomProfile& profile) {
  std::vector<Term> terms;
  terms.reserve(x.size() * y.size());
  for (const auto& tx : x.terms()) {
    for (const auto& ty : y.terms()) {
      auto conv = convolve(tx.cls, ty.cls, profile);
      Multiplicity m = tx.mult * ty.mult;
      if (conv.absorbing) m = Multiplicity::infinity();
      terms.push_back(Term{std::move(conv.cls), std::move(m)});
    }
  }
  return SpectralType::canonicalize(std::move(terms), profile);
}

namespace {

// The class carried by Sym^k of one simple class: the k-fold convolution
// power, with Lebesgue absorbing.
Convolved sym_class_power(const MeasureClass& c, unsigned k, const AxiomProfile& profile) {
  const MeasureClass cc = canonical_class(c, profile);
  if (k == 1) return {cc, false};
  if (cc.is_lebesgue()) return {cc, true};
  if (profile.is_atomic(cc.base)) return {MeasureClass::singular(cc.base, cc.phase.pow(k)), false};
  std::vector<std::string> atoms;
  const auto one = base_atoms(cc.base, cc.level);
  for (unsigned i = 0; i < k; ++i) atoms.insert(atoms.end(), one.begin(), one.end());
  auto [base, level] = base_from_atoms(std::move(atoms));
  return {MeasureClass::singular(std::move(base), cc.phase.pow(k), level, cc.power_tag), false};
}

}  // namespace

std::vector<Term> sym_power_terms(const SpectralType& x, unsigned n, const AxiomProfile& profile) {
  if (n == 0) raise(ErrorKind::InvalidArgument, "symmetric power order must be >= 1");
  if (n == 1) return x.terms();
  if (profile.regime == Regime::None) {
    for (const auto& t : x.terms()) {
      if (t.mult.is_infinite() && !t.cls.is_lebesgue() && !profile.is_atomic(t.cls.base))
        raise(ErrorKind::InfiniteExpansion,
              "Sym^" + std::to_string(n) + " of " + t.cls.to_string() +
                  " with infinite multiplicity has no absorbing rule in profile '" + profile.name + "'");
    }
  }

  const auto& ts = x.terms();
  const std::size_t d = ts.size();
  std::vector<Term> out;
  if (d == 0) return out;
  std::vector<unsigned> counts(d, 0);
  // Enumerate compositions of n into d parts (multisets of classes).
  auto emit = [&]() {
    Multiplicity mult(1);
    bool absorbing = false;
    std::optional<MeasureClass> cls;
    for (std::size_t i = 0; i < d; ++i) {
      if (counts[i] == 0) continue;
      mult = mult * multiset_count(ts[i].mult, counts[i]);
      auto part = sym_class_power(ts[i].cls, counts[i], profile);
      absorbing = absorbing || part.absorbing;
      if (!cls) {
        cls = std::move(part.cls);
      } else {
        auto conv = convolve(*cls, part.cls, profile);
        absorbing = absorbing || conv.absorbing;
        cls = std::move(conv.cls);
      }
    }
    if (absorbing) mult = Multiplicity::infinity();
    out.push_back(Term{std::move(*cls), std::move(mult)});
  };
  auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == d) {
      counts[i] = remaining;
      emit();
      counts[i] = 0;
      return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
      counts[i] = k;
      self(self, i + 1, remaining - k);
    }
    counts[i] = 0;
  };
  rec(rec, 0, n);
  return out;
}

SpectralType sym_power(const SpectralType& x, unsigned n, const AxiomProfile& profile) {
  if (n == 1) return x;
  return SpectralType::canonicalize(sym_power_terms(x, n, profile), profile);
}

SpectralType operator_power(const SpectralType& x, std::uint64_t k, const AxiomProfile& profile, PowerMode mode) {
  if (k == 0) raise(ErrorKind::InvalidArgument, "operator power must be >= 1");
  if (k == 1) return x;
  if (k > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    raise(ErrorKind::Overflow, "operator power exceeds 64-bit range");
  const auto ks = static_cast<std::int64_t>(k);

  std::vector<Term> terms;
  terms.reserve(x.size());
  for (const auto& t : x.terms()) {
    MeasureClass c = t.cls;
    Multiplicity m = t.mult;
    if (c.is_lebesgue()) {
      // z -> z^k is k-to-one on the circle.
      terms.push_back(Term{c, m * Multiplicity(k)});
      continue;
    }
    c.phase = c.phase.pow(ks);
    if (!profile.is_atomic(c.base)) {
      std::uint64_t rest = k;
      std::uint64_t copies = 1;
      if (profile.self_similar) {
        const std::uint64_t q = *profile.self_similar;
        while (rest % q == 0) {
          rest /= q;
          copies = checked_mul(copies, q);
        }
      }
      if (rest > 1) {
        if (mode == PowerMode::Strict)
          raise(ErrorKind::UnknownPowerRule,
                "no rule for the power " + std::to_string(k) + " of base '" + c.base + "' in profile '" +
                    profile.name + "'");
        c.power_tag = checked_mul(c.power_tag, rest);
      }
      m = m * Multiplicity(copies);
    }
    terms.push_back(Term{std::move(c), std::move(m)});
  }
  return SpectralType::canonicalize(std::move(terms), profile);
}

MultiplicitySet multiplicity_set(const SpectralType& x) {
  if (x.empty()) raise(ErrorKind::EmptyType, "the zero spectral type has no multiplicities");
  MultiplicitySet out;
  for (const auto& t : x.terms()) out.insert(t.mult);
  return out;
}

}  // namespace specmult
