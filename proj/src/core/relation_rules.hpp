#pragma once

// Decision rules shared by relate(), canonicalization and the level-to-level
// disjointness checks. All inputs are canonical classes.

#include "specmult/calculus.hpp"

namespace specmult::detail {

inline bool same_group(const MeasureClass& a, const MeasureClass& b) noexcept {
  return a.regularity == b.regularity && a.level == b.level && a.power_tag == b.power_tag &&
         a.base == b.base;
}

// Per-group facts computed once so pairwise checks stay cheap.
struct GroupInfo {
  const MeasureClass* rep = nullptr;
  bool atomic = false;
  bool all_generic = false;
};

GroupInfo group_info(const MeasureClass& rep, const AxiomProfile& profile);

// Two classes in different groups.
RelationVerdict group_verdict(const GroupInfo& a, const GroupInfo& b, const AxiomProfile& profile);

// Two distinct classes in the same group (they differ only in phase).
RelationVerdict phase_verdict(const GroupInfo& g, const AxiomProfile& profile);

[[noreturn]] void unknown_relation(const MeasureClass& a, const MeasureClass& b);

}  // namespace specmult::detail
