#pragma once

#include <string>
#include <vector>

#include "specmult/axiom_profile.hpp"
#include "specmult/flows.hpp"
#include "specmult/gaussian.hpp"
#include "specmult/rankone.hpp"
#include "specmult/riesz.hpp"
#include "specmult/spectral_type.hpp"

// Text formats. Structured inputs are YAML documents; scan results are JSON
// lines or a plain table; numeric series are CSV with a fixed header. All
// parsers throw Parse on malformed input.
namespace specmult::io {

std::string to_yaml(const SpectralType& t);
// Re-canonicalized under `profile`, so serialize then parse is the identity
// on canonical types.
SpectralType parse_type(const std::string& yaml, const AxiomProfile& profile);

std::string to_yaml(const AxiomProfile& p);
// A mapping, or a bare scalar naming a built-in profile.
AxiomProfile parse_profile(const std::string& yaml);

std::string to_yaml(const FlowSpec& f);
FlowSpec parse_flow(const std::string& yaml);

std::string to_yaml(const RankOneRecipe& r);
// A recipe mapping, or {preset: name}.
RankOneRecipe parse_recipe(const std::string& yaml);

std::string to_yaml(const RieszSpec& s);
RieszSpec parse_riesz(const std::string& yaml);

std::string to_yaml(const FockExpansion& f);

// One JSON object per line: t, multiplicity_set, finite, infinite, merged.
std::string scan_jsonl(const std::vector<TimeRecord>& records);
std::string scan_table(const std::vector<TimeRecord>& records);

std::string correlation_csv(const std::vector<Rational>& r);     // k,r_k
std::string density_csv(const DensityTable& d);                   // theta,density
std::string weak_limit_csv(const WeakLimitReport& rep);           // stage,height,r,deviation
std::string affinity_csv(const std::vector<AffinityRow>& rows);  // K,affinity

std::string format_double(double x);

}  // namespace specmult::io
