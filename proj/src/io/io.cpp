#include "specmult/io.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdio>
#include <json.hpp>
#include <set>
#include <sstream>

#include "specmult/error.hpp"
#include "specmult/profiles.hpp"

namespace specmult::io {
namespace {

[[noreturn]] void bad(const std::string& what) { raise(ErrorKind::Parse, what); }

YAML::Node load(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::Exception& e) {
    bad(std::string("malformed YAML: ") + e.what());
  }
}

void allow_keys(const YAML::Node& map, std::initializer_list<const char*> keys, const char* what) {
  if (!map.IsMap()) bad(std::string(what) + " must be a mapping");
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) bad(std::string("unknown key '") + key + "' in " + what);
  }
}

template <class T>
T get(const YAML::Node& node, const char* key, const char* what) {
  if (!node[key]) bad(std::string(what) + " needs '" + key + "'");
  try {
    return node[key].as<T>();
  } catch (const YAML::Exception&) {
    bad(std::string("bad value for '") + key + "' in " + what);
  }
}

template <class T>
T get_or(const YAML::Node& node, const char* key, T fallback, const char* what) {
  return node[key] ? get<T>(node, key, what) : fallback;
}

Rational rational_of(const YAML::Node& node, const char* what) {
  try {
    return Rational::parse(node.as<std::string>());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Overflow) throw;
    bad(std::string("bad rational in ") + what + ": " + e.what());
  } catch (const YAML::Exception&) {
    bad(std::string("bad rational in ") + what);
  }
}

std::string finish(const YAML::Emitter& out) { return std::string(out.c_str()) + "\n"; }

void emit_terms(YAML::Emitter& out, const SpectralType& t) {
  out << YAML::BeginSeq;
  for (const auto& term : t.terms()) {
    const auto& c = term.cls;
    out << YAML::BeginMap;
    out << YAML::Key << "regularity" << YAML::Value << (c.is_lebesgue() ? "lebesgue" : "singular");
    if (!c.is_lebesgue()) {
      out << YAML::Key << "base" << YAML::Value << c.base;
      out << YAML::Key << "level" << YAML::Value << c.level;
      out << YAML::Key << "phase" << YAML::Value << YAML::DoubleQuoted << c.phase.to_string();
      out << YAML::Key << "power_tag" << YAML::Value << c.power_tag;
    }
    out << YAML::Key << "multiplicity" << YAML::Value << term.mult.to_string(true);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
}

SpectralType terms_of(const YAML::Node& seq, const AxiomProfile& profile) {
  if (!seq.IsSequence()) bad("terms must be a sequence");
  std::vector<Term> terms;
  for (const auto& n : seq) {
    allow_keys(n, {"regularity", "base", "level", "phase", "power_tag", "multiplicity"}, "term");
    const auto reg = get_or<std::string>(n, "regularity", "singular", "term");
    Multiplicity m;
    try {
      m = Multiplicity::parse(get<std::string>(n, "multiplicity", "term"));
    } catch (const Error& e) {
      bad(std::string("term multiplicity: ") + e.what());
    }
    if (reg == "lebesgue") {
      terms.push_back({MeasureClass::lebesgue(), m});
      continue;
    }
    if (reg != "singular") bad("regularity must be singular or lebesgue");
    const auto base = get_or<std::string>(n, "base", "sigma", "term");
    const auto level = get_or<std::uint32_t>(n, "level", 1, "term");
    const auto tag = get_or<std::uint64_t>(n, "power_tag", 1, "term");
    if (level == 0 || tag == 0) bad("level and power_tag must be positive");
    Phase phase;
    try {
      phase = Phase::parse(get_or<std::string>(n, "phase", "1", "term"));
    } catch (const Error& e) {
      bad(std::string("term phase: ") + e.what());
    }
    terms.push_back({MeasureClass::singular(base, phase, level, tag), m});
  }
  return SpectralType::canonicalize(std::move(terms), profile);
}

void emit_profile(YAML::Emitter& out, const AxiomProfile& p) {
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << p.name;
  out << YAML::Key << "regime" << YAML::Value << regime_name(p.regime);
  out << YAML::Key << "generic_rotations" << YAML::Value << p.generic_rotations;
  if (p.self_similar) out << YAML::Key << "self_similar" << YAML::Value << *p.self_similar;
  out << YAML::Key << "symbolic_mode" << YAML::Value << p.symbolic_mode;
  out << YAML::Key << "power_tags_disjoint" << YAML::Value << p.power_tags_disjoint;
  out << YAML::Key << "generic_bases" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (const auto& b : p.generic_bases) out << b;
  out << YAML::EndSeq;
  out << YAML::Key << "atomic_bases" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (const auto& b : p.atomic_bases) out << b;
  out << YAML::EndSeq;
  out << YAML::Key << "cross_base_rules" << YAML::Value << YAML::BeginSeq;
  for (const auto& [pair, rule] : p.cross_base_rules) {
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "bases" << YAML::Value << YAML::Flow << YAML::BeginSeq << pair.first << pair.second
        << YAML::EndSeq;
    out << YAML::Key << "rule" << YAML::Value << (rule == CrossRule::Lebesgue ? "lebesgue" : "fresh");
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;
}

AxiomProfile profile_of(const YAML::Node& n) {
  if (n.IsScalar()) return builtin_profile(n.as<std::string>());
  allow_keys(n,
             {"name", "regime", "generic_rotations", "self_similar", "symbolic_mode", "power_tags_disjoint",
              "generic_bases", "atomic_bases", "cross_base_rules"},
             "profile");
  AxiomProfile p;
  p.name = get_or<std::string>(n, "name", "custom", "profile");
  try {
    p.regime = parse_regime(get_or<std::string>(n, "regime", "none", "profile"));
  } catch (const Error& e) {
    bad(e.what());
  }
  p.generic_rotations = get_or<bool>(n, "generic_rotations", true, "profile");
  if (n["self_similar"]) p.self_similar = get<std::uint64_t>(n, "self_similar", "profile");
  p.symbolic_mode = get_or<bool>(n, "symbolic_mode", false, "profile");
  p.power_tags_disjoint = get_or<bool>(n, "power_tags_disjoint", true, "profile");
  if (n["generic_bases"]) {
    const auto v = get<std::vector<std::string>>(n, "generic_bases", "profile");
    p.generic_bases = {v.begin(), v.end()};
  }
  if (n["atomic_bases"]) {
    const auto v = get<std::vector<std::string>>(n, "atomic_bases", "profile");
    p.atomic_bases = {v.begin(), v.end()};
  }
  if (n["cross_base_rules"]) {
    if (!n["cross_base_rules"].IsSequence()) bad("cross_base_rules must be a sequence");
    for (const auto& r : n["cross_base_rules"]) {
      allow_keys(r, {"bases", "rule"}, "cross-base rule");
      const auto bases = get<std::vector<std::string>>(r, "bases", "cross-base rule");
      if (bases.size() != 2) bad("a cross-base rule names exactly two bases");
      const auto rule = get<std::string>(r, "rule", "cross-base rule");
      if (rule != "lebesgue" && rule != "fresh") bad("cross-base rule must be lebesgue or fresh");
      p.set_cross_rule(bases[0], bases[1], rule == "lebesgue" ? CrossRule::Lebesgue : CrossRule::Fresh);
    }
  }
  p.validate();
  return p;
}

template <class F>
auto rethrow_yaml(F&& f) {
  try {
    return f();
  } catch (const YAML::Exception& e) {
    bad(std::string("malformed document: ") + e.what());
  }
}

std::string set_text(const MultiplicitySet& s) { return format_set(s); }

}  // namespace

std::string to_yaml(const SpectralType& t) {
  YAML::Emitter out;
  out << YAML::BeginMap << YAML::Key << "terms" << YAML::Value;
  emit_terms(out, t);
  out << YAML::EndMap;
  return finish(out);
}

SpectralType parse_type(const std::string& yaml, const AxiomProfile& profile) {
  return rethrow_yaml([&] {
    const auto doc = load(yaml);
    allow_keys(doc, {"terms"}, "spectral type");
    if (!doc["terms"]) bad("spectral type needs 'terms'");
    return terms_of(doc["terms"], profile);
  });
}

std::string to_yaml(const AxiomProfile& p) {
  YAML::Emitter out;
  emit_profile(out, p);
  return finish(out);
}

AxiomProfile parse_profile(const std::string& yaml) {
  return rethrow_yaml([&] { return profile_of(load(yaml)); });
}

std::string to_yaml(const FlowSpec& f) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "profile" << YAML::Value;
  emit_profile(out, f.profile);
  out << YAML::Key << "components" << YAML::Value << YAML::BeginSeq;
  for (const auto& c : f.components) {
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "frequency" << YAML::Value << YAML::DoubleQuoted << c.frequency.to_string();
    out << YAML::Key << "copies" << YAML::Value << c.copies;
    out << YAML::Key << "base" << YAML::Value << c.base;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
  return finish(out);
}

FlowSpec parse_flow(const std::string& yaml) {
  return rethrow_yaml([&] {
    const auto doc = load(yaml);
    allow_keys(doc, {"profile", "components"}, "flow");
    FlowSpec f;
    f.profile = doc["profile"] ? profile_of(doc["profile"]) : builtin_profile("chacon");
    if (!doc["components"] || !doc["components"].IsSequence()) bad("flow needs a 'components' sequence");
    for (const auto& c : doc["components"]) {
      allow_keys(c, {"frequency", "copies", "base"}, "flow component");
      if (!c["frequency"]) bad("flow component needs 'frequency'");
      f.components.push_back({rational_of(c["frequency"], "frequency"),
                              get_or<std::uint64_t>(c, "copies", 1, "flow component"),
                              get_or<std::string>(c, "base", "sigma", "flow component")});
    }
    f.validate();
    return f;
  });
}

std::string to_yaml(const RankOneRecipe& r) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << r.name;
  out << YAML::Key << "prefix" << YAML::Value << YAML::BeginSeq;
  for (const auto& s : r.prefix) {
    out << YAML::Flow << YAML::BeginMap << YAML::Key << "cuts" << YAML::Value << s.cuts;
    out << YAML::Key << "spacers" << YAML::Value << YAML::Flow << s.spacers << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "cuts" << YAML::Value << r.cuts;
  out << YAML::Key << "base_spacers" << YAML::Value << YAML::Flow << r.base_spacers;
  out << YAML::Key << "height_fraction" << YAML::Value << YAML::Flow << YAML::BeginSeq;
  for (const auto& q : r.height_fraction) out << YAML::DoubleQuoted << q.to_string();
  out << YAML::EndSeq << YAML::EndMap;
  return finish(out);
}

RankOneRecipe parse_recipe(const std::string& yaml) {
  return rethrow_yaml([&] {
    const auto doc = load(yaml);
    if (doc.IsMap() && doc["preset"]) {
      allow_keys(doc, {"preset"}, "recipe");
      return preset_recipe(doc["preset"].as<std::string>());
    }
    allow_keys(doc, {"name", "prefix", "cuts", "base_spacers", "height_fraction"}, "recipe");
    RankOneRecipe r;
    r.name = get_or<std::string>(doc, "name", "custom", "recipe");
    if (doc["prefix"]) {
      if (!doc["prefix"].IsSequence()) bad("prefix must be a sequence of stages");
      for (const auto& s : doc["prefix"]) {
        allow_keys(s, {"cuts", "spacers"}, "recipe stage");
        r.prefix.push_back({get<unsigned>(s, "cuts", "recipe stage"),
                            get<std::vector<std::uint64_t>>(s, "spacers", "recipe stage")});
      }
    }
    r.cuts = get_or<unsigned>(doc, "cuts", r.prefix.empty() ? 3u : r.prefix.back().cuts, "recipe");
    if (doc["base_spacers"]) {
      r.base_spacers = get<std::vector<std::uint64_t>>(doc, "base_spacers", "recipe");
    } else if (!r.prefix.empty() && r.prefix.back().cuts == r.cuts) {
      r.base_spacers = r.prefix.back().spacers;  // the last explicit stage repeats
    } else if (r.cuts != 3) {
      bad("recipe needs 'base_spacers'");
    }
    if (doc["height_fraction"]) {
      if (!doc["height_fraction"].IsSequence()) bad("height_fraction must be a sequence");
      for (const auto& q : doc["height_fraction"]) r.height_fraction.push_back(rational_of(q, "height_fraction"));
    }
    try {
      r.validate();
    } catch (const Error& e) {
      bad(e.what());
    }
    return r;
  });
}

std::string to_yaml(const RieszSpec& s) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  out << YAML::Key << "frequencies" << YAML::Value << YAML::Flow << s.frequencies;
  out << YAML::Key << "coefficients" << YAML::Value << YAML::Flow << s.coefficients;
  out << YAML::Key << "phases" << YAML::Value << YAML::Flow << s.phases;
  out << YAML::EndMap;
  return finish(out);
}

RieszSpec parse_riesz(const std::string& yaml) {
  return rethrow_yaml([&] {
    const auto doc = load(yaml);
    allow_keys(doc, {"frequencies", "coefficients", "phases"}, "riesz spec");
    RieszSpec s;
    s.frequencies = get<std::vector<std::int64_t>>(doc, "frequencies", "riesz spec");
    s.coefficients = doc["coefficients"] ? get<std::vector<double>>(doc, "coefficients", "riesz spec")
                                         : std::vector<double>(s.frequencies.size(), 1.0);
    s.phases = doc["phases"] ? get<std::vector<double>>(doc, "phases", "riesz spec")
                             : std::vector<double>(s.frequencies.size(), 0.0);
    try {
      s.validate();
    } catch (const Error& e) {
      bad(e.what());
    }
    return s;
  });
}

std::string to_yaml(const FockExpansion& f) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "saturated" << YAML::Value << f.saturated;
  out << YAML::Key << "constants" << YAML::Value << f.has_constants;
  out << YAML::Key << "levels" << YAML::Value << YAML::BeginSeq;
  for (std::size_t n = 0; n < f.levels.size(); ++n) {
    out << YAML::BeginMap << YAML::Key << "level" << YAML::Value << n + 1;
    out << YAML::Key << "terms" << YAML::Value;
    emit_terms(out, f.levels[n]);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "trace" << YAML::Value << f.trace;
  out << YAML::EndMap;
  return finish(out);
}

std::string scan_jsonl(const std::vector<TimeRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["t"] = r.t.to_string();
    j["multiplicity_set"] = set_text(r.multiplicities);
    auto finite = nlohmann::json::array();
    bool infinite = false;
    for (const auto& m : r.multiplicities) {
      if (m.is_infinite()) {
        infinite = true;
      } else if (const auto v = m.to_u64()) {
        finite.push_back(*v);
      } else {
        finite.push_back(m.to_string(true));
      }
    }
    j["finite"] = finite;
    j["infinite"] = infinite;
    j["merged"] = r.merged;
    out += j.dump() + "\n";
  }
  return out;
}

std::string scan_table(const std::vector<TimeRecord>& records) {
  std::size_t wt = 1, wm = 16;
  for (const auto& r : records) wt = std::max(wt, r.t.to_string().size());
  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  out << pad("t", wt) << "  " << pad("multiplicity_set", wm) << "  merged\n";
  for (const auto& r : records) {
    std::string merged;
    for (const auto& g : r.merged) {
      if (!merged.empty()) merged += " ";
      merged += "[";
      for (std::size_t i = 0; i < g.size(); ++i) merged += (i ? "," : "") + std::to_string(g[i]);
      merged += "]";
    }
    if (merged.empty()) merged = "-";
    // pad by display width: the infinity sign is one column but three bytes
    std::string set = set_text(r.multiplicities);
    std::size_t width = 0;
    for (const unsigned char ch : set) width += (ch & 0xC0) != 0x80;
    out << pad(r.t.to_string(), wt) << "  " << set << std::string(wm > width ? wm - width : 0, ' ') << "  "
        << merged << "\n";
  }
  return out.str();
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string correlation_csv(const std::vector<Rational>& r) {
  std::string out = "k,r_k\n";
  for (std::size_t k = 0; k < r.size(); ++k) out += std::to_string(k) + "," + format_double(r[k].to_double()) + "\n";
  return out;
}

std::string density_csv(const DensityTable& d) {
  std::string out = "theta,density\n";
  for (std::size_t i = 0; i < d.theta.size(); ++i)
    out += format_double(d.theta[i]) + "," + format_double(d.density[i]) + "\n";
  return out;
}

std::string weak_limit_csv(const WeakLimitReport& rep) {
  std::string out = "stage,height,r,deviation\n";
  for (const auto& row : rep.rows)
    out += std::to_string(row.stage) + "," + std::to_string(row.height) + "," + format_double(row.r.to_double()) +
           "," + format_double(row.deviation) + "\n";
  return out;
}

std::string affinity_csv(const std::vector<AffinityRow>& rows) {
  std::string out = "K,affinity\n";
  for (const auto& r : rows) out += std::to_string(r.K) + "," + format_double(r.affinity) + "\n";
  return out;
}

}  // namespace specmult::io
