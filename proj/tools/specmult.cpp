// Command-line front end. Talks to the library only through specmult.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "specmult/specmult.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kRefused = 2, kCheckFailed = 3 };

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void usage(const std::string& msg) { throw Failure{kUsage, msg}; }

void check(smult_status s) {
  if (s == SMULT_OK) return;
  throw Failure{smult_status_is_refusal(s) ? kRefused : kUsage, smult_last_error()};
}

template <class T, void (*F)(T*)>
struct Deleter {
  void operator()(T* p) const { F(p); }
};
template <class T, void (*F)(T*)>
using Handle = std::unique_ptr<T, Deleter<T, F>>;

using Profile = Handle<smult_profile, smult_profile_free>;
using Type = Handle<smult_type, smult_type_free>;
using MSet = Handle<smult_mset, smult_mset_free>;
using Fock = Handle<smult_fock, smult_fock_free>;
using Flow = Handle<smult_flow, smult_flow_free>;
using Recipe = Handle<smult_recipe, smult_recipe_free>;
using Riesz = Handle<smult_riesz, smult_riesz_free>;

// Takes ownership of a library string.
std::string take(char* s) {
  if (!s) return {};
  std::string out(s);
  smult_string_free(s);
  return out;
}

template <class H, class F>
H make(F&& f) {
  typename H::pointer p = nullptr;
  check(f(&p));
  return H(p);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) usage("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    if (s.empty() || s[0] == '-') throw std::invalid_argument(s);
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    usage(std::string("bad ") + what + " '" + s + "'");
  }
}

// "1,3,7"; empty items are rejected.
std::vector<std::uint64_t> parse_list(const std::string& s, const char* what, bool allow_empty = false) {
  std::vector<std::uint64_t> out;
  if (trim(s).empty()) {
    if (allow_empty) return out;
    usage(std::string(what) + " must not be empty");
  }
  for (const auto& item : split(s, ',')) out.push_back(parse_u64(item, what));
  return out;
}

// "2=1,3=2"
void parse_m(const std::string& s, std::vector<std::uint64_t>& primes, std::vector<std::uint64_t>& values) {
  if (trim(s).empty()) usage("--m must not be empty");
  for (const auto& item : split(s, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) usage("--m entries look like p=m, got '" + item + "'");
    primes.push_back(parse_u64(trim(item.substr(0, eq)), "prime"));
    values.push_back(parse_u64(trim(item.substr(eq + 1)), "m(p)"));
  }
}

// Comma-separated items, each a rational or an integer range a..b.
std::vector<std::string> parse_times(const std::string& s) {
  std::vector<std::string> out;
  if (trim(s).empty()) usage("--times must not be empty");
  for (const auto& item : split(s, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(item);
      continue;
    }
    const auto a = parse_u64(trim(item.substr(0, dots)), "range start");
    const auto b = parse_u64(trim(item.substr(dots + 2)), "range end");
    if (a > b) usage("empty time range '" + item + "'");
    if (b - a > 1000000) usage("time range '" + item + "' is too long");
    for (auto t = a; t <= b; ++t) out.push_back(std::to_string(t));
  }
  return out;
}

std::string format(const MSet& s) {
  char* out = nullptr;
  check(smult_mset_format(s.get(), 0, &out));
  return take(out);
}

MSet expected_set(const std::vector<std::uint64_t>& values) {
  return make<MSet>([&](smult_mset** o) { return smult_mset_from_values(values.data(), values.size(), 1, o); });
}

Profile load_profile(const std::string& spec) {
  if (spec.find('.') != std::string::npos || spec.find('/') != std::string::npos) {
    const auto text = read_file(spec);
    return make<Profile>([&](smult_profile** o) { return smult_profile_parse(text.c_str(), o); });
  }
  return make<Profile>([&](smult_profile** o) { return smult_profile_builtin(spec.c_str(), o); });
}

struct Run {
  std::ostringstream out;  // primary output
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  int code = kOk;
};

// --- subcommands -----------------------------------------------------------

struct MultiplicityOpts {
  std::string set, regime = "chacon";
  bool explain = false;
};

void cmd_multiplicity(const MultiplicityOpts& o, Run& run) {
  const auto m = parse_list(o.set, "--set");
  char* label = nullptr;
  MSet got = make<MSet>([&](smult_mset** out) { return smult_theorem1(m.data(), m.size(), o.regime.c_str(), out, &label); });
  const std::string text = format(got);
  run.out << text << "\n";
  if (o.explain) {
    const Profile profile = load_profile(o.regime);
    const Type v = make<Type>([&](smult_type** out) { return smult_type_rotation_family(m.data(), m.size(), out); });
    const Fock f = make<Fock>([&](smult_fock** out) { return smult_gaussian_type(v.get(), profile.get(), out); });
    char* trace = nullptr;
    check(smult_fock_trace(f.get(), &trace));
    run.out << take(trace);
    run.out << "label: " << take(label) << "\n";
  } else {
    smult_string_free(label);
  }
  const bool ok = smult_mset_equal(got.get(), expected_set(m).get());
  run.result["multiplicity_set"] = text;
  run.result["matches_m_union_infinity"] = ok;
  run.code = ok ? kOk : kCheckFailed;
}

void cmd_theorem1_1(const std::string& set, Run& run) {
  const auto m = parse_list(set, "--set");
  char* koopman = nullptr;
  char* note = nullptr;
  MSet got = make<MSet>([&](smult_mset** out) { return smult_theorem1_1(m.data(), m.size(), out, &koopman, &note); });
  const std::string text = format(got);
  run.out << text << "\n" << take(note) << "\n";
  smult_string_free(koopman);
  const bool ok = smult_mset_equal(got.get(), expected_set(m).get());
  run.result["multiplicity_set"] = text;
  run.result["matches_m_union_infinity"] = ok;
  run.code = ok ? kOk : kCheckFailed;
}

void cmd_theorem3(unsigned k, Run& run) {
  MSet got = make<MSet>([&](smult_mset** out) { return smult_theorem3(k, out); });
  std::uint64_t p = 1;
  for (unsigned i = 0; i < k; ++i) p *= 3;
  const std::string text = format(got);
  run.out << text << "\n";
  const bool ok = k <= 40 && smult_mset_equal(got.get(), expected_set({p}).get());
  run.result["multiplicity_set"] = text;
  run.result["matches_power_of_three"] = ok;
  run.code = ok ? kOk : kCheckFailed;
}

struct GaussianOpts {
  std::string type_file, profile = "chacon";
  bool explain = false, yaml = false;
};

void cmd_gaussian(const GaussianOpts& o, Run& run) {
  const Profile profile = load_profile(o.profile);
  const auto text = read_file(o.type_file);
  const Type u = make<Type>([&](smult_type** out) { return smult_type_parse(text.c_str(), profile.get(), out); });
  const Fock f = make<Fock>([&](smult_fock** out) { return smult_gaussian_type(u.get(), profile.get(), out); });
  MSet got = make<MSet>([&](smult_mset** out) { return smult_fock_multiplicities(f.get(), profile.get(), out); });
  const std::string set = format(got);
  run.out << set << "\n";
  if (o.explain) {
    char* trace = nullptr;
    check(smult_fock_trace(f.get(), &trace));
    run.out << take(trace);
  }
  if (o.yaml) {
    char* y = nullptr;
    check(smult_fock_to_yaml(f.get(), &y));
    run.out << take(y);
  }
  run.result["multiplicity_set"] = set;
}

void cmd_profile(const std::string& name, Run& run) {
  const Profile p = load_profile(name);
  char* y = nullptr;
  check(smult_profile_to_yaml(p.get(), &y));
  const auto text = take(y);
  run.out << text;
  run.result["profile"] = text;
}

struct FlowOpts {
  std::string flow = "theorem2", m;
};

Flow load_flow(const FlowOpts& o) {
  if (o.flow == "theorem2") {
    if (!o.m.empty()) usage("--m applies to --flow theorem4 only");
    return make<Flow>([](smult_flow** out) { return smult_flow_theorem2(out); });
  }
  if (o.flow == "theorem4") {
    std::vector<std::uint64_t> primes, values;
    parse_m(o.m, primes, values);
    return make<Flow>(
        [&](smult_flow** out) { return smult_flow_theorem4(primes.data(), values.data(), primes.size(), out); });
  }
  if (!o.m.empty()) usage("--m applies to --flow theorem4 only");
  const auto text = read_file(o.flow);
  return make<Flow>([&](smult_flow** out) { return smult_flow_parse(text.c_str(), out); });
}

void cmd_theorem4(const std::string& m, const std::string& times, Run& run) {
  const Flow f = load_flow({"theorem4", m});
  auto& rows = run.result["times"] = nlohmann::ordered_json::array();
  const auto ts = parse_times(times);
  if (ts.size() == 1) {
    MSet got = make<MSet>([&](smult_mset** out) { return smult_flow_time_multiplicities(f.get(), ts[0].c_str(), out); });
    const auto text = format(got);
    run.out << text << "\n";
    rows.push_back({{"t", ts[0]}, {"multiplicity_set", text}});
    return;
  }
  // several times: let the scan sort and deduplicate, print "t: set"
  std::vector<const char*> ptrs;
  for (const auto& t : ts) ptrs.push_back(t.c_str());
  char* out = nullptr;
  check(smult_flow_scan(f.get(), ptrs.data(), ptrs.size(), 1, &out));
  std::istringstream lines(take(out));
  for (std::string line; std::getline(lines, line);) {
    const auto rec = nlohmann::json::parse(line);
    const auto t = rec["t"].get<std::string>(), set = rec["multiplicity_set"].get<std::string>();
    run.out << t << ": " << set << "\n";
    rows.push_back({{"t", t}, {"multiplicity_set", set}});
  }
}

void cmd_flow_scan(const FlowOpts& o, const std::string& times, const std::string& fmt, Run& run) {
  if (fmt != "jsonl" && fmt != "table") usage("--format is jsonl or table");
  const Flow f = load_flow(o);
  const auto ts = parse_times(times);
  std::vector<const char*> ptrs;
  for (const auto& t : ts) ptrs.push_back(t.c_str());
  char* out = nullptr;
  check(smult_flow_scan(f.get(), ptrs.data(), ptrs.size(), fmt == "jsonl", &out));
  const auto text = take(out);
  run.out << text;
  run.result["records"] = static_cast<std::uint64_t>(std::count(text.begin(), text.end(), '\n') - (fmt == "table"));
}

void cmd_exceptional(const FlowOpts& o, const std::string& interval, std::uint64_t max_den, Run& run) {
  const auto parts = split(interval, ',');
  if (parts.size() != 2) usage("--interval is lo,hi");
  const Flow f = load_flow(o);
  char* out = nullptr;
  check(smult_flow_exceptional(f.get(), parts[0].c_str(), parts[1].c_str(), max_den, &out));
  const auto text = take(out);
  run.out << text << "\n";
  run.result["exceptional_times"] = text;
}

void cmd_theorem4_scan(const FlowOpts& o, const std::string& target, std::uint64_t max_candidates, Run& run) {
  const Flow f = load_flow(o);
  const auto t = parse_list(target, "--target", true);
  char* out = nullptr;
  check(smult_flow_theorem4_scan(f.get(), t.data(), t.size(), max_candidates, &out));
  const std::string found = out ? take(out) : "none";
  run.out << found << "\n";
  run.result["t"] = found;
}

struct RankOneOpts {
  std::string preset = "classic-chacon", recipe_file, stages, target;
  unsigned stage = 8;
  bool weak_limit = false, heights = false, word = false;
  std::uint64_t correlations = 0, budget = 0;
  std::size_t density = 0;
  double tolerance = 0.05;
  int eval_stage = -1;
};

void cmd_rankone(const RankOneOpts& o, Run& run) {
  const Recipe r = o.recipe_file.empty()
                       ? make<Recipe>([&](smult_recipe** out) { return smult_recipe_preset(o.preset.c_str(), out); })
                       : make<Recipe>([&](smult_recipe** out) {
                           const auto text = read_file(o.recipe_file);
                           return smult_recipe_parse(text.c_str(), out);
                         });
  const bool any = o.weak_limit || o.word || o.correlations || o.density;
  if (o.heights || !any) {
    char* out = nullptr;
    check(smult_recipe_heights(r.get(), o.stage, o.budget, &out));
    run.out << take(out);
  }
  if (o.word) {
    char* out = nullptr;
    check(smult_recipe_word(r.get(), o.stage, o.budget, &out));
    run.out << take(out) << "\n";
  }
  if (o.correlations) {
    char* out = nullptr;
    check(smult_recipe_correlations(r.get(), o.stage, o.correlations, o.budget, &out));
    run.out << take(out);
  }
  if (o.density) {
    char* out = nullptr;
    double ratio = 0;
    check(smult_recipe_spectral_estimate(r.get(), o.stage, o.density, o.budget, &out, &ratio));
    run.out << take(out);
    run.result["max_min_ratio"] = std::isfinite(ratio) ? nlohmann::ordered_json(ratio) : nlohmann::ordered_json("inf");
  }
  if (o.weak_limit) {
    std::vector<unsigned> stages;
    if (o.stages.empty()) {
      for (unsigned n = o.stage > 6 ? o.stage - 6 : 1; n <= o.stage; ++n) stages.push_back(n);
    } else {
      const auto dots = o.stages.find("..");
      if (dots == std::string::npos) {
        for (auto v : parse_list(o.stages, "--stages")) stages.push_back(static_cast<unsigned>(v));
      } else {
        const auto a = parse_u64(trim(o.stages.substr(0, dots)), "--stages");
        const auto b = parse_u64(trim(o.stages.substr(dots + 2)), "--stages");
        if (a > b || b > 64) usage("bad --stages range");
        for (auto n = a; n <= b; ++n) stages.push_back(static_cast<unsigned>(n));
      }
    }
    const bool judged = !o.target.empty();
    const std::string target = judged ? o.target : "1/2";
    char* out = nullptr;
    smult_weak_limit_summary s{};
    check(smult_recipe_weak_limit(r.get(), stages.data(), stages.size(), target.c_str(), o.tolerance, o.eval_stage,
                                  o.budget, &out, &s));
    std::string csv = take(out);
    if (!judged) {
      // Without a target only the r column is meaningful.
      std::ostringstream trimmed;
      for (const auto& line : split(csv, '\n')) {
        if (line.empty()) continue;
        trimmed << line.substr(0, line.rfind(',')) << "\n";
      }
      csv = trimmed.str();
    }
    run.out << csv;
    run.out << "# eval_stage=" << s.eval_stage << " spread=" << s.spread;
    if (judged)
      run.out << " target=" << target << " last_deviation=" << s.last_deviation
              << " decreasing=" << (s.decreasing ? "yes" : "no") << " pass=" << (s.pass ? "yes" : "no");
    run.out << "\n";
    run.result["eval_stage"] = s.eval_stage;
    run.result["spread"] = s.spread;
    if (judged) {
      run.result["last_deviation"] = s.last_deviation;
      run.result["decreasing"] = static_cast<bool>(s.decreasing);
      run.result["pass"] = static_cast<bool>(s.pass);
      if (!s.pass) run.code = kCheckFailed;
    }
  }
}

struct RieszOpts {
  bool use_default = false;
  std::string spec_file, z, coefficients;
  int depth = -1;
  unsigned k_min = 4;
  std::size_t grid = std::size_t{1} << 18;
  double max_final = 0.1, power = 4;
  std::int64_t tail = -1;
  bool require_monotone = false;
};

double parse_angle(const std::string& z) {
  if (z == "golden") return 2 * std::numbers::pi * (std::sqrt(5.0) - 1) / 2;
  if (z == "inv-sqrt7") return 2 * std::numbers::pi / std::sqrt(7.0);
  try {
    std::size_t used = 0;
    const double v = std::stod(z, &used);
    if (used != z.size() || !std::isfinite(v)) throw std::invalid_argument(z);
    return v;
  } catch (const std::exception&) {
    usage("--affinity-z is golden, inv-sqrt7 or an angle in radians, got '" + z + "'");
  }
}

void cmd_riesz(const RieszOpts& o, Run& run) {
  if (o.use_default == !o.spec_file.empty()) usage("give exactly one of --default and --spec");
  Riesz s = o.use_default ? make<Riesz>([](smult_riesz** out) { return smult_riesz_default(out); })
                          : make<Riesz>([&](smult_riesz** out) {
                              const auto text = read_file(o.spec_file);
                              return smult_riesz_parse(text.c_str(), out);
                            });
  if (o.depth >= 0) check(smult_riesz_truncate(s.get(), static_cast<unsigned>(o.depth)));
  bool any = false;
  if (!o.coefficients.empty()) {
    any = true;
    const auto dots = o.coefficients.find("..");
    if (dots == std::string::npos) usage("--coefficients is lo..hi");
    std::int64_t lo = 0, hi = 0;
    try {
      lo = std::stoll(o.coefficients.substr(0, dots));
      hi = std::stoll(o.coefficients.substr(dots + 2));
    } catch (const std::exception&) {
      usage("--coefficients is lo..hi");
    }
    char* out = nullptr;
    check(smult_riesz_coefficients(s.get(), lo, hi, &out));
    run.out << take(out);
  }
  if (o.tail >= 0) {
    any = true;
    double v = 0;
    check(smult_riesz_tail(s.get(), o.power, o.tail, &v));
    run.out << "tail," << v << "\n";
    run.result["tail"] = v;
  }
  if (!o.z.empty()) {
    any = true;
    const double z = parse_angle(o.z);
    const unsigned depth = smult_riesz_depth(s.get());
    char* out = nullptr;
    int monotone = 0;
    double final_value = 0;
    check(smult_riesz_affinity_trend(s.get(), z, std::min(o.k_min, depth), depth, o.grid, &out, &monotone,
                                     &final_value));
    run.out << take(out);
    const bool ok = final_value < o.max_final && (monotone || !o.require_monotone);
    run.out << "# final=" << final_value << " monotone=" << (monotone ? "yes" : "no")
            << " pass=" << (ok ? "yes" : "no") << "\n";
    run.result["final_affinity"] = final_value;
    run.result["monotone"] = static_cast<bool>(monotone);
    run.result["pass"] = ok;
    if (!ok) run.code = kCheckFailed;
  }
  if (!any) {
    char* out = nullptr;
    check(smult_riesz_to_yaml(s.get(), &out));
    run.out << take(out);
  }
}

nlohmann::ordered_json resolved_config(const CLI::App* sub) {
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_name() == "--help" || opt->get_name() == "-h") continue;
    const std::string key = opt->get_name(false, true);
    if (opt->get_expected_max() == 0) {
      cfg[key] = opt->count() > 0;
    } else if (opt->count()) {
      const auto& r = opt->results();
      cfg[key] = r.size() == 1 ? nlohmann::ordered_json(r.front()) : nlohmann::ordered_json(r);
    } else if (opt->get_default_str().empty()) {
      cfg[key] = nullptr;
    } else {
      cfg[key] = opt->get_default_str();
    }
  }
  return cfg;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral multiplicities of Gaussian automorphisms and flows"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(smult_version()));
  std::string record;
  app.add_option("--record", record, "Write a JSON run record (version, resolved config, result) to PATH");

  MultiplicityOpts mo;
  auto* mult = app.add_subcommand("multiplicity", "M(G) for the rotation family over M; exit 3 unless it is M ∪ {∞}");
  mult->add_option("--set", mo.set, "Comma-separated positive integers, e.g. 1,3")->required();
  mult->add_option("--regime", mo.regime, "salem or chacon")->capture_default_str();
  mult->add_flag("--explain", mo.explain, "Print the Fock expansion trace");

  std::string t11_set;
  auto* t11 = app.add_subcommand("theorem1-1", "Multiplicities of a product with pairwise Lebesgue convolutions");
  t11->add_option("--set", t11_set, "Comma-separated positive integers")->required();

  unsigned t3_k = 0;
  auto* t3 = app.add_subcommand("theorem3", "M(G(U^{3^k})) under the self-similar profile");
  t3->add_option("--k", t3_k, "Exponent k >= 0")->required();

  GaussianOpts go;
  auto* gauss = app.add_subcommand("gaussian", "Spectral type of G(U) for a spectral type file");
  gauss->add_option("--type", go.type_file, "YAML spectral type")->required();
  gauss->add_option("--profile", go.profile, "Built-in profile name or YAML file")->capture_default_str();
  gauss->add_flag("--explain", go.explain, "Print the Fock expansion trace");
  gauss->add_flag("--yaml", go.yaml, "Print the full expansion as YAML");

  std::string profile_name = "chacon";
  auto* prof = app.add_subcommand("profile", "Print a profile as YAML");
  prof->add_option("--name", profile_name, "Built-in profile name or YAML file")->capture_default_str();

  std::string t4_m, t4_times;
  auto* t4 = app.add_subcommand("theorem4", "M(G_t) for the prime-phase flow of an m-function");
  t4->add_option("--m", t4_m, "Map p=m(p), e.g. 2=1,3=2")->required();
  t4->add_option("--t", t4_times, "Times: rationals or integer ranges a..b, comma-separated")->required();

  FlowOpts so;
  std::string scan_times, scan_format = "jsonl";
  auto* scan = app.add_subcommand("flow-scan", "M(G_t) over a list of times");
  scan->add_option("--flow", so.flow, "theorem2, theorem4 or a YAML flow file")->capture_default_str();
  scan->add_option("--m", so.m, "m-function for --flow theorem4");
  scan->add_option("--times", scan_times, "Rationals or integer ranges a..b, comma-separated")->required();
  scan->add_option("--format", scan_format, "jsonl or table")->capture_default_str();

  FlowOpts eo;
  std::string interval;
  std::uint64_t max_den = 1;
  auto* exc = app.add_subcommand("exceptional", "Times in (lo, hi] where components collide");
  exc->add_option("--flow", eo.flow, "theorem2, theorem4 or a YAML flow file")->capture_default_str();
  exc->add_option("--m", eo.m, "m-function for --flow theorem4");
  exc->add_option("--interval", interval, "lo,hi")->required();
  exc->add_option("--max-den", max_den, "Largest denominator")->capture_default_str();

  FlowOpts to;
  to.flow = "theorem4";
  std::string target;
  std::uint64_t max_candidates = 1u << 20;
  auto* t4s = app.add_subcommand("theorem4-scan", "Smallest integer t with M(G_t) = {1,∞} ∪ target");
  t4s->add_option("--flow", to.flow, "theorem4 or a YAML flow file")->capture_default_str();
  t4s->add_option("--m", to.m, "m-function for --flow theorem4");
  t4s->add_option("--target", target, "Comma-separated target values (may be empty)")->required();
  t4s->add_option("--max-candidates", max_candidates, "Search bound on candidate times")->capture_default_str();

  RankOneOpts ro;
  auto* rank = app.add_subcommand("rankone", "Rank-one tower words, correlations and weak-limit checks");
  auto* preset_opt = rank->add_option("--preset", ro.preset, "classic-chacon or two-adic-chacon")->capture_default_str();
  rank->add_option("--recipe", ro.recipe_file, "YAML recipe file")->excludes(preset_opt);
  rank->add_option("--stage", ro.stage, "Construction stage")->capture_default_str();
  rank->add_flag("--heights", ro.heights, "CSV stage,height (the default action)");
  rank->add_flag("--word", ro.word, "Print the stage word as l/s symbols");
  rank->add_option("--correlations", ro.correlations, "CSV k,r_k for k = 0..K");
  rank->add_option("--density", ro.density, "CSV theta,density at this resolution");
  rank->add_flag("--weak-limit", ro.weak_limit, "r at the tower heights of --stages");
  rank->add_option("--stages", ro.stages, "a..b or a list; default stage-6..stage");
  rank->add_option("--target", ro.target, "Weak-limit target, e.g. 1/2; enables pass/fail");
  rank->add_option("--tol", ro.tolerance, "Tolerance on the last stage")->capture_default_str();
  rank->add_option("--eval-stage", ro.eval_stage, "Stage of the evaluation word; -1 picks one")->capture_default_str();
  rank->add_option("--budget", ro.budget, "Symbol budget; 0 is the library default")->capture_default_str();

  RieszOpts zo;
  auto* riesz = app.add_subcommand("riesz", "Riesz product coefficients, tails and rotation affinity");
  riesz->add_flag("--default", zo.use_default, "n_k = 3^k, a_k = 1, phi_k = 0, depth 14");
  riesz->add_option("--spec", zo.spec_file, "YAML Riesz spec");
  riesz->add_option("--depth", zo.depth, "Keep the first K factors");
  riesz->add_option("--coefficients", zo.coefficients, "CSV n,re,im for lo..hi");
  riesz->add_option("--tail", zo.tail, "Print the coefficient tail beyond N");
  riesz->add_option("--power", zo.power, "Exponent of the tail sum")->capture_default_str();
  riesz->add_option("--affinity-z", zo.z, "golden, inv-sqrt7 or radians");
  riesz->add_option("--k-min", zo.k_min, "First depth of the affinity trend")->capture_default_str();
  riesz->add_option("--grid", zo.grid, "Quadrature points")->capture_default_str();
  riesz->add_option("--max-final", zo.max_final, "Pass threshold on the final affinity")->capture_default_str();
  riesz->add_flag("--require-monotone", zo.require_monotone, "Fail unless the trend strictly decreases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  Run run;
  CLI::App* sub = app.get_subcommands().front();
  try {
    if (sub == mult) cmd_multiplicity(mo, run);
    else if (sub == t11) cmd_theorem1_1(t11_set, run);
    else if (sub == t3) cmd_theorem3(t3_k, run);
    else if (sub == gauss) cmd_gaussian(go, run);
    else if (sub == prof) cmd_profile(profile_name, run);
    else if (sub == t4) cmd_theorem4(t4_m, t4_times, run);
    else if (sub == scan) cmd_flow_scan(so, scan_times, scan_format, run);
    else if (sub == exc) cmd_exceptional(eo, interval, max_den, run);
    else if (sub == t4s) cmd_theorem4_scan(to, target, max_candidates, run);
    else if (sub == rank) cmd_rankone(ro, run);
    else if (sub == riesz) cmd_riesz(zo, run);
  } catch (const Failure& f) {
    std::cout << run.out.str() << std::flush;
    std::cerr << "error: " << f.message << "\n";
    run.code = f.code;
    run.result["error"] = f.message;
  }
  if (run.result.find("error") == run.result.end()) std::cout << run.out.str() << std::flush;

  if (!record.empty()) {
    nlohmann::ordered_json rec;
    rec["version"] = smult_version();
    rec["subcommand"] = sub->get_name();
    rec["config"] = resolved_config(sub);
    rec["exit_code"] = run.code;
    rec["result"] = run.result;
    rec["metadata"] = {{"timestamp", utc_now()}};
    std::ofstream f(record);
    if (!f) {
      std::cerr << "error: cannot write record to '" << record << "'\n";
      return kUsage;
    }
    f << rec.dump(2) << "\n";
  }
  return run.code;
}
