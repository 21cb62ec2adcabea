#include "specmult/specmult.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "specmult/calculus.hpp"
#include "specmult/error.hpp"
#include "specmult/flows.hpp"
#include "specmult/gaussian.hpp"
#include "specmult/io.hpp"
#include "specmult/profiles.hpp"
#include "specmult/rankone.hpp"
#include "specmult/riesz.hpp"

using namespace specmult;

struct smult_profile {
  AxiomProfile v;
};
struct smult_type {
  SpectralType v;
};
struct smult_mset {
  MultiplicitySet v;
};
struct smult_fock {
  FockExpansion v;
};
struct smult_flow {
  FlowSpec v;
};
struct smult_recipe {
  RankOneRecipe v;
};
struct smult_riesz {
  RieszSpec v;
};

namespace {

thread_local std::string last_error;

template <class F>
smult_status guard(F&& f) noexcept {
  try {
    last_error.clear();
    f();
    return SMULT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<smult_status>(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SMULT_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SMULT_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) raise(ErrorKind::InvalidArgument, std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  need(out, "output");
  *out = dup(s);
}

std::set<std::uint64_t> as_set(const uint64_t* m, size_t n) {
  if (n) need(m, "values");
  return {m, m + n};
}

Rational time_of(const char* t) {
  need(t, "time");
  return Rational::parse(t);
}

template <class H, class V>
void emit(H** out, V&& value) {
  need(out, "output");
  *out = new H{std::forward<V>(value)};
}

}  // namespace

extern "C" {

const char* smult_version(void) { return SPECMULT_VERSION; }

const char* smult_last_error(void) { return last_error.c_str(); }

const char* smult_status_name(smult_status s) {
  if (s == SMULT_OK) return "Ok";
  if (s == SMULT_INTERNAL) return "Internal";
  if (s < SMULT_INVALID_ARGUMENT || s > SMULT_OVERFLOW) return "Unrecognized";
  return error_kind_name(static_cast<ErrorKind>(s));
}

int smult_status_is_refusal(smult_status s) {
  if (s < SMULT_INVALID_ARGUMENT || s > SMULT_OVERFLOW) return 0;
  return is_refusal(static_cast<ErrorKind>(s)) ? 1 : 0;
}

void smult_string_free(char* s) { std::free(s); }

// Profiles

smult_status smult_profile_builtin(const char* name, smult_profile** out) {
  return guard([&] {
    need(name, "name");
    emit(out, builtin_profile(name));
  });
}

smult_status smult_profile_parse(const char* yaml, smult_profile** out) {
  return guard([&] {
    need(yaml, "yaml");
    emit(out, io::parse_profile(yaml));
  });
}

smult_status smult_profile_to_yaml(const smult_profile* p, char** out) {
  return guard([&] {
    need(p, "profile");
    put(out, io::to_yaml(p->v));
  });
}

smult_status smult_profile_name(const smult_profile* p, char** out) {
  return guard([&] {
    need(p, "profile");
    put(out, p->v.name);
  });
}

void smult_profile_free(smult_profile* p) { delete p; }

// Types

smult_status smult_type_parse(const char* yaml, const smult_profile* p, smult_type** out) {
  return guard([&] {
    need(yaml, "yaml");
    need(p, "profile");
    emit(out, io::parse_type(yaml, p->v));
  });
}

smult_status smult_type_rotation_family(const uint64_t* m, size_t n, smult_type** out) {
  return guard([&] { emit(out, build_rotation_family(as_set(m, n))); });
}

smult_status smult_type_to_yaml(const smult_type* t, char** out) {
  return guard([&] {
    need(t, "type");
    put(out, io::to_yaml(t->v));
  });
}

smult_status smult_type_to_string(const smult_type* t, char** out) {
  return guard([&] {
    need(t, "type");
    put(out, t->v.to_string());
  });
}

smult_status smult_type_direct_sum(const smult_type* a, const smult_type* b, const smult_profile* p,
                                   smult_type** out) {
  return guard([&] {
    need(a, "type");
    need(b, "type");
    need(p, "profile");
    emit(out, direct_sum(a->v, b->v, p->v));
  });
}

smult_status smult_type_tensor(const smult_type* a, const smult_type* b, const smult_profile* p, smult_type** out) {
  return guard([&] {
    need(a, "type");
    need(b, "type");
    need(p, "profile");
    emit(out, tensor_product(a->v, b->v, p->v));
  });
}

smult_status smult_type_sym_power(const smult_type* t, unsigned n, const smult_profile* p, smult_type** out) {
  return guard([&] {
    need(t, "type");
    need(p, "profile");
    emit(out, sym_power(t->v, n, p->v));
  });
}

smult_status smult_type_operator_power(const smult_type* t, uint64_t k, const smult_profile* p, int strict,
                                       smult_type** out) {
  return guard([&] {
    need(t, "type");
    need(p, "profile");
    emit(out, operator_power(t->v, k, p->v, strict ? PowerMode::Strict : PowerMode::Tagged));
  });
}

smult_status smult_type_multiplicities(const smult_type* t, smult_mset** out) {
  return guard([&] {
    need(t, "type");
    emit(out, multiplicity_set(t->v));
  });
}

void smult_type_free(smult_type* t) { delete t; }

// Multiplicity sets

smult_status smult_mset_from_values(const uint64_t* values, size_t n, int with_infinity, smult_mset** out) {
  return guard([&] {
    MultiplicitySet s;
    for (const auto v : as_set(values, n)) s.insert(Multiplicity(v));
    if (with_infinity) s.insert(Multiplicity::infinity());
    emit(out, std::move(s));
  });
}

int smult_mset_equal(const smult_mset* a, const smult_mset* b) { return a && b && a->v == b->v; }

int smult_mset_has_infinity(const smult_mset* s) { return s && !s->v.empty() && s->v.rbegin()->is_infinite(); }

size_t smult_mset_finite_count(const smult_mset* s) {
  if (!s) return 0;
  return s->v.size() - static_cast<size_t>(smult_mset_has_infinity(s));
}

smult_status smult_mset_finite_at(const smult_mset* s, size_t i, char** out) {
  return guard([&] {
    need(s, "set");
    if (i >= smult_mset_finite_count(s)) raise(ErrorKind::OutOfRange, "index past the finite values");
    put(out, std::next(s->v.begin(), static_cast<std::ptrdiff_t>(i))->to_string(true));
  });
}

smult_status smult_mset_format(const smult_mset* s, int ascii, char** out) {
  return guard([&] {
    need(s, "set");
    put(out, format_set(s->v, ascii != 0));
  });
}

void smult_mset_free(smult_mset* s) { delete s; }

// Gaussian

smult_status smult_exp_fock(const smult_type* v, const smult_profile* p, smult_fock** out) {
  return guard([&] {
    need(v, "type");
    need(p, "profile");
    emit(out, exp_fock(v->v, p->v));
  });
}

smult_status smult_gaussian_type(const smult_type* u, const smult_profile* p, smult_fock** out) {
  return guard([&] {
    need(u, "type");
    need(p, "profile");
    emit(out, gaussian_type(u->v, p->v));
  });
}

smult_status smult_fock_multiplicities(const smult_fock* f, const smult_profile* p, smult_mset** out) {
  return guard([&] {
    need(f, "expansion");
    need(p, "profile");
    emit(out, fock_multiplicity_set(f->v, p->v));
  });
}

smult_status smult_fock_trace(const smult_fock* f, char** out) {
  return guard([&] {
    need(f, "expansion");
    std::string s;
    for (const auto& line : f->v.trace) s += line + "\n";
    put(out, s);
  });
}

smult_status smult_fock_to_yaml(const smult_fock* f, char** out) {
  return guard([&] {
    need(f, "expansion");
    put(out, io::to_yaml(f->v));
  });
}

void smult_fock_free(smult_fock* f) { delete f; }

smult_status smult_theorem1(const uint64_t* m, size_t n, const char* regime, smult_mset** out, char** label) {
  return guard([&] {
    need(regime, "regime");
    const Regime r = parse_regime(regime);
    auto res = theorem1_multiplicity(as_set(m, n), r);
    if (label) *label = dup(res.label);
    emit(out, std::move(res.multiplicities));
  });
}

smult_status smult_theorem1_1(const uint64_t* m, size_t n, smult_mset** out, char** koopman, char** note) {
  return guard([&] {
    auto res = theorem1_1_multiplicity(as_set(m, n));
    need(out, "output");
    if (koopman) *koopman = dup(res.koopman.to_string());
    if (note) *note = dup(res.note);
    emit(out, std::move(res.multiplicities));
  });
}

smult_status smult_theorem3(unsigned k, smult_mset** out) {
  return guard([&] { emit(out, theorem3_multiplicity(k)); });
}

// Flows

smult_status smult_flow_theorem2(smult_flow** out) {
  return guard([&] { emit(out, theorem2_flow()); });
}

smult_status smult_flow_theorem4(const uint64_t* primes, const uint64_t* m, size_t n, smult_flow** out) {
  return guard([&] {
    if (n) {
      need(primes, "primes");
      need(m, "m");
    }
    std::map<std::uint64_t, std::uint64_t> fn;
    for (size_t i = 0; i < n; ++i)
      if (!fn.emplace(primes[i], m[i]).second)
        raise(ErrorKind::InvalidMultiplicityFunction, "prime " + std::to_string(primes[i]) + " listed twice");
    emit(out, theorem4_flow(fn));
  });
}

smult_status smult_flow_parse(const char* yaml, smult_flow** out) {
  return guard([&] {
    need(yaml, "yaml");
    emit(out, io::parse_flow(yaml));
  });
}

smult_status smult_flow_to_yaml(const smult_flow* f, char** out) {
  return guard([&] {
    need(f, "flow");
    put(out, io::to_yaml(f->v));
  });
}

smult_status smult_flow_time_type(const smult_flow* f, const char* t, smult_type** out) {
  return guard([&] {
    need(f, "flow");
    emit(out, time_t_type(f->v, time_of(t)));
  });
}

smult_status smult_flow_time_multiplicities(const smult_flow* f, const char* t, smult_mset** out) {
  return guard([&] {
    need(f, "flow");
    emit(out, gaussian_time_t_multiplicity(f->v, time_of(t)));
  });
}

smult_status smult_flow_generic_multiplicities(const smult_flow* f, smult_mset** out) {
  return guard([&] {
    need(f, "flow");
    emit(out, generic_multiplicity(f->v));
  });
}

smult_status smult_flow_scan(const smult_flow* f, const char* const* times, size_t n, int jsonl, char** out) {
  return guard([&] {
    need(f, "flow");
    if (n) need(times, "times");
    std::vector<Rational> ts;
    for (size_t i = 0; i < n; ++i) ts.push_back(time_of(times[i]));
    const auto records = flow_scan(f->v, std::move(ts));
    put(out, jsonl ? io::scan_jsonl(records) : io::scan_table(records));
  });
}

smult_status smult_flow_exceptional(const smult_flow* f, const char* lo, const char* hi, uint64_t max_denominator,
                                    char** out) {
  return guard([&] {
    need(f, "flow");
    need(lo, "lo");
    need(hi, "hi");
    std::string s;
    for (const auto& t : exceptional_times(f->v, Rational::parse(lo), Rational::parse(hi), max_denominator)) {
      if (!s.empty()) s += ", ";
      s += t.to_string();
    }
    put(out, s);
  });
}

smult_status smult_flow_theorem4_scan(const smult_flow* f, const uint64_t* target, size_t n, uint64_t max_candidates,
                                      char** out) {
  return guard([&] {
    need(f, "flow");
    need(out, "output");
    const auto t = theorem4_scan(f->v, as_set(target, n), max_candidates);
    *out = t ? dup(t->to_string()) : nullptr;
  });
}

void smult_flow_free(smult_flow* f) { delete f; }

// Rank-one

namespace {
std::uint64_t budget_or_default(uint64_t b) { return b ? b : kDefaultBitBudget; }
}  // namespace

smult_status smult_recipe_preset(const char* name, smult_recipe** out) {
  return guard([&] {
    need(name, "name");
    emit(out, preset_recipe(name));
  });
}

smult_status smult_recipe_parse(const char* yaml, smult_recipe** out) {
  return guard([&] {
    need(yaml, "yaml");
    emit(out, io::parse_recipe(yaml));
  });
}

smult_status smult_recipe_to_yaml(const smult_recipe* r, char** out) {
  return guard([&] {
    need(r, "recipe");
    put(out, io::to_yaml(r->v));
  });
}

smult_status smult_recipe_heights(const smult_recipe* r, unsigned stage, uint64_t budget, char** out) {
  return guard([&] {
    need(r, "recipe");
    const auto h = tower_heights(r->v, stage, budget_or_default(budget));
    std::string s = "stage,height\n";
    for (size_t n = 0; n < h.size(); ++n) s += std::to_string(n) + "," + std::to_string(h[n]) + "\n";
    put(out, s);
  });
}

smult_status smult_recipe_word(const smult_recipe* r, unsigned stage, uint64_t budget, char** out) {
  return guard([&] {
    need(r, "recipe");
    put(out, build_word(r->v, stage, budget_or_default(budget)).to_string());
  });
}

smult_status smult_recipe_correlations(const smult_recipe* r, unsigned stage, uint64_t K, uint64_t budget,
                                       char** out) {
  return guard([&] {
    need(r, "recipe");
    put(out, io::correlation_csv(correlation_sequence(r->v, stage, K, budget_or_default(budget))));
  });
}

smult_status smult_recipe_weak_limit(const smult_recipe* r, const unsigned* stages, size_t n, const char* target,
                                     double tolerance, int eval_stage, uint64_t budget, char** csv,
                                     smult_weak_limit_summary* summary) {
  return guard([&] {
    need(r, "recipe");
    need(target, "target");
    if (n) need(stages, "stages");
    const auto rep = weak_limit_check(r->v, std::vector<unsigned>(stages, stages + n), Rational::parse(target),
                                      tolerance,
                                      eval_stage < 0 ? std::nullopt : std::optional<unsigned>(eval_stage),
                                      budget_or_default(budget));
    if (summary) {
      summary->eval_stage = rep.eval_stage;
      summary->pass = rep.pass;
      summary->decreasing = rep.decreasing;
      summary->spread = rep.spread;
      summary->last_deviation = rep.rows.back().deviation;
    }
    if (csv) *csv = dup(io::weak_limit_csv(rep));
  });
}

smult_status smult_recipe_spectral_estimate(const smult_recipe* r, unsigned stage, size_t resolution,
                                            uint64_t budget, char** csv, double* max_min_ratio) {
  return guard([&] {
    need(r, "recipe");
    const TowerWord w = build_word(r->v, stage, budget_or_default(budget));
    if (resolution == 0 || resolution > w.length())
      raise(ErrorKind::InsufficientData, "the stage " + std::to_string(stage) + " word has " +
                                             std::to_string(w.length()) + " lags, fewer than the resolution");
    const auto d = spectral_estimate(correlation_sequence(w, resolution - 1), resolution);
    if (max_min_ratio) *max_min_ratio = d.max_min_ratio();
    if (csv) *csv = dup(io::density_csv(d));
  });
}

void smult_recipe_free(smult_recipe* r) { delete r; }

// Riesz

smult_status smult_riesz_default(smult_riesz** out) {
  return guard([&] { emit(out, default_riesz_spec()); });
}

smult_status smult_riesz_parse(const char* yaml, smult_riesz** out) {
  return guard([&] {
    need(yaml, "yaml");
    emit(out, io::parse_riesz(yaml));
  });
}

smult_status smult_riesz_to_yaml(const smult_riesz* s, char** out) {
  return guard([&] {
    need(s, "spec");
    put(out, io::to_yaml(s->v));
  });
}

unsigned smult_riesz_depth(const smult_riesz* s) { return s ? s->v.depth() : 0; }

smult_status smult_riesz_truncate(smult_riesz* s, unsigned depth) {
  return guard([&] {
    need(s, "spec");
    if (depth > s->v.depth()) raise(ErrorKind::InvalidArgument, "depth exceeds the spec depth");
    s->v.frequencies.resize(depth);
    s->v.coefficients.resize(depth);
    s->v.phases.resize(depth);
  });
}

smult_status smult_riesz_coefficients(const smult_riesz* s, int64_t lo, int64_t hi, char** out) {
  return guard([&] {
    need(s, "spec");
    if (lo > hi) raise(ErrorKind::InvalidArgument, "empty coefficient range");
    std::string csv = "n,re,im\n";
    for (int64_t n = lo;; ++n) {
      const auto c = fourier_coefficient(s->v, n);
      csv += std::to_string(n) + "," + io::format_double(c.real()) + "," + io::format_double(c.imag()) + "\n";
      if (n == hi) break;
    }
    put(out, csv);
  });
}

smult_status smult_riesz_coefficient(const smult_riesz* s, int64_t n, double* re, double* im) {
  return guard([&] {
    need(s, "spec");
    const auto c = fourier_coefficient(s->v, n);
    if (re) *re = c.real();
    if (im) *im = c.imag();
  });
}

smult_status smult_riesz_density(const smult_riesz* s, double theta, unsigned K, double* out) {
  return guard([&] {
    need(s, "spec");
    need(out, "output");
    *out = partial_density(s->v, theta, K);
  });
}

smult_status smult_riesz_tail(const smult_riesz* s, double p, int64_t N, double* out) {
  return guard([&] {
    need(s, "spec");
    need(out, "output");
    *out = coefficient_power_tail(s->v, p, N);
  });
}

smult_status smult_riesz_affinity_trend(const smult_riesz* s, double z, unsigned k_min, unsigned k_max, size_t grid,
                                        char** csv, int* monotone, double* final_value) {
  return guard([&] {
    need(s, "spec");
    const auto rows = affinity_trend(s->v, z, k_min, k_max, grid);
    bool dec = true;
    for (size_t i = 1; i < rows.size(); ++i) dec = dec && rows[i].affinity < rows[i - 1].affinity;
    if (monotone) *monotone = dec;
    if (final_value) *final_value = rows.back().affinity;
    if (csv) *csv = dup(io::affinity_csv(rows));
  });
}

void smult_riesz_free(smult_riesz* s) { delete s; }

}  // extern "C"
