// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and sizes are fixed here, not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "diagonal_unitary.hpp"
#include "expressions.hpp"
#include "phase_coincidence.hpp"
#include "riesz_quadrature.hpp"
#include "specmult/error.hpp"
#include "specmult/flows.hpp"
#include "specmult/gaussian.hpp"
#include "specmult/rankone.hpp"
#include "specmult/riesz.hpp"
#include "tower_naive.hpp"

using namespace specmult;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0)
    out.require(secs < limit_seconds, "runtime " + std::to_string(secs) + " s over " + std::to_string(limit_seconds) + " s");
  std::printf("%s  %-28s %6.2fs  %s\n", out.pass ? "PASS" : "FAIL", name.c_str(), secs, out.detail.c_str());
  for (const auto& n : out.notes) std::printf("      note: %s\n", n.c_str());
  std::fflush(stdout);
  if (!out.pass) ++failures;
}

MultiplicitySet with_inf(const std::set<std::uint64_t>& xs) {
  MultiplicitySet s{Multiplicity::infinity()};
  for (auto x : xs) s.insert(Multiplicity(x));
  return s;
}

std::set<std::uint64_t> random_subset(std::mt19937_64& rng, std::uint64_t hi) {
  std::set<std::uint64_t> m;
  while (m.empty())
    for (std::uint64_t x = 1; x <= hi; ++x)
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) m.insert(x);
  return m;
}

std::string str(const MultiplicitySet& s) { return format_set(s, true); }

std::string fixed(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1e", x);
  return buf;
}

void rotation_family_exp(Outcome& o) {
  std::mt19937_64 rng(101);
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    const auto m = random_subset(rng, 20);
    for (Regime r : {Regime::Salem, Regime::Chacon}) {
      const auto got = theorem1_multiplicity(m, r).multiplicities;
      o.require(got == with_inf(m), "M=" + str(with_inf(m)) + " got " + str(got));
      ++checked;
    }
  }
  o.detail = o.pass ? std::to_string(checked) + " (M, regime) pairs" : o.detail;
}

void product_construction(Outcome& o) {
  std::mt19937_64 rng(102);
  for (int i = 0; i < 20; ++i) {
    const auto m = random_subset(rng, 20);
    const auto got = theorem1_1_multiplicity(m).multiplicities;
    o.require(got == with_inf(m), "M=" + str(with_inf(m)) + " got " + str(got));
  }
  if (o.pass) o.detail = "20 random M";
}

void two_component_flow(Outcome& o) {
  const auto f = theorem2_flow();
  auto at = [&](std::int64_t t) { return gaussian_time_t_multiplicity(f, Rational(t)); };
  o.require(at(1) == with_inf({1}), "t=1 gives " + str(at(1)));
  o.require(at(2) == with_inf({2}), "t=2 gives " + str(at(2)));
  for (std::int64_t t : {1, 3, 5}) o.require(at(t) == with_inf({1}), "odd t=" + std::to_string(t) + " gives " + str(at(t)));
  for (std::int64_t t = 2; t <= 1000; t += 2)
    for (const auto& m : at(t))
      o.require(m.is_infinite() || *m.to_u64() % 2 == 0, "odd value at t=" + std::to_string(t));
  if (o.pass) o.detail = "t=1 {1,inf}; t=2 {2,inf}; even t<=1000 even-valued";
}

void self_similar_powers(Outcome& o) {
  std::uint64_t q = 1;
  for (unsigned k = 0; k <= 4; ++k, q *= 3) {
    const auto got = theorem3_multiplicity(k);
    o.require(got == with_inf({q}), "k=" + std::to_string(k) + " gives " + str(got));
  }
  if (o.pass) o.detail = "k=0..4";
}

void prime_time_formula(Outcome& o) {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  std::mt19937_64 rng(104);
  std::size_t evaluations = 0;
  for (int trial = 0; trial < 5; ++trial) {
    std::map<std::uint64_t, std::uint64_t> m;
    for (auto p : primes) m[p] = std::uniform_int_distribution<std::uint64_t>(1, p)(rng);
    const auto flow = theorem4_flow(m);
    const auto parts = oracle::prime_flow({m.begin(), m.end()});
    for (std::int64_t n = 1; n <= 10000; ++n) {
      std::set<std::uint64_t> formula;
      for (auto [p, mp] : m) formula.insert(n % static_cast<std::int64_t>(p) == 0 ? mp : 1);
      const auto got = gaussian_time_t_multiplicity(flow, Rational(n));
      const auto brute = with_inf(oracle::time_multiplicities(parts, static_cast<double>(n)));
      o.require(got == with_inf(formula), "n=" + std::to_string(n) + " formula mismatch " + str(got));
      o.require(got == brute, "n=" + std::to_string(n) + " oracle mismatch " + str(brute));
      ++evaluations;
      if (!o.pass) return;
    }
  }
  o.detail = std::to_string(evaluations) + " evaluations";
}

void single_prime_and_scan(Outcome& o) {
  int flows = 0;
  for (std::uint64_t p : {5, 7, 11})
    for (std::uint64_t m = 1; m < p; ++m) {
      const auto flow = theorem4_flow({{p, m}});
      const auto g1 = gaussian_time_t_multiplicity(flow, Rational(1));
      const auto gp = gaussian_time_t_multiplicity(flow, Rational(static_cast<std::int64_t>(p)));
      o.require(g1 == with_inf({1}), "p=" + std::to_string(p) + " m=" + std::to_string(m) + " G_1=" + str(g1));
      o.require(gp == with_inf({m}), "p=" + std::to_string(p) + " m=" + std::to_string(m) + " G_p=" + str(gp));
      ++flows;
    }

  std::map<std::uint64_t, std::uint64_t> mp;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) mp[p] = p - 1;
  const auto flow = theorem4_flow(mp);
  const auto parts = oracle::prime_flow({mp.begin(), mp.end()});
  const std::vector<std::uint64_t> values{2, 4, 6, 10, 12};
  std::mt19937_64 rng(105);
  for (int i = 0; i < 10; ++i) {
    std::set<std::uint64_t> target;
    while (target.empty())
      for (auto v : values)
        if (std::uniform_int_distribution<int>(0, 1)(rng)) target.insert(v);
    std::set<std::uint64_t> wanted = target;
    wanted.insert(1);
    const auto t = theorem4_scan(flow, target);
    o.require(t.has_value(), "no time for target " + str(with_inf(target)));
    if (!t) continue;
    o.require(gaussian_time_t_multiplicity(flow, *t) == with_inf(wanted), "wrong set at t=" + t->to_string());
    // nothing smaller realizes the target
    for (std::int64_t n = 1; n < t->num(); ++n)
      if (oracle::time_multiplicities(parts, static_cast<double>(n)) == wanted) {
        o.require(false, "t=" + t->to_string() + " not minimal, n=" + std::to_string(n) + " also works");
        break;
      }
    o.notes.push_back("target " + str(with_inf(target)) + " -> t=" + t->to_string());
  }
  if (o.pass) o.detail = std::to_string(flows) + " single-prime flows; 10 targets located and minimal";
}

void ae_constancy(Outcome& o) {
  std::size_t checked = 0, exceptional = 0;
  for (const auto& flow : {theorem2_flow(), theorem4_flow({{2, 2}, {3, 3}, {5, 4}})}) {
    const auto generic = generic_multiplicity(flow);
    const auto list = exceptional_times(flow, Rational(0), Rational(10), 24);
    std::set<Rational> listed(list.begin(), list.end());
    for (std::int64_t b = 1; b <= 24; ++b)
      for (std::int64_t a = 1; a <= 10 * b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        const Rational t(a, b);
        const bool differs = gaussian_time_t_multiplicity(flow, t) != generic;
        o.require(differs == (listed.count(t) == 1),
                  "t=" + t.to_string() + (differs ? " differs but is not listed" : " is listed but generic"));
        ++checked;
      }
    exceptional += listed.size();
    for (const auto& t : listed) o.require(t.den() <= 24 && t > Rational(0) && t <= Rational(10), "out-of-range listing");
  }
  if (o.pass) o.detail = std::to_string(checked) + " times, " + std::to_string(exceptional) + " exceptional";
}

void oracle_equivalence(Outcome& o) {
  oracle::ExpressionGen gen(106);
  std::size_t eigenvalues = 0, nontrivial = 0;
  for (int i = 0; i < 200; ++i) {
    const auto e = gen.next();
    const auto sym = oracle::symbolic_set(e.symbolic);
    const auto num = gen.numeric_set(e);
    o.require(sym == num, "expression " + e.text);
    eigenvalues += e.numeric.phases.size();
    nontrivial += num.size() > 1 || *num.rbegin() > 1;
  }
  if (o.pass)
    o.detail = "200 expressions, " + std::to_string(eigenvalues) + " eigenvalues, " + std::to_string(nontrivial) +
               " with a multiplicity above 1";
}

void rank_one(Outcome& o) {
  const auto classic = classic_chacon();
  std::string naive = "l";
  std::uint64_t h = 1;
  for (unsigned s = 1; s <= 14; ++s) {
    naive = oracle::next_word(naive, {0, 1, 0});
    h = 3 * h + 1;
    const auto w = build_word(classic, s);
    o.require(w.length() == h && naive.size() == h, "height at stage " + std::to_string(s));
    o.require(w.to_string() == naive, "word at stage " + std::to_string(s));
  }

  const auto cr = weak_limit_check(classic, {10, 11, 12, 13, 14}, Rational(1, 2), 1.0);
  o.require(cr.spread <= 0.02, "classic r_h spread " + fixed(cr.spread));
  std::string rs;
  for (const auto& row : cr.rows) rs += (rs.empty() ? "" : " ") + fixed(row.r.to_double());
  o.notes.push_back("classic r_h(n), n=10..14 on stage " + std::to_string(cr.eval_stage) + ": " + rs +
                    " (spread " + fixed(cr.spread) + ")");

  const auto tr = weak_limit_check(two_adic_chacon(), {8, 9, 10, 11, 12, 13, 14}, Rational(1, 2), 0.05);
  o.require(tr.decreasing, "two-adic deviations not decreasing");
  o.require(tr.pass, "two-adic final deviation " + fixed(tr.rows.back().deviation));
  std::string ds;
  for (const auto& row : tr.rows) ds += (ds.empty() ? "" : " ") + fixed(row.deviation);
  o.notes.push_back("two-adic |r_h - 1/2|, n=8..14 on stage " + std::to_string(tr.eval_stage) + ": " + ds);
  if (o.pass) o.detail = "words exact to stage 14; spread " + fixed(cr.spread) + "; final " + fixed(tr.rows.back().deviation);
}

void riesz(Outcome& o) {
  const auto spec = default_riesz_spec();
  std::int64_t degree = 0;
  for (auto n : spec.frequencies) degree += n;
  const std::size_t N = std::size_t{1} << 23;
  o.require(degree + 50 < static_cast<std::int64_t>(N), "grid too small for exact quadrature");

  const oracle::UnitRoots roots(N);
  std::vector<double> f(N, 1.0);
  double worst_mass = 0;
  for (unsigned k = 0; k < spec.depth(); ++k) {
    const auto step = static_cast<std::size_t>(spec.frequencies[k]) % N;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < N; ++j) {
      f[j] *= 1 + spec.coefficients[k] * roots.cos(idx);
      idx += step;
      if (idx >= N) idx -= N;
    }
    worst_mass = std::max(worst_mass, std::abs(oracle::grid_mean(f) - 1.0));
  }
  o.require(worst_mass <= 1e-8, "density mass off by " + std::to_string(worst_mass));

  double worst_coeff = 0;
  for (std::int64_t n = -50; n <= 50; ++n)
    worst_coeff = std::max(worst_coeff, std::abs(oracle::grid_coefficient(f, n, roots) - fourier_coefficient(spec, n)));
  o.require(worst_coeff <= 1e-8, "coefficient error " + std::to_string(worst_coeff));
  f.clear();
  f.shrink_to_fit();

  const double z = 2 * std::numbers::pi / std::sqrt(7.0);
  const auto trend = affinity_trend(spec, z, 4, 14, std::size_t{1} << 18);
  bool monotone = true;
  std::string ts;
  for (std::size_t i = 0; i < trend.size(); ++i) {
    if (i > 0 && !(trend[i].affinity < trend[i - 1].affinity)) monotone = false;
    ts += (ts.empty() ? "" : " ") + fixed(trend[i].affinity);
  }
  o.require(monotone, "affinity not monotone at z=2pi/sqrt7");
  o.require(trend.back().affinity < 0.1, "final affinity " + fixed(trend.back().affinity));
  o.notes.push_back("affinity K=4..14, z=2pi/sqrt7: " + ts);

  const double golden = 2 * std::numbers::pi * (std::numbers::phi - 1);
  const auto g = affinity_trend(spec, golden, 4, 14, std::size_t{1} << 18);
  std::string gs;
  for (const auto& row : g) gs += (gs.empty() ? "" : " ") + fixed(row.affinity);
  o.notes.push_back("affinity K=4..14, z=2pi*(phi-1) (info only): " + gs);

  if (o.pass)
    o.detail = "coeff err " + sci(worst_coeff) + ", mass err " + sci(worst_mass) + ", final affinity " +
               fixed(trend.back().affinity);
}

}  // namespace

int main() {
  std::printf("specmult acceptance suite\n");
  criterion("rotation-family-exp", 5, rotation_family_exp);
  criterion("product-construction", 0, product_construction);
  criterion("two-component-flow", 0, two_component_flow);
  criterion("self-similar-powers", 0, self_similar_powers);
  criterion("prime-time-formula", 60, prime_time_formula);
  criterion("single-prime-and-scan", 0, single_prime_and_scan);
  criterion("ae-constancy", 0, ae_constancy);
  criterion("oracle-equivalence", 0, oracle_equivalence);
  criterion("rankone-numerics", 120, rank_one);
  criterion("riesz-numerics", 120, riesz);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
