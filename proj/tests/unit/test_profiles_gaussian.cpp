#include <doctest.h>

#include <random>

#include "specmult/calculus.hpp"
#include "specmult/error.hpp"
#include "specmult/gaussian.hpp"
#include "specmult/profiles.hpp"

using namespace specmult;

namespace {

MultiplicitySet mset(std::initializer_list<std::uint64_t> xs, bool inf) {
  MultiplicitySet s;
  for (auto x : xs) s.insert(Multiplicity(x));
  if (inf) s.insert(Multiplicity::infinity());
  return s;
}

std::set<std::uint64_t> random_set(std::mt19937_64& rng, std::uint64_t hi) {
  std::set<std::uint64_t> m;
  const int n = std::uniform_int_distribution<int>(1, 6)(rng);
  while (static_cast<int>(m.size()) < n) m.insert(std::uniform_int_distribution<std::uint64_t>(1, hi)(rng));
  return m;
}

MultiplicitySet expected(const std::set<std::uint64_t>& m) {
  MultiplicitySet s{Multiplicity::infinity()};
  for (auto x : m) s.insert(Multiplicity(x));
  return s;
}

}  // namespace

TEST_CASE("rotation families") {
  const auto v = build_rotation_family({1, 3});
  REQUIRE(v.size() == 2);
  CHECK(v.terms()[0].cls.phase == Phase::generator(1));
  CHECK(v.terms()[0].mult == Multiplicity(1));
  CHECK(v.terms()[1].cls.phase == Phase::generator(3));
  CHECK(v.terms()[1].mult == Multiplicity(3));
  CHECK(multiplicity_set(build_rotation_family({2, 5, 7})) == mset({2, 5, 7}, false));
  CHECK_THROWS_AS(build_rotation_family({}), Error);
  CHECK_THROWS_AS(build_rotation_family({0, 1}), Error);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto m = random_set(rng, 40);
    const auto f = build_rotation_family(m);
    CHECK(f.size() == m.size());
    std::set<std::uint64_t> seen;
    for (const auto& t : f.terms()) seen.insert(*t.mult.to_u64());
    CHECK(seen == m);
  }
}

TEST_CASE("built-in profiles") {
  const auto salem = salem_profile(), chacon = chacon_profile();
  CHECK(relate(MeasureClass::singular("sigma", {}, 2), MeasureClass::lebesgue(), salem) == RelationVerdict::Equivalent);
  CHECK(relate(MeasureClass::singular("sigma"), MeasureClass::singular("sigma", {}, 2), chacon) ==
        RelationVerdict::Disjoint);
  const auto ss = self_similar_profile(3);
  CHECK(operator_power(SpectralType::single(MeasureClass::singular("sigma"), Multiplicity(1), ss), 9, ss) ==
        SpectralType::single(MeasureClass::singular("sigma"), Multiplicity(9), ss));
  CHECK_THROWS_AS(self_similar_profile(1), Error);
  CHECK(builtin_profile("self-similar:3") == ss);
  CHECK(builtin_profile("salem") == salem);
  CHECK_THROWS_AS(builtin_profile("nope"), Error);
}

TEST_CASE("the salem rewrite is idempotent") {
  const auto salem = salem_profile();
  for (std::uint32_t level = 1; level <= 5; ++level)
    for (int gen = 0; gen < 3; ++gen) {
      const auto c = MeasureClass::singular("sigma", gen ? Phase::generator(gen) : Phase{}, level);
      const auto once = canonical_class(c, salem);
      CHECK(canonical_class(once, salem) == once);
      CHECK(once.is_lebesgue() == (level >= 2));
    }
}

TEST_CASE("fock exponential examples") {
  const auto chacon = chacon_profile(), salem = salem_profile();
  const auto g1 = SpectralType::single(MeasureClass::singular("sigma", Phase::generator(1)), Multiplicity(1), chacon);

  const auto fc = exp_fock(g1, chacon);
  CHECK(fc.saturated);
  REQUIRE(fc.levels.size() == 2);
  CHECK(fc.level(1) == g1);
  REQUIRE(fc.level(2).size() == 1);
  CHECK(fc.level(2).terms()[0].cls.level == 2);
  CHECK(fc.level(2).terms()[0].mult.is_infinite());
  CHECK_FALSE(fc.trace.empty());

  const auto fs = exp_fock(g1, salem);
  CHECK(fs.saturated);
  REQUIRE(fs.levels.size() == 2);
  CHECK(fs.level(2).terms()[0].cls.is_lebesgue());
  CHECK(fs.level(2).terms()[0].mult.is_infinite());

  for (const auto& p : {chacon, salem}) {
    const auto v = build_rotation_family({1, 2});
    const auto f = exp_fock(v, p);
    CHECK(multiplicity_set(f.level(1)) == mset({1, 2}, false));
    for (const auto& t : f.level(2).terms()) CHECK(t.mult.is_infinite());
    // 3 simple copies give 6 multisets of size 2
    CHECK(sym_power_terms(v, 2, p).size() == 3);
    Multiplicity copies(0);
    for (const auto& t : sym_power_terms(v, 2, p)) copies += t.mult;
    CHECK(copies == Multiplicity(6));
  }

  CHECK(exp_multiplicity_set(build_rotation_family({1, 3}), chacon) == mset({1, 3}, true));
  CHECK(exp_multiplicity_set(build_rotation_family({1}), salem) == mset({1}, true));
  CHECK(exp_multiplicity_set(SpectralType::single(MeasureClass::singular("sigma"), Multiplicity::infinity(), chacon),
                             chacon) == mset({}, true));

  AxiomProfile none = chacon;
  none.regime = Regime::None;
  try {
    exp_fock(SpectralType::single(MeasureClass::singular("sigma"), Multiplicity(1), none), none);
    FAIL("expected refusal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoSaturationRule);
  }
}

TEST_CASE("gaussian types") {
  const auto chacon = chacon_profile();
  const auto g1 = SpectralType::single(MeasureClass::singular("sigma", Phase::generator(1)), Multiplicity(1), chacon);
  CHECK(fock_multiplicity_set(gaussian_type(g1, chacon), chacon) == mset({1}, true));

  const auto pm = SpectralType::canonicalize(
      {{MeasureClass::singular("sigma"), Multiplicity(1)},
       {MeasureClass::singular("sigma", Phase::rational(Rational(1, 2))), Multiplicity(1)}},
      chacon);
  CHECK(fock_multiplicity_set(gaussian_type(pm, chacon), chacon) == mset({1}, true));

  const auto two = SpectralType::single(MeasureClass::singular("sigma"), Multiplicity(2), chacon);
  const auto g = gaussian_type(two, chacon);
  CHECK(g.has_constants);
  CHECK(fock_multiplicity_set(g, chacon) == mset({2}, true));

  // gaussian_type and exp_fock agree from level 1 on
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    const auto v = build_rotation_family(random_set(rng, 12));
    for (const auto& p : {chacon, salem_profile()}) {
      const auto a = exp_fock(v, p), b = gaussian_type(v, p);
      CHECK(a.levels == b.levels);
      CHECK(a.saturated == b.saturated);
    }
  }
}

TEST_CASE("exp of a rotation family over random sets") {
  CHECK(theorem1_multiplicity({1, 3}, Regime::Chacon).multiplicities == mset({1, 3}, true));
  CHECK(theorem1_multiplicity({1}, Regime::Salem).multiplicities == mset({1}, true));
  CHECK(theorem1_multiplicity({4, 10, 17}, Regime::Chacon).multiplicities == mset({4, 10, 17}, true));
  CHECK(multiplicity_set(build_rotation_family({4, 10, 17})) == mset({4, 10, 17}, false));
  CHECK_FALSE(theorem1_multiplicity({2}, Regime::Salem).label.empty());
  CHECK_THROWS_AS(theorem1_multiplicity({}, Regime::Salem), Error);
  CHECK_THROWS_AS(theorem1_multiplicity({1}, Regime::None), Error);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const auto m = random_set(rng, 30);
    for (Regime r : {Regime::Salem, Regime::Chacon}) {
      const auto got = theorem1_multiplicity(m, r).multiplicities;
      CHECK(got == expected(m));
      CHECK(got.count(Multiplicity::infinity()) == 1);
    }
  }
}

TEST_CASE("product construction") {
  CHECK(theorem1_1_multiplicity({2}).multiplicities == mset({2}, true));
  CHECK(theorem1_1_multiplicity({1, 2}).multiplicities == mset({1, 2}, true));
  const auto r = theorem1_1_multiplicity({3, 5});
  CHECK(r.multiplicities == mset({3, 5}, true));
  // A ⊕ B ⊕ (A⊗B → Lebesgue)
  bool has_leb = false;
  for (const auto& t : r.koopman.terms()) has_leb |= t.cls.is_lebesgue() && t.mult.is_infinite();
  CHECK(has_leb);

  std::mt19937_64 rng(10);
  for (int i = 0; i < 20; ++i) {
    const auto m = random_set(rng, 25);
    CHECK(theorem1_1_multiplicity(m).multiplicities == expected(m));
  }
}
