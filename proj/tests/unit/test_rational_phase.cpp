#include <doctest.h>

#include <random>

#include "specmult/error.hpp"
#include "specmult/multiplicity.hpp"
#include "specmult/phase.hpp"
#include "specmult/rational.hpp"

using namespace specmult;

TEST_CASE("rationals stay reduced with positive denominators") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).den() == 2);
  CHECK(Rational(7, 3).frac() == Rational(1, 3));
  CHECK(Rational(-1, 3).frac() == Rational(2, 3));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational::parse("1/x"), Error);
}

TEST_CASE("rational overflow is an error, never silent") {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2 + 1);
  try {
    (void)(big * Rational(4));
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
}

TEST_CASE("phase text round-trips") {
  for (const char* s : {"1", "1/2", "g1", "1/3*g1^2*g4^-1", "g7^-3"}) CHECK(Phase::parse(s).to_string() == s);
  CHECK(Phase::rational(Rational(5, 4)) == Phase::rational(Rational(1, 4)));
}

namespace {

Phase random_phase(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den(1, 12), gen(1, 5), exp(-3, 3), count(0, 3);
  const int d = den(rng);
  Phase p = Phase::rational(Rational(std::uniform_int_distribution<int>(0, d - 1)(rng), d));
  for (int i = count(rng); i > 0; --i) p = p * Phase::generator(static_cast<std::uint32_t>(gen(rng)), exp(rng));
  return p;
}

}  // namespace

TEST_CASE("phases form an abelian group") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Phase a = random_phase(rng), b = random_phase(rng), c = random_phase(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * Phase::identity() == a);
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(-2) == a.inverse() * a.inverse());
    CHECK(a.rational_part() >= Rational(0));
    CHECK(a.rational_part() < Rational(1));
    for (const auto& [g, e] : a.generic_part()) CHECK(e != 0);
  }
}

TEST_CASE("multiplicities saturate at infinity") {
  const Multiplicity inf = Multiplicity::infinity();
  CHECK((inf + Multiplicity(5)).is_infinite());
  CHECK((inf * Multiplicity(2)).is_infinite());
  CHECK((inf * Multiplicity(0)).is_zero());
  CHECK(Multiplicity(2) + Multiplicity(3) == Multiplicity(5));
  CHECK(Multiplicity(7) < inf);
  // products beyond 64 bits stay exact
  Multiplicity m(1);
  for (int i = 0; i < 50; ++i) m = m * Multiplicity(1000);
  CHECK_FALSE(m.to_u64().has_value());
  CHECK(m.to_string() == "1" + std::string(150, '0'));
  CHECK(multiset_count(Multiplicity(3), 2) == Multiplicity(6));
  CHECK(multiset_count(inf, 2).is_infinite());
  CHECK(format_set({Multiplicity(3), inf, Multiplicity(1)}) == "{1,3,∞}");
  CHECK(format_set({Multiplicity(3), inf}, true) == "{3,inf}");
  CHECK(Multiplicity::parse("inf").is_infinite());
}
