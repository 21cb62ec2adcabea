#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../oracles/riesz_quadrature.hpp"
#include "specmult/error.hpp"
#include "specmult/riesz.hpp"

using namespace specmult;

namespace {

RieszSpec truncated(RieszSpec s, unsigned K) {
  s.frequencies.resize(K);
  s.coefficients.resize(K);
  s.phases.resize(K);
  return s;
}

RieszSpec random_spec(std::mt19937_64& rng, unsigned K) {
  RieszSpec s;
  std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
  std::uniform_real_distribution<double> a(0.05, 1.0), phi(0.0, 2 * std::numbers::pi);
  for (unsigned k = 0; k < K; ++k) {
    s.frequencies.push_back(n);
    s.coefficients.push_back(a(rng));
    s.phases.push_back(k % 2 ? phi(rng) : 0.0);
    n = 3 * n + std::uniform_int_distribution<std::int64_t>(0, 2)(rng);
  }
  return s;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("coefficient examples") {
  const auto s = default_riesz_spec();
  CHECK(s.depth() == 14);
  CHECK(s.frequencies.front() == 3);
  CHECK(fourier_coefficient(s, 0) == std::complex<double>(1, 0));
  CHECK(std::abs(fourier_coefficient(s, 2)) == 0.0);
  CHECK(std::abs(fourier_coefficient(s, 3) - std::complex<double>(0.5, 0)) < 1e-15);
  CHECK(std::abs(fourier_coefficient(s, 3 + 27) - std::complex<double>(0.25, 0)) < 1e-15);
  CHECK(std::abs(fourier_coefficient(s, 27 - 3)) == doctest::Approx(0.25));
  CHECK(std::abs(fourier_coefficient(s, 27, 2)) == 0.0);  // 27 = n_3 lies outside depth 2

  RieszSpec ph = truncated(s, 2);
  ph.phases = {0.3, 1.1};
  const auto c = fourier_coefficient(ph, 9);
  CHECK(c.real() == doctest::Approx(0.5 * std::cos(1.1)));
  CHECK(c.imag() == doctest::Approx(0.5 * std::sin(1.1)));
  CHECK(std::abs(fourier_coefficient(ph, -9) - std::conj(c)) < 1e-15);
}

TEST_CASE("partial densities") {
  const auto s = default_riesz_spec();
  for (double th : {0.0, 0.4, 2.0, 5.9}) CHECK(partial_density(s, th, 0) == 1.0);
  CHECK(partial_density(s, 0.0, 1) == doctest::Approx(2.0));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 5; ++i) {
    const auto r = random_spec(rng, 8);
    const auto f = oracle::sample_density(r.frequencies, r.coefficients, r.phases, 8, 1u << 16);
    CHECK(std::abs(oracle::grid_mean(f) - 1.0) < 1e-8);
    for (std::size_t j = 0; j < f.size(); j += 997) {
      const double th = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(f.size());
      CHECK(partial_density(r, th, 8) == doctest::Approx(f[j]).epsilon(1e-9));
    }
  }
}

TEST_CASE("densities are nonnegative on the grid") {
  const auto s = default_riesz_spec();
  for (unsigned K : {1u, 5u, 10u, 14u})
    for (std::size_t j = 0; j < 4096; ++j)
      CHECK(partial_density(s, 2 * std::numbers::pi * static_cast<double>(j) / 4096, K) >= 0.0);
}

TEST_CASE("exact coefficients agree with quadrature on small specs") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 4; ++i) {
    const auto r = random_spec(rng, 7);
    std::int64_t degree = 0;
    for (auto n : r.frequencies) degree += n;
    std::size_t N = 1;
    while (static_cast<std::int64_t>(N) <= 2 * degree) N <<= 1;  // exact up to |n| <= degree
    const auto f = oracle::sample_density(r.frequencies, r.coefficients, r.phases, r.depth(), N);
    for (std::int64_t n = -50; n <= 50; ++n) CHECK(std::abs(oracle::grid_coefficient(f, n) - fourier_coefficient(r, n)) < 1e-8);
    for (std::size_t k = 0; k < r.depth(); ++k)
      CHECK(std::abs(oracle::grid_coefficient(f, r.frequencies[k]) - fourier_coefficient(r, r.frequencies[k])) < 1e-8);
  }
}

TEST_CASE("coefficient tails") {
  RieszSpec empty;
  CHECK(coefficient_power_tail(empty, 4, 1) == 0.0);

  RieszSpec inv;
  for (unsigned k = 1; k <= 12; ++k) {
    inv.frequencies.push_back(static_cast<std::int64_t>(std::pow(3.0, k)));
    inv.coefficients.push_back(1 / std::sqrt(static_cast<double>(k)));
    inv.phases.push_back(0);
  }
  CHECK(convolution_square_tail(inv, 0) == doctest::Approx(oracle::tail_closed_form(inv.coefficients, 4)).epsilon(1e-12));
  for (std::int64_t N : {0, 1, 10, 100, 5000, 200000})
    CHECK(convolution_square_tail(inv, N) ==
          doctest::Approx(oracle::tail_direct(inv.frequencies, inv.coefficients, 4, N)).epsilon(1e-12));

  const auto ones = truncated(default_riesz_spec(), 12);
  CHECK(convolution_square_tail(ones, 0) > convolution_square_tail(inv, 0));
  CHECK(convolution_square_tail(ones, 1) > convolution_square_tail(inv, 1));

  std::mt19937_64 rng(33);
  for (int i = 0; i < 10; ++i) {
    const auto r = random_spec(rng, 9);
    const double p = std::uniform_real_distribution<double>(1.0, 4.0)(rng);
    const std::int64_t N = std::uniform_int_distribution<std::int64_t>(0, 3000)(rng);
    CHECK(coefficient_power_tail(r, p, N) ==
          doctest::Approx(oracle::tail_direct(r.frequencies, r.coefficients, p, N)).epsilon(1e-12));
  }
}

TEST_CASE("the l2 coefficient tail grows with depth") {
  RieszSpec s;
  double prev = -1;
  std::int64_t n = 3;
  for (unsigned K = 1; K <= 16; ++K, n *= 3) {
    s.frequencies.push_back(n);
    s.coefficients.push_back(1);
    s.phases.push_back(0);
    if (K < 4) continue;
    const double t = coefficient_power_tail(s, 2, 0);
    CHECK(t == doctest::Approx(std::pow(1.5, K) - 1));
    CHECK(t > prev);
    prev = t;
  }
}

TEST_CASE("depth limit") {
  RieszSpec s;
  std::int64_t n = 1;
  for (unsigned K = 0; K < 21; ++K, n *= 3) {
    s.frequencies.push_back(n);
    s.coefficients.push_back(1);
    s.phases.push_back(0);
  }
  CHECK(kind_of([&] { coefficient_power_tail(s, 2, 1); }) == ErrorKind::DepthTooLarge);
  CHECK_NOTHROW(coefficient_power_tail(truncated(s, 20), 2, 1000000));
}

TEST_CASE("spec validation") {
  auto s = default_riesz_spec();
  s.frequencies[3] = s.frequencies[2] * 2;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::InvalidArgument);
  s = default_riesz_spec();
  s.coefficients[0] = 1.5;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::InvalidArgument);
  s = default_riesz_spec();
  s.phases[0] = 7;
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::InvalidArgument);
  s = default_riesz_spec();
  s.phases.pop_back();
  CHECK(kind_of([&] { s.validate(); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("rotation affinity") {
  const auto s = default_riesz_spec();
  CHECK(rotation_affinity(s, 0.0, 10, 1u << 14) == doctest::Approx(1.0).epsilon(1e-14));
  std::mt19937_64 rng(34);
  for (int i = 0; i < 10; ++i) {
    const double z = std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng);
    const double a = rotation_affinity(s, z, 8, 1u << 14);
    CHECK(a >= 0.0);
    CHECK(a <= 1.0 + 1e-12);
  }
  const auto trend = affinity_trend(s, 2 * std::numbers::pi / std::sqrt(7.0), 4, 10, 1u << 16);
  REQUIRE(trend.size() == 7);
  for (std::size_t i = 1; i < trend.size(); ++i) CHECK(trend[i].affinity < trend[i - 1].affinity);
  CHECK(kind_of([&] { rotation_affinity(s, 1.0, 15, 4096); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { rotation_affinity(s, 1.0, 4, 512); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("compensated sums") {
  StableSum s;
  s.add(1e16);
  for (int i = 0; i < 1000; ++i) s.add(1.0);
  s.add(-1e16);
  CHECK(s.value() == 1000.0);
}
