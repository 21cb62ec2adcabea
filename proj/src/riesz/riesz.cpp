#include "specmult/riesz.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "specmult/error.hpp"

namespace specmult {

void StableSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x))
    comp_ += (sum_ - t) + x;
  else
    comp_ += (x - t) + sum_;
  sum_ = t;
}

void RieszSpec::validate() const {
  if (coefficients.size() != frequencies.size() || phases.size() != frequencies.size())
    raise(ErrorKind::InvalidArgument, "frequencies, coefficients and phases must have equal length");
  std::int64_t total = 0;
  for (std::size_t k = 0; k < frequencies.size(); ++k) {
    const auto n = frequencies[k];
    if (n <= 0) raise(ErrorKind::InvalidArgument, "frequencies must be positive");
    if (k > 0 && n / 3 < frequencies[k - 1])
      raise(ErrorKind::InvalidArgument, "frequencies must satisfy n_{k+1} >= 3 n_k (index " + std::to_string(k) + ")");
    if (n > (std::int64_t{1} << 62) - total)
      raise(ErrorKind::InvalidArgument, "frequency sum exceeds 2^62");
    total += n;
    if (!(coefficients[k] > 0 && coefficients[k] <= 1))
      raise(ErrorKind::InvalidArgument, "coefficients must lie in (0, 1]");
    if (!(phases[k] >= 0 && phases[k] < 2 * std::numbers::pi))
      raise(ErrorKind::InvalidArgument, "phases must lie in [0, 2π)");
  }
}

RieszSpec default_riesz_spec() {
  RieszSpec s;
  std::int64_t n = 1;
  for (int k = 1; k <= 14; ++k) {
    n *= 3;
    s.frequencies.push_back(n);
    s.coefficients.push_back(1.0);
    s.phases.push_back(0.0);
  }
  return s;
}

std::complex<double> fourier_coefficient(const RieszSpec& spec, std::int64_t n) {
  return fourier_coefficient(spec, n, spec.depth());
}

std::complex<double> fourier_coefficient(const RieszSpec& spec, std::int64_t n, unsigned K) {
  spec.validate();
  if (K > spec.depth()) raise(ErrorKind::InvalidArgument, "K exceeds the spec depth");
  // Lacunarity puts the sum of all lower frequencies strictly below n_k / 2,
  // so the digit at k is forced by whether |m| exceeds n_k / 2.
  std::complex<double> c = 1.0;
  std::int64_t m = n;
  for (unsigned k = K; k-- > 0;) {
    const std::int64_t nk = spec.frequencies[k];
    const double half = spec.coefficients[k] / 2;
    if (m > nk / 2) {
      m -= nk;
      c *= std::polar(half, spec.phases[k]);
    } else if (m < -(nk / 2)) {
      m += nk;
      c *= std::polar(half, -spec.phases[k]);
    }
  }
  return m == 0 ? c : std::complex<double>(0.0);
}

double partial_density(const RieszSpec& spec, double theta, unsigned K) {
  if (K > spec.depth()) raise(ErrorKind::InvalidArgument, "K exceeds the spec depth");
  double f = 1;
  for (unsigned k = 0; k < K; ++k)
    f *= 1 + spec.coefficients[k] * std::cos(static_cast<double>(spec.frequencies[k]) * theta + spec.phases[k]);
  return f;
}

namespace {

struct TailWalk {
  const RieszSpec& spec;
  std::int64_t N;
  std::vector<double> weight;      // (a_k/2)^p
  std::vector<double> subtree;     // ∏_{j<k} (1 + 2 weight_j)
  std::vector<std::int64_t> reach;  // Σ_{j<k} n_j
  StableSum sum;

  // Digits k-1..0 remain free; `s` is the sum fixed so far, `w` its weight.
  void walk(unsigned k, std::int64_t s, double w) {
    const std::int64_t lo = s - reach[k], hi = s + reach[k];
    if (lo > N || hi < -N) {
      sum.add(w * subtree[k]);
      return;
    }
    if (lo >= -N && hi <= N) return;
    if (k == 0) return;  // unreachable: reach[0] = 0 makes one of the above hold
    const std::int64_t nk = spec.frequencies[k - 1];
    walk(k - 1, s, w);
    walk(k - 1, s + nk, w * weight[k - 1]);
    walk(k - 1, s - nk, w * weight[k - 1]);
  }
};

}  // namespace

double coefficient_power_tail(const RieszSpec& spec, double p, std::int64_t N) {
  spec.validate();
  if (spec.depth() > kMaxEnumerationDepth)
    raise(ErrorKind::DepthTooLarge, "depth " + std::to_string(spec.depth()) + " exceeds the enumeration limit of " +
                                        std::to_string(kMaxEnumerationDepth));
  if (N < 0) raise(ErrorKind::InvalidArgument, "N must be nonnegative");
  TailWalk t{spec, N, {}, {1.0}, {0}, {}};
  for (unsigned k = 0; k < spec.depth(); ++k) {
    t.weight.push_back(std::pow(spec.coefficients[k] / 2, p));
    t.subtree.push_back(t.subtree.back() * (1 + 2 * t.weight.back()));
    t.reach.push_back(t.reach.back() + spec.frequencies[k]);
  }
  t.walk(spec.depth(), 0, 1.0);
  return t.sum.value();
}

double convolution_square_tail(const RieszSpec& spec, std::int64_t N) { return coefficient_power_tail(spec, 4, N); }

std::vector<AffinityRow> affinity_trend(const RieszSpec& spec, double z, unsigned k_min, unsigned k_max,
                                        std::size_t grid) {
  spec.validate();
  if (grid < 1024) raise(ErrorKind::InvalidArgument, "grid must be >= 1024");
  if (k_max > spec.depth()) raise(ErrorKind::InvalidArgument, "K exceeds the spec depth");
  if (k_min > k_max) raise(ErrorKind::InvalidArgument, "empty K range");
  const std::size_t rows = k_max - k_min + 1;
  std::vector<StableSum> cross(rows), mass_f(rows), mass_g(rows);
  for (std::size_t j = 0; j < grid; ++j) {
    const double theta = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid);
    double f = 1, g = 1;
    for (unsigned k = 0; k < k_max; ++k) {
      const double n = static_cast<double>(spec.frequencies[k]);
      f *= 1 + spec.coefficients[k] * std::cos(n * theta + spec.phases[k]);
      g *= 1 + spec.coefficients[k] * std::cos(n * (theta - z) + spec.phases[k]);
      if (k + 1 >= k_min) {
        const std::size_t r = k + 1 - k_min;
        cross[r].add(std::sqrt(f * g));
        mass_f[r].add(f);
        mass_g[r].add(g);
      }
    }
    if (k_min == 0) {
      cross[0].add(1);
      mass_f[0].add(1);
      mass_g[0].add(1);
    }
  }
  std::vector<AffinityRow> out;
  for (std::size_t r = 0; r < rows; ++r) {
    const double denom = std::sqrt(mass_f[r].value() * mass_g[r].value());
    out.push_back({static_cast<unsigned>(k_min + r), denom > 0 ? cross[r].value() / denom : 0.0});
  }
  return out;
}

double rotation_affinity(const RieszSpec& spec, double z, unsigned K, std::size_t grid) {
  return affinity_trend(spec, z, K, K, grid).front().affinity;
}

}  // namespace specmult
