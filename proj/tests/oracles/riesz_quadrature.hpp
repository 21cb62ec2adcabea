#pragma once
// Quadrature cross-checks for Riesz products: the density is sampled on an
// N-point grid and integrated against e^{-inθ} with compensated sums. For a
// trigonometric polynomial of degree D the N-point rule is exact for
// coefficients with |n| + D < N.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

struct Neumaier {
  double s = 0, c = 0;
  void add(double x) {
    const double t = s + x;
    c += std::fabs(s) >= std::fabs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

// Samples ∏_{k<K} (1 + a_k cos(n_k θ_j + φ_k)) at θ_j = 2πj/N.
inline std::vector<double> sample_density(const std::vector<std::int64_t>& n, const std::vector<double>& a,
                                          const std::vector<double>& phi, unsigned K, std::size_t N) {
  std::vector<double> cos_table(N), f(N, 1.0);
  for (std::size_t j = 0; j < N; ++j) cos_table[j] = std::cos(2 * std::numbers::pi * static_cast<double>(j) / N);
  for (unsigned k = 0; k < K; ++k) {
    const auto step = static_cast<std::uint64_t>(n[k]) % N;
    if (phi[k] == 0.0) {
      std::uint64_t idx = 0;
      for (std::size_t j = 0; j < N; ++j) {
        f[j] *= 1 + a[k] * cos_table[idx];
        idx += step;
        if (idx >= N) idx -= N;
      }
    } else {
      for (std::size_t j = 0; j < N; ++j)
        f[j] *= 1 + a[k] * std::cos(static_cast<double>(n[k]) * 2 * std::numbers::pi * static_cast<double>(j) / N + phi[k]);
    }
  }
  return f;
}

inline double grid_mean(const std::vector<double>& f) {
  Neumaier s;
  for (double v : f) s.add(v);
  return s.value() / static_cast<double>(f.size());
}

inline std::complex<double> grid_coefficient(const std::vector<double>& f, std::int64_t n) {
  const std::size_t N = f.size();
  const std::uint64_t step = static_cast<std::uint64_t>(((n % static_cast<std::int64_t>(N)) + static_cast<std::int64_t>(N)) %
                                                        static_cast<std::int64_t>(N));
  Neumaier re, im;
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < N; ++j) {
    const double angle = 2 * std::numbers::pi * static_cast<double>(idx) / static_cast<double>(N);
    re.add(f[j] * std::cos(angle));
    im.add(-f[j] * std::sin(angle));
    idx += step;
    if (idx >= N) idx -= N;
  }
  return {re.value() / static_cast<double>(N), im.value() / static_cast<double>(N)};
}

// cos(2πj/N) and sin(2πj/N) from a quarter-wave table; N must be a multiple
// of 4. Keeps large grids cheap without a trig call per sample.
class UnitRoots {
 public:
  explicit UnitRoots(std::size_t N) : N_(N), q_(N / 4), quarter_(N / 4 + 1) {
    for (std::size_t j = 0; j <= q_; ++j) quarter_[j] = std::cos(2 * std::numbers::pi * static_cast<double>(j) / N);
  }
  double cos(std::size_t j) const {
    if (j <= q_) return quarter_[j];
    if (j <= 2 * q_) return -quarter_[2 * q_ - j];
    if (j <= 3 * q_) return -quarter_[j - 2 * q_];
    return quarter_[N_ - j];
  }
  double sin(std::size_t j) const { return cos(j >= q_ ? j - q_ : j + 3 * q_); }

 private:
  std::size_t N_, q_;
  std::vector<double> quarter_;
};

inline std::complex<double> grid_coefficient(const std::vector<double>& f, std::int64_t n, const UnitRoots& roots) {
  const auto N = static_cast<std::int64_t>(f.size());
  const auto step = static_cast<std::size_t>(((n % N) + N) % N);
  Neumaier re, im;
  std::size_t idx = 0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    re.add(f[j] * roots.cos(idx));
    im.add(-f[j] * roots.sin(idx));
    idx += step;
    if (idx >= f.size()) idx -= f.size();
  }
  return {re.value() / static_cast<double>(N), im.value() / static_cast<double>(N)};
}

// Σ_{n≠0} |μ̂(n)|^p = ∏ (1 + 2 (a_k/2)^p) − 1.
inline double tail_closed_form(const std::vector<double>& a, double p) {
  double prod = 1;
  for (double x : a) prod *= 1 + 2 * std::pow(x / 2, p);
  return prod - 1;
}

// Σ over every digit vector, no pruning.
inline double tail_direct(const std::vector<std::int64_t>& n, const std::vector<double>& a, double p, std::int64_t N) {
  Neumaier s;
  const std::size_t K = n.size();
  std::vector<int> eps(K, -1);
  for (;;) {
    std::int64_t m = 0;
    double w = 1;
    for (std::size_t k = 0; k < K; ++k)
      if (eps[k]) {
        m += eps[k] * n[k];
        w *= std::pow(a[k] / 2, p);
      }
    if (m > N || m < -N) s.add(w);
    std::size_t k = 0;
    while (k < K && eps[k] == 1) eps[k++] = -1;
    if (k == K) break;
    ++eps[k];
  }
  return s.value();
}

}  // namespace oracle
