#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace specmult {

// Riesz product ∏_k (1 + a_k cos(n_k θ + φ_k)) with n_{k+1} >= 3 n_k.
struct RieszSpec {
  std::vector<std::int64_t> frequencies;
  std::vector<double> coefficients;
  std::vector<double> phases;

  unsigned depth() const noexcept { return static_cast<unsigned>(frequencies.size()); }
  // Throws InvalidArgument on size mismatch, non-lacunary frequencies,
  // a_k outside (0,1], φ_k outside [0, 2π), or a frequency sum past 2^62.
  void validate() const;

  friend bool operator==(const RieszSpec&, const RieszSpec&) = default;
};

// n_k = 3^k for k = 1..14, a_k = 1, φ_k = 0.
RieszSpec default_riesz_spec();

inline constexpr unsigned kMaxEnumerationDepth = 20;

// Exact coefficient of the depth-K partial product (K = depth by default):
// the product of (a_k/2) e^{±iφ_k} over the nonzero digits of the unique
// {-1,0,1} expansion of n, or 0 when n has none.
std::complex<double> fourier_coefficient(const RieszSpec& spec, std::int64_t n);
std::complex<double> fourier_coefficient(const RieszSpec& spec, std::int64_t n, unsigned K);

double partial_density(const RieszSpec& spec, double theta, unsigned K);

// Σ |μ̂(n)|^p over representable n with |n| > N, by enumeration of digit
// vectors with subtrees summed in closed form once they lie entirely outside
// or inside [-N, N]. Throws DepthTooLarge past kMaxEnumerationDepth.
double coefficient_power_tail(const RieszSpec& spec, double p, std::int64_t N);
// Σ_{|n|>N} |μ̂(n)|⁴, the ℓ² tail of the coefficients of σ∗σ.
double convolution_square_tail(const RieszSpec& spec, std::int64_t N);

// Hellinger affinity of the depth-K density and its rotation by z, by
// midpoint-free quadrature on `grid` equally spaced angles, normalized by the
// grid masses so that z = 0 gives exactly 1. Throws InvalidArgument for
// grid < 2^10 or K > depth.
double rotation_affinity(const RieszSpec& spec, double z, unsigned K, std::size_t grid);

struct AffinityRow {
  unsigned K;
  double affinity;
};
// rotation_affinity for K = k_min..k_max in one pass over the grid.
std::vector<AffinityRow> affinity_trend(const RieszSpec& spec, double z, unsigned k_min, unsigned k_max,
                                        std::size_t grid);

// Compensated (Neumaier) running sum.
class StableSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

}  // namespace specmult
