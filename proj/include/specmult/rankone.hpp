#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specmult/rational.hpp"

namespace specmult {

// One cutting-and-stacking step: the tower is cut into `cuts` columns and
// spacers[j] spacer levels are put on top of column j before stacking.
struct RankOneStage {
  unsigned cuts = 2;
  std::vector<std::uint64_t> spacers;

  friend bool operator==(const RankOneStage&, const RankOneStage&) = default;
};

// Stages 1..prefix.size() come from `prefix`; every later stage n uses
// `cuts` columns with spacer counts
//   base_spacers[j] + floor(height_fraction[j] * h_{n-1}).
// An empty height_fraction means all zero.
struct RankOneRecipe {
  std::string name = "custom";
  std::vector<RankOneStage> prefix;
  unsigned cuts = 3;
  std::vector<std::uint64_t> base_spacers{0, 1, 0};
  std::vector<Rational> height_fraction;

  void validate() const;
  RankOneStage stage(unsigned n, std::uint64_t previous_height) const;

  friend bool operator==(const RankOneRecipe&, const RankOneRecipe&) = default;
};

// cuts = 3, spacers [0,1,0]: heights 1, 4, 13, 40, ...
RankOneRecipe classic_chacon();
// cuts = 2, spacers [0, floor(h/3)].
RankOneRecipe two_adic_chacon();
// "classic-chacon" / "classic", "two-adic-chacon" / "two-adic".
RankOneRecipe preset_recipe(const std::string& name);

inline constexpr std::uint64_t kDefaultBitBudget = std::uint64_t{1} << 32;

// Tower words store one bit per symbol, 1 = level of the stage-0 tower,
// 0 = spacer. Spacers count as levels of the next tower, so the height of the
// stage-n tower is the word length.
class TowerWord {
 public:
  TowerWord() = default;
  static TowerWord from_symbols(const std::string& symbols);  // 'l' / 's'

  std::uint64_t length() const noexcept { return length_; }
  std::uint64_t height() const noexcept { return length_; }
  std::uint64_t level_count() const noexcept { return levels_; }
  unsigned stage() const noexcept { return stage_; }
  bool level_at(std::uint64_t i) const { return (bits_.at(i >> 6) >> (i & 63)) & 1u; }

  // Positions i with both i and i + k level symbols.
  std::uint64_t overlap(std::uint64_t k) const;
  TowerWord reversed() const;
  std::string to_string() const;

 private:
  friend TowerWord build_word(const RankOneRecipe&, unsigned, std::uint64_t);
  void append_prefix(std::uint64_t n);
  void append_spacers(std::uint64_t n);

  std::vector<std::uint64_t> bits_;
  std::uint64_t length_ = 0;
  std::uint64_t levels_ = 0;
  unsigned stage_ = 0;
};

// h_0..h_max_stage. Throws BudgetExceeded once a height passes `budget`.
std::vector<std::uint64_t> tower_heights(const RankOneRecipe& recipe, unsigned max_stage,
                                         std::uint64_t budget = kDefaultBitBudget);

TowerWord build_word(const RankOneRecipe& recipe, unsigned stage, std::uint64_t budget = kDefaultBitBudget);

// overlap(k) / level_count, exact. Throws OutOfRange unless k < length.
Rational autocorrelation(const TowerWord& word, std::uint64_t k);

// r_0..r_K.
std::vector<Rational> correlation_sequence(const TowerWord& word, std::uint64_t K);
std::vector<Rational> correlation_sequence(const RankOneRecipe& recipe, unsigned stage, std::uint64_t K,
                                           std::uint64_t budget = kDefaultBitBudget);

struct WeakLimitRow {
  unsigned stage;
  std::uint64_t height;
  Rational r;
  double deviation;  // |r - target|
};

struct WeakLimitReport {
  unsigned eval_stage = 0;
  Rational target;
  double tolerance = 0;
  std::vector<WeakLimitRow> rows;
  bool pass = false;        // last row within tolerance
  bool decreasing = false;  // deviations strictly decreasing
  double spread = 0;        // max r - min r over the rows
};

// Evaluates r_{h_n} for the listed stages on the stage-`eval_stage` word.
// Without an explicit eval stage the smallest stage whose height is at least
// 64 times the last requested height is used, which keeps the truncation
// bias of the finite word (about h_n / h_eval) below 1/64.
WeakLimitReport weak_limit_check(const RankOneRecipe& recipe, std::vector<unsigned> stages, const Rational& target,
                                 double tolerance, std::optional<unsigned> eval_stage = std::nullopt,
                                 std::uint64_t budget = kDefaultBitBudget);

struct DensityTable {
  std::vector<double> theta;
  std::vector<double> density;

  double max_min_ratio() const;
};

// Fejér-windowed inversion of r_0..r_{resolution-1} on `resolution` equally
// spaced angles in [0, 2π). The window keeps the estimate nonnegative and its
// grid mean equals r_0. Throws InvalidArgument for resolution < 16 and
// InsufficientData when fewer than `resolution` lags are available.
DensityTable spectral_estimate(const std::vector<Rational>& seq, std::size_t resolution);

}  // namespace specmult
