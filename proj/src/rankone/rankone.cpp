#include "specmult/rankone.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "specmult/error.hpp"

namespace specmult {

void RankOneRecipe::validate() const {
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i].cuts < 2) raise(ErrorKind::InvalidArgument, "stage " + std::to_string(i + 1) + ": cuts must be >= 2");
    if (prefix[i].spacers.size() != prefix[i].cuts)
      raise(ErrorKind::InvalidArgument, "stage " + std::to_string(i + 1) + ": need one spacer count per column");
  }
  if (cuts < 2) raise(ErrorKind::InvalidArgument, "cuts must be >= 2");
  if (base_spacers.size() != cuts) raise(ErrorKind::InvalidArgument, "base_spacers needs one entry per column");
  if (!height_fraction.empty() && height_fraction.size() != cuts)
    raise(ErrorKind::InvalidArgument, "height_fraction needs one entry per column");
  for (const auto& f : height_fraction)
    if (f < Rational(0)) raise(ErrorKind::InvalidArgument, "height_fraction entries must be nonnegative");
}

RankOneStage RankOneRecipe::stage(unsigned n, std::uint64_t previous_height) const {
  if (n == 0) raise(ErrorKind::InvalidArgument, "stages are numbered from 1");
  if (n <= prefix.size()) return prefix[n - 1];
  RankOneStage s{cuts, base_spacers};
  for (std::size_t j = 0; j < height_fraction.size(); ++j) {
    const auto& f = height_fraction[j];
    const unsigned __int128 extra = static_cast<unsigned __int128>(previous_height) * static_cast<std::uint64_t>(f.num()) /
                                    static_cast<std::uint64_t>(f.den());
    if (extra > std::numeric_limits<std::uint64_t>::max() - s.spacers[j])
      raise(ErrorKind::BudgetExceeded, "spacer count overflows at stage " + std::to_string(n));
    s.spacers[j] += static_cast<std::uint64_t>(extra);
  }
  return s;
}

RankOneRecipe classic_chacon() {
  RankOneRecipe r;
  r.name = "classic-chacon";
  r.cuts = 3;
  r.base_spacers = {0, 1, 0};
  return r;
}

RankOneRecipe two_adic_chacon() {
  RankOneRecipe r;
  r.name = "two-adic-chacon";
  r.cuts = 2;
  r.base_spacers = {0, 0};
  r.height_fraction = {Rational(0), Rational(1, 3)};
  return r;
}

RankOneRecipe preset_recipe(const std::string& name) {
  if (name == "classic-chacon" || name == "classic") return classic_chacon();
  if (name == "two-adic-chacon" || name == "two-adic") return two_adic_chacon();
  raise(ErrorKind::InvalidArgument, "unknown preset '" + name + "' (classic-chacon, two-adic-chacon)");
}

std::vector<std::uint64_t> tower_heights(const RankOneRecipe& recipe, unsigned max_stage, std::uint64_t budget) {
  recipe.validate();
  std::vector<std::uint64_t> h{1};
  for (unsigned n = 1; n <= max_stage; ++n) {
    const RankOneStage s = recipe.stage(n, h.back());
    unsigned __int128 next = static_cast<unsigned __int128>(h.back()) * s.cuts;
    for (const auto x : s.spacers) next += x;
    if (next > budget)
      raise(ErrorKind::BudgetExceeded, "stage " + std::to_string(n) + " word exceeds the budget of " +
                                           std::to_string(budget) + " symbols");
    h.push_back(static_cast<std::uint64_t>(next));
  }
  return h;
}

TowerWord TowerWord::from_symbols(const std::string& symbols) {
  TowerWord w;
  w.bits_.assign((symbols.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i] == 'l') {
      w.bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
      ++w.levels_;
    } else if (symbols[i] != 's') {
      raise(ErrorKind::Parse, "tower symbols are 'l' and 's'");
    }
  }
  w.length_ = symbols.size();
  return w;
}

void TowerWord::append_spacers(std::uint64_t n) { length_ += n; }

// Appends a copy of the first n symbols. The source range lies below every
// written position, so the copy can read from the word itself.
void TowerWord::append_prefix(std::uint64_t n) {
  const std::uint64_t words = (n + 63) / 64;
  const std::uint64_t base = length_ >> 6;
  const unsigned shift = length_ & 63;
  for (std::uint64_t i = 0; i < words; ++i) {
    std::uint64_t src = bits_[i];
    if (i == words - 1 && (n & 63)) src &= (std::uint64_t{1} << (n & 63)) - 1;
    bits_[base + i] |= src << shift;
    if (shift && base + i + 1 < bits_.size()) bits_[base + i + 1] |= src >> (64 - shift);
  }
  length_ += n;
}

TowerWord build_word(const RankOneRecipe& recipe, unsigned stage, std::uint64_t budget) {
  const auto h = tower_heights(recipe, stage, budget);
  TowerWord w;
  w.bits_.assign((h.back() + 63) / 64, 0);
  w.bits_[0] = 1;
  w.length_ = 1;
  w.levels_ = 1;
  for (unsigned n = 1; n <= stage; ++n) {
    const RankOneStage s = recipe.stage(n, w.length_);
    const std::uint64_t prev = w.length_;
    // The first column is already in place.
    w.append_spacers(s.spacers[0]);
    for (unsigned j = 1; j < s.cuts; ++j) {
      w.append_prefix(prev);
      w.append_spacers(s.spacers[j]);
    }
    w.levels_ *= s.cuts;
    w.stage_ = n;
  }
  return w;
}

std::uint64_t TowerWord::overlap(std::uint64_t k) const {
  if (k >= length_) return 0;
  const std::uint64_t n = length_ - k;
  const std::uint64_t q = k >> 6;
  const unsigned r = k & 63;
  const std::uint64_t words = (n + 63) / 64;
  std::uint64_t count = 0;
  for (std::uint64_t j = 0; j < words; ++j) {
    std::uint64_t b = bits_[j + q] >> r;
    if (r && j + q + 1 < bits_.size()) b |= bits_[j + q + 1] << (64 - r);
    count += static_cast<std::uint64_t>(std::popcount(bits_[j] & b));
  }
  return count;
}

TowerWord TowerWord::reversed() const {
  TowerWord w;
  w.bits_.assign(bits_.size(), 0);
  w.length_ = length_;
  w.levels_ = levels_;
  w.stage_ = stage_;
  for (std::uint64_t i = 0; i < length_; ++i)
    if (level_at(i)) {
      const std::uint64_t j = length_ - 1 - i;
      w.bits_[j >> 6] |= std::uint64_t{1} << (j & 63);
    }
  return w;
}

std::string TowerWord::to_string() const {
  std::string s(length_, 's');
  for (std::uint64_t i = 0; i < length_; ++i)
    if (level_at(i)) s[i] = 'l';
  return s;
}

Rational autocorrelation(const TowerWord& word, std::uint64_t k) {
  if (k >= word.length())
    raise(ErrorKind::OutOfRange,
          "lag " + std::to_string(k) + " is outside a word of length " + std::to_string(word.length()));
  return Rational(static_cast<std::int64_t>(word.overlap(k)), static_cast<std::int64_t>(word.level_count()));
}

std::vector<Rational> correlation_sequence(const TowerWord& word, std::uint64_t K) {
  if (K >= word.length())
    raise(ErrorKind::OutOfRange,
          "K = " + std::to_string(K) + " needs a word longer than " + std::to_string(word.length()));
  std::vector<Rational> r;
  r.reserve(K + 1);
  for (std::uint64_t k = 0; k <= K; ++k) r.push_back(autocorrelation(word, k));
  return r;
}

std::vector<Rational> correlation_sequence(const RankOneRecipe& recipe, unsigned stage, std::uint64_t K,
                                           std::uint64_t budget) {
  return correlation_sequence(build_word(recipe, stage, budget), K);
}

WeakLimitReport weak_limit_check(const RankOneRecipe& recipe, std::vector<unsigned> stages, const Rational& target,
                                 double tolerance, std::optional<unsigned> eval_stage, std::uint64_t budget) {
  if (stages.empty()) raise(ErrorKind::InvalidArgument, "no stages requested");
  if (!std::is_sorted(stages.begin(), stages.end()) ||
      std::adjacent_find(stages.begin(), stages.end()) != stages.end())
    raise(ErrorKind::InvalidArgument, "stages must be strictly ascending");
  if (tolerance < 0) raise(ErrorKind::InvalidArgument, "tolerance must be nonnegative");

  unsigned eval = 0;
  if (eval_stage) {
    eval = *eval_stage;
  } else {
    // Heights grow at least geometrically, so this terminates or hits the budget.
    eval = stages.back() + 1;
    for (;;) {
      const auto h = tower_heights(recipe, eval, budget);
      if (h[eval] / 64 >= h[stages.back()]) break;
      ++eval;
    }
  }
  const TowerWord word = build_word(recipe, eval, budget);
  const auto heights = tower_heights(recipe, std::max(eval, stages.back()), budget);

  WeakLimitReport rep;
  rep.eval_stage = eval;
  rep.target = target;
  rep.tolerance = tolerance;
  for (const auto n : stages) {
    const Rational r = autocorrelation(word, heights[n]);
    rep.rows.push_back({n, heights[n], r, std::fabs((r - target).to_double())});
  }
  rep.pass = rep.rows.back().deviation <= tolerance;
  rep.decreasing = true;
  double lo = rep.rows.front().r.to_double(), hi = lo;
  for (std::size_t i = 1; i < rep.rows.size(); ++i) {
    if (!(rep.rows[i].deviation < rep.rows[i - 1].deviation)) rep.decreasing = false;
    lo = std::min(lo, rep.rows[i].r.to_double());
    hi = std::max(hi, rep.rows[i].r.to_double());
  }
  rep.spread = hi - lo;
  return rep;
}

double DensityTable::max_min_ratio() const {
  if (density.empty()) return 0;
  const auto [lo, hi] = std::minmax_element(density.begin(), density.end());
  if (*lo <= 0) return std::numeric_limits<double>::infinity();
  return *hi / *lo;
}

DensityTable spectral_estimate(const std::vector<Rational>& seq, std::size_t resolution) {
  if (resolution < 16) raise(ErrorKind::InvalidArgument, "resolution must be >= 16");
  if (seq.size() < resolution)
    raise(ErrorKind::InsufficientData, "need " + std::to_string(resolution) + " lags, have " +
                                           std::to_string(seq.size()));
  const std::size_t N = resolution;
  std::vector<double> cos_table(N);
  for (std::size_t j = 0; j < N; ++j) cos_table[j] = std::cos(2 * std::numbers::pi * static_cast<double>(j) / N);
  std::vector<double> w(N);
  for (std::size_t k = 1; k < N; ++k)
    w[k] = 2.0 * (1.0 - static_cast<double>(k) / N) * seq[k].to_double();

  DensityTable out;
  out.theta.resize(N);
  out.density.resize(N);
  for (std::size_t j = 0; j < N; ++j) {
    double f = seq[0].to_double();
    std::size_t idx = 0;
    for (std::size_t k = 1; k < N; ++k) {
      idx += j;
      if (idx >= N) idx -= N;
      f += w[k] * cos_table[idx];
    }
    out.theta[j] = 2 * std::numbers::pi * static_cast<double>(j) / N;
    out.density[j] = std::max(f, 0.0);
  }
  return out;
}

}  // namespace specmult
