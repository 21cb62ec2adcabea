#pragma once
// Random expressions over diagonal unitaries, evaluated twice: symbolically
// under the atomic toy profile and numerically on eigenvalue lists.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "diagonal_unitary.hpp"
#include "specmult/calculus.hpp"
#include "specmult/profiles.hpp"

namespace oracle {

struct Evaluated {
  specmult::SpectralType symbolic;
  Diagonal numeric;
  std::string text;
};

class ExpressionGen {
 public:
  ExpressionGen(std::uint64_t seed, std::size_t max_dim = 2500) : rng_(seed), max_dim_(max_dim) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& x : generator_value_) x = u(rng_);
  }

  const specmult::AxiomProfile& profile() const { return profile_; }

  // Retries until the eigenvalue count stays within max_dim.
  Evaluated next() {
    for (;;) {
      Evaluated e = expr(2);
      if (e.numeric.phases.size() <= max_dim_ && !e.numeric.phases.empty()) return e;
    }
  }

  std::set<std::uint64_t> numeric_set(const Evaluated& e) const { return multiplicities(e.numeric); }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  specmult::Phase random_phase(double& value) {
    static const std::int64_t dens[] = {1, 2, 3, 4, 6};
    const std::int64_t den = dens[pick(0, 4)];
    const std::int64_t num = pick(0, static_cast<int>(den) - 1);
    specmult::Phase ph = specmult::Phase::rational(specmult::Rational(num, den));
    value = static_cast<double>(num) / static_cast<double>(den);
    const int gens = pick(0, 2);
    for (int g = 0; g < gens; ++g) {
      const int idx = pick(1, 4);
      const int e = pick(0, 1) ? 1 : -1;
      ph = ph * specmult::Phase::generator(static_cast<std::uint32_t>(idx), e);
      value += e * generator_value_[idx - 1];
    }
    value = wrap(value);
    return ph;
  }

  Evaluated leaf() {
    const int d = pick(1, 5);
    std::vector<specmult::Term> terms;
    Evaluated out;
    out.text = "[";
    for (int i = 0; i < d; ++i) {
      double v = 0;
      const specmult::Phase ph = random_phase(v);
      const int m = pick(1, 3);
      terms.push_back({specmult::MeasureClass::singular("delta", ph), specmult::Multiplicity(m)});
      for (int c = 0; c < m; ++c) out.numeric.phases.push_back(v);
      out.text += (i ? " " : "") + ph.to_string() + ":" + std::to_string(m);
    }
    out.text += "]";
    out.symbolic = specmult::SpectralType::canonicalize(std::move(terms), profile_);
    return out;
  }

  Evaluated expr(int depth) {
    if (depth == 0) return leaf();
    switch (pick(0, 4)) {
      case 0:
        return leaf();
      case 1: {
        auto a = expr(depth - 1), b = expr(depth - 1);
        return {specmult::direct_sum(a.symbolic, b.symbolic, profile_), direct_sum(a.numeric, b.numeric),
                "(" + a.text + " + " + b.text + ")"};
      }
      case 2: {
        auto a = expr(depth - 1), b = expr(depth - 1);
        if (a.numeric.phases.size() * b.numeric.phases.size() > max_dim_) return a;
        return {specmult::tensor_product(a.symbolic, b.symbolic, profile_), tensor(a.numeric, b.numeric),
                "(" + a.text + " x " + b.text + ")"};
      }
      case 3: {
        auto a = expr(depth - 1);
        const unsigned n = static_cast<unsigned>(pick(1, 4));
        if (a.numeric.phases.size() > 12) return a;
        return {specmult::sym_power(a.symbolic, n, profile_), sym_power(a.numeric, n),
                "Sym^" + std::to_string(n) + a.text};
      }
      default: {
        auto a = expr(depth - 1);
        const std::uint64_t k = static_cast<std::uint64_t>(pick(1, 4));
        return {specmult::operator_power(a.symbolic, k, profile_), power(a.numeric, k),
                a.text + "^" + std::to_string(k)};
      }
    }
  }

  std::mt19937_64 rng_;
  std::size_t max_dim_;
  double generator_value_[4];
  specmult::AxiomProfile profile_ = specmult::atomic_profile();
};

inline std::set<std::uint64_t> symbolic_set(const specmult::SpectralType& t) {
  std::set<std::uint64_t> out;
  for (const auto& m : specmult::multiplicity_set(t)) out.insert(*m.to_u64());
  return out;
}

}  // namespace oracle
