#pragma once

// Shared scenarios and independent reference computations for the test suites.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "gzak/action.hpp"
#include "gzak/group.hpp"
#include "gzak/translation.hpp"
#include "gzak/zak.hpp"

namespace gzak::test {

/// Z_4 acting on Z_8 by x -> x + 2g, unit weights.
inline QuasiInvariantAction s1() {
  return QuasiInvariantAction::affine(FiniteAbelianGroup({4}), WeightedSpace::uniform(8), {2});
}

/// Z_2 acting on the points {1,2,3,4} (indices 0..3) with mu(x) = x and sigma_1(x) = 5 - x.
inline QuasiInvariantAction s2() {
  return QuasiInvariantAction(FiniteAbelianGroup({2}), WeightedSpace({1, 2, 3, 4}), {{0, 1, 2, 3}, {3, 2, 1, 0}});
}

/// Z_2 x Z_3 acting on Z_6 x Z_2 (12 points, non-uniform weights), a free
/// non-measure-preserving action built from an explicit table.
inline QuasiInvariantAction s4() {
  // points: (k, b) -> index 2k + b; generator (1,0) flips b with a weight jump,
  // generator (0,1) shifts k by 2.
  FiniteAbelianGroup group({2, 3});
  std::vector<double> weights(12);
  for (std::size_t k = 0; k < 6; ++k) {
    weights[2 * k] = 1.0 + 0.25 * static_cast<double>(k);
    weights[2 * k + 1] = 3.0 - 0.2 * static_cast<double>(k);
  }
  std::vector<std::vector<std::size_t>> table(group.order(), std::vector<std::size_t>(12));
  for (std::size_t g = 0; g < group.order(); ++g) {
    const Element e = group.element(g);
    for (std::size_t k = 0; k < 6; ++k) {
      for (std::size_t b = 0; b < 2; ++b) {
        const std::size_t nk = (k + 2 * static_cast<std::size_t>(e[1])) % 6;
        const std::size_t nb = (b + static_cast<std::size_t>(e[0])) % 2;
        table[g][2 * k + b] = 2 * nk + nb;
      }
    }
  }
  return QuasiInvariantAction(group, WeightedSpace(weights), std::move(table));
}

inline TranslationScenario s3() {
  const std::vector<Element> gens{{3}};
  return build_scenario(FiniteAbelianGroup({12}), gens);
}

inline Eigen::VectorXcd delta(std::size_t n, std::size_t i) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  v[static_cast<Eigen::Index>(i)] = 1.0;
  return v;
}

/// The function whose S1 Zak transform is (1, 0) at alpha = 0 and zero elsewhere.
inline Eigen::VectorXcd psi_star() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
  for (std::size_t x : {0, 2, 4, 6}) v[x] = 0.25;
  return v;
}

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  Eigen::VectorXcd function(std::size_t n) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = Complex(normal_(engine_), normal_(engine_));
    return v;
  }

  Complex scalar() { return Complex(normal_(engine_), normal_(engine_)); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// ---- independent references (closed-form pairing via std::polar, no library characters)

inline Complex reference_character(const FiniteAbelianGroup& g, const Element& a, const Element& b) {
  double t = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    t += static_cast<double>(a[j] * b[j]) / static_cast<double>(g.invariant_factors()[j]);
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * t);
}

/// Zak transform at (alpha, x) by the defining sum.
inline Complex reference_zak(const QuasiInvariantAction& a, const Eigen::VectorXcd& psi, std::size_t alpha,
                             std::size_t x) {
  const auto& g = a.group();
  Complex acc = 0;
  for (std::size_t gamma = 0; gamma < g.order(); ++gamma) {
    const std::size_t inv = g.negate(gamma);
    const double jac = a.space().weight(a.table()[inv][x]) / a.space().weight(x);
    acc += std::sqrt(jac) * psi[a.table()[inv][x]] *
           std::conj(reference_character(g, g.element(gamma), g.element(alpha)));
  }
  return acc;
}

inline double max_abs(const Eigen::VectorXcd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace gzak::test
