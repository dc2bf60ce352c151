#pragma once

#include <cstddef>

#include <Eigen/Core>

#include "gzak/action.hpp"
#include "gzak/group.hpp"

namespace gzak {

/// An element of L2(dual, L2(C)): one column per dual point (lexicographic
/// order), one row per transversal point.
///
/// The fiber inner product is sum_x u(x) conj(v(x)) weights(x); the global
/// squared norm is fiber_measure * sum over fibers of fiber norms, with
/// fiber_measure = 1/|dual| so that the dual carries total mass one.
struct FiberedVector {
  Eigen::MatrixXcd values;
  Eigen::VectorXd weights;
  double fiber_measure = 1.0;

  std::size_t fiber_count() const { return static_cast<std::size_t>(values.cols()); }
  std::size_t fiber_dim() const { return static_cast<std::size_t>(values.rows()); }

  Complex fiber_inner(std::size_t alpha, const FiberedVector& other) const;
  double fiber_norm_squared(std::size_t alpha) const;
  double norm_squared() const;

  /// Fiber alpha scaled by sqrt(weights), so Euclidean geometry applies.
  Eigen::VectorXcd scaled_fiber(std::size_t alpha) const;

  bool same_shape(const FiberedVector& other) const;
};

/// Zak transform bound to a validated free action and its tiling transversal.
class ZakTransform {
 public:
  /// Validates the action and builds the transversal; throws InputError on a
  /// failed validation and NotFreeError when no tiling set exists.
  explicit ZakTransform(QuasiInvariantAction action);

  const QuasiInvariantAction& action() const { return action_; }
  const FiniteAbelianGroup& group() const { return action_.group(); }
  const WeightedSpace& space() const { return action_.space(); }
  const TilingTransversal& transversal() const { return transversal_; }

  /// Z[psi](alpha)(c) = sum_g (Pi(g) psi)(c) conj((g, alpha)) for c in the transversal.
  FiberedVector forward(const Eigen::VectorXcd& psi, unsigned threads = 1) const;
  /// psi(sigma_g(c)) = J(g, c)^{-1/2} (1/|G|) sum_alpha Phi(alpha)(c) (-g, alpha).
  Eigen::VectorXcd inverse(const FiberedVector& phi) const;

  FiberedVector zero() const;

 private:
  QuasiInvariantAction action_;
  TilingTransversal transversal_;
  Eigen::VectorXd transversal_weights_;
};

FiberedVector zak_forward(const QuasiInvariantAction& action, const TilingTransversal& transversal,
                          const Eigen::VectorXcd& psi);
Eigen::VectorXcd zak_inverse(const QuasiInvariantAction& action, const TilingTransversal& transversal,
                             const FiberedVector& phi);

}  // namespace gzak
