#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "gzak/action.hpp"
#include "gzak/ranges.hpp"

// Dense ground truth computed directly in weighted L2(X) from the orbit
// system, with no Zak transform involved.
namespace gzak::oracle {

/// Columns sqrt(mu) * Pi(g) phi, generator-major, group elements in lexicographic order.
Eigen::MatrixXcd synthesis_matrix(const QuasiInvariantAction& action, std::span<const Eigen::VectorXcd> generators);

struct DenseFrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t rank = 0;
  bool degenerate = true;
};

/// Nonzero spectrum (above 1e-9 * max) of the frame operator M M^H.
DenseFrameBounds dense_frame_bounds(const QuasiInvariantAction& action, std::span<const Eigen::VectorXcd> generators);

struct DenseRieszBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool independent = false;
  bool degenerate = true;
};

/// Full spectrum of the Gram matrix M^H M.
DenseRieszBounds dense_riesz_bounds(const QuasiInvariantAction& action, std::span<const Eigen::VectorXcd> generators);

/// Least-squares residual of sqrt(mu) f against the synthesis columns; same
/// acceptance rule as ranges::membership.
Membership brute_membership(const QuasiInvariantAction& action, const Eigen::VectorXcd& f,
                            std::span<const Eigen::VectorXcd> generators, double membership_ratio = 1e-9);

/// Rank of the generators projected onto each isotypic component
/// {f : Pi(g) f = (g, alpha) f}, one entry per dual point.
std::vector<std::size_t> dense_fiber_ranks(const QuasiInvariantAction& action,
                                           std::span<const Eigen::VectorXcd> generators);

}  // namespace gzak::oracle
