#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gzak/group.hpp"

namespace gzak {

/// Finite atomic measure space: point x carries mass weights()[x] > 0.
class WeightedSpace {
 public:
  WeightedSpace() = default;
  explicit WeightedSpace(std::vector<double> weights);
  static WeightedSpace uniform(std::size_t size) { return WeightedSpace(std::vector<double>(size, 1.0)); }

  std::size_t size() const { return weights_.size(); }
  double weight(std::size_t x) const { return weights_[x]; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

/// Weighted L2 inner product sum_x u(x) conj(v(x)) mu(x).
Complex inner_product(const WeightedSpace& space, const Eigen::VectorXcd& u, const Eigen::VectorXcd& v);
double norm_squared(const WeightedSpace& space, const Eigen::VectorXcd& u);

/// An action of a finite abelian group on a weighted point set, given as one
/// permutation row per group element (group elements in lexicographic order).
///
/// Construction checks only the table's shape; the group-action axioms are
/// checked by validate_action().
class QuasiInvariantAction {
 public:
  QuasiInvariantAction(FiniteAbelianGroup group, WeightedSpace space, std::vector<std::vector<std::size_t>> table);

  /// sigma_g(x) = x + sum_j m_j g_j (mod N).
  static QuasiInvariantAction affine(FiniteAbelianGroup group, WeightedSpace space,
                                     const std::vector<std::int64_t>& multipliers);

  const FiniteAbelianGroup& group() const { return group_; }
  const WeightedSpace& space() const { return space_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  std::size_t act(std::size_t gamma, std::size_t x) const { return table_[gamma][x]; }
  /// J(g, x) = mu(sigma_g(x)) / mu(x).
  double jacobian(std::size_t gamma, std::size_t x) const;

 private:
  FiniteAbelianGroup group_;
  WeightedSpace space_;
  std::vector<std::vector<std::size_t>> table_;
};

struct Violation {
  std::string condition;  // "(ii)", "(iii)" or "cocycle"
  std::size_t gamma = 0;
  std::size_t x = 0;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

ValidationReport validate_action(const QuasiInvariantAction& action);

/// One representative per orbit (the smallest point index), plus for every
/// point x the pair (orbit, g) with x = sigma_g(points[orbit]).
struct TilingTransversal {
  std::vector<std::size_t> points;
  std::vector<std::size_t> orbit_of;
  std::vector<std::size_t> gamma_of;

  std::size_t size() const { return points.size(); }
};

/// Throws NotFreeError if some point has a nontrivial stabilizer.
TilingTransversal tiling_transversal(const QuasiInvariantAction& action);

/// (Pi(g) psi)(x) = J(-g, x)^{1/2} psi(sigma_{-g}(x)).
Eigen::VectorXcd apply_rep(const QuasiInvariantAction& action, std::size_t gamma, const Eigen::VectorXcd& psi);

}  // namespace gzak
