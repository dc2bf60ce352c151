#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "gzak/frames.hpp"
#include "gzak/ranges.hpp"
#include "gzak/settings.hpp"
#include "gzak/zak.hpp"

namespace gzak {

/// Splits the invariant space spanned by the generators' orbits into an
/// orthogonal sum of principal spaces whose generators form Parseval frames.
///
/// Per fiber, modified Gram-Schmidt (with one reorthogonalization pass) runs in
/// generator order; the n-th part takes the n-th surviving unit vector, or zero.
std::vector<FiberedVector> parseval_decompose(const FiberLayout& layout, std::span<const FiberedVector> generators,
                                              const Settings& settings = {});
std::vector<Eigen::VectorXcd> parseval_decompose(const ZakTransform& zak,
                                                 std::span<const Eigen::VectorXcd> generators,
                                                 const Settings& settings = {});

struct DecompositionReport {
  double max_cross_inner = 0.0;   // (a) largest |<Z[psi_m](a), Z[psi_n](a)>|, m != n
  bool orthogonal = true;
  double max_norm_defect = 0.0;   // distance of each fiber norm from {0, 1}
  std::vector<char> part_parseval;  // (b)
  bool parseval = true;
  std::vector<std::size_t> part_dims;   // (c) sum over parts of dim J_{psi_n}(alpha)
  std::vector<std::size_t> space_dims;  //     dim J_V(alpha)
  bool dims_match = true;
  double max_member_residual = 0.0;  // (d)
  bool generators_member = true;
  bool ok = true;
};

DecompositionReport verify_decomposition(const FiberLayout& layout, std::span<const FiberedVector> generators,
                                         std::span<const FiberedVector> parts, const Settings& settings = {});
DecompositionReport verify_decomposition(const ZakTransform& zak, std::span<const Eigen::VectorXcd> generators,
                                         std::span<const Eigen::VectorXcd> parts, const Settings& settings = {});

}  // namespace gzak
