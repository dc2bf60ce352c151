#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "gzak/ranges.hpp"
#include "gzak/settings.hpp"
#include "gzak/zak.hpp"

namespace gzak {

struct FiberBounds {
  std::size_t fiber = 0;
  std::size_t dim = 0;
  double smin2_range = 0.0;  // smallest squared singular value above the rank cutoff
  double smax2 = 0.0;
  double full_smin2 = 0.0;   // smallest Gram eigenvalue, zeros included
};

enum class BoundKind { frame, riesz };

/// Fiberwise certificate for the orbit system {Pi(g) phi}.
///
/// For kind == frame, (lower, upper) are the optimal frame bounds of the
/// system for the space it spans; for kind == riesz they are the extreme
/// Gram eigenvalues over all fibers.
struct FrameReport {
  BoundKind kind = BoundKind::frame;
  std::vector<FiberBounds> fibers;
  std::vector<std::size_t> support;
  double lower = 0.0;
  double upper = 0.0;
  bool degenerate = true;
  bool is_bessel = true;
  bool is_frame = false;
  bool is_parseval = false;
  bool is_riesz = false;
  double tolerance = 0.0;
};

/// [psi, phi](alpha) = <Z[psi](alpha), Z[phi](alpha)> in the weighted fiber product.
struct BracketFunction {
  std::vector<Complex> values;
};

BracketFunction bracket(const FiberedVector& psi, const FiberedVector& phi);
BracketFunction bracket(const ZakTransform& zak, const Eigen::VectorXcd& psi, const Eigen::VectorXcd& phi);

FrameReport frame_check(const FiberLayout& layout, std::span<const FiberedVector> generators,
                        const Settings& settings = {});
FrameReport frame_check(const ZakTransform& zak, std::span<const Eigen::VectorXcd> generators,
                        const Settings& settings = {});

FrameReport riesz_check(const FiberLayout& layout, std::span<const FiberedVector> generators,
                        const Settings& settings = {});
FrameReport riesz_check(const ZakTransform& zak, std::span<const Eigen::VectorXcd> generators,
                        const Settings& settings = {});

struct SingleGeneratorReport {
  FrameReport report;
  BracketFunction bracket;
};

/// Bracket-map test for one generator: frame bounds are the extremes of
/// ||Z[psi](alpha)||^2 over its support, Riesz requires them on every fiber.
SingleGeneratorReport single_generator_report(const FiberedVector& psi, const Settings& settings = {});
SingleGeneratorReport single_generator_report(const ZakTransform& zak, const Eigen::VectorXcd& psi,
                                              const Settings& settings = {});

}  // namespace gzak
