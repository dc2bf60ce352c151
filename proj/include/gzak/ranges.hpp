#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "gzak/settings.hpp"
#include "gzak/zak.hpp"

namespace gzak {

/// Shape shared by all fibered vectors of one transform: fiber count, fiber
/// weights and the per-fiber measure.
struct FiberLayout {
  std::size_t fiber_count = 0;
  Eigen::VectorXd weights;
  double fiber_measure = 1.0;

  static FiberLayout of(const FiberedVector& v) { return {v.fiber_count(), v.weights, v.fiber_measure}; }
  static FiberLayout of(const ZakTransform& zak) { return of(zak.zero()); }
  bool matches(const FiberedVector& v) const;
};

/// Singular values and left singular vectors of the sqrt(weight)-scaled
/// matrix whose columns are the generator fibers at one dual point.
struct FiberSpectrum {
  Eigen::VectorXd singular_values;  // descending
  Eigen::MatrixXcd left;            // thin U, Euclidean-orthonormal columns
};

std::vector<FiberSpectrum> fiber_spectra(const FiberLayout& layout, std::span<const FiberedVector> generators,
                                         unsigned threads = 1);

/// Largest singular value over all fibers; the rank cutoff is relative to it.
double spectral_scale(std::span<const FiberSpectrum> spectra);

/// Per dual point, an orthonormal basis of span{Z[phi](alpha)} in the
/// weighted fiber inner product.
class RangeFunction {
 public:
  RangeFunction(FiberLayout layout, std::vector<Eigen::MatrixXcd> scaled_bases, double rank_tolerance);

  const FiberLayout& layout() const { return layout_; }
  std::size_t fiber_count() const { return scaled_bases_.size(); }
  std::size_t dim(std::size_t alpha) const { return static_cast<std::size_t>(scaled_bases_[alpha].cols()); }
  std::vector<std::size_t> dims() const;
  double rank_tolerance() const { return rank_tolerance_; }

  /// Q_alpha with Q^H W Q = I.
  Eigen::MatrixXcd basis(std::size_t alpha) const;
  /// W^{1/2} Q_alpha, Euclidean-orthonormal.
  const Eigen::MatrixXcd& scaled_basis(std::size_t alpha) const { return scaled_bases_[alpha]; }

 private:
  FiberLayout layout_;
  std::vector<Eigen::MatrixXcd> scaled_bases_;
  double rank_tolerance_;
};

RangeFunction range_from_generators(const FiberLayout& layout, std::span<const FiberedVector> generators,
                                    const Settings& settings = {});
RangeFunction range_from_generators(const ZakTransform& zak, std::span<const Eigen::VectorXcd> generators,
                                    const Settings& settings = {});

struct Membership {
  bool member = true;
  double residual = 0.0;
};

Membership membership(const FiberedVector& z, const RangeFunction& range, const Settings& settings = {});
Membership membership(const ZakTransform& zak, const Eigen::VectorXcd& psi, const RangeFunction& range,
                      const Settings& settings = {});

FiberedVector project(const FiberedVector& z, const RangeFunction& range);
Eigen::VectorXcd project(const ZakTransform& zak, const Eigen::VectorXcd& psi, const RangeFunction& range);

/// Maximal fiber dimension: the minimal number of generators of the space.
std::size_t length(const RangeFunction& range);

}  // namespace gzak
