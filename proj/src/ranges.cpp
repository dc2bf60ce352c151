#include "gzak/ranges.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "gzak/error.hpp"
#include "gzak/parallel.hpp"

namespace gzak {

bool FiberLayout::matches(const FiberedVector& v) const {
  return v.fiber_count() == fiber_count && v.weights.size() == weights.size() && v.weights == weights &&
         v.fiber_measure == fiber_measure;
}

std::vector<FiberSpectrum> fiber_spectra(const FiberLayout& layout, std::span<const FiberedVector> generators,
                                         unsigned threads) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!layout.matches(generators[i])) {
      throw InputError("generator #" + std::to_string(i) + " does not share the fiber layout");
    }
  }
  const Eigen::Index dim = layout.weights.size();
  const Eigen::Index m = static_cast<Eigen::Index>(generators.size());
  const Eigen::VectorXcd root_w = layout.weights.cwiseSqrt().cast<Complex>();
  std::vector<FiberSpectrum> spectra(layout.fiber_count);
  parallel_for(layout.fiber_count, threads, [&](std::size_t alpha) {
    auto& out = spectra[alpha];
    if (m == 0 || dim == 0) {
      out.singular_values.resize(0);
      out.left.resize(dim, 0);
      return;
    }
    Eigen::MatrixXcd s(dim, m);
    for (Eigen::Index j = 0; j < m; ++j) s.col(j) = root_w.cwiseProduct(generators[j].values.col(alpha));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s, Eigen::ComputeThinU);
    out.singular_values = svd.singularValues();
    out.left = svd.matrixU();
  });
  return spectra;
}

double spectral_scale(std::span<const FiberSpectrum> spectra) {
  double scale = 0.0;
  for (const auto& s : spectra) {
    if (s.singular_values.size() > 0) scale = std::max(scale, s.singular_values[0]);
  }
  return scale;
}

RangeFunction::RangeFunction(FiberLayout layout, std::vector<Eigen::MatrixXcd> scaled_bases, double rank_tolerance)
    : layout_(std::move(layout)), scaled_bases_(std::move(scaled_bases)), rank_tolerance_(rank_tolerance) {
  if (scaled_bases_.size() != layout_.fiber_count) throw InputError("range function: wrong number of fibers");
}

std::vector<std::size_t> RangeFunction::dims() const {
  std::vector<std::size_t> d(fiber_count());
  for (std::size_t a = 0; a < d.size(); ++a) d[a] = dim(a);
  return d;
}

Eigen::MatrixXcd RangeFunction::basis(std::size_t alpha) const {
  return layout_.weights.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() * scaled_bases_[alpha];
}

RangeFunction range_from_generators(const FiberLayout& layout, std::span<const FiberedVector> generators,
                                    const Settings& settings) {
  const auto spectra = fiber_spectra(layout, generators, settings.threads);
  const double cutoff = settings.tolerance * spectral_scale(spectra);
  std::vector<Eigen::MatrixXcd> bases(layout.fiber_count);
  for (std::size_t a = 0; a < layout.fiber_count; ++a) {
    const auto& s = spectra[a];
    Eigen::Index rank = 0;
    while (rank < s.singular_values.size() && s.singular_values[rank] > cutoff) ++rank;
    bases[a] = s.left.leftCols(rank);
  }
  return RangeFunction(layout, std::move(bases), settings.tolerance);
}

RangeFunction range_from_generators(const ZakTransform& zak, std::span<const Eigen::VectorXcd> generators,
                                    const Settings& settings) {
  std::vector<FiberedVector> fibers;
  fibers.reserve(generators.size());
  for (const auto& g : generators) fibers.push_back(zak.forward(g, settings.threads));
  return range_from_generators(FiberLayout::of(zak), fibers, settings);
}

namespace {

void check_layout(const FiberedVector& z, const RangeFunction& range) {
  if (!range.layout().matches(z)) throw InputError("fibered vector does not match the range function layout");
}

}  // namespace

Membership membership(const FiberedVector& z, const RangeFunction& range, const Settings& settings) {
  check_layout(z, range);
  const Eigen::VectorXcd root_w = z.weights.cwiseSqrt().cast<Complex>();
  double residual2 = 0.0;
  for (std::size_t a = 0; a < z.fiber_count(); ++a) {
    const Eigen::VectorXcd s = root_w.cwiseProduct(z.values.col(a));
    const auto& u = range.scaled_basis(a);
    residual2 += (s - u * (u.adjoint() * s)).squaredNorm();
  }
  Membership result;
  result.residual = std::sqrt(residual2 * z.fiber_measure);
  result.member = result.residual <= settings.membership_ratio * std::max(1.0, std::sqrt(z.norm_squared()));
  return result;
}

Membership membership(const ZakTransform& zak, const Eigen::VectorXcd& psi, const RangeFunction& range,
                      const Settings& settings) {
  return membership(zak.forward(psi, settings.threads), range, settings);
}

FiberedVector project(const FiberedVector& z, const RangeFunction& range) {
  check_layout(z, range);
  const Eigen::VectorXd root_w = z.weights.cwiseSqrt();
  FiberedVector out = z;
  for (std::size_t a = 0; a < z.fiber_count(); ++a) {
    const Eigen::VectorXcd s = root_w.cast<Complex>().cwiseProduct(z.values.col(a));
    const auto& u = range.scaled_basis(a);
    out.values.col(a) = root_w.cwiseInverse().cast<Complex>().cwiseProduct(u * (u.adjoint() * s));
  }
  return out;
}

Eigen::VectorXcd project(const ZakTransform& zak, const Eigen::VectorXcd& psi, const RangeFunction& range) {
  return zak.inverse(project(zak.forward(psi), range));
}

std::size_t length(const RangeFunction& range) {
  std::size_t best = 0;
  for (std::size_t a = 0; a < range.fiber_count(); ++a) best = std::max(best, range.dim(a));
  return best;
}

}  // namespace gzak
