#include "gzak/frames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gzak/error.hpp"

namespace gzak {

BracketFunction bracket(const FiberedVector& psi, const FiberedVector& phi) {
  if (!psi.same_shape(phi)) throw InputError("bracket: fibered vectors have different layouts");
  BracketFunction out;
  out.values.reserve(psi.fiber_count());
  for (std::size_t a = 0; a < psi.fiber_count(); ++a) out.values.push_back(psi.fiber_inner(a, phi));
  return out;
}

BracketFunction bracket(const ZakTransform& zak, const Eigen::VectorXcd& psi, const Eigen::VectorXcd& phi) {
  return bracket(zak.forward(psi), zak.forward(phi));
}

namespace {

std::vector<FiberedVector> transform_all(const ZakTransform& zak, std::span<const Eigen::VectorXcd> generators,
                                         unsigned threads) {
  std::vector<FiberedVector> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(zak.forward(g, threads));
  return out;
}

FrameReport analyze(const FiberLayout& layout, std::span<const FiberedVector> generators, const Settings& settings,
                    BoundKind kind) {
  if (generators.empty()) throw InputError("frame analysis needs at least one generator");
  const auto spectra = fiber_spectra(layout, generators, settings.threads);
  const double cutoff = settings.tolerance * spectral_scale(spectra);
  const auto m = static_cast<Eigen::Index>(generators.size());

  FrameReport r;
  r.kind = kind;
  r.tolerance = settings.tolerance;
  r.fibers.resize(layout.fiber_count);
  double frame_lower = std::numeric_limits<double>::infinity();
  double gram_lower = std::numeric_limits<double>::infinity();
  double upper = 0.0;
  for (std::size_t a = 0; a < layout.fiber_count; ++a) {
    const auto& sv = spectra[a].singular_values;
    auto& f = r.fibers[a];
    f.fiber = a;
    while (static_cast<Eigen::Index>(f.dim) < sv.size() && sv[f.dim] > cutoff) ++f.dim;
    f.smax2 = sv.size() > 0 ? sv[0] * sv[0] : 0.0;
    if (f.dim > 0) {
      f.smin2_range = sv[f.dim - 1] * sv[f.dim - 1];
      r.support.push_back(a);
      frame_lower = std::min(frame_lower, f.smin2_range);
    }
    // the Gram matrix is m x m; fewer singular values than generators means zero eigenvalues
    f.full_smin2 = (sv.size() < m || sv.size() == 0) ? 0.0 : sv[sv.size() - 1] * sv[sv.size() - 1];
    gram_lower = std::min(gram_lower, f.full_smin2);
    upper = std::max(upper, f.smax2);
  }

  r.degenerate = r.support.empty();
  r.is_bessel = true;
  if (r.degenerate) {
    r.lower = r.upper = 0.0;
    return r;
  }
  r.is_frame = true;
  r.is_parseval = std::abs(frame_lower - 1.0) <= settings.tolerance && std::abs(upper - 1.0) <= settings.tolerance;
  r.is_riesz = gram_lower > settings.riesz_ratio * upper;
  r.lower = kind == BoundKind::frame ? frame_lower : gram_lower;
  r.upper = upper;
  return r;
}

}  // namespace

FrameReport frame_check(const FiberLayout& layout, std::span<const FiberedVector> generators,
                        const Settings& settings) {
  return analyze(layout, generators, settings, BoundKind::frame);
}

FrameReport frame_check(const ZakTransform& zak, std::span<const Eigen::VectorXcd> generators,
                        const Settings& settings) {
  return frame_check(FiberLayout::of(zak), transform_all(zak, generators, settings.threads), settings);
}

FrameReport riesz_check(const FiberLayout& layout, std::span<const FiberedVector> generators,
                        const Settings& settings) {
  return analyze(layout, generators, settings, BoundKind::riesz);
}

FrameReport riesz_check(const ZakTransform& zak, std::span<const Eigen::VectorXcd> generators,
                        const Settings& settings) {
  return riesz_check(FiberLayout::of(zak), transform_all(zak, generators, settings.threads), settings);
}

SingleGeneratorReport single_generator_report(const FiberedVector& psi, const Settings& settings) {
  SingleGeneratorReport out;
  out.bracket = bracket(psi, psi);
  FrameReport& r = out.report;
  r.kind = BoundKind::frame;
  r.tolerance = settings.tolerance;
  r.fibers.resize(psi.fiber_count());
  double lower = std::numeric_limits<double>::infinity();
  double all_lower = std::numeric_limits<double>::infinity();
  double upper = 0.0;
  for (std::size_t a = 0; a < psi.fiber_count(); ++a) {
    const double n2 = out.bracket.values[a].real();
    auto& f = r.fibers[a];
    f.fiber = a;
    f.smax2 = n2;
    f.full_smin2 = n2;
    if (n2 > settings.tolerance) {
      f.dim = 1;
      f.smin2_range = n2;
      r.support.push_back(a);
      lower = std::min(lower, n2);
    }
    all_lower = std::min(all_lower, n2);
    upper = std::max(upper, n2);
  }
  r.degenerate = r.support.empty();
  if (r.degenerate) return out;
  r.is_frame = true;
  r.lower = lower;
  r.upper = upper;
  r.is_parseval = std::abs(lower - 1.0) <= settings.tolerance && std::abs(upper - 1.0) <= settings.tolerance;
  r.is_riesz = all_lower > settings.tolerance;
  return out;
}

SingleGeneratorReport single_generator_report(const ZakTransform& zak, const Eigen::VectorXcd& psi,
                                              const Settings& settings) {
  return single_generator_report(zak.forward(psi, settings.threads), settings);
}

}  // namespace gzak
