#include "gzak/decomp.hpp"

#include <algorithm>
#include <cmath>

#include "gzak/error.hpp"
#include "gzak/parallel.hpp"

namespace gzak {

std::vector<FiberedVector> parseval_decompose(const FiberLayout& layout, std::span<const FiberedVector> generators,
                                              const Settings& settings) {
  for (const auto& g : generators) {
    if (!layout.matches(g)) throw InputError("decompose: generator does not share the fiber layout");
  }
  const Eigen::Index dim = layout.weights.size();
  const Eigen::VectorXcd root_w = layout.weights.cwiseSqrt().cast<Complex>();
  const Eigen::VectorXcd inv_root_w = root_w.cwiseInverse();

  double scale = 0.0;
  for (const auto& g : generators) {
    for (std::size_t a = 0; a < layout.fiber_count; ++a) scale = std::max(scale, std::sqrt(g.fiber_norm_squared(a)));
  }
  if (scale == 0.0) return {};
  const double drop = settings.tolerance * scale;

  std::vector<std::vector<Eigen::VectorXcd>> kept(layout.fiber_count);
  parallel_for(layout.fiber_count, settings.threads, [&](std::size_t a) {
    auto& q = kept[a];
    for (const auto& g : generators) {
      Eigen::VectorXcd v = root_w.cwiseProduct(g.values.col(a));
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& u : q) v -= u * u.dot(v);
      }
      const double nv = v.norm();
      if (nv > drop) q.push_back(v / nv);
    }
  });

  std::size_t parts = 0;
  for (const auto& q : kept) parts = std::max(parts, q.size());
  std::vector<FiberedVector> out(
      parts, FiberedVector{Eigen::MatrixXcd::Zero(dim, layout.fiber_count), layout.weights, layout.fiber_measure});
  for (std::size_t a = 0; a < layout.fiber_count; ++a) {
    for (std::size_t n = 0; n < kept[a].size(); ++n) out[n].values.col(a) = inv_root_w.cwiseProduct(kept[a][n]);
  }
  return out;
}

std::vector<Eigen::VectorXcd> parseval_decompose(const ZakTransform& zak,
                                                 std::span<const Eigen::VectorXcd> generators,
                                                 const Settings& settings) {
  std::vector<FiberedVector> fibers;
  for (const auto& g : generators) fibers.push_back(zak.forward(g, settings.threads));
  std::vector<Eigen::VectorXcd> out;
  for (const auto& part : parseval_decompose(FiberLayout::of(zak), fibers, settings)) out.push_back(zak.inverse(part));
  return out;
}

DecompositionReport verify_decomposition(const FiberLayout& layout, std::span<const FiberedVector> generators,
                                         std::span<const FiberedVector> parts, const Settings& settings) {
  DecompositionReport r;
  const double orth_tol = 1e-10;

  for (std::size_t a = 0; a < layout.fiber_count; ++a) {
    for (std::size_t m = 0; m < parts.size(); ++m) {
      const double norm = std::sqrt(parts[m].fiber_norm_squared(a));
      r.max_norm_defect = std::max(r.max_norm_defect, std::min(norm, std::abs(norm - 1.0)));
      for (std::size_t n = m + 1; n < parts.size(); ++n) {
        r.max_cross_inner = std::max(r.max_cross_inner, std::abs(parts[m].fiber_inner(a, parts[n])));
      }
    }
  }
  r.orthogonal = r.max_cross_inner <= orth_tol && r.max_norm_defect <= orth_tol;

  for (const auto& p : parts) {
    const auto single = single_generator_report(p, settings);
    const bool ok = !single.report.degenerate && single.report.is_parseval;
    r.part_parseval.push_back(ok ? 1 : 0);
    r.parseval = r.parseval && ok;
  }

  const RangeFunction space = range_from_generators(layout, generators, settings);
  r.space_dims = space.dims();
  r.part_dims.assign(layout.fiber_count, 0);
  for (const auto& p : parts) {
    const RangeFunction single = range_from_generators(layout, std::span<const FiberedVector>(&p, 1), settings);
    for (std::size_t a = 0; a < layout.fiber_count; ++a) r.part_dims[a] += single.dim(a);
  }
  r.dims_match = r.part_dims == r.space_dims;

  const RangeFunction union_range = range_from_generators(layout, parts, settings);
  for (const auto& g : generators) {
    const Membership mem = membership(g, union_range, settings);
    r.max_member_residual = std::max(r.max_member_residual, mem.residual);
    r.generators_member = r.generators_member && mem.member;
  }

  r.ok = r.orthogonal && r.parseval && r.dims_match && r.generators_member;
  return r;
}

DecompositionReport verify_decomposition(const ZakTransform& zak, std::span<const Eigen::VectorXcd> generators,
                                         std::span<const Eigen::VectorXcd> parts, const Settings& settings) {
  std::vector<FiberedVector> g, p;
  for (const auto& v : generators) g.push_back(zak.forward(v, settings.threads));
  for (const auto& v : parts) p.push_back(zak.forward(v, settings.threads));
  return verify_decomposition(FiberLayout::of(zak), g, p, settings);
}

}  // namespace gzak
