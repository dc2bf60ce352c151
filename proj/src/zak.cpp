#include "gzak/zak.hpp"

#include <cmath>
#include <string>

#include "gzak/error.hpp"
#include "gzak/parallel.hpp"

namespace gzak {

Complex FiberedVector::fiber_inner(std::size_t alpha, const FiberedVector& other) const {
  Complex acc = 0;
  for (Eigen::Index x = 0; x < values.rows(); ++x) {
    acc += values(x, alpha) * std::conj(other.values(x, alpha)) * weights[x];
  }
  return acc;
}

double FiberedVector::fiber_norm_squared(std::size_t alpha) const {
  double acc = 0;
  for (Eigen::Index x = 0; x < values.rows(); ++x) acc += std::norm(values(x, alpha)) * weights[x];
  return acc;
}

double FiberedVector::norm_squared() const {
  double acc = 0;
  for (std::size_t a = 0; a < fiber_count(); ++a) acc += fiber_norm_squared(a);
  return acc * fiber_measure;
}

Eigen::VectorXcd FiberedVector::scaled_fiber(std::size_t alpha) const {
  return weights.cwiseSqrt().cast<Complex>().cwiseProduct(values.col(alpha));
}

bool FiberedVector::same_shape(const FiberedVector& other) const {
  return values.rows() == other.values.rows() && values.cols() == other.values.cols() &&
         weights == other.weights && fiber_measure == other.fiber_measure;
}

namespace {

void check_transversal(const QuasiInvariantAction& action, const TilingTransversal& transversal) {
  if (transversal.orbit_of.size() != action.space().size() ||
      transversal.points.size() * action.group().order() != action.space().size()) {
    throw InputError("transversal does not match the action");
  }
}

Eigen::VectorXd transversal_weights(const QuasiInvariantAction& action, const TilingTransversal& transversal) {
  Eigen::VectorXd w(transversal.size());
  for (std::size_t c = 0; c < transversal.size(); ++c) w[c] = action.space().weight(transversal.points[c]);
  return w;
}

FiberedVector forward_impl(const QuasiInvariantAction& action, const TilingTransversal& transversal,
                           const Eigen::VectorXd& weights, const Eigen::VectorXcd& psi, unsigned threads) {
  const auto& group = action.group();
  const std::size_t order = group.order();
  const std::size_t dim = transversal.size();
  if (static_cast<std::size_t>(psi.size()) != action.space().size()) {
    throw InputError("zak: function has " + std::to_string(psi.size()) + " entries, space has " +
                     std::to_string(action.space().size()));
  }
  // orbit data: (Pi(g) psi)(c), one row per transversal point
  Eigen::MatrixXcd orbit(dim, order);
  for (std::size_t g = 0; g < order; ++g) {
    const std::size_t inv = group.negate(g);
    for (std::size_t c = 0; c < dim; ++c) {
      const std::size_t x = transversal.points[c];
      orbit(c, g) = std::sqrt(action.jacobian(inv, x)) * psi[action.act(inv, x)];
    }
  }
  FiberedVector out{Eigen::MatrixXcd::Zero(dim, order), weights, 1.0 / static_cast<double>(order)};
  parallel_for(order, threads, [&](std::size_t alpha) {
    for (std::size_t c = 0; c < dim; ++c) {
      Complex acc = 0;
      for (std::size_t g = 0; g < order; ++g) acc += orbit(c, g) * std::conj(group.character(g, alpha));
      out.values(c, alpha) = acc;
    }
  });
  return out;
}

Eigen::VectorXcd inverse_impl(const QuasiInvariantAction& action, const TilingTransversal& transversal,
                              const FiberedVector& phi) {
  const auto& group = action.group();
  const std::size_t order = group.order();
  const std::size_t dim = transversal.size();
  if (phi.fiber_count() != order || phi.fiber_dim() != dim) {
    throw InputError("zak inverse: fibered vector is " + std::to_string(phi.fiber_dim()) + "x" +
                     std::to_string(phi.fiber_count()) + ", expected " + std::to_string(dim) + "x" +
                     std::to_string(order));
  }
  const double scale = 1.0 / static_cast<double>(order);
  Eigen::VectorXcd psi(action.space().size());
  for (std::size_t c = 0; c < dim; ++c) {
    const std::size_t x = transversal.points[c];
    for (std::size_t g = 0; g < order; ++g) {
      const std::size_t inv = group.negate(g);
      Complex acc = 0;
      for (std::size_t alpha = 0; alpha < order; ++alpha) acc += phi.values(c, alpha) * group.character(inv, alpha);
      psi[action.act(g, x)] = acc * scale / std::sqrt(action.jacobian(g, x));
    }
  }
  return psi;
}

}  // namespace

ZakTransform::ZakTransform(QuasiInvariantAction action) : action_(std::move(action)) {
  const ValidationReport report = validate_action(action_);
  if (!report.ok) {
    const auto& v = report.violations.front();
    throw InputError("action fails condition " + v.condition + ": " + v.detail);
  }
  transversal_ = tiling_transversal(action_);
  transversal_weights_ = transversal_weights(action_, transversal_);
}

FiberedVector ZakTransform::forward(const Eigen::VectorXcd& psi, unsigned threads) const {
  return forward_impl(action_, transversal_, transversal_weights_, psi, threads);
}

Eigen::VectorXcd ZakTransform::inverse(const FiberedVector& phi) const {
  return inverse_impl(action_, transversal_, phi);
}

FiberedVector ZakTransform::zero() const {
  return FiberedVector{Eigen::MatrixXcd::Zero(transversal_.size(), group().order()), transversal_weights_,
                       1.0 / static_cast<double>(group().order())};
}

FiberedVector zak_forward(const QuasiInvariantAction& action, const TilingTransversal& transversal,
                          const Eigen::VectorXcd& psi) {
  check_transversal(action, transversal);
  return forward_impl(action, transversal, transversal_weights(action, transversal), psi, 1);
}

Eigen::VectorXcd zak_inverse(const QuasiInvariantAction& action, const TilingTransversal& transversal,
                             const FiberedVector& phi) {
  check_transversal(action, transversal);
  return inverse_impl(action, transversal, phi);
}

}  // namespace gzak
