#include "gzak/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "gzak/error.hpp"

namespace gzak::oracle {

namespace {

constexpr double kSpectralCut = 1e-9;

Eigen::VectorXcd root_weights(const QuasiInvariantAction& action) {
  Eigen::VectorXcd w(action.space().size());
  for (std::size_t x = 0; x < action.space().size(); ++x) w[x] = std::sqrt(action.space().weight(x));
  return w;
}

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& h) {
  if (h.rows() == 0) return Eigen::VectorXd();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();  // ascending
}

}  // namespace

Eigen::MatrixXcd synthesis_matrix(const QuasiInvariantAction& action, std::span<const Eigen::VectorXcd> generators) {
  const std::size_t order = action.group().order();
  const Eigen::VectorXcd w = root_weights(action);
  Eigen::MatrixXcd m(action.space().size(), order * generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t g = 0; g < order; ++g) {
      m.col(static_cast<Eigen::Index>(i * order + g)) = w.cwiseProduct(apply_rep(action, g, generators[i]));
    }
  }
  return m;
}

DenseFrameBounds dense_frame_bounds(const QuasiInvariantAction& action, std::span<const Eigen::VectorXcd> generators) {
  const Eigen::MatrixXcd m = synthesis_matrix(action, generators);
  const Eigen::VectorXd ev = hermitian_eigenvalues(m * m.adjoint());
  DenseFrameBounds out;
  if (ev.size() == 0 || ev[ev.size() - 1] <= 0.0) return out;
  const double top = ev[ev.size() - 1];
  out.upper = top;
  out.lower = top;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev[k] > kSpectralCut * top) {
      out.lower = std::min(out.lower, ev[k]);
      ++out.rank;
    }
  }
  out.degenerate = false;
  return out;
}

DenseRieszBounds dense_riesz_bounds(const QuasiInvariantAction& action, std::span<const Eigen::VectorXcd> generators) {
  const Eigen::MatrixXcd m = synthesis_matrix(action, generators);
  const Eigen::VectorXd ev = hermitian_eigenvalues(m.adjoint() * m);
  DenseRieszBounds out;
  if (ev.size() == 0 || ev[ev.size() - 1] <= 0.0) return out;
  out.lower = std::max(0.0, ev[0]);
  out.upper = ev[ev.size() - 1];
  out.independent = out.lower > kSpectralCut * out.upper;
  out.degenerate = false;
  return out;
}

Membership brute_membership(const QuasiInvariantAction& action, const Eigen::VectorXcd& f,
                            std::span<const Eigen::VectorXcd> generators, double membership_ratio) {
  if (static_cast<std::size_t>(f.size()) != action.space().size()) throw InputError("oracle: function length mismatch");
  const Eigen::VectorXcd target = root_weights(action).cwiseProduct(f);
  Eigen::VectorXcd residual = target;
  if (!generators.empty()) {
    const Eigen::MatrixXcd m = synthesis_matrix(action, generators);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m * m.adjoint());
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double top = ev.size() > 0 ? ev[ev.size() - 1] : 0.0;
    if (top > 0.0) {
      for (Eigen::Index k = 0; k < ev.size(); ++k) {
        if (ev[k] > kSpectralCut * top) {
          const auto u = es.eigenvectors().col(k);
          residual -= u * u.dot(target);
        }
      }
    }
  }
  Membership out;
  out.residual = residual.norm();
  out.member = out.residual <= membership_ratio * std::max(1.0, target.norm());
  return out;
}

std::vector<std::size_t> dense_fiber_ranks(const QuasiInvariantAction& action,
                                           std::span<const Eigen::VectorXcd> generators) {
  const auto& group = action.group();
  const std::size_t order = group.order();
  const Eigen::VectorXcd w = root_weights(action);

  // orbits of every generator, computed once
  std::vector<std::vector<Eigen::VectorXcd>> orbits(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t g = 0; g < order; ++g) orbits[i].push_back(apply_rep(action, g, generators[i]));
  }

  double top = 0.0;
  std::vector<Eigen::VectorXd> spectra(order);
  for (std::size_t alpha = 0; alpha < order; ++alpha) {
    Eigen::MatrixXcd p(action.space().size(), generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) {
      Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(action.space().size());
      for (std::size_t g = 0; g < order; ++g) acc += std::conj(group.character(g, alpha)) * orbits[i][g];
      p.col(static_cast<Eigen::Index>(i)) = w.cwiseProduct(acc) / static_cast<double>(order);
    }
    spectra[alpha] = hermitian_eigenvalues(p.adjoint() * p);
    if (spectra[alpha].size() > 0) top = std::max(top, spectra[alpha][spectra[alpha].size() - 1]);
  }
  std::vector<std::size_t> ranks(order, 0);
  if (top <= 0.0) return ranks;
  for (std::size_t alpha = 0; alpha < order; ++alpha) {
    for (Eigen::Index k = 0; k < spectra[alpha].size(); ++k) {
      if (spectra[alpha][k] > kSpectralCut * top) ++ranks[alpha];
    }
  }
  return ranks;
}

}  // namespace gzak::oracle
