#include "gzak/translation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gzak/error.hpp"

namespace gzak {

FiberLayout TranslationScenario::layout() const {
  return FiberLayout{section_omega.size(), Eigen::VectorXd::Constant(static_cast<Eigen::Index>(section_c.size()), 1.0),
                     ledger.section_omega};
}

TranslationScenario build_scenario(const FiniteAbelianGroup& group, std::span<const Element> subgroup_generators) {
  TranslationScenario s;
  s.group = group;
  s.subgroup = subgroup_from_generators(group, subgroup_generators);
  s.annihilator = annihilator(group, s.subgroup);
  s.section_c = coset_transversal(group, s.subgroup);
  s.section_omega = coset_transversal(group, s.annihilator);

  const auto order_g = static_cast<double>(group.order());
  const auto order_sub = static_cast<double>(s.subgroup.order());
  const auto order_ann = static_cast<double>(s.annihilator.order());
  s.ledger.haar_dual = 1.0 / order_g;
  s.ledger.section_omega = 1.0 / order_sub;
  s.ledger.haar_annihilator = 1.0 / order_ann;
  s.ledger.annihilator_fourier = order_sub / order_g;

  if (s.subgroup.order() * s.annihilator.order() != group.order() ||
      s.section_omega.size() != s.subgroup.order() ||
      s.section_c.size() * s.subgroup.order() != group.order()) {
    throw std::logic_error("translation scenario violates |Gamma| |Gamma*| = |G|");
  }
  return s;
}

namespace {

void check_function(const TranslationScenario& s, const Eigen::VectorXcd& f) {
  if (static_cast<std::size_t>(f.size()) != s.group.order()) {
    throw InputError("function has " + std::to_string(f.size()) + " entries, group order is " +
                     std::to_string(s.group.order()));
  }
}

}  // namespace

WeilCheck weil_check(const TranslationScenario& s, const Eigen::VectorXcd& f) {
  check_function(s, f);
  WeilCheck w{0.0, 0.0, 0.0};
  for (std::size_t y = 0; y < s.group.order(); ++y) w.lhs += f[y] * s.ledger.haar_group;
  for (auto x : s.section_c) {
    Complex inner = 0;
    for (auto g : s.subgroup.members) inner += f[s.group.add(x, g)] * s.ledger.haar_subgroup;
    w.rhs += inner * s.ledger.section_c;
  }
  w.deviation = std::abs(w.lhs - w.rhs);
  return w;
}

Complex zak_value(const TranslationScenario& s, const Eigen::VectorXcd& f, std::size_t omega, std::size_t x) {
  check_function(s, f);
  Complex acc = 0;
  for (auto g : s.subgroup.members) acc += f[s.group.subtract(x, g)] * std::conj(s.group.character(g, omega));
  return acc;
}

FiberedVector zakG_forward(const TranslationScenario& s, const Eigen::VectorXcd& f) {
  check_function(s, f);
  const FiberLayout layout = s.layout();
  FiberedVector out{Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(s.section_c.size()),
                                           static_cast<Eigen::Index>(s.section_omega.size())),
                    layout.weights, layout.fiber_measure};
  for (std::size_t k = 0; k < s.section_omega.size(); ++k) {
    for (std::size_t c = 0; c < s.section_c.size(); ++c) {
      out.values(c, k) = zak_value(s, f, s.section_omega[k], s.section_c[c]);
    }
  }
  return out;
}

Eigen::VectorXcd zakG_inverse(const TranslationScenario& s, const FiberedVector& phi) {
  if (phi.fiber_count() != s.section_omega.size() || phi.fiber_dim() != s.section_c.size()) {
    throw InputError("zakG_inverse: fibered vector has the wrong shape");
  }
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(s.group.order());
  const double scale = 1.0 / static_cast<double>(s.subgroup.order());
  for (std::size_t c = 0; c < s.section_c.size(); ++c) {
    for (auto g : s.subgroup.members) {
      Complex acc = 0;
      for (std::size_t k = 0; k < s.section_omega.size(); ++k) {
        acc += phi.values(c, k) * s.group.character(g, s.section_omega[k]);
      }
      f[s.group.subtract(s.section_c[c], g)] = acc * scale;
    }
  }
  return f;
}

Eigen::VectorXcd fourier(const TranslationScenario& s, const Eigen::VectorXcd& f) {
  check_function(s, f);
  return dft(s.group, f);
}

Eigen::MatrixXcd fiberize_T(const TranslationScenario& s, const Eigen::VectorXcd& f) {
  const Eigen::VectorXcd fhat = fourier(s, f);
  Eigen::MatrixXcd t(static_cast<Eigen::Index>(s.annihilator.order()),
                     static_cast<Eigen::Index>(s.section_omega.size()));
  for (std::size_t k = 0; k < s.section_omega.size(); ++k) {
    for (std::size_t d = 0; d < s.annihilator.order(); ++d) {
      t(d, k) = fhat[s.group.add(s.section_omega[k], s.annihilator.members[d])];
    }
  }
  return t;
}

Eigen::VectorXcd annihilator_fourier(const TranslationScenario& s, const Eigen::VectorXcd& a) {
  if (static_cast<std::size_t>(a.size()) != s.annihilator.order()) {
    throw InputError("annihilator_fourier: sequence length must equal |Gamma*|");
  }
  Eigen::VectorXcd out(static_cast<Eigen::Index>(s.section_c.size()));
  for (std::size_t c = 0; c < s.section_c.size(); ++c) {
    Complex acc = 0;
    for (std::size_t d = 0; d < s.annihilator.order(); ++d) {
      acc += a[d] * std::conj(s.group.character(s.section_c[c], s.annihilator.members[d]));
    }
    out[c] = acc * s.ledger.annihilator_fourier;
  }
  return out;
}

DualityCheck duality_check(const TranslationScenario& s, const Eigen::VectorXcd& f) {
  const Eigen::MatrixXcd t = fiberize_T(s, f);
  DualityCheck out;
  for (std::size_t k = 0; k < s.section_omega.size(); ++k) {
    const std::size_t omega = s.section_omega[k];
    const Eigen::VectorXcd lhs = annihilator_fourier(s, t.col(k));
    for (std::size_t c = 0; c < s.section_c.size(); ++c) {
      const std::size_t x = s.section_c[c];
      const Complex rhs = s.group.character(x, omega) * zak_value(s, f, s.group.negate(omega), s.group.negate(x));
      out.max_deviation = std::max(out.max_deviation, std::abs(lhs[c] - rhs));
    }
  }
  return out;
}

double gramian_deviation(const TranslationScenario& s, const Eigen::VectorXcd& f, const Eigen::VectorXcd& g) {
  const Eigen::MatrixXcd tf = fiberize_T(s, f);
  const Eigen::MatrixXcd tg = fiberize_T(s, g);
  double worst = 0.0;
  for (std::size_t k = 0; k < s.section_omega.size(); ++k) {
    const std::size_t neg = s.group.negate(s.section_omega[k]);
    const Complex lhs = tg.col(k).dot(tf.col(k)) * s.ledger.haar_annihilator;
    Complex rhs = 0;
    for (auto x : s.section_c) rhs += zak_value(s, f, neg, x) * std::conj(zak_value(s, g, neg, x)) * s.ledger.section_c;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

TranslationAnalysis ti_analyze(const TranslationScenario& s, std::span<const Eigen::VectorXcd> generators,
                               const Settings& settings) {
  std::vector<FiberedVector> fibers;
  fibers.reserve(generators.size());
  for (const auto& g : generators) fibers.push_back(zakG_forward(s, g));
  const FiberLayout layout = s.layout();
  return TranslationAnalysis{range_from_generators(layout, fibers, settings), frame_check(layout, fibers, settings),
                             riesz_check(layout, fibers, settings)};
}

TranslationAction translation_action(const TranslationScenario& s) {
  SubgroupPresentation presentation = present_subgroup(s.subgroup);
  const FiniteAbelianGroup& abstract = presentation.abstract;
  if (abstract.order() != s.subgroup.order()) throw std::logic_error("subgroup presentation has the wrong order");

  std::vector<std::vector<std::size_t>> table(abstract.order(), std::vector<std::size_t>(s.group.order()));
  for (std::size_t k = 0; k < abstract.order(); ++k) {
    const std::size_t shift = presentation.embed(s.group, k);
    for (std::size_t x = 0; x < s.group.order(); ++x) table[k][x] = s.group.add(x, shift);
  }
  QuasiInvariantAction action(abstract, WeightedSpace::uniform(s.group.order()), std::move(table));

  // omega restricted to Gamma, read off on the presentation basis
  std::vector<std::size_t> fiber_of_omega;
  fiber_of_omega.reserve(s.section_omega.size());
  for (auto omega : s.section_omega) {
    Element alpha(presentation.basis.size());
    for (std::size_t i = 0; i < presentation.basis.size(); ++i) {
      const std::int64_t phase = s.group.pairing_phase(presentation.basis[i], omega);
      alpha[i] = phase * abstract.invariant_factors()[i] / s.group.exponent();
    }
    fiber_of_omega.push_back(abstract.index(alpha));
  }
  return TranslationAction{std::move(action), std::move(presentation), std::move(fiber_of_omega)};
}

}  // namespace gzak
