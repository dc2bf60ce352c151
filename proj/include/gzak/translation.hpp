#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "gzak/action.hpp"
#include "gzak/frames.hpp"
#include "gzak/group.hpp"
#include "gzak/ranges.hpp"
#include "gzak/settings.hpp"
#include "gzak/zak.hpp"

namespace gzak {

/// Per-point masses making the Weil formula, Plancherel on every group in
/// play, and the fiberization duality hold at once.
struct NormalizationLedger {
  double haar_group = 1.0;        // m_G
  double haar_subgroup = 1.0;     // m_Gamma
  double section_c = 1.0;         // mu on C
  double haar_dual = 1.0;         // 1/|G|
  double section_omega = 1.0;     // nu on Omega, 1/|Gamma|
  double haar_annihilator = 1.0;  // 1/|Gamma*|
  double annihilator_fourier = 1.0;  // |Gamma|/|G|, factor in the Fourier transform on Gamma*
};

/// Translations by a subgroup Gamma of a finite abelian group G, with the
/// annihilator and lexicographic sections of G/Gamma and dual(G)/Gamma*.
struct TranslationScenario {
  FiniteAbelianGroup group;
  Subgroup subgroup;
  Subgroup annihilator;
  std::vector<std::size_t> section_c;
  std::vector<std::size_t> section_omega;
  NormalizationLedger ledger;

  FiberLayout layout() const;
};

TranslationScenario build_scenario(const FiniteAbelianGroup& group, std::span<const Element> subgroup_generators);

struct WeilCheck {
  Complex lhs;
  Complex rhs;
  double deviation = 0.0;
};

WeilCheck weil_check(const TranslationScenario& s, const Eigen::VectorXcd& f);

/// Z[f](omega)(x) = sum_{g in Gamma} f(x - g) conj((g, omega)) for any omega in
/// the dual and any x in G.
Complex zak_value(const TranslationScenario& s, const Eigen::VectorXcd& f, std::size_t omega, std::size_t x);

/// Fibers indexed by Omega, rows by C, unit weights, fiber measure 1/|Gamma|.
FiberedVector zakG_forward(const TranslationScenario& s, const Eigen::VectorXcd& f);
Eigen::VectorXcd zakG_inverse(const TranslationScenario& s, const FiberedVector& phi);

/// Full Fourier transform on G: fhat(xi) = sum_x f(x) conj((x, xi)).
Eigen::VectorXcd fourier(const TranslationScenario& s, const Eigen::VectorXcd& f);

/// T f(omega) = (fhat(omega + delta)) for delta in Gamma* (member order), one column per omega.
Eigen::MatrixXcd fiberize_T(const TranslationScenario& s, const Eigen::VectorXcd& f);

/// F(a)(x) = (|Gamma|/|G|) sum_{delta in Gamma*} a_delta conj((x, delta)) for x in C.
Eigen::VectorXcd annihilator_fourier(const TranslationScenario& s, const Eigen::VectorXcd& a);

struct DualityCheck {
  double max_deviation = 0.0;  // |F(Tf(omega))(x) - (x, omega) Z[f](-omega)(-x)|
};

DualityCheck duality_check(const TranslationScenario& s, const Eigen::VectorXcd& f);

/// max over omega of |<Tf(omega), Tg(omega)>_{Gamma*} - <Z[f](-omega), Z[g](-omega)>_{C}|,
/// with mass 1/|Gamma*| per point of Gamma*.
double gramian_deviation(const TranslationScenario& s, const Eigen::VectorXcd& f, const Eigen::VectorXcd& g);

struct TranslationAnalysis {
  RangeFunction range;
  FrameReport frame;
  FrameReport riesz;
};

TranslationAnalysis ti_analyze(const TranslationScenario& s, std::span<const Eigen::VectorXcd> generators,
                               const Settings& settings = {});

/// The same scenario as a group action x -> x + g on G with counting measure,
/// with Gamma given by its invariant-factor presentation. fiber_of_omega[k] is
/// the dual point of the presentation matching section_omega[k].
struct TranslationAction {
  QuasiInvariantAction action;
  SubgroupPresentation presentation;
  std::vector<std::size_t> fiber_of_omega;
};

TranslationAction translation_action(const TranslationScenario& s);

}  // namespace gzak
