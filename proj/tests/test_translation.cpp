#include <doctest.h>

#include "fixtures.hpp"
#include "gzak/frames.hpp"
#include "gzak/ranges.hpp"
#include "gzak/translation.hpp"

using namespace gzak;
using gzak::test::delta;
using gzak::test::max_abs;
using gzak::test::Random;
using gzak::test::reference_character;

namespace {

TranslationScenario scenario(std::vector<std::int64_t> factors, std::vector<Element> gens) {
  return build_scenario(FiniteAbelianGroup(std::move(factors)), gens);
}

// Left side of the duality computed from scratch: full DFT on G by the
// closed-form pairing, then the transform on Gamma* with factor |Gamma|/|G|.
Complex reference_duality_lhs(const TranslationScenario& s, const Eigen::VectorXcd& f, std::size_t omega,
                              std::size_t x) {
  const auto& g = s.group;
  Complex acc = 0;
  for (auto d : s.annihilator.members) {
    const std::size_t xi = g.add(omega, d);
    Complex fhat = 0;
    for (std::size_t y = 0; y < g.order(); ++y) fhat += f[y] * std::conj(reference_character(g, g.element(y), g.element(xi)));
    acc += fhat * std::conj(reference_character(g, g.element(x), g.element(d)));
  }
  return acc * static_cast<double>(s.subgroup.order()) / static_cast<double>(g.order());
}

}  // namespace

TEST_CASE("build_scenario examples") {
  const auto s = test::s3();
  CHECK(s.subgroup.members == std::vector<std::size_t>{0, 3, 6, 9});
  CHECK(s.annihilator.members == std::vector<std::size_t>{0, 4, 8});
  CHECK(s.section_c == std::vector<std::size_t>{0, 1, 2});
  CHECK(s.section_omega == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(s.ledger.section_omega == doctest::Approx(0.25));
  CHECK(s.ledger.haar_annihilator == doctest::Approx(1.0 / 3.0));
  CHECK(s.ledger.annihilator_fourier == doctest::Approx(1.0 / 3.0));
  CHECK(s.ledger.haar_annihilator * s.ledger.section_omega == doctest::Approx(s.ledger.haar_dual));

  const auto whole = scenario({12}, {{1}});
  CHECK(whole.section_c == std::vector<std::size_t>{0});
  CHECK(whole.annihilator.members == std::vector<std::size_t>{0});
  CHECK(whole.section_omega.size() == 12);

  const auto trivial = scenario({12}, {});
  CHECK(trivial.section_c.size() == 12);
  CHECK(trivial.annihilator.order() == 12);
  CHECK(trivial.section_omega == std::vector<std::size_t>{0});
}

TEST_CASE("weil formula") {
  const auto s = test::s3();
  const auto w0 = weil_check(s, delta(12, 0));
  CHECK(w0.lhs == Complex(1, 0));
  CHECK(w0.rhs == Complex(1, 0));
  const auto w1 = weil_check(s, Eigen::VectorXcd::Ones(12));
  CHECK(w1.lhs == Complex(12, 0));
  CHECK(w1.deviation == 0.0);
  CHECK(weil_check(s, Eigen::VectorXcd::Zero(12)).deviation == 0.0);

  Random rng(81);
  for (const auto& sc : {test::s3(), scenario({12}, {{1}}), scenario({12}, {}), scenario({2, 6}, {{1, 2}})}) {
    for (int trial = 0; trial < 100; ++trial) CHECK(weil_check(sc, rng.function(sc.group.order())).deviation <= 1e-12);
  }
}

TEST_CASE("zakG examples") {
  const auto s = test::s3();
  const FiberedVector z0 = zakG_forward(s, delta(12, 0));
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(z0.values(0, k) == Complex(1, 0));
    CHECK(z0.values(1, k) == Complex(0, 0));
    CHECK(z0.values(2, k) == Complex(0, 0));
  }
  const FiberedVector z3 = zakG_forward(s, delta(12, 3));
  const Complex i(0, 1);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(z3.values(0, k) - std::pow(i, static_cast<int>(k))) <= 1e-15);
    CHECK(std::abs(z3.values(1, k)) == 0.0);
  }
  CHECK(zakG_forward(s, Eigen::VectorXcd::Zero(12)).values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("zakG isometry, inverse and intertwining") {
  Random rng(83);
  for (const auto& s : {test::s3(), scenario({2, 6}, {{1, 2}}), scenario({4, 4}, {{2, 0}, {0, 1}})}) {
    const std::size_t n = s.group.order();
    for (int trial = 0; trial < 50; ++trial) {
      const Eigen::VectorXcd f = rng.function(n);
      const FiberedVector z = zakG_forward(s, f);
      CHECK(std::abs(z.norm_squared() - f.squaredNorm()) <= 1e-12 * f.squaredNorm());
      CHECK(max_abs(zakG_inverse(s, z) - f) <= 1e-12);
      for (auto gamma : s.subgroup.members) {
        Eigen::VectorXcd shifted(n);
        for (std::size_t y = 0; y < n; ++y) shifted[y] = f[s.group.subtract(y, gamma)];
        const FiberedVector zs = zakG_forward(s, shifted);
        for (std::size_t k = 0; k < z.fiber_count(); ++k) {
          const Complex chi = s.group.character(gamma, s.section_omega[k]);
          CHECK((zs.values.col(k) - chi * z.values.col(k)).cwiseAbs().maxCoeff() <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("fiberize_T examples") {
  const auto s = test::s3();
  const Eigen::MatrixXcd t = fiberize_T(s, delta(12, 0));
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 4);
  CHECK((t.array() == Complex(1, 0)).all());

  const auto whole = scenario({12}, {{1}});
  Random rng(85);
  const Eigen::VectorXcd f = rng.function(12);
  const Eigen::MatrixXcd tw = fiberize_T(whole, f);
  const Eigen::VectorXcd fhat = fourier(whole, f);
  REQUIRE(tw.rows() == 1);
  for (std::size_t k = 0; k < 12; ++k) CHECK(tw(0, k) == fhat[whole.section_omega[k]]);
  CHECK(fiberize_T(s, Eigen::VectorXcd::Zero(12)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("duality between fiberization and the Zak transform") {
  const auto s = test::s3();
  CHECK(duality_check(s, Eigen::VectorXcd::Zero(12)).max_deviation == 0.0);
  CHECK(duality_check(s, delta(12, 0)).max_deviation <= 1e-12);

  // independent evaluation of the left side
  Random rng(87);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::VectorXcd f = rng.function(12);
    const Eigen::MatrixXcd t = fiberize_T(s, f);
    for (std::size_t k = 0; k < s.section_omega.size(); ++k) {
      const Eigen::VectorXcd lhs = annihilator_fourier(s, t.col(k));
      for (std::size_t c = 0; c < s.section_c.size(); ++c) {
        CHECK(std::abs(lhs[c] - reference_duality_lhs(s, f, s.section_omega[k], s.section_c[c])) <= 1e-12);
      }
    }
  }

  for (const auto& sc : {test::s3(), scenario({2, 6}, {{1, 2}}), scenario({4, 4}, {{2, 0}, {0, 1}})}) {
    for (int trial = 0; trial < 100; ++trial) {
      CHECK(duality_check(sc, rng.function(sc.group.order())).max_deviation <= 1e-12);
    }
    for (int trial = 0; trial < 50; ++trial) {
      CHECK(gramian_deviation(sc, rng.function(sc.group.order()), rng.function(sc.group.order())) <= 1e-12);
    }
  }
}

TEST_CASE("ti_analyze examples") {
  const auto s = test::s3();
  const auto a = ti_analyze(s, std::vector<Eigen::VectorXcd>{delta(12, 0)});
  CHECK(a.range.dims() == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(a.frame.lower == doctest::Approx(1.0));
  CHECK(a.frame.upper == doctest::Approx(1.0));
  CHECK(a.frame.is_parseval);
  CHECK(a.riesz.is_riesz);

  const auto whole = scenario({12}, {{1}});
  const auto w = ti_analyze(whole, std::vector<Eigen::VectorXcd>{delta(12, 0)});
  CHECK(w.frame.is_parseval);
  CHECK(w.riesz.is_riesz);

  const auto z = ti_analyze(s, std::vector<Eigen::VectorXcd>{Eigen::VectorXcd::Zero(12)});
  CHECK(length(z.range) == 0);
}

TEST_CASE("full group: range functions take values in {0, C}") {
  Random rng(89);
  const auto whole = scenario({2, 6}, {{1, 0}, {0, 1}});
  REQUIRE(whole.section_c.size() == 1);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Eigen::VectorXcd> g{rng.function(12), rng.function(12)};
    for (auto d : ti_analyze(whole, g).range.dims()) CHECK(d <= 1);
  }
  // the fiber at omega carries the spectrum at -omega
  Eigen::VectorXcd spectrum = Eigen::VectorXcd::Zero(12);
  spectrum[3] = 1.0;
  spectrum[7] = 2.0;
  const Eigen::VectorXcd f = inverse_dft(whole.group, spectrum);
  const auto dims = ti_analyze(whole, std::vector<Eigen::VectorXcd>{f}).range.dims();
  for (std::size_t k = 0; k < 12; ++k) {
    const std::size_t xi = whole.group.negate(whole.section_omega[k]);
    CHECK(dims[k] == ((xi == 3 || xi == 7) ? 1u : 0u));
  }
}

TEST_CASE("translation action reproduces the fiber data") {
  Random rng(91);
  for (const auto& s : {test::s3(), scenario({2, 6}, {{1, 2}}), scenario({4, 4}, {{2, 0}, {0, 1}})}) {
    const TranslationAction ta = translation_action(s);
    const ZakTransform zak(ta.action);
    CHECK(zak.transversal().points == s.section_c);
    std::vector<std::size_t> seen = ta.fiber_of_omega;
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());

    const std::vector<Eigen::VectorXcd> g{rng.function(s.group.order()), rng.function(s.group.order())};
    for (const auto& f : g) {
      const FiberedVector a = zakG_forward(s, f);
      const FiberedVector b = zak.forward(f);
      for (std::size_t k = 0; k < s.section_omega.size(); ++k) {
        CHECK((a.values.col(k) - b.values.col(ta.fiber_of_omega[k])).cwiseAbs().maxCoeff() <= 1e-10);
      }
    }
    const auto direct = ti_analyze(s, g);
    const auto frame = frame_check(zak, g);
    CHECK(std::abs(direct.frame.lower - frame.lower) <= 1e-10 * frame.upper);
    CHECK(std::abs(direct.frame.upper - frame.upper) <= 1e-10 * frame.upper);
  }
}
