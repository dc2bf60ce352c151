#include <doctest.h>

#include "fixtures.hpp"
#include "gzak/action.hpp"
#include "gzak/error.hpp"

using namespace gzak;
using gzak::test::delta;
using gzak::test::max_abs;
using gzak::test::Random;

TEST_CASE("weighted space rejects nonpositive weights") {
  CHECK_THROWS_WITH_AS(WeightedSpace({1.0, 0.0}), "space.weights[1] must be > 0", InputError);
  CHECK_THROWS_AS(WeightedSpace({-2.0}), InputError);
}

TEST_CASE("validate_action on fixtures") {
  // exhaustive over all 32 (g, x) pairs inside validate_action
  CHECK(validate_action(test::s1()).ok);
  CHECK(validate_action(test::s2()).ok);
  CHECK(validate_action(test::s4()).ok);
}

TEST_CASE("identity element must act trivially") {
  QuasiInvariantAction a(FiniteAbelianGroup({2}), WeightedSpace::uniform(2), {{1, 0}, {1, 0}});
  const auto report = validate_action(a);
  REQUIRE_FALSE(report.ok);
  CHECK(report.violations.front().condition == "(iii)");
}

TEST_CASE("composition law violations are reported") {
  // Z_3 on 3 points where sigma_2 is not sigma_1 twice
  QuasiInvariantAction a(FiniteAbelianGroup({3}), WeightedSpace::uniform(3), {{0, 1, 2}, {1, 2, 0}, {1, 2, 0}});
  const auto report = validate_action(a);
  REQUIRE_FALSE(report.ok);
  CHECK(report.violations.front().condition == "(ii)");
}

TEST_CASE("malformed tables are input errors") {
  CHECK_THROWS_WITH_AS(
      QuasiInvariantAction(FiniteAbelianGroup({2}), WeightedSpace::uniform(2), {{0, 1}, {1, 1}}),
      "action.table[1] not a permutation", InputError);
  CHECK_THROWS_AS(QuasiInvariantAction(FiniteAbelianGroup({2}), WeightedSpace::uniform(2), {{0, 1}}), InputError);
  CHECK_THROWS_AS(QuasiInvariantAction(FiniteAbelianGroup({2}), WeightedSpace::uniform(2), {{0, 1}, {0, 2}}),
                  InputError);
}

TEST_CASE("jacobian examples") {
  const auto a1 = test::s1();
  for (std::size_t g = 0; g < 4; ++g) {
    for (std::size_t x = 0; x < 8; ++x) CHECK(a1.jacobian(g, x) == 1.0);
  }
  const auto a2 = test::s2();
  CHECK(a2.jacobian(1, 0) == doctest::Approx(4.0));
  for (std::size_t x = 0; x < 4; ++x) CHECK(a2.jacobian(0, x) == 1.0);
}

TEST_CASE("jacobian cocycle exhaustively") {
  for (const auto& a : {test::s1(), test::s2(), test::s4()}) {
    const auto& g = a.group();
    for (std::size_t g1 = 0; g1 < g.order(); ++g1) {
      for (std::size_t g2 = 0; g2 < g.order(); ++g2) {
        for (std::size_t x = 0; x < a.space().size(); ++x) {
          const double lhs = a.jacobian(g.add(g1, g2), x);
          const double rhs = a.jacobian(g1, a.act(g2, x)) * a.jacobian(g2, x);
          CHECK(std::abs(lhs - rhs) <= 1e-12 * lhs);
        }
      }
    }
  }
}

TEST_CASE("tiling transversal examples") {
  CHECK(tiling_transversal(test::s1()).points == std::vector<std::size_t>{0, 1});
  CHECK(tiling_transversal(test::s2()).points == std::vector<std::size_t>{0, 1});

  QuasiInvariantAction trivial(FiniteAbelianGroup({2}), WeightedSpace::uniform(1), {{0}, {0}});
  CHECK(validate_action(trivial).ok);
  try {
    tiling_transversal(trivial);
    FAIL("expected NotFreeError");
  } catch (const NotFreeError& e) {
    CHECK(e.point() == 0);
  }
}

TEST_CASE("tiling transversal covers every point exactly once") {
  for (const auto& a : {test::s1(), test::s2(), test::s4()}) {
    const auto t = tiling_transversal(a);
    CHECK(t.size() * a.group().order() == a.space().size());
    std::vector<int> hits(a.space().size(), 0);
    for (std::size_t c = 0; c < t.size(); ++c) {
      for (std::size_t g = 0; g < a.group().order(); ++g) ++hits[a.act(g, t.points[c])];
    }
    for (std::size_t x = 0; x < a.space().size(); ++x) {
      CHECK(hits[x] == 1);
      CHECK(a.act(t.gamma_of[x], t.points[t.orbit_of[x]]) == x);
    }
  }
}

TEST_CASE("apply_rep examples") {
  const auto a1 = test::s1();
  Random rng(3);
  const Eigen::VectorXcd psi = rng.function(8);
  CHECK(max_abs(apply_rep(a1, 0, psi) - psi) == 0.0);
  CHECK(max_abs(apply_rep(a1, 1, delta(8, 0)) - delta(8, 2)) == 0.0);

  const auto a2 = test::s2();
  CHECK(max_abs(apply_rep(a2, 1, delta(4, 0)) - 0.5 * delta(4, 3)) <= 1e-15);
}

TEST_CASE("representation is unitary and multiplicative") {
  Random rng(17);
  for (const auto& a : {test::s1(), test::s2(), test::s4()}) {
    const auto& g = a.group();
    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::VectorXcd psi = rng.function(a.space().size());
      const double n2 = norm_squared(a.space(), psi);
      for (std::size_t gamma = 0; gamma < g.order(); ++gamma) {
        CHECK(std::abs(norm_squared(a.space(), apply_rep(a, gamma, psi)) - n2) <= 1e-12 * n2);
      }
      const std::size_t g1 = rng.index(g.order());
      const std::size_t g2 = rng.index(g.order());
      const Eigen::VectorXcd lhs = apply_rep(a, g1, apply_rep(a, g2, psi));
      const Eigen::VectorXcd rhs = apply_rep(a, g.add(g1, g2), psi);
      CHECK(max_abs(lhs - rhs) <= 1e-12 * max_abs(psi) * 10);
    }
  }
}

TEST_CASE("affine shorthand expands to the table") {
  const auto a = test::s1();
  CHECK(a.table()[1] == std::vector<std::size_t>{2, 3, 4, 5, 6, 7, 0, 1});
  CHECK_THROWS_AS(QuasiInvariantAction::affine(FiniteAbelianGroup({4}), WeightedSpace::uniform(8), {1, 2}),
                  InputError);
}
