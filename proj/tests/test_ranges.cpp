#include <doctest.h>

#include "fixtures.hpp"
#include "gzak/oracle.hpp"
#include "gzak/ranges.hpp"

using namespace gzak;
using gzak::test::delta;
using gzak::test::max_abs;
using gzak::test::Random;

namespace {

std::vector<Eigen::VectorXcd> gens(std::initializer_list<Eigen::VectorXcd> list) { return {list}; }

// Random element of the space generated by `generators`: a combination of orbit members.
Eigen::VectorXcd random_member(const QuasiInvariantAction& a, const std::vector<Eigen::VectorXcd>& generators,
                               Random& rng) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(a.space().size()));
  for (const auto& g : generators) {
    for (std::size_t gamma = 0; gamma < a.group().order(); ++gamma) out += rng.scalar() * apply_rep(a, gamma, g);
  }
  return out;
}

}  // namespace

TEST_CASE("range_from_generators examples") {
  const ZakTransform zak(test::s1());
  const auto basis = range_from_generators(zak, gens({delta(8, 0), delta(8, 1)}));
  CHECK(basis.dims() == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(length(basis) == 2);

  const auto colinear = range_from_generators(zak, gens({delta(8, 0), delta(8, 0) + delta(8, 2)}));
  CHECK(colinear.dims() == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(length(colinear) == 1);

  const auto zero = range_from_generators(zak, gens({Eigen::VectorXcd::Zero(8)}));
  CHECK(zero.dims() == std::vector<std::size_t>{0, 0, 0, 0});
  CHECK(length(zero) == 0);

  const auto empty = range_from_generators(zak, std::vector<Eigen::VectorXcd>{});
  CHECK(length(empty) == 0);
}

TEST_CASE("bases are orthonormal in the weighted fiber product") {
  Random rng(41);
  for (const auto& a : {test::s2(), test::s4()}) {
    const ZakTransform zak(a);
    const std::vector<Eigen::VectorXcd> g{rng.function(a.space().size()), rng.function(a.space().size())};
    const auto range = range_from_generators(zak, g);
    const Eigen::VectorXd w = range.layout().weights;
    for (std::size_t alpha = 0; alpha < range.fiber_count(); ++alpha) {
      const Eigen::MatrixXcd q = range.basis(alpha);
      const Eigen::MatrixXcd gram = q.adjoint() * w.cast<Complex>().asDiagonal() * q;
      CHECK((gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK(range.dim(alpha) <= zak.transversal().size());
    }
  }
}

TEST_CASE("membership examples") {
  const auto a = test::s1();
  const ZakTransform zak(a);
  const auto range = range_from_generators(zak, gens({delta(8, 0)}));

  const auto orbit_member = membership(zak, apply_rep(a, 3, delta(8, 0)), range);
  CHECK(orbit_member.member);
  CHECK(orbit_member.residual <= 1e-12);

  const auto outsider = membership(zak, delta(8, 1), range);
  CHECK_FALSE(outsider.member);
  CHECK(outsider.residual * outsider.residual == doctest::Approx(1.0));

  const auto zero = membership(zak, Eigen::VectorXcd::Zero(8), range);
  CHECK(zero.member);
  CHECK(zero.residual == 0.0);
}

TEST_CASE("project examples") {
  const auto a = test::s1();
  const ZakTransform zak(a);
  const auto range = range_from_generators(zak, gens({delta(8, 0)}));
  const Eigen::VectorXcd member = delta(8, 0) - 2.0 * delta(8, 4);
  CHECK(max_abs(project(zak, member, range) - member) <= 1e-12);
  CHECK(max_abs(project(zak, delta(8, 1), range)) <= 1e-15);
  CHECK(max_abs(project(zak, Eigen::VectorXcd::Zero(8), range)) == 0.0);
}

TEST_CASE("projection, invariance and oracle agreement on random data") {
  Random rng(43);
  for (const auto& a : {test::s1(), test::s2(), test::s4()}) {
    const ZakTransform zak(a);
    const std::size_t n = a.space().size();
    const std::vector<Eigen::VectorXcd> g{rng.function(n)};
    const auto range = range_from_generators(zak, g);
    CHECK(length(range) <= g.size());
    const auto ranks = oracle::dense_fiber_ranks(a, g);
    CHECK(range.dims() == ranks);

    for (int trial = 0; trial < 100; ++trial) {
      const Eigen::VectorXcd psi = trial % 2 == 0 ? random_member(a, g, rng) : rng.function(n);
      const auto m = membership(zak, psi, range);
      const auto dense = oracle::brute_membership(a, psi, g);
      CHECK(m.member == dense.member);
      CHECK(m.member == (trial % 2 == 0));
      CHECK(std::abs(m.residual - dense.residual) <= 1e-10 * (1 + dense.residual));

      const Eigen::VectorXcd p = project(zak, psi, range);
      CHECK(membership(zak, p, range).member);
      CHECK(max_abs(project(zak, p, range) - p) <= 1e-10);
      // residual orthogonal to every orbit member
      const Eigen::VectorXcd r = psi - p;
      for (std::size_t gamma = 0; gamma < a.group().order(); ++gamma) {
        CHECK(std::abs(inner_product(a.space(), r, apply_rep(a, gamma, g[0]))) <= 1e-10 * (1 + max_abs(psi)));
      }
      for (std::size_t gamma = 0; gamma < a.group().order(); ++gamma) {
        const auto shifted = membership(zak, apply_rep(a, gamma, psi), range);
        CHECK(shifted.member == m.member);
        CHECK(std::abs(shifted.residual - m.residual) <= 1e-10);
      }
    }
  }
}

TEST_CASE("rank tolerance is configurable") {
  const ZakTransform zak(test::s1());
  const std::vector<Eigen::VectorXcd> g{delta(8, 0), delta(8, 0) + 1e-6 * delta(8, 1)};
  Settings strict;
  CHECK(length(range_from_generators(zak, g, strict)) == 2);
  Settings loose;
  loose.tolerance = 1e-3;
  CHECK(length(range_from_generators(zak, g, loose)) == 1);
}
