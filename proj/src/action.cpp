#include "gzak/action.hpp"

#include <cmath>
#include <string>

#include "gzak/error.hpp"

namespace gzak {

WeightedSpace::WeightedSpace(std::vector<double> weights) : weights_(std::move(weights)) {
  for (std::size_t x = 0; x < weights_.size(); ++x) {
    if (!(weights_[x] > 0.0) || !std::isfinite(weights_[x])) {
      throw InputError("space.weights[" + std::to_string(x) + "] must be > 0");
    }
  }
}

Complex inner_product(const WeightedSpace& space, const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
  if (static_cast<std::size_t>(u.size()) != space.size() || static_cast<std::size_t>(v.size()) != space.size()) {
    throw InputError("function length does not match space size");
  }
  Complex acc = 0;
  for (std::size_t x = 0; x < space.size(); ++x) acc += u[x] * std::conj(v[x]) * space.weight(x);
  return acc;
}

double norm_squared(const WeightedSpace& space, const Eigen::VectorXcd& u) {
  return inner_product(space, u, u).real();
}

QuasiInvariantAction::QuasiInvariantAction(FiniteAbelianGroup group, WeightedSpace space,
                                           std::vector<std::vector<std::size_t>> table)
    : group_(std::move(group)), space_(std::move(space)), table_(std::move(table)) {
  const std::size_t n = space_.size();
  if (table_.size() != group_.order()) {
    throw InputError("action.table has " + std::to_string(table_.size()) + " rows, group order is " +
                     std::to_string(group_.order()));
  }
  for (std::size_t g = 0; g < table_.size(); ++g) {
    if (table_[g].size() != n) {
      throw InputError("action.table[" + std::to_string(g) + "] has length " + std::to_string(table_[g].size()) +
                       ", space size is " + std::to_string(n));
    }
    std::vector<char> hit(n, 0);
    for (auto y : table_[g]) {
      if (y >= n) throw InputError("action.table[" + std::to_string(g) + "] entry out of range");
      if (hit[y]) throw InputError("action.table[" + std::to_string(g) + "] not a permutation");
      hit[y] = 1;
    }
  }
}

QuasiInvariantAction QuasiInvariantAction::affine(FiniteAbelianGroup group, WeightedSpace space,
                                                  const std::vector<std::int64_t>& multipliers) {
  if (multipliers.size() != group.rank()) {
    throw InputError("affine action needs one multiplier per group factor");
  }
  const auto n = static_cast<std::int64_t>(space.size());
  if (n == 0) throw InputError("affine action on an empty space");
  std::vector<std::vector<std::size_t>> table(group.order(), std::vector<std::size_t>(space.size()));
  for (std::size_t g = 0; g < group.order(); ++g) {
    const Element e = group.element(g);
    std::int64_t shift = 0;
    for (std::size_t j = 0; j < e.size(); ++j) shift = (shift + (multipliers[j] % n) * e[j]) % n;
    if (shift < 0) shift += n;
    for (std::int64_t x = 0; x < n; ++x) table[g][x] = static_cast<std::size_t>((x + shift) % n);
  }
  return QuasiInvariantAction(std::move(group), std::move(space), std::move(table));
}

double QuasiInvariantAction::jacobian(std::size_t gamma, std::size_t x) const {
  if (gamma >= group_.order() || x >= space_.size()) throw InputError("jacobian: index out of range");
  return space_.weight(table_[gamma][x]) / space_.weight(x);
}

ValidationReport validate_action(const QuasiInvariantAction& action) {
  ValidationReport report;
  const auto& group = action.group();
  const std::size_t n = action.space().size();
  auto fail = [&](std::string condition, std::size_t g, std::size_t x, std::string detail) {
    report.ok = false;
    report.violations.push_back(Violation{std::move(condition), g, x, std::move(detail)});
  };

  for (std::size_t x = 0; x < n; ++x) {
    if (action.act(0, x) != x) {
      fail("(iii)", 0, x, "identity element moves point " + std::to_string(x));
      break;
    }
  }
  auto check_composition = [&] {
    for (std::size_t g = 0; g < group.order(); ++g) {
      for (std::size_t h = 0; h < group.order(); ++h) {
        const std::size_t gh = group.add(g, h);
        for (std::size_t x = 0; x < n; ++x) {
          if (action.act(g, action.act(h, x)) != action.act(gh, x)) {
            fail("(ii)", g, x, "sigma_g(sigma_h(x)) != sigma_{g+h}(x) for h = #" + std::to_string(h));
            return;
          }
        }
      }
    }
  };
  check_composition();
  for (std::size_t g = 0; g < group.order(); ++g) {
    for (std::size_t h = 0; h < group.order(); ++h) {
      for (std::size_t x = 0; x < n; ++x) {
        const double lhs = action.jacobian(group.add(g, h), x);
        const double rhs = action.jacobian(g, action.act(h, x)) * action.jacobian(h, x);
        if (std::abs(lhs - rhs) > 1e-12 * std::abs(lhs)) {
          fail("cocycle", g, x, "J(g+h,x) != J(g,sigma_h(x)) J(h,x) for h = #" + std::to_string(h));
          return report;
        }
      }
    }
  }
  return report;
}

TilingTransversal tiling_transversal(const QuasiInvariantAction& action) {
  const std::size_t n = action.space().size();
  const std::size_t order = action.group().order();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  TilingTransversal t;
  t.orbit_of.assign(n, unset);
  t.gamma_of.assign(n, unset);
  for (std::size_t x = 0; x < n; ++x) {
    if (t.orbit_of[x] != unset) continue;
    const std::size_t orbit = t.points.size();
    t.points.push_back(x);
    for (std::size_t g = 0; g < order; ++g) {
      const std::size_t y = action.act(g, x);
      if (t.orbit_of[y] != unset) throw NotFreeError(x, g);
      t.orbit_of[y] = orbit;
      t.gamma_of[y] = g;
    }
  }
  return t;
}

Eigen::VectorXcd apply_rep(const QuasiInvariantAction& action, std::size_t gamma, const Eigen::VectorXcd& psi) {
  const std::size_t n = action.space().size();
  if (static_cast<std::size_t>(psi.size()) != n) throw InputError("apply_rep: function length mismatch");
  if (gamma >= action.group().order()) throw InputError("apply_rep: group element out of range");
  const std::size_t inv = action.group().negate(gamma);
  Eigen::VectorXcd out(n);
  for (std::size_t x = 0; x < n; ++x) {
    out[x] = std::sqrt(action.jacobian(inv, x)) * psi[action.act(inv, x)];
  }
  return out;
}

}  // namespace gzak
