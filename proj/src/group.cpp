#include "gzak/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "gzak/error.hpp"

namespace gzak {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (factors_[j] < 1) {
      throw InputError("invariant factor #" + std::to_string(j) + " must be >= 1");
    }
  }
  strides_.assign(factors_.size(), 1);
  for (std::size_t j = factors_.size(); j-- > 0;) {
    strides_[j] = order_;
    order_ *= static_cast<std::size_t>(factors_[j]);
  }
  for (auto n : factors_) exponent_ = std::lcm(exponent_, n);
  phase_weights_.reserve(factors_.size());
  for (auto n : factors_) phase_weights_.push_back(exponent_ / n);

  roots_.resize(static_cast<std::size_t>(exponent_));
  for (std::int64_t s = 0; s < exponent_; ++s) {
    // quarter turns are exact so that sums of +-1, +-i cancel exactly
    if ((4 * s) % exponent_ == 0) {
      static constexpr Complex quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
      roots_[s] = quarter[(4 * s) / exponent_];
    } else {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(exponent_);
      roots_[s] = Complex(std::cos(angle), std::sin(angle));
    }
  }
}

void FiniteAbelianGroup::validate(const Element& g) const {
  if (g.size() != factors_.size()) {
    throw InputError("element has " + std::to_string(g.size()) + " components, group has rank " +
                     std::to_string(factors_.size()));
  }
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j] < 0 || g[j] >= factors_[j]) {
      throw InputError("element component #" + std::to_string(j) + " = " + std::to_string(g[j]) +
                       " is outside [0, " + std::to_string(factors_[j]) + ")");
    }
  }
}

bool FiniteAbelianGroup::contains(const Element& g) const {
  if (g.size() != factors_.size()) return false;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j] < 0 || g[j] >= factors_[j]) return false;
  }
  return true;
}

Element FiniteAbelianGroup::element(std::size_t index) const {
  if (index >= order_) throw InputError("element index " + std::to_string(index) + " out of range");
  Element g(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    g[j] = static_cast<std::int64_t>((index / strides_[j]) % static_cast<std::size_t>(factors_[j]));
  }
  return g;
}

std::size_t FiniteAbelianGroup::index(const Element& g) const {
  validate(g);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < g.size(); ++j) idx += static_cast<std::size_t>(g[j]) * strides_[j];
  return idx;
}

std::size_t FiniteAbelianGroup::add(std::size_t a, std::size_t b) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const auto n = static_cast<std::size_t>(factors_[j]);
    const std::size_t aj = (a / strides_[j]) % n;
    const std::size_t bj = (b / strides_[j]) % n;
    idx += ((aj + bj) % n) * strides_[j];
  }
  return idx;
}

std::size_t FiniteAbelianGroup::negate(std::size_t a) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const auto n = static_cast<std::size_t>(factors_[j]);
    const std::size_t aj = (a / strides_[j]) % n;
    idx += ((n - aj) % n) * strides_[j];
  }
  return idx;
}

Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  return element(add(index(a), index(b)));
}

Element FiniteAbelianGroup::negate(const Element& a) const { return element(negate(index(a))); }

std::int64_t FiniteAbelianGroup::element_order(std::size_t a) const {
  std::int64_t result = 1;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const std::int64_t n = factors_[j];
    const auto aj = static_cast<std::int64_t>((a / strides_[j]) % static_cast<std::size_t>(n));
    result = std::lcm(result, n / std::gcd(aj, n));
  }
  return result;
}

std::int64_t FiniteAbelianGroup::pairing_phase(std::size_t g, std::size_t alpha) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    const auto n = static_cast<std::size_t>(factors_[j]);
    const auto gj = static_cast<std::int64_t>((g / strides_[j]) % n);
    const auto aj = static_cast<std::int64_t>((alpha / strides_[j]) % n);
    // (g_j a_j mod n_j) * exponent / n_j stays below exponent
    s = (s + ((gj * aj) % factors_[j]) * phase_weights_[j]) % exponent_;
  }
  return s;
}

Complex FiniteAbelianGroup::root(std::int64_t phase) const {
  phase %= exponent_;
  if (phase < 0) phase += exponent_;
  return roots_[static_cast<std::size_t>(phase)];
}

Complex FiniteAbelianGroup::character(const Element& g, const Element& alpha) const {
  return character(index(g), index(alpha));
}

Eigen::VectorXcd dft(const FiniteAbelianGroup& group, const Eigen::VectorXcd& values) {
  const std::size_t n = group.order();
  if (static_cast<std::size_t>(values.size()) != n) {
    throw InputError("dft: expected " + std::to_string(n) + " values, got " + std::to_string(values.size()));
  }
  Eigen::VectorXcd out(n);
  for (std::size_t a = 0; a < n; ++a) {
    Complex acc = 0;
    for (std::size_t g = 0; g < n; ++g) acc += values[g] * std::conj(group.character(g, a));
    out[a] = acc;
  }
  return out;
}

Eigen::VectorXcd inverse_dft(const FiniteAbelianGroup& group, const Eigen::VectorXcd& spectrum) {
  const std::size_t n = group.order();
  if (static_cast<std::size_t>(spectrum.size()) != n) {
    throw InputError("inverse_dft: expected " + std::to_string(n) + " values, got " +
                     std::to_string(spectrum.size()));
  }
  Eigen::VectorXcd out(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t g = 0; g < n; ++g) {
    Complex acc = 0;
    for (std::size_t a = 0; a < n; ++a) acc += spectrum[a] * group.character(g, a);
    out[g] = acc * scale;
  }
  return out;
}

bool Subgroup::contains(std::size_t g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Subgroup subgroup_from_indices(const FiniteAbelianGroup& group, std::vector<std::size_t> generators) {
  for (auto g : generators) {
    if (g >= group.order()) throw InputError("subgroup generator index out of range");
  }
  std::vector<char> seen(group.order(), 0);
  std::vector<std::size_t> members{0};
  seen[0] = 1;
  // closure by breadth-first search over the Cayley graph
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto g : generators) {
      const std::size_t next = group.add(members[head], g);
      if (!seen[next]) {
        seen[next] = 1;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{group, std::move(members), std::move(generators)};
}

Subgroup subgroup_from_generators(const FiniteAbelianGroup& group, std::span<const Element> generators) {
  std::vector<std::size_t> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(group.index(g));
  return subgroup_from_indices(group, std::move(gens));
}

Subgroup annihilator(const FiniteAbelianGroup& group, const Subgroup& subgroup) {
  std::vector<std::size_t> members;
  for (std::size_t delta = 0; delta < group.order(); ++delta) {
    bool trivial = true;
    for (auto g : subgroup.generators) {
      if (std::abs(group.character(g, delta) - 1.0) > 1e-9) {
        trivial = false;
        break;
      }
    }
    if (trivial) members.push_back(delta);
  }
  // greedy generating set: add a member whenever it is not yet reached
  Subgroup result = subgroup_from_indices(group, {});
  for (auto m : members) {
    if (result.contains(m)) continue;
    auto gens = result.generators;
    gens.push_back(m);
    result = subgroup_from_indices(group, std::move(gens));
  }
  if (result.members != members) throw std::logic_error("annihilator is not closed");
  return result;
}

std::vector<std::size_t> coset_transversal(const FiniteAbelianGroup& group, const Subgroup& subgroup) {
  std::vector<char> covered(group.order(), 0);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (auto h : subgroup.members) covered[group.add(x, h)] = 1;
  }
  return reps;
}

namespace {

using IntMatrix = std::vector<std::vector<std::int64_t>>;  // row-major

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Integer kernel of the map Z^cols -> Z^rows given by `m`, via unimodular column
// reduction. Returns kernel basis vectors (length cols).
std::vector<std::vector<std::int64_t>> integer_kernel(IntMatrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  IntMatrix v(cols, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

  auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t t) {
    for (std::size_t r = 0; r < rows; ++r) m[r][dst] -= t * m[r][src];
    for (std::size_t r = 0; r < cols; ++r) v[r][dst] -= t * v[r][src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(v[r][a], v[r][b]);
  };

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < rows && pivot < cols; ++r) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = pivot; c < cols; ++c) {
        if (m[r][c] != 0 && (best == cols || std::abs(m[r][c]) < std::abs(m[r][best]))) best = c;
      }
      if (best == cols) break;
      col_swap(pivot, best);
      bool done = true;
      for (std::size_t c = pivot + 1; c < cols; ++c) {
        if (m[r][c] != 0) {
          col_axpy(c, pivot, floor_div(m[r][c], m[r][pivot]));
          if (m[r][c] != 0) done = false;
        }
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }
  std::vector<std::vector<std::int64_t>> kernel;
  for (std::size_t c = pivot; c < cols; ++c) {
    std::vector<std::int64_t> k(cols);
    for (std::size_t r = 0; r < cols; ++r) k[r] = v[r][c];
    kernel.push_back(std::move(k));
  }
  return kernel;
}

}  // namespace

std::size_t SubgroupPresentation::embed(const FiniteAbelianGroup& parent, std::size_t abstract_index) const {
  const Element k = abstract.element(abstract_index);
  std::size_t out = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::int64_t t = 0; t < k[i]; ++t) out = parent.add(out, basis[i]);
  }
  return out;
}

SubgroupPresentation present_subgroup(const Subgroup& subgroup) {
  const FiniteAbelianGroup& group = subgroup.parent;
  std::vector<std::size_t> gens;
  for (auto g : subgroup.generators) {
    if (g != 0) gens.push_back(g);
  }
  const std::size_t m = gens.size();
  if (m == 0) return SubgroupPresentation{FiniteAbelianGroup{}, {}};

  // Relations among the generators: c in Z^m with sum c_i g_i = 0, found as the
  // first m coordinates of the kernel of [B | diag(n)].
  const std::size_t k = group.rank();
  const auto& n = group.invariant_factors();
  IntMatrix b(k, std::vector<std::int64_t>(m + k, 0));
  for (std::size_t i = 0; i < m; ++i) {
    const Element g = group.element(gens[i]);
    for (std::size_t j = 0; j < k; ++j) b[j][i] = g[j];
  }
  for (std::size_t j = 0; j < k; ++j) b[j][m + j] = n[j];

  std::vector<std::int64_t> orders(m);
  for (std::size_t i = 0; i < m; ++i) orders[i] = group.element_order(gens[i]);

  // relation matrix: columns generate the relation lattice in Z^m
  IntMatrix rel(m);
  auto push_relation = [&](std::vector<std::int64_t> c) {
    for (std::size_t i = 0; i < m; ++i) {
      c[i] %= orders[i];
      if (c[i] < 0) c[i] += orders[i];
      rel[i].push_back(c[i]);
    }
  };
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::int64_t> c(m, 0);
    c[i] = orders[i];
    for (std::size_t r = 0; r < m; ++r) rel[r].push_back(c[r]);
  }
  for (auto& kv : integer_kernel(b, m + k)) push_relation(std::vector<std::int64_t>(kv.begin(), kv.begin() + m));

  // Smith normal form of rel, tracking P = U^{-1} so that columns of P form the
  // new basis of Z^m in which the relation lattice is diagonal.
  const std::size_t cols = rel[0].size();
  IntMatrix p(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) p[i][i] = 1;

  auto row_swap = [&](std::size_t a, std::size_t c) {
    std::swap(rel[a], rel[c]);
    for (std::size_t r = 0; r < m; ++r) std::swap(p[r][a], p[r][c]);
  };
  // row a -= t * row c
  auto row_axpy = [&](std::size_t a, std::size_t c, std::int64_t t) {
    for (std::size_t j = 0; j < cols; ++j) rel[a][j] -= t * rel[c][j];
    for (std::size_t r = 0; r < m; ++r) p[r][c] += t * p[r][a];
  };
  auto col_swap = [&](std::size_t a, std::size_t c) {
    for (std::size_t r = 0; r < m; ++r) std::swap(rel[r][a], rel[r][c]);
  };
  auto col_axpy = [&](std::size_t a, std::size_t c, std::int64_t t) {
    for (std::size_t r = 0; r < m; ++r) rel[r][a] -= t * rel[r][c];
  };

  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(m, cols); ++t) {
    while (true) {
      std::size_t br = m, bc = cols;
      for (std::size_t r = t; r < m; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (rel[r][c] != 0 && (br == m || std::abs(rel[r][c]) < std::abs(rel[br][bc]))) {
            br = r;
            bc = c;
          }
        }
      }
      if (br == m) break;
      row_swap(t, br);
      col_swap(t, bc);
      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (rel[r][t] != 0) {
          row_axpy(r, t, floor_div(rel[r][t], rel[t][t]));
          if (rel[r][t] != 0) clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (rel[t][c] != 0) {
          col_axpy(c, t, floor_div(rel[t][c], rel[t][t]));
          if (rel[t][c] != 0) clean = false;
        }
      }
      if (!clean) continue;
      // divisibility of the remaining block by the pivot
      std::size_t bad = m;
      for (std::size_t r = t + 1; r < m && bad == m; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (rel[r][c] % rel[t][t] != 0) {
            bad = r;
            break;
          }
        }
      }
      if (bad == m) break;
      row_axpy(t, bad, -1);
    }
    diag.push_back(std::abs(rel[t][t]));
  }

  std::vector<std::int64_t> factors;
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] == 1) continue;
    if (diag[i] == 0) throw std::logic_error("relation lattice is not of full rank");
    std::size_t h = 0;
    for (std::size_t j = 0; j < m; ++j) {
      std::int64_t coeff = p[j][i] % orders[j];
      if (coeff < 0) coeff += orders[j];
      for (std::int64_t t = 0; t < coeff; ++t) h = group.add(h, gens[j]);
    }
    factors.push_back(diag[i]);
    basis.push_back(h);
  }
  return SubgroupPresentation{FiniteAbelianGroup(std::move(factors)), std::move(basis)};
}

}  // namespace gzak
