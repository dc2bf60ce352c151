#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace gzak {

using Complex = std::complex<double>;
using Element = std::vector<std::int64_t>;

/// A finite abelian group Z_{n_1} x ... x Z_{n_k} given by its factor list.
///
/// Elements are addressed either as residue tuples or by their position in
/// the lexicographic enumeration (first component most significant). The dual
/// group is identified with the same tuples through the pairing
/// (g, a) = exp(2 pi i sum_j g_j a_j / n_j).
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<std::int64_t>{}) {}
  explicit FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors);

  const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  std::size_t order() const { return order_; }
  /// Least common multiple of the factors; every pairing is an exponent-th root of unity.
  std::int64_t exponent() const { return exponent_; }

  /// Throws InputError unless `g` has the right arity and residues in range.
  void validate(const Element& g) const;
  bool contains(const Element& g) const;

  Element element(std::size_t index) const;
  std::size_t index(const Element& g) const;

  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;
  std::size_t subtract(std::size_t a, std::size_t b) const { return add(a, negate(b)); }
  Element add(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;

  /// Order of the cyclic subgroup generated by element `a`.
  std::int64_t element_order(std::size_t a) const;

  /// Pairing as an integer phase s in [0, exponent): (g, a) = exp(2 pi i s / exponent).
  std::int64_t pairing_phase(std::size_t g, std::size_t alpha) const;
  /// exp(2 pi i phase / exponent), exact at multiples of a quarter turn.
  Complex root(std::int64_t phase) const;

  Complex character(std::size_t g, std::size_t alpha) const { return root(pairing_phase(g, alpha)); }
  Complex character(const Element& g, const Element& alpha) const;

  bool operator==(const FiniteAbelianGroup& other) const { return factors_ == other.factors_; }

 private:
  std::vector<std::int64_t> factors_;
  std::vector<std::size_t> strides_;
  std::vector<std::int64_t> phase_weights_;  // exponent / n_j
  std::size_t order_ = 1;
  std::int64_t exponent_ = 1;
  std::vector<Complex> roots_;
};

/// F(a) = sum_g c_g conj((g, a)), indexed by the dual in lexicographic order.
Eigen::VectorXcd dft(const FiniteAbelianGroup& group, const Eigen::VectorXcd& values);
/// c_g = (1/|G|) sum_a F(a) (g, a).
Eigen::VectorXcd inverse_dft(const FiniteAbelianGroup& group, const Eigen::VectorXcd& spectrum);

struct Subgroup {
  FiniteAbelianGroup parent;
  std::vector<std::size_t> members;     // indices into parent, ascending
  std::vector<std::size_t> generators;  // indices into parent

  std::size_t order() const { return members.size(); }
  bool contains(std::size_t g) const;
};

Subgroup subgroup_from_generators(const FiniteAbelianGroup& group, std::span<const Element> generators);
Subgroup subgroup_from_indices(const FiniteAbelianGroup& group, std::vector<std::size_t> generators);

/// Characters of the dual that are trivial on `subgroup`, as a subgroup of the dual.
Subgroup annihilator(const FiniteAbelianGroup& group, const Subgroup& subgroup);

/// Lexicographically smallest member of each coset, in ascending order.
std::vector<std::size_t> coset_transversal(const FiniteAbelianGroup& group, const Subgroup& subgroup);

/// An invariant-factor presentation of a subgroup: `abstract` is isomorphic to
/// the subgroup through k -> sum_i k_i * basis[i].
struct SubgroupPresentation {
  FiniteAbelianGroup abstract;
  std::vector<std::size_t> basis;  // parent indices, one per abstract factor

  /// Image of an abstract element (by index) in the parent group.
  std::size_t embed(const FiniteAbelianGroup& parent, std::size_t abstract_index) const;
};

SubgroupPresentation present_subgroup(const Subgroup& subgroup);

}  // namespace gzak
