#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hc/exact/radial_form.hpp"

namespace hc {

/// Sorted multi-index with 0-based entries.
using MultiIndex = std::vector<int>;

/// Every sorted multi-index of the given rank over {0..dim-1}, in lexicographic order.
std::vector<MultiIndex> sorted_indices(int dim, int rank);

/// Occurrence count of each value in the index (length dim).
std::vector<int> index_counts(const MultiIndex& index, int dim);

/// Number of distinct orderings of the multiset.
Integer multiplicity(const MultiIndex& index, int dim);

/// Totally symmetric tensor with RadialForm entries. Only sorted indices are
/// stored and zero components are omitted.
class SymTensor {
 public:
  using Components = std::map<MultiIndex, RadialForm>;

  SymTensor(int dim, int rank);
  static SymTensor scalar(const RadialForm& f);

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  /// Component for any (not necessarily sorted) index.
  RadialForm at(MultiIndex index) const;
  void set(MultiIndex index, const RadialForm& f);
  /// Rank-0 value.
  RadialForm value() const;

  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator-=(const SymTensor& o);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  SymTensor scaled(const ExactScalar& c) const;
  SymTensor operator-() const { return scaled(ExactScalar(-1)); }
  SymTensor times(const RadialForm& f) const;

  /// Apply a function to every stored component.
  SymTensor map(const std::function<RadialForm(const RadialForm&)>& fn) const;

  friend bool operator==(const SymTensor& a, const SymTensor& b);
  friend std::optional<ExactScalar> proportionality(const SymTensor& a, const SymTensor& b);

  std::string str() const;

 private:
  void check_index(const MultiIndex& index) const;

  int dim_;
  int rank_;
  Components comps_;
};

/// x_{i1} ... x_{il}
SymTensor tensor_power(int l, int dim);

/// delta_ik as a rank-2 tensor.
SymTensor kronecker(int dim);

/// << delta^{(x) k} t >>: sum over all distinct ways of splitting the index
/// positions into k delta pairs and the arguments of t. No normalization.
SymTensor symmetrize(int delta_count, const SymTensor& t);

/// Contraction over one index pair (all pairs are equivalent for a symmetric tensor).
SymTensor trace(const SymTensor& t);
SymTensor trace(const SymTensor& t, int first, int second);

/// Contract every index of a against the leading indices of b.
/// Requires a.rank() <= b.rank(); partial pairings are rejected.
SymTensor contract(const SymTensor& a, const SymTensor& b, int count);

/// sum_i d_i t_{i...}
SymTensor divergence(const SymTensor& t);

/// Rank-raising map (i, J) -> op(i, t_J). The result must be symmetric; every
/// split of each index is checked and std::domain_error is raised otherwise.
SymTensor raise(const SymTensor& t, const std::function<RadialForm(int, const RadialForm&)>& op);

/// d_i t_{J}
SymTensor gradient(const SymTensor& t);

/// Full contraction with product of vectors v_1 ... v_l (each of length dim).
RadialForm contract_vectors(const SymTensor& t, const std::vector<std::vector<ExactScalar>>& vectors);

}  // namespace hc
