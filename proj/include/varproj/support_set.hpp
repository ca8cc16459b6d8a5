#pragma once

// Index sets and order relations on finite-support l2 vectors.

#include <initializer_list>
#include <set>
#include <vector>

#include "varproj/vectors.hpp"

namespace varproj {

/// Nonempty finite set M of positive indices.
class SupportSet {
 public:
  using Index = SparseVector::Index;

  /// Throws std::invalid_argument if empty or if it contains index 0.
  explicit SupportSet(std::set<Index> indices);
  SupportSet(std::initializer_list<Index> indices);

  bool contains(Index i) const { return indices_.count(i) != 0; }
  const std::set<Index>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  std::vector<Index> as_vector() const { return {indices_.begin(), indices_.end()}; }

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::set<Index> indices_;
};

/// x in Z_M: strictly positive exactly on M, zero elsewhere.
bool in_Z_M(const SparseVector& x, const SupportSet& m);

/// y in K_{complement of M}: y_i >= 0 for every i outside M.
bool in_K_Mbar(const SparseVector& y, const SupportSet& m);

/// y in the boundary part of K_{complement of M}: y_i = 0 for every i outside
/// M. On finite supports this is exactly the subspace R^M.
bool in_boundary_K_Mbar(const SparseVector& y, const SupportSet& m);

/// z <=_{complement of M} y: z_i <= y_i off M and z_i = y_i on M.
bool order_leq(const SparseVector& z, const SparseVector& y, const SupportSet& m);

}  // namespace varproj
