#pragma once

// Metric projection onto the nonnegative orthant K of R^n.
//
// Sign tests are exact: a coordinate is zero only if it equals 0.0.

#include <cstddef>
#include <optional>
#include <vector>

#include "varproj/descriptor.hpp"
#include "varproj/linear_map.hpp"
#include "varproj/vectors.hpp"

namespace varproj {

/// Split of {1..n} by the sign of x_i. Indices are 1-based.
struct IndexPartition {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
  std::vector<std::size_t> zero;

  friend bool operator==(const IndexPartition&, const IndexPartition&) = default;
};

enum class ConeRegion {
  /// every coordinate positive
  KInterior,
  /// every coordinate negative
  NegKInterior,
  /// both signs present, no zero coordinate
  KHat,
  /// at least one zero coordinate
  DeltaRn,
};

const char* to_string(ConeRegion r);

DenseVector cone_project(const DenseVector& x);

IndexPartition partition(const DenseVector& x);

ConeRegion cone_region(const DenseVector& x);

/// b(x; w): w restricted to the positive coordinates of x.
/// Throws std::invalid_argument unless x is in KHat.
DenseVector b_map(const DenseVector& x, const DenseVector& w);

/// d(x; w): w on positive coordinates, 0 on negative ones, max(w_i, 0) on
/// zero ones. Throws std::invalid_argument unless x has a zero coordinate.
DenseVector d_map(const DenseVector& x, const DenseVector& w);

/// Frechet derivative where it exists; absent on DeltaRn.
std::optional<LinearMap> cone_frechet(const DenseVector& x);

/// Directional derivative P'_K(x)(w). Throws std::invalid_argument on w = 0.
DenseVector cone_gateaux(const DenseVector& x, const DenseVector& w);

CoderivDescriptor<DenseVector> cone_coderiv(const DenseVector& xbar, const DenseVector& y);

}  // namespace varproj
