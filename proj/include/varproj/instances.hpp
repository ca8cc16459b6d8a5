#pragma once

// Seeded random instances for each regime of the projections. Nonzero
// coordinates are kept at least 0.1 away from zero so that the probe radii
// never cross a regime boundary.

#include <cstdint>
#include <random>
#include <vector>

#include "varproj/support_set.hpp"
#include "varproj/vectors.hpp"

namespace varproj {

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  std::size_t uniform_int(std::size_t lo, std::size_t hi);  // inclusive
  double gaussian();
  bool coin();

  /// Magnitude in [0.1, 2] with a random sign.
  double signed_away_from_zero();

  DenseVector dense(std::size_t n, double lo, double hi);
  DenseVector unit_direction(std::size_t n);

  DenseVector ball_interior(std::size_t n, double r);  // norm in [0, 0.8r]
  DenseVector ball_exterior(std::size_t n, double r);  // norm in [1.2r, 3r]
  DenseVector ball_sphere(std::size_t n, double r);

  DenseVector cone_interior(std::size_t n);      // all coordinates in [0.1, 2]
  DenseVector neg_cone_interior(std::size_t n);  // all in [-2, -0.1]
  DenseVector cone_hat(std::size_t n);           // n >= 2, both signs, no zero
  /// At least one exact zero; pass allow_positive = false for xbar^+ empty,
  /// in which case at least one coordinate is negative.
  DenseVector cone_delta(std::size_t n, bool allow_positive = true);

  /// Nonempty M within {1..max_index}.
  SupportSet support(std::size_t size, std::size_t max_index);
  /// Point of Z_M with values in [0.1, 2].
  SparseVector z_m_point(const SupportSet& m);
  /// y with arbitrary-sign values (|.| >= 0.1) on M and positive values on
  /// off_m_count fresh indices outside M.
  SparseVector k_mbar_point(const SupportSet& m, std::size_t off_m_count);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace varproj
