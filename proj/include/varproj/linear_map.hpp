#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "varproj/vectors.hpp"

namespace varproj {

/// Small row-major dense matrix.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  /// Largest entrywise |a_ij - b_ij|; throws on a shape mismatch.
  friend double max_abs_diff(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

double max_abs_diff(const Matrix& a, const Matrix& b);

/// Closed-form Frechet derivative of a projection on R^n. Every map that
/// occurs here is self-adjoint, so the same object also serves as its
/// adjoint in coderivative formulas.
class LinearMap {
 public:
  enum class Kind {
    Identity,
    Zero,
    /// y -> scale * (y - <y, anchor> anchor / ||anchor||^2)
    ScaledOrthComplement,
    /// y -> y masked to the kept coordinates
    CoordinateMask,
  };

  static LinearMap identity();
  static LinearMap zero();
  static LinearMap scaled_orth_complement(double scale, DenseVector anchor);
  static LinearMap coordinate_mask(std::vector<bool> keep);

  Kind kind() const { return kind_; }
  double scale() const { return scale_; }
  const std::optional<DenseVector>& anchor() const { return anchor_; }
  const std::vector<bool>& mask() const { return keep_; }

  DenseVector apply(const DenseVector& y) const;
  Matrix matrix(std::size_t n) const;

 private:
  LinearMap(Kind kind) : kind_(kind) {}

  Kind kind_;
  double scale_ = 1.0;
  std::optional<DenseVector> anchor_;
  std::vector<bool> keep_;
};

const char* to_string(LinearMap::Kind kind);

}  // namespace varproj
