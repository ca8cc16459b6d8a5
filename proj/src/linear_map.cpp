#include "varproj/linear_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace varproj {

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("matrix shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data_.size(); ++k) {
    worst = std::max(worst, std::abs(a.data_[k] - b.data_[k]));
  }
  return worst;
}

LinearMap LinearMap::identity() { return LinearMap(Kind::Identity); }

LinearMap LinearMap::zero() { return LinearMap(Kind::Zero); }

LinearMap LinearMap::scaled_orth_complement(double scale, DenseVector anchor) {
  require_nonzero_anchor(inner(anchor, anchor));
  LinearMap m(Kind::ScaledOrthComplement);
  m.scale_ = scale;
  m.anchor_ = std::move(anchor);
  return m;
}

LinearMap LinearMap::coordinate_mask(std::vector<bool> keep) {
  LinearMap m(Kind::CoordinateMask);
  m.keep_ = std::move(keep);
  return m;
}

DenseVector LinearMap::apply(const DenseVector& y) const {
  switch (kind_) {
    case Kind::Identity:
      return y;
    case Kind::Zero:
      return zero_like(y);
    case Kind::ScaledOrthComplement:
      return scale_ * orth_component(*anchor_, y);
    case Kind::CoordinateMask: {
      if (keep_.size() != y.size()) {
        throw std::invalid_argument("coordinate mask dimension mismatch");
      }
      std::vector<double> out(y.size(), 0.0);
      for (std::size_t i = 0; i < y.size(); ++i) {
        if (keep_[i]) out[i] = y[i];
      }
      return DenseVector(std::move(out));
    }
  }
  throw std::logic_error("unreachable");
}

Matrix LinearMap::matrix(std::size_t n) const {
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const DenseVector col = apply(DenseVector::unit(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

const char* to_string(LinearMap::Kind kind) {
  switch (kind) {
    case LinearMap::Kind::Identity:
      return "identity";
    case LinearMap::Kind::Zero:
      return "zero";
    case LinearMap::Kind::ScaledOrthComplement:
      return "scaled_orth_complement";
    case LinearMap::Kind::CoordinateMask:
      return "coordinate_mask";
  }
  return "?";
}

}  // namespace varproj
