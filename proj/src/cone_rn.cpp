#include "varproj/cone_rn.hpp"

#include <stdexcept>

namespace varproj {

namespace {

std::vector<bool> positive_mask(const DenseVector& x) {
  std::vector<bool> keep(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) keep[i] = x[i] > 0.0;
  return keep;
}

void require_same_size(const DenseVector& x, const DenseVector& w) {
  if (x.size() != w.size()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

const char* to_string(ConeRegion r) {
  switch (r) {
    case ConeRegion::KInterior:
      return "k_interior";
    case ConeRegion::NegKInterior:
      return "neg_k_interior";
    case ConeRegion::KHat:
      return "k_hat";
    case ConeRegion::DeltaRn:
      return "delta_rn";
  }
  return "?";
}

DenseVector cone_project(const DenseVector& x) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] > 0.0 ? x[i] : 0.0;
  return DenseVector(std::move(out));
}

IndexPartition partition(const DenseVector& x) {
  IndexPartition p;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0) {
      p.plus.push_back(i + 1);
    } else if (x[i] < 0.0) {
      p.minus.push_back(i + 1);
    } else {
      p.zero.push_back(i + 1);
    }
  }
  return p;
}

ConeRegion cone_region(const DenseVector& x) {
  const IndexPartition p = partition(x);
  if (!p.zero.empty()) return ConeRegion::DeltaRn;
  if (p.minus.empty()) return ConeRegion::KInterior;
  if (p.plus.empty()) return ConeRegion::NegKInterior;
  return ConeRegion::KHat;
}

DenseVector b_map(const DenseVector& x, const DenseVector& w) {
  if (cone_region(x) != ConeRegion::KHat) {
    throw std::invalid_argument("b(x; .) is defined for x in KHat only");
  }
  require_same_size(x, w);
  return LinearMap::coordinate_mask(positive_mask(x)).apply(w);
}

DenseVector d_map(const DenseVector& x, const DenseVector& w) {
  if (cone_region(x) != ConeRegion::DeltaRn) {
    throw std::invalid_argument("d(x; .) is defined for x with a zero coordinate only");
  }
  require_same_size(x, w);
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0) {
      out[i] = w[i];
    } else if (x[i] == 0.0 && w[i] > 0.0) {
      out[i] = w[i];
    }
  }
  return DenseVector(std::move(out));
}

std::optional<LinearMap> cone_frechet(const DenseVector& x) {
  switch (cone_region(x)) {
    case ConeRegion::KInterior:
      return LinearMap::identity();
    case ConeRegion::NegKInterior:
      return LinearMap::zero();
    case ConeRegion::KHat:
      return LinearMap::coordinate_mask(positive_mask(x));
    case ConeRegion::DeltaRn:
      return std::nullopt;
  }
  return std::nullopt;
}

DenseVector cone_gateaux(const DenseVector& x, const DenseVector& w) {
  if (w.is_zero()) throw std::invalid_argument("direction must be nonzero");
  require_same_size(x, w);
  if (const auto map = cone_frechet(x)) return map->apply(w);
  return d_map(x, w);
}

CoderivDescriptor<DenseVector> cone_coderiv(const DenseVector& xbar, const DenseVector& y) {
  using D = CoderivDescriptor<DenseVector>;
  require_same_size(xbar, y);
  if (const auto map = cone_frechet(xbar)) return D::singleton(map->apply(y));
  if (y.is_zero()) return D::singleton(y);
  // D*P_K(xbar)(xbar) = {P_K(xbar)}: the quotient vanishes identically for
  // z = P_K(xbar), and every other z is cut off by a coordinate segment.
  // For xbar without positive coordinates this is {0}.
  if (y == xbar) return D::singleton(cone_project(xbar));
  return D::partial(PartialRule::ConeDelta, xbar, y);
}

}  // namespace varproj
