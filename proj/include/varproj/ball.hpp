#pragma once

// Metric projection onto the closed ball rB centered at the origin, with its
// directional/Frechet derivatives and coderivative descriptor.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "varproj/descriptor.hpp"
#include "varproj/linear_map.hpp"
#include "varproj/vectors.hpp"

namespace varproj {

class BallOperator {
 public:
  /// Throws std::invalid_argument unless radius is finite and positive.
  explicit BallOperator(double radius);

  double radius() const { return radius_; }
  /// Half-width of the band around the sphere classified as Sphere.
  double sphere_tolerance() const { return 1e-12 * std::max(1.0, radius_); }

 private:
  double radius_;
};

enum class BallRegion { Interior, Exterior, Sphere };

/// Behaviour of the segment xbar + t*w, t small, at a sphere point.
enum class DirectionClass {
  /// ||xbar + t w|| >= r for small t
  Up,
  /// ||xbar + t w|| < r for small t
  Down,
  /// w = s * xbar with s > 0
  Radial,
};

const char* to_string(BallRegion r);
const char* to_string(DirectionClass c);

template <HilbertVector V>
V ball_project(const BallOperator& op, const V& x) {
  const double n = norm(x);
  if (n <= op.radius()) return x;
  return rescale(x, op.radius(), n);
}

template <HilbertVector V>
BallRegion ball_region(const BallOperator& op, const V& x) {
  const double gap = norm(x) - op.radius();
  if (std::abs(gap) <= op.sphere_tolerance()) return BallRegion::Sphere;
  return gap < 0.0 ? BallRegion::Interior : BallRegion::Exterior;
}

/// Throws std::invalid_argument if xbar is not a sphere point or w = 0.
template <HilbertVector V>
DirectionClass classify_direction(const BallOperator& op, const V& xbar, const V& w) {
  if (w.is_zero()) throw std::invalid_argument("direction must be nonzero");
  if (ball_region(op, xbar) != BallRegion::Sphere) {
    throw std::invalid_argument("direction classes are defined at sphere points only");
  }
  const auto d = orth_decompose(xbar, w);
  if (d.a > 0.0 && norm(d.o) <= 1e-10 * norm(w)) return DirectionClass::Radial;
  // ||xbar + t w||^2 - r^2 = 2t<xbar, w> + t^2 ||w||^2, so the sign of
  // <xbar, w> decides; a tangent direction stays outside for every t > 0.
  // Tangents computed in floating point carry rounding noise in <xbar, w>,
  // hence the relative band counted as tangent. Both formulas agree to
  // within that band there.
  const double s = inner(xbar, w);
  return s >= -1e-12 * norm(xbar) * norm(w) ? DirectionClass::Up : DirectionClass::Down;
}

/// Directional derivative P'(xbar)(w). Throws std::invalid_argument on w = 0.
template <HilbertVector V>
V ball_gateaux(const BallOperator& op, const V& xbar, const V& w) {
  if (w.is_zero()) throw std::invalid_argument("direction must be nonzero");
  const double r = op.radius();
  switch (ball_region(op, xbar)) {
    case BallRegion::Interior:
      return w;
    case BallRegion::Exterior:
      return (r / norm(xbar)) * orth_component(xbar, w);
    case BallRegion::Sphere:
      switch (classify_direction(op, xbar, w)) {
        case DirectionClass::Up:
          return w - (inner(xbar, w) / (r * r)) * xbar;
        case DirectionClass::Radial:
          return zero_like(w);
        case DirectionClass::Down:
          return w;
      }
  }
  throw std::logic_error("unreachable");
}

/// Frechet derivative where it exists; absent on the sphere.
std::optional<LinearMap> ball_frechet(const BallOperator& op, const DenseVector& xbar);

template <HilbertVector V>
CoderivDescriptor<V> ball_coderiv(const BallOperator& op, const V& xbar, const V& y) {
  using D = CoderivDescriptor<V>;
  const double r = op.radius();
  switch (ball_region(op, xbar)) {
    case BallRegion::Interior:
      return D::singleton(y);
    case BallRegion::Exterior:
      return D::singleton((r / norm(xbar)) * orth_component(xbar, y));
    case BallRegion::Sphere:
      if (y.is_zero()) return D::singleton(y);
      if (approx_equal(y, xbar)) return D::empty();
      return D::partial(PartialRule::BallSphere, xbar, y);
  }
  throw std::logic_error("unreachable");
}

}  // namespace varproj
