#include "varproj/ball.hpp"

namespace varproj {

BallOperator::BallOperator(double radius) : radius_(radius) {
  if (!(std::isfinite(radius) && radius > 0.0)) {
    throw std::invalid_argument("ball radius must be positive and finite");
  }
}

const char* to_string(BallRegion r) {
  switch (r) {
    case BallRegion::Interior:
      return "interior";
    case BallRegion::Exterior:
      return "exterior";
    case BallRegion::Sphere:
      return "sphere";
  }
  return "?";
}

const char* to_string(DirectionClass c) {
  switch (c) {
    case DirectionClass::Up:
      return "up";
    case DirectionClass::Down:
      return "down";
    case DirectionClass::Radial:
      return "radial";
  }
  return "?";
}

std::optional<LinearMap> ball_frechet(const BallOperator& op, const DenseVector& xbar) {
  switch (ball_region(op, xbar)) {
    case BallRegion::Interior:
      return LinearMap::identity();
    case BallRegion::Exterior:
      return LinearMap::scaled_orth_complement(op.radius() / norm(xbar), xbar);
    case BallRegion::Sphere:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace varproj
