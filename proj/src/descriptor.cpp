#include "varproj/descriptor.hpp"

namespace varproj {

const char* to_string(PartialRule rule) {
  switch (rule) {
    case PartialRule::BallSphere:
      return "ball-sphere";
    case PartialRule::ConeDelta:
      return "cone-delta";
    case PartialRule::L2SelfExclusion:
      return "l2-self-exclusion";
  }
  return "?";
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::Yes:
      return "yes";
    case Membership::No:
      return "no";
    case Membership::Unknown:
      return "unknown";
  }
  return "?";
}

namespace detail {

bool negative_on_zero_coordinate(const DenseVector& xbar, const DenseVector& y) {
  for (std::size_t i = 0; i < xbar.size() && i < y.size(); ++i) {
    if (xbar[i] == 0.0 && y[i] < 0.0) return true;
  }
  return false;
}

}  // namespace detail

}  // namespace varproj
