#include "arcmpc/core.hpp"

namespace arcmpc {

double angle_normalize(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("angle_normalize: non-finite input");
  double r = std::remainder(theta, 2.0 * kPi); // [-pi, pi]
  if (r <= -kPi) r = kPi;                      // map -pi to pi so the range is (-pi, pi]
  return r;
}

EpsilonPoint epsilon_point(const Pose& pose, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon_point: epsilon must be > 0");
  return pose.position() + epsilon * pose.heading();
}

} // namespace arcmpc
