#pragma once

// Shared geometry, time, and configuration types.

#include <cmath>
#include <stdexcept>
#include <string>

namespace arcmpc {

constexpr double kPi = 3.14159265358979323846;

// Branch threshold below which an arc is treated as a straight line.
constexpr double kOmegaEps = 1e-8;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

// Maps any finite angle into (-pi, pi].
double angle_normalize(double theta);

struct Pose {
  double x1 = 0.0;  // m
  double x2 = 0.0;  // m
  double psi = 0.0; // rad, kept in (-pi, pi]

  Pose() = default;
  Pose(double x1_, double x2_, double psi_) : x1(x1_), x2(x2_), psi(angle_normalize(psi_)) {}

  Vec2 position() const { return {x1, x2}; }
  Vec2 heading() const { return {std::cos(psi), std::sin(psi)}; }
};

struct VelocityPair {
  double v = 0.0;     // m/s
  double omega = 0.0; // rad/s
};

// Point a fixed distance ahead of the robot along its heading. Unlike the
// robot center, this point has no nonholonomic constraint.
using EpsilonPoint = Vec2;

EpsilonPoint epsilon_point(const Pose& pose, double epsilon);

struct VelocityLimits {
  double v_max = 1.0;     // m/s
  double omega_max = 2.0; // rad/s
};

struct HorizonConfig {
  double delta = 3.0;         // planning horizon length (s)
  double delta_execute = 0.2; // executed prefix per loop iteration (s)
  int n_arcs = 3;             // number of constant-velocity intervals N
  double epsilon = 0.2;       // offset of the controlled point (m)
  double delta_ball = 0.25;   // terminal ball radius (m)

  void validate() const {
    if (!(delta_execute > 0.0 && delta_execute < delta))
      throw std::invalid_argument("HorizonConfig: need 0 < delta_execute < delta");
    if (n_arcs < 1) throw std::invalid_argument("HorizonConfig: n_arcs must be >= 1");
    if (!(epsilon > 0.0)) throw std::invalid_argument("HorizonConfig: epsilon must be > 0");
    if (!(delta_ball > 0.0)) throw std::invalid_argument("HorizonConfig: delta_ball must be > 0");
  }
};

struct CostWeights {
  double rho1 = 1.0;  // translational velocity deviation
  double rho2 = 0.2;  // rotational velocity
  double rho3 = 0.05; // obstacle proximity sum
  double rho4 = 2.0;  // terminal quadratic
  double rho5 = 0.5;  // terminal barrier
  double rho6 = 1.0;  // tilt barrier
  double a_goal_slope = 2.0;
  double a_avoid_slope = 1.0;
  double d_min = 0.1;      // hard clearance from the robot disk to a cell center (m)
  double d_max = 1.5;      // obstacle influence radius (m)
  double v_desired = 0.9;  // m/s
  double phi_max = 0.5;    // rad, tilt barrier limit

  void validate() const {
    if (!(d_min < d_max)) throw std::invalid_argument("CostWeights: need d_min < d_max");
    if (!(v_desired > 0.0)) throw std::invalid_argument("CostWeights: v_desired must be > 0");
    if (rho1 < 0 || rho2 < 0 || rho3 < 0 || rho4 < 0 || rho5 < 0 || rho6 < 0)
      throw std::invalid_argument("CostWeights: weights must be nonnegative");
    if (!(a_goal_slope > 0.0) || !(a_avoid_slope > 0.0))
      throw std::invalid_argument("CostWeights: slopes must be positive");
  }
};

inline double clamp(double v, double lo, double hi) { return v < lo ? lo : (v > hi ? hi : v); }

} // namespace arcmpc
