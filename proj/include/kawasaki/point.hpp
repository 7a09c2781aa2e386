#pragma once

#include <array>
#include <cmath>
#include <random>

namespace kawasaki {

inline constexpr int kMaxDim = 3;

// Points and displacements share one fixed-size type; components past the
// active dimension stay zero.
using Point = std::array<double, kMaxDim>;

using Rng = std::mt19937_64;

inline double norm_squared(const Point& p, int dim) {
  double s = 0.0;
  for (int i = 0; i < dim; ++i) s += p[i] * p[i];
  return s;
}

inline double norm(const Point& p, int dim) { return std::sqrt(norm_squared(p, dim)); }

inline Point operator+(const Point& a, const Point& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Point operator-(const Point& a, const Point& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Point operator-(const Point& a) { return {-a[0], -a[1], -a[2]}; }

inline Point operator*(double s, const Point& a) { return {s * a[0], s * a[1], s * a[2]}; }

// Reduces one coordinate difference to [-L/2, L/2).
inline double min_image(double delta, double side) {
  return delta - side * std::floor(delta / side + 0.5);
}

}  // namespace kawasaki
