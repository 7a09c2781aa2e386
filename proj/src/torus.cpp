#include "kawasaki/torus.hpp"

#include <cmath>

#include "kawasaki/errors.hpp"

namespace kawasaki {

Torus::Torus(int dim, double side) : dim_(dim), side_(side) {
  if (dim < 1 || dim > kMaxDim) throw ConfigError("torus dimension d must be 1, 2 or 3");
  if (!(side > 0.0) || !std::isfinite(side)) throw ConfigError("torus side L must be positive");
}

double Torus::volume() const { return std::pow(side_, dim_); }

Point Torus::wrap(const Point& p) const {
  Point q{0.0, 0.0, 0.0};
  for (int i = 0; i < dim_; ++i) {
    double x = p[i] - side_ * std::floor(p[i] / side_);
    // floor can round a tiny negative value up to exactly L
    if (x >= side_) x -= side_;
    if (x < 0.0) x = 0.0;
    q[i] = x;
  }
  return q;
}

bool Torus::contains(const Point& p) const {
  for (int i = 0; i < dim_; ++i)
    if (!(p[i] >= 0.0 && p[i] < side_)) return false;
  for (int i = dim_; i < kMaxDim; ++i)
    if (p[i] != 0.0) return false;
  return true;
}

Point Torus::displacement(const Point& x, const Point& y) const {
  Point d{0.0, 0.0, 0.0};
  for (int i = 0; i < dim_; ++i) d[i] = min_image(y[i] - x[i], side_);
  return d;
}

}  // namespace kawasaki
