#pragma once

#include "kawasaki/point.hpp"

namespace kawasaki {

// Periodic box [0, L)^d, d in {1, 2, 3}.
class Torus {
public:
  Torus(int dim, double side);

  int dim() const { return dim_; }
  double side() const { return side_; }
  double volume() const;

  // Maps a point into [0, L)^d.
  Point wrap(const Point& p) const;
  bool contains(const Point& p) const;

  // y - x reduced componentwise to [-L/2, L/2).
  Point displacement(const Point& x, const Point& y) const;

  bool operator==(const Torus&) const = default;

private:
  int dim_;
  double side_;
};

}  // namespace kawasaki
