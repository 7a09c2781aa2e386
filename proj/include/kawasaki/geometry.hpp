#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "kawasaki/grid.hpp"
#include "kawasaki/kernels.hpp"
#include "kawasaki/torus.hpp"

namespace kawasaki {

// Finite point set on a torus. Points keep stable indices; coincident points are allowed.
class Configuration {
public:
  explicit Configuration(Torus torus) : torus_(torus) {}
  Configuration(Torus torus, std::vector<Point> points);

  const Torus& torus() const { return torus_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }

  // Appends p wrapped into the box; returns its index.
  std::size_t add(const Point& p);
  void set(std::size_t i, const Point& p);

  // Points selected by the low bits of mask (bit i <-> point i).
  Configuration subset(std::uint64_t mask) const;

  bool operator==(const Configuration&) const = default;

private:
  Torus torus_;
  std::vector<Point> points_;
};

Point min_image_displacement(const Torus& torus, const Point& x, const Point& y);

/**
 * Uniform cell decomposition for a compactly supported interaction.
 *
 * Cells have side >= cutoff, so every point within distance cutoff of y sits
 * in y's cell or one of its 3^d neighbours. Only usable with at least three
 * cells per axis; check usable() before relying on neighbour queries.
 */
class CellList {
public:
  CellList(const Configuration& config, double cutoff);

  bool usable() const { return cells_per_axis_ >= 3; }
  int cells_per_axis() const { return cells_per_axis_; }
  std::size_t cell_count() const { return cells_.size(); }
  const std::vector<std::size_t>& cell(std::size_t c) const { return cells_[c]; }
  std::size_t cell_of_point(std::size_t i) const { return cell_of_point_[i]; }
  std::size_t cell_of(const Point& p) const;

  // Indices of all points in the neighbourhood of y, ascending.
  std::vector<std::size_t> candidates(const Point& y) const;

  // Keeps the structure in sync after configuration point i moved to p.
  void move(std::size_t i, const Point& p);

private:
  Torus torus_;
  int cells_per_axis_;
  double cell_side_;
  std::vector<std::vector<std::size_t>> cells_;
  std::vector<std::size_t> cell_of_point_;
};

// E(y, gamma) = sum_{x in gamma} phi(x - y), accumulated in index order.
double relative_energy(const Configuration& config, const Point& y, const PairKernel& phi);

// Same sum restricted to cell-list candidates (still in index order), for compact phi.
double relative_energy(const Configuration& config, const CellList& cells, const Point& y,
                       const PairKernel& phi);

// Poisson point process with intensity rho(x) dx, the intensity read as piecewise
// constant on grid cells. Sampled by thinning a homogeneous process at max(rho).
Configuration poisson_sample(const DensityField& intensity, Rng& rng);

// CSV: "# d=<d> L=<L>" comment, then a "x1,...,xd" header and one row per point.
void write_configuration_csv(std::ostream& out, const Configuration& config);
Configuration read_configuration_csv(std::istream& in);

}  // namespace kawasaki
