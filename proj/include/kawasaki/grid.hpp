#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "kawasaki/kernels.hpp"
#include "kawasaki/torus.hpp"

namespace kawasaki {

using GridIndex = std::array<int, kMaxDim>;

// Uniform periodic grid with n points per dimension; node i sits at x = i*h.
// Each node owns the cell [(i - 1/2) h, (i + 1/2) h).
class Grid {
public:
  Grid(Torus torus, int n);

  const Torus& torus() const { return torus_; }
  int dim() const { return torus_.dim(); }
  int n() const { return n_; }
  double spacing() const { return spacing_; }
  double cell_volume() const { return cell_volume_; }
  std::size_t size() const { return size_; }

  GridIndex multi_index(std::size_t flat) const;
  std::size_t flat_index(const GridIndex& index) const;

  Point coordinate(std::size_t flat) const;
  // Node coordinate reduced to the minimum image, i.e. the displacement the node represents.
  Point displacement(std::size_t flat) const;
  std::size_t nearest_cell(const Point& x) const;

  bool operator==(const Grid&) const = default;

private:
  Torus torus_;
  int n_;
  double spacing_;
  double cell_volume_;
  std::size_t size_;
};

/**
 * Real values sampled on a Grid (row-major, last axis fastest).
 *
 * Houses both densities rho (nonnegative) and signed test functions; the
 * nonnegativity of densities is checked by the operations that need it.
 * Integrals use the periodic trapezoidal rule  h^d * sum(values).
 */
class DensityField {
public:
  explicit DensityField(Grid grid, double fill = 0.0);
  DensityField(Grid grid, std::vector<double> values);

  static DensityField sample(const Grid& grid, const std::function<double(const Point&)>& f);
  // Kernel laid out by displacement: node i holds kernel(displacement(i)).
  static DensityField from_kernel(const Grid& grid, const PairKernel& kernel);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  double integral() const;
  double l1_norm() const;
  double max() const;
  double min() const;
  // Nearest-cell (piecewise constant) interpolation.
  double at(const Point& x) const;

  // Cell averages on a coarser grid whose n divides this one's; trapezoidal weights
  // split the boundary nodes so the coarse cells tile the fine ones exactly.
  DensityField restrict_to(const Grid& coarse) const;

  DensityField map(const std::function<double(double)>& f) const;
  DensityField& operator+=(const DensityField& other);
  DensityField& operator-=(const DensityField& other);
  DensityField& operator*=(const DensityField& other);
  DensityField& operator*=(double s);

private:
  void require_same_grid(const DensityField& other) const;

  Grid grid_;
  std::vector<double> values_;
};

DensityField operator+(DensityField a, const DensityField& b);
DensityField operator-(DensityField a, const DensityField& b);
DensityField operator*(DensityField a, const DensityField& b);
DensityField operator*(double s, DensityField a);

// Trapezoidal \int f g.
double inner_product(const DensityField& f, const DensityField& g);

}  // namespace kawasaki
