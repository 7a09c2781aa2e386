#include "kawasaki/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "kawasaki/errors.hpp"

namespace kawasaki {

Grid::Grid(Torus torus, int n) : torus_(torus), n_(n) {
  if (n < 8 || !std::has_single_bit(static_cast<unsigned>(n)))
    throw ConfigError("grid n must be a power of two and at least 8");
  spacing_ = torus_.side() / n_;
  cell_volume_ = std::pow(spacing_, torus_.dim());
  size_ = 1;
  for (int i = 0; i < torus_.dim(); ++i) size_ *= static_cast<std::size_t>(n_);
}

GridIndex Grid::multi_index(std::size_t flat) const {
  GridIndex idx{0, 0, 0};
  for (int axis = dim() - 1; axis >= 0; --axis) {
    idx[axis] = static_cast<int>(flat % n_);
    flat /= n_;
  }
  return idx;
}

std::size_t Grid::flat_index(const GridIndex& index) const {
  std::size_t flat = 0;
  for (int axis = 0; axis < dim(); ++axis) {
    const int i = ((index[axis] % n_) + n_) % n_;
    flat = flat * n_ + static_cast<std::size_t>(i);
  }
  return flat;
}

Point Grid::coordinate(std::size_t flat) const {
  const GridIndex idx = multi_index(flat);
  Point p{0.0, 0.0, 0.0};
  for (int axis = 0; axis < dim(); ++axis) p[axis] = idx[axis] * spacing_;
  return p;
}

Point Grid::displacement(std::size_t flat) const {
  const GridIndex idx = multi_index(flat);
  Point p{0.0, 0.0, 0.0};
  for (int axis = 0; axis < dim(); ++axis) {
    const int i = idx[axis] >= n_ / 2 ? idx[axis] - n_ : idx[axis];
    p[axis] = i * spacing_;
  }
  return p;
}

std::size_t Grid::nearest_cell(const Point& x) const {
  GridIndex idx{0, 0, 0};
  for (int axis = 0; axis < dim(); ++axis)
    idx[axis] = static_cast<int>(std::floor(x[axis] / spacing_ + 0.5));
  return flat_index(idx);
}

DensityField::DensityField(Grid grid, double fill) : grid_(grid), values_(grid.size(), fill) {}

DensityField::DensityField(Grid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw InputError("field size does not match grid");
}

DensityField DensityField::sample(const Grid& grid,
                                  const std::function<double(const Point&)>& f) {
  DensityField field(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) field.values_[i] = f(grid.coordinate(i));
  return field;
}

DensityField DensityField::from_kernel(const Grid& grid, const PairKernel& kernel) {
  if (kernel.dim() != grid.dim() || kernel.side() != grid.torus().side())
    throw InputError("kernel geometry does not match grid");
  DensityField field(grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    field.values_[i] = kernel.evaluate(grid.displacement(i));
  return field;
}

double DensityField::integral() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s * grid_.cell_volume();
}

double DensityField::l1_norm() const {
  double s = 0.0;
  for (double v : values_) s += std::fabs(v);
  return s * grid_.cell_volume();
}

double DensityField::max() const { return *std::max_element(values_.begin(), values_.end()); }

double DensityField::min() const { return *std::min_element(values_.begin(), values_.end()); }

double DensityField::at(const Point& x) const { return values_[grid_.nearest_cell(x)]; }

DensityField DensityField::restrict_to(const Grid& coarse) const {
  if (coarse.torus() != grid_.torus() || grid_.n() % coarse.n() != 0)
    throw InputError("coarse grid must share the torus and divide n");
  const int ratio = grid_.n() / coarse.n();
  const int half = ratio / 2;

  // 1-d trapezoid stencil over fine offsets [-half, half]
  std::vector<int> offsets;
  std::vector<double> weights;
  if (ratio == 1) {
    offsets = {0};
    weights = {1.0};
  } else {
    for (int o = -half; o <= half; ++o) {
      offsets.push_back(o);
      weights.push_back((o == -half || o == half ? 0.5 : 1.0) / ratio);
    }
  }
  const int dim = grid_.dim();
  const std::size_t stencil = offsets.size();
  std::size_t stencil_size = 1;
  for (int a = 0; a < dim; ++a) stencil_size *= stencil;

  DensityField out(coarse);
  for (std::size_t c = 0; c < coarse.size(); ++c) {
    const GridIndex centre = coarse.multi_index(c);
    double acc = 0.0;
    for (std::size_t s = 0; s < stencil_size; ++s) {
      std::size_t rem = s;
      GridIndex fine{0, 0, 0};
      double w = 1.0;
      for (int a = dim - 1; a >= 0; --a) {
        const std::size_t k = rem % stencil;
        rem /= stencil;
        fine[a] = centre[a] * ratio + offsets[k];
        w *= weights[k];
      }
      acc += w * values_[grid_.flat_index(fine)];
    }
    out.values_[c] = acc;
  }
  return out;
}

DensityField DensityField::map(const std::function<double(double)>& f) const {
  DensityField out(grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = f(values_[i]);
  return out;
}

void DensityField::require_same_grid(const DensityField& other) const {
  if (!(other.grid_ == grid_)) throw InputError("grid mismatch between fields");
}

DensityField& DensityField::operator+=(const DensityField& other) {
  require_same_grid(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

DensityField& DensityField::operator-=(const DensityField& other) {
  require_same_grid(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

DensityField& DensityField::operator*=(const DensityField& other) {
  require_same_grid(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= other.values_[i];
  return *this;
}

DensityField& DensityField::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

DensityField operator+(DensityField a, const DensityField& b) { return a += b; }
DensityField operator-(DensityField a, const DensityField& b) { return a -= b; }
DensityField operator*(DensityField a, const DensityField& b) { return a *= b; }
DensityField operator*(double s, DensityField a) { return a *= s; }

double inner_product(const DensityField& f, const DensityField& g) {
  if (!(f.grid() == g.grid())) throw InputError("grid mismatch between fields");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return s * f.grid().cell_volume();
}

}  // namespace kawasaki
