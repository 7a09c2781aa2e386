#include "kawasaki/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "kawasaki/errors.hpp"
#include "kawasaki/format.hpp"

namespace kawasaki {

Configuration::Configuration(Torus torus, std::vector<Point> points) : torus_(torus) {
  points_.reserve(points.size());
  for (const Point& p : points) add(p);
}

std::size_t Configuration::add(const Point& p) {
  for (int i = 0; i < torus_.dim(); ++i)
    if (!std::isfinite(p[i])) throw InputError("non-finite point coordinate");
  points_.push_back(torus_.wrap(p));
  return points_.size() - 1;
}

void Configuration::set(std::size_t i, const Point& p) {
  if (i >= points_.size()) throw InputError("point index out of range");
  points_[i] = torus_.wrap(p);
}

Configuration Configuration::subset(std::uint64_t mask) const {
  Configuration out(torus_);
  for (std::size_t i = 0; i < points_.size() && i < 64; ++i)
    if (mask >> i & 1u) out.points_.push_back(points_[i]);
  return out;
}

Point min_image_displacement(const Torus& torus, const Point& x, const Point& y) {
  return torus.displacement(x, y);
}

CellList::CellList(const Configuration& config, double cutoff) : torus_(config.torus()) {
  if (!(cutoff > 0.0)) throw InputError("cell list cutoff must be positive");
  // shrink the count slightly so that cell_side >= cutoff survives rounding
  cells_per_axis_ = static_cast<int>(std::floor(torus_.side() / (cutoff * (1.0 + 1e-9))));
  cells_per_axis_ = std::max(cells_per_axis_, 1);
  cell_side_ = torus_.side() / cells_per_axis_;
  std::size_t total = 1;
  for (int a = 0; a < torus_.dim(); ++a) total *= static_cast<std::size_t>(cells_per_axis_);
  cells_.resize(total);
  cell_of_point_.resize(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    const std::size_t c = cell_of(config[i]);
    cells_[c].push_back(i);
    cell_of_point_[i] = c;
  }
}

std::size_t CellList::cell_of(const Point& p) const {
  std::size_t c = 0;
  for (int a = 0; a < torus_.dim(); ++a) {
    int k = static_cast<int>(std::floor(p[a] / cell_side_));
    k = std::clamp(k, 0, cells_per_axis_ - 1);
    c = c * cells_per_axis_ + static_cast<std::size_t>(k);
  }
  return c;
}

std::vector<std::size_t> CellList::candidates(const Point& y) const {
  const int dim = torus_.dim();
  const int m = cells_per_axis_;
  std::array<int, kMaxDim> home{0, 0, 0};
  for (int a = 0; a < dim; ++a)
    home[a] = std::clamp(static_cast<int>(std::floor(y[a] / cell_side_)), 0, m - 1);

  std::vector<std::size_t> visited;
  std::size_t stencil = 1;
  for (int a = 0; a < dim; ++a) stencil *= 3;
  for (std::size_t s = 0; s < stencil; ++s) {
    std::size_t rem = s;
    std::size_t c = 0;
    for (int a = 0; a < dim; ++a) {
      const int offset = static_cast<int>(rem % 3) - 1;
      rem /= 3;
      const int k = ((home[a] + offset) % m + m) % m;
      c = c * m + static_cast<std::size_t>(k);
    }
    visited.push_back(c);
  }
  std::sort(visited.begin(), visited.end());
  visited.erase(std::unique(visited.begin(), visited.end()), visited.end());

  std::vector<std::size_t> out;
  for (std::size_t c : visited) out.insert(out.end(), cells_[c].begin(), cells_[c].end());
  std::sort(out.begin(), out.end());
  return out;
}

void CellList::move(std::size_t i, const Point& p) {
  const std::size_t from = cell_of_point_[i];
  const std::size_t to = cell_of(p);
  if (from == to) return;
  auto& src = cells_[from];
  src.erase(std::find(src.begin(), src.end(), i));
  cells_[to].push_back(i);
  cell_of_point_[i] = to;
}

double relative_energy(const Configuration& config, const Point& y, const PairKernel& phi) {
  if (phi.is_zero()) return 0.0;
  const Torus& torus = config.torus();
  double energy = 0.0;
  for (const Point& x : config.points()) energy += phi.evaluate(torus.displacement(y, x));
  return energy;
}

double relative_energy(const Configuration& config, const CellList& cells, const Point& y,
                       const PairKernel& phi) {
  if (phi.is_zero()) return 0.0;
  if (!cells.usable()) return relative_energy(config, y, phi);
  const Torus& torus = config.torus();
  double energy = 0.0;
  for (std::size_t i : cells.candidates(y)) energy += phi.evaluate(torus.displacement(y, config[i]));
  return energy;
}

Configuration poisson_sample(const DensityField& intensity, Rng& rng) {
  const Grid& grid = intensity.grid();
  const Torus& torus = grid.torus();
  Configuration config(torus);
  for (double v : intensity.values()) {
    if (v < 0.0) throw InputError("Poisson intensity must be nonnegative");
    if (!std::isfinite(v)) throw InputError("Poisson intensity must be finite");
  }
  const double peak = intensity.max();
  if (peak == 0.0) return config;

  std::poisson_distribution<long long> count(peak * torus.volume());
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const long long n = count(rng);
  for (long long k = 0; k < n; ++k) {
    Point p{0.0, 0.0, 0.0};
    for (int a = 0; a < torus.dim(); ++a) p[a] = uniform(rng) * torus.side();
    p = torus.wrap(p);
    const double keep = intensity.at(p) / peak;
    if (uniform(rng) < keep) config.add(p);
  }
  return config;
}

void write_configuration_csv(std::ostream& out, const Configuration& config) {
  const Torus& torus = config.torus();
  out << "# d=" << torus.dim() << " L=" << format_double(torus.side()) << "\n";
  for (int a = 0; a < torus.dim(); ++a) out << (a ? ",x" : "x") << a + 1;
  out << "\n";
  for (const Point& p : config.points()) {
    for (int a = 0; a < torus.dim(); ++a) out << (a ? "," : "") << format_double(p[a]);
    out << "\n";
  }
}

Configuration read_configuration_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("configuration CSV is empty");
  int dim = 0;
  double side = 0.0;
  if (std::sscanf(line.c_str(), "# d=%d L=%lf", &dim, &side) != 2)
    throw InputError("configuration CSV header must read '# d=<d> L=<L>'");
  Configuration config(Torus(dim, side));
  if (!std::getline(in, line)) throw InputError("configuration CSV lacks column header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    Point p{0.0, 0.0, 0.0};
    std::string cell;
    int a = 0;
    while (std::getline(row, cell, ',')) {
      if (a >= dim) throw InputError("configuration CSV row has too many columns");
      p[a++] = std::stod(cell);
    }
    if (a != dim) throw InputError("configuration CSV row has too few columns");
    config.add(p);
  }
  return config;
}

}  // namespace kawasaki
