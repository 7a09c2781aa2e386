#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "kawasaki/grid.hpp"

namespace kawasaki {

using Spectrum = std::vector<std::complex<double>>;

/**
 * Periodic convolution on a Grid through real-to-complex FFTs.
 *
 *   (f * g)(x_i) = h^d sum_j f(x_j) g(x_i - x_j)
 *
 * g is a field in displacement layout (see DensityField::from_kernel). Plans are
 * created once per grid; transforms allocate their own buffers, so const member
 * functions may run concurrently.
 */
class Convolver {
public:
  explicit Convolver(const Grid& grid);
  ~Convolver();
  Convolver(Convolver&&) noexcept;
  Convolver& operator=(Convolver&&) noexcept;
  Convolver(const Convolver&) = delete;
  Convolver& operator=(const Convolver&) = delete;

  const Grid& grid() const { return grid_; }

  Spectrum forward(const DensityField& f) const;
  DensityField convolve(const DensityField& f, const DensityField& g) const;
  DensityField convolve(const DensityField& f, const Spectrum& g_hat) const;

private:
  struct Plans;
  Grid grid_;
  std::unique_ptr<Plans> plans_;
};

}  // namespace kawasaki
