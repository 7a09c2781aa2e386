#pragma once

#include <vector>

#include "kawasaki/grid.hpp"
#include "kawasaki/kernels.hpp"
#include "kawasaki/spectral.hpp"

namespace kawasaki {

// Periodic convolution of a field with a field (displacement layout) or a kernel.
DensityField convolve(const DensityField& f, const DensityField& g);
DensityField convolve(const DensityField& f, const PairKernel& g);

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityField> fields;
  // Largest sup-norm of rho seen at any step, including intermediate ones.
  double max_linf = 0.0;

  // Field recorded at time t (matched to within 1e-12); throws InputError if absent.
  const DensityField& at(double t) const;
};

/**
 * Explicit solver for the mean-field hopping equation
 *
 *   d/dt rho = (rho * a) exp(-(rho * phi)) - rho (a * exp(-(rho * phi)))
 *
 * on a periodic grid. Kernel spectra are computed once; every right-hand side
 * costs three convolutions.
 */
class VlasovSolver {
public:
  VlasovSolver(const Grid& grid, const PairKernel& a, const PairKernel& phi);

  const Grid& grid() const { return grid_; }
  const PairKernel& hopping() const { return a_; }
  const PairKernel& potential() const { return phi_; }

  // Throws StateError for entries below -1e-12.
  DensityField rhs(const DensityField& rho) const;

  // Classical RK4. Step sizes are shortened where needed so every output time is hit
  // exactly; dt * ||a||_1 must not exceed 0.1. Output times must be sorted within [0, t_end];
  // an empty list means {t_end}.
  Trajectory integrate(const DensityField& rho0, double t_end, double dt,
                       std::vector<double> output_times = {}) const;

private:
  DensityField rhs_unchecked(const DensityField& rho) const;

  Grid grid_;
  PairKernel a_;
  PairKernel phi_;
  Convolver convolver_;
  Spectrum a_hat_;
  Spectrum phi_hat_;
};

DensityField vlasov_rhs(const DensityField& rho, const PairKernel& a, const PairKernel& phi);

Trajectory integrate(const DensityField& rho0, double t_end, double dt, const PairKernel& a,
                     const PairKernel& phi, std::vector<double> output_times = {});

// ||a||_1 - a_hat(k): decay rate of the Fourier mode k of the phi = 0 linear equation.
double linear_mode_rate(const PairKernel& a, const Point& wave_vector);

}  // namespace kawasaki
