#pragma once

#include <string>

#include "kawasaki/point.hpp"

namespace kawasaki {

enum class KernelFamily { tophat, gaussian, exponential };

std::string to_string(KernelFamily family);

/**
 * Even, nonnegative, integrable radial kernel on a periodic box [0, L)^d.
 *
 * One type serves both the hopping kernel a and the pair potential phi.
 * Three closed-form families are supported:
 *   tophat       h * 1{|x| <= R}
 *   gaussian     A * exp(-|x|^2 / (2 sigma^2))
 *   exponential  A * exp(-kappa |x|)
 *
 * Construction rejects kernels whose mass outside the minimum-image cube
 * exceeds 1e-12 of the total, so the closed-form norms over R^d are also the
 * norms on the torus up to that tolerance.
 */
class PairKernel {
public:
  static PairKernel tophat(double height, double radius, int dim, double side);
  static PairKernel gaussian(double amplitude, double width, int dim, double side);
  static PairKernel exponential(double amplitude, double rate, int dim, double side);

  KernelFamily family() const { return family_; }
  // h for tophat, A otherwise.
  double amplitude() const { return amplitude_; }
  // R, sigma or kappa depending on the family.
  double shape() const { return shape_; }
  int dim() const { return dim_; }
  double side() const { return side_; }

  // Value at a displacement; the displacement is reduced to the minimum image first.
  double evaluate(const Point& displacement) const;
  double evaluate_radius(double r) const;

  double l1_norm() const;
  double linf_norm() const { return amplitude_; }

  // Closed-form Fourier transform  \int a(x) e^{-i k.x} dx  over R^d (real since a is even).
  double fourier(const Point& wave_vector) const;

  // Support radius; +inf for the non-compact families.
  double support_radius() const;
  bool compact() const { return family_ == KernelFamily::tophat; }
  bool is_zero() const { return amplitude_ == 0.0; }

  // Draws a displacement with density evaluate(.) / l1_norm() on the minimum-image cube.
  Point sample_displacement(Rng& rng) const;

  // Same family and shape with the amplitude multiplied by factor >= 0.
  PairKernel scaled(double factor) const;

private:
  PairKernel(KernelFamily family, double amplitude, double shape, int dim, double side);

  KernelFamily family_;
  double amplitude_;
  double shape_;
  int dim_;
  double side_;
};

}  // namespace kawasaki
