#include "kawasaki/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "kawasaki/errors.hpp"

namespace kawasaki {

namespace {

constexpr double kTailTolerance = 1e-12;

// Volume of the unit ball in d dimensions.
double unit_ball_volume(int dim) {
  switch (dim) {
    case 1: return 2.0;
    case 2: return std::numbers::pi;
    default: return 4.0 / 3.0 * std::numbers::pi;
  }
}

// Regularized upper incomplete gamma Q(d, u) for integer d.
double gamma_q_integer(int dim, double u) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < dim; ++k) {
    term *= u / k;
    sum += term;
  }
  return std::exp(-u) * sum;
}

}  // namespace

std::string to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::tophat: return "tophat";
    case KernelFamily::gaussian: return "gaussian";
    case KernelFamily::exponential: return "exponential";
  }
  return "unknown";
}

PairKernel::PairKernel(KernelFamily family, double amplitude, double shape, int dim, double side)
    : family_(family), amplitude_(amplitude), shape_(shape), dim_(dim), side_(side) {
  if (dim < 1 || dim > kMaxDim) throw ConfigError("kernel dimension must be 1, 2 or 3");
  if (!(side > 0.0) || !std::isfinite(side)) throw ConfigError("torus side L must be positive");
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude))
    throw ConfigError("kernel amplitude must be finite and nonnegative");
  if (!(shape > 0.0) || !std::isfinite(shape))
    throw ConfigError("kernel shape parameter must be finite and positive");
  if (amplitude == 0.0) return;

  const double half = 0.5 * side;
  double tail = 0.0;
  switch (family) {
    case KernelFamily::tophat:
      if (shape >= half) throw ConfigError("tophat radius must be below L/2");
      break;
    case KernelFamily::gaussian:
      tail = dim * std::erfc(half / (std::numbers::sqrt2 * shape));
      break;
    case KernelFamily::exponential:
      tail = gamma_q_integer(dim, shape * half);
      break;
  }
  if (tail > kTailTolerance)
    throw ConfigError("kernel " + to_string(family) +
                      " is too wide for the torus: periodic tail mass exceeds 1e-12");
}

PairKernel PairKernel::tophat(double height, double radius, int dim, double side) {
  return PairKernel(KernelFamily::tophat, height, radius, dim, side);
}

PairKernel PairKernel::gaussian(double amplitude, double width, int dim, double side) {
  return PairKernel(KernelFamily::gaussian, amplitude, width, dim, side);
}

PairKernel PairKernel::exponential(double amplitude, double rate, int dim, double side) {
  return PairKernel(KernelFamily::exponential, amplitude, rate, dim, side);
}

double PairKernel::evaluate_radius(double r) const {
  switch (family_) {
    case KernelFamily::tophat: return r <= shape_ ? amplitude_ : 0.0;
    case KernelFamily::gaussian: return amplitude_ * std::exp(-0.5 * r * r / (shape_ * shape_));
    case KernelFamily::exponential: return amplitude_ * std::exp(-shape_ * r);
  }
  return 0.0;
}

double PairKernel::evaluate(const Point& displacement) const {
  double r2 = 0.0;
  for (int i = 0; i < dim_; ++i) {
    if (!std::isfinite(displacement[i])) throw InputError("non-finite displacement");
    const double x = min_image(displacement[i], side_);
    r2 += x * x;
  }
  if (family_ == KernelFamily::gaussian)
    return amplitude_ * std::exp(-0.5 * r2 / (shape_ * shape_));
  if (dim_ == 1) return evaluate_radius(std::fabs(min_image(displacement[0], side_)));
  return evaluate_radius(std::sqrt(r2));
}

double PairKernel::l1_norm() const {
  switch (family_) {
    case KernelFamily::tophat:
      return amplitude_ * unit_ball_volume(dim_) * std::pow(shape_, dim_);
    case KernelFamily::gaussian:
      return amplitude_ * std::pow(2.0 * std::numbers::pi * shape_ * shape_, 0.5 * dim_);
    case KernelFamily::exponential: {
      // A * |S^{d-1}| * (d-1)! / kappa^d
      const double surface = dim_ * unit_ball_volume(dim_);
      const double factorial = dim_ == 3 ? 2.0 : 1.0;
      return amplitude_ * surface * factorial / std::pow(shape_, dim_);
    }
  }
  return 0.0;
}

double PairKernel::fourier(const Point& wave_vector) const {
  const double k = norm(wave_vector, dim_);
  const double mass = l1_norm();
  if (k == 0.0) return mass;
  switch (family_) {
    case KernelFamily::tophat: {
      const double kr = k * shape_;
      if (dim_ == 1) return 2.0 * amplitude_ * std::sin(kr) / k;
      if (dim_ == 2)
        return 2.0 * std::numbers::pi * amplitude_ * shape_ * std::cyl_bessel_j(1.0, kr) / k;
      return 4.0 * std::numbers::pi * amplitude_ * (std::sin(kr) - kr * std::cos(kr)) / (k * k * k);
    }
    case KernelFamily::gaussian:
      return mass * std::exp(-0.5 * shape_ * shape_ * k * k);
    case KernelFamily::exponential: {
      const double q = shape_ * shape_ + k * k;
      if (dim_ == 1) return 2.0 * amplitude_ * shape_ / q;
      if (dim_ == 2) return 2.0 * std::numbers::pi * amplitude_ * shape_ / std::pow(q, 1.5);
      return 8.0 * std::numbers::pi * amplitude_ * shape_ / (q * q);
    }
  }
  return 0.0;
}

double PairKernel::support_radius() const {
  return compact() ? shape_ : std::numeric_limits<double>::infinity();
}

Point PairKernel::sample_displacement(Rng& rng) const {
  if (is_zero()) throw ConfigError("cannot sample displacements from a zero kernel");
  const double half = 0.5 * side_;
  auto inside_cube = [&](const Point& p) {
    for (int i = 0; i < dim_; ++i)
      if (p[i] < -half || p[i] >= half) return false;
    return true;
  };

  Point p{0.0, 0.0, 0.0};
  switch (family_) {
    case KernelFamily::tophat: {
      std::uniform_real_distribution<double> uniform(-shape_, shape_);
      do {
        for (int i = 0; i < dim_; ++i) p[i] = uniform(rng);
      } while (norm_squared(p, dim_) > shape_ * shape_);
      return p;
    }
    case KernelFamily::gaussian: {
      std::normal_distribution<double> normal(0.0, shape_);
      do {
        for (int i = 0; i < dim_; ++i) p[i] = normal(rng);
      } while (!inside_cube(p));
      return p;
    }
    case KernelFamily::exponential: {
      // radius ~ Gamma(d, 1/kappa), direction uniform on the sphere
      std::gamma_distribution<double> radius(static_cast<double>(dim_), 1.0 / shape_);
      std::normal_distribution<double> normal(0.0, 1.0);
      do {
        const double r = radius(rng);
        Point dir{0.0, 0.0, 0.0};
        double n2 = 0.0;
        while (n2 == 0.0) {
          for (int i = 0; i < dim_; ++i) dir[i] = normal(rng);
          n2 = norm_squared(dir, dim_);
        }
        p = (r / std::sqrt(n2)) * dir;
      } while (!inside_cube(p));
      return p;
    }
  }
  return p;
}

PairKernel PairKernel::scaled(double factor) const {
  return PairKernel(family_, amplitude_ * factor, shape_, dim_, side_);
}

}  // namespace kawasaki
